#pragma once

// Sparse multivariate polynomials over K in ring variables x_1..x_n.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "taudiff/scalar.hpp"

namespace taudiff {

enum class MonomialOrder { degrevlex, lex };

std::string to_string(MonomialOrder order);

using Exponents = std::vector<std::uint32_t>;

class RingCtx {
 public:
  RingCtx(BaseFieldPtr base, std::vector<std::string> vars,
          MonomialOrder order = MonomialOrder::degrevlex);

  const BaseField& base() const noexcept { return *base_; }
  const BaseFieldPtr& base_ptr() const noexcept { return base_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::string& var_name(std::size_t i) const { return vars_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  MonomialOrder order() const noexcept { return order_; }

  // <0, 0, >0 under the ring's monomial order (x_1 > x_2 > ... > x_n).
  int compare(const Exponents& a, const Exponents& b) const noexcept;

  bool same_as(const RingCtx& other) const noexcept;

 private:
  BaseFieldPtr base_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingCtxPtr = std::shared_ptr<const RingCtx>;

RingCtxPtr make_ring(BaseFieldPtr base, std::vector<std::string> vars,
                     MonomialOrder order = MonomialOrder::degrevlex);

struct Term {
  Exponents exps;
  FieldElem coeff;
};

class Poly {
 public:
  explicit Poly(RingCtxPtr ctx);
  Poly(RingCtxPtr ctx, const FieldElem& constant);

  static Poly variable(RingCtxPtr ctx, std::size_t i);
  static Poly monomial(RingCtxPtr ctx, Exponents exps, const FieldElem& coeff);
  // Terms in any order; like monomials are combined.
  static Poly from_terms(RingCtxPtr ctx, std::vector<Term> terms);
  // Terms already strictly decreasing under the ring order, none zero.
  static Poly from_sorted_terms(RingCtxPtr ctx, std::vector<Term> terms);

  const RingCtxPtr& ctx() const noexcept { return ctx_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t nvars() const noexcept { return ctx_->nvars(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // Value of a constant polynomial (0 for the zero polynomial).
  FieldElem constant_value() const;
  const Term& leading_term() const { return terms_.front(); }
  const Exponents& leading_exponents() const { return terms_.front().exps; }
  const FieldElem& leading_coefficient() const { return terms_.front().coeff; }
  std::uint32_t total_degree() const noexcept;
  std::uint32_t degree_in(std::size_t var) const noexcept;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const FieldElem& c) const;
  Poly times_term(const Exponents& m, const FieldElem& c) const;
  Poly pow(unsigned k) const;
  Poly monic() const;

  // this - c * x^m * g, the elementary reduction step.
  Poly minus_term_times(const Exponents& m, const FieldElem& c, const Poly& g) const;

  Poly partial_derivative(std::size_t var) const;
  // f^delta: delta applied to every coefficient.
  Poly coeff_derivation() const;
  FieldElem evaluate(std::span<const FieldElem> point) const;
  // Substitute images (all over the same target ring) for the variables.
  Poly substitute(std::span<const Poly> images, const RingCtxPtr& target) const;
  // Re-express in a ring with the same base field whose variables include
  // ours (matched by name).
  Poly embed(const RingCtxPtr& target) const;

  // Move to a ring over an extension field; symbol_map[i] is the index in the
  // target base field of our base symbol i.  Variables are matched by name.
  Poly extend_scalars(const RingCtxPtr& target, std::span<const std::uint32_t> symbol_map) const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  RingCtxPtr ctx_;
  std::vector<Term> terms_;
};

enum class PolyOp { add, sub, mul };
Poly poly_arith(PolyOp op, const Poly& f, const Poly& g);
Poly partial_derivative(const Poly& f, std::size_t var);
Poly coeff_derivation(const Poly& f);
FieldElem evaluate(const Poly& f, std::span<const FieldElem> point);

void require_same_ctx(const RingCtx& a, const RingCtx& b);

// Canonical text (also accepted by parse_poly).
std::string to_string(const Poly& f);

bool divides(const Exponents& a, const Exponents& b) noexcept;
Exponents lcm(const Exponents& a, const Exponents& b);
Exponents quotient(const Exponents& b, const Exponents& a);  // b / a
std::uint32_t degree(const Exponents& e) noexcept;

}  // namespace taudiff
