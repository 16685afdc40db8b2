#pragma once

// Exact scalars: rationals, polynomials over Q in the base-field symbols, and
// the differential rational-function field K = Q(e_1, ..., e_m).

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "taudiff/error.hpp"

namespace taudiff {

using Rat = mpq_class;

std::string to_string(const Rat& q);

// A power product in the base symbols, stored sparsely as (symbol, exponent)
// pairs sorted by symbol index with every exponent > 0.
class SymMonomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;

  SymMonomial() = default;
  explicit SymMonomial(std::vector<Factor> factors);
  static SymMonomial variable(std::uint32_t symbol, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t exponent(std::uint32_t symbol) const noexcept;
  std::optional<std::uint32_t> max_symbol() const noexcept;

  SymMonomial operator*(const SymMonomial& other) const;
  bool divides(const SymMonomial& other) const noexcept;
  // Precondition: divides(other).
  SymMonomial quotient_of(const SymMonomial& other) const;
  SymMonomial without(std::uint32_t symbol) const;

  friend bool operator==(const SymMonomial&, const SymMonomial&) = default;

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

// degrevlex with symbol 0 the largest variable; returns <0, 0, >0.
int compare_degrevlex(const SymMonomial& a, const SymMonomial& b) noexcept;

// Sparse polynomial over Q in the base symbols, terms sorted by decreasing
// degrevlex, no zero coefficients.
class QPoly {
 public:
  using Term = std::pair<SymMonomial, Rat>;

  QPoly() = default;
  QPoly(const Rat& constant);  // NOLINT(implicit)
  static QPoly symbol(std::uint32_t index);
  static QPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  // Value of the constant term (0 when absent).
  Rat constant_term() const;
  const Rat& leading_coefficient() const;
  const SymMonomial& leading_monomial() const;
  std::uint32_t total_degree() const noexcept;
  std::uint32_t degree_in(std::uint32_t symbol) const noexcept;
  bool mentions(std::uint32_t symbol) const noexcept;
  std::optional<std::uint32_t> max_symbol() const noexcept;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly scaled(const Rat& c) const;
  QPoly times_monomial(const SymMonomial& m, const Rat& c) const;
  QPoly pow(unsigned k) const;

  QPoly partial(std::uint32_t symbol) const;
  // Coefficient of symbol^k, as a polynomial not mentioning symbol.
  QPoly coefficient_in(std::uint32_t symbol, std::uint32_t k) const;
  QPoly remap(std::span<const std::uint32_t> new_index) const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  std::vector<Term> terms_;
};

// Exact quotient; throws std::logic_error if b does not divide a.
QPoly exact_divide(const QPoly& a, const QPoly& b);
// Greatest common divisor over Q, normalized to leading coefficient 1
// (gcd(0, 0) = 0).
QPoly gcd(const QPoly& a, const QPoly& b);

std::string to_string(const QPoly& p, std::span<const std::string> names);

// Element of Q(e_1, ..., e_m): num/den with gcd(num, den) = 1 and den having
// leading coefficient 1 under degrevlex.  Zero is 0/1.
class FieldElem {
 public:
  FieldElem() : den_(Rat(1)) {}
  FieldElem(const Rat& q) : num_(q), den_(Rat(1)) {}  // NOLINT(implicit)
  FieldElem(long q) : FieldElem(Rat(q)) {}            // NOLINT(implicit)
  explicit FieldElem(QPoly num) : num_(std::move(num)), den_(Rat(1)) {}
  FieldElem(QPoly num, QPoly den);

  static FieldElem symbol(std::uint32_t index) { return FieldElem(QPoly::symbol(index)); }

  const QPoly& num() const noexcept { return num_; }
  const QPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_rational() const noexcept { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  // Requires is_rational().
  Rat rational_value() const;
  std::optional<std::uint32_t> max_symbol() const noexcept;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);
  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  FieldElem inverse() const;
  FieldElem pow(unsigned k) const;

  // Partial derivative with respect to a base symbol (quotient rule).
  FieldElem partial(std::uint32_t symbol) const;
  FieldElem remap(std::span<const std::uint32_t> new_index) const;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;

 private:
  void normalize();

  QPoly num_;
  QPoly den_;
};

enum class FieldOp { add, sub, mul, div };
FieldElem fe_arith(FieldOp op, const FieldElem& a, const FieldElem& b);

std::string to_string(const FieldElem& a, std::span<const std::string> names);

// K = Q(e_1..e_m) with a derivation fixed by its values on the symbols.  The
// designated symbol e must satisfy delta(e) = 1.
class BaseField {
 public:
  BaseField(std::vector<std::string> symbols, std::vector<FieldElem> derivation_images,
            std::size_t designated);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const std::string& symbol_name(std::size_t i) const { return symbols_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  const FieldElem& derivation_image(std::size_t i) const { return images_.at(i); }
  const std::vector<FieldElem>& derivation_images() const noexcept { return images_; }
  std::size_t designated() const noexcept { return designated_; }
  FieldElem gen(std::size_t i) const;
  FieldElem designated_element() const { return gen(designated_); }

  // delta(a); throws UnknownSymbol if a mentions a symbol outside the field.
  FieldElem derive(const FieldElem& a) const;
  void check_symbols(const FieldElem& a) const;

  std::string format(const FieldElem& a) const { return to_string(a, symbols_); }

 private:
  FieldElem derive_poly(const QPoly& p) const;

  std::vector<std::string> symbols_;
  std::vector<FieldElem> images_;
  std::size_t designated_;
};

using BaseFieldPtr = std::shared_ptr<const BaseField>;

FieldElem fe_derive(const FieldElem& a, const BaseField& field);

bool same_field(const BaseField& a, const BaseField& b);

}  // namespace taudiff
