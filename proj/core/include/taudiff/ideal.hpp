#pragma once

// Ideals of K[x]: Buchberger Groebner bases, normal forms, and ranks of
// matrices over quotient domains.

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "taudiff/poly.hpp"

namespace taudiff {

struct GroebnerLimits {
  std::size_t max_pairs = 10000;
  std::uint32_t max_degree = 0;  // 0: no bound on S-pair degree
};

// Reduced Groebner basis of the ideal generated by gens, sorted by decreasing
// leading monomial.  Pair selection is the normal strategy, ties broken by
// pair index.  Throws ResourceLimit when a limit is exceeded.
std::vector<Poly> groebner_basis(std::span<const Poly> gens, const GroebnerLimits& limits = {});

// Remainder of full multivariate division by basis.
Poly reduce(const Poly& f, std::span<const Poly> basis);

// K[x]/<gens>.  The Groebner basis is computed on first use and shared
// between copies.
class PresentedAlgebra {
 public:
  explicit PresentedAlgebra(RingCtxPtr ctx, std::vector<Poly> gens = {}, GroebnerLimits limits = {});

  const RingCtxPtr& ctx() const noexcept { return ctx_; }
  std::size_t nvars() const noexcept { return ctx_->nvars(); }
  const std::vector<Poly>& gens() const noexcept { return gens_; }
  const GroebnerLimits& limits() const noexcept { return limits_; }

  const std::vector<Poly>& groebner_basis() const;
  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const { return normal_form(f).is_zero(); }
  bool is_unit_ideal() const;

  Poly zero() const { return Poly(ctx_); }
  Poly one() const { return Poly(ctx_, FieldElem(1)); }
  Poly var(std::size_t i) const { return Poly::variable(ctx_, i); }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Poly> gb;
  };

  RingCtxPtr ctx_;
  std::vector<Poly> gens_;
  GroebnerLimits limits_;
  std::shared_ptr<Cache> cache_;
};

std::vector<Poly> groebner_basis(const PresentedAlgebra& algebra);
Poly normal_form(const Poly& f, const PresentedAlgebra& algebra);

// Matrix with entries in a quotient ring, kept in normal form.
class QuotientMatrix {
 public:
  QuotientMatrix(PresentedAlgebra algebra, std::size_t cols);
  QuotientMatrix(PresentedAlgebra algebra, std::size_t cols, std::vector<std::vector<Poly>> rows);

  const PresentedAlgebra& algebra() const noexcept { return algebra_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const Poly& at(std::size_t r, std::size_t c) const { return rows_.at(r).at(c); }
  const std::vector<Poly>& row(std::size_t r) const { return rows_.at(r); }
  const std::vector<std::vector<Poly>>& row_data() const noexcept { return rows_; }
  void add_row(std::vector<Poly> row);
  bool is_zero() const;

 private:
  PresentedAlgebra algebra_;
  std::size_t cols_;
  std::vector<std::vector<Poly>> rows_;
};

// Rank over the fraction field of the quotient (assumed a domain).  Throws
// NotADomainError when two nonzero residues multiply to zero.
std::size_t generic_rank(const QuotientMatrix& m);

// Rows (dg/dx_1, ..., dg/dx_n), one per generator.
QuotientMatrix jacobian(const PresentedAlgebra& algebra);

struct SmoothnessReport {
  bool smooth = false;
  std::size_t jacobian_rank = 0;
  std::size_t expected_rank = 0;
  std::string witness;  // why smoothness could not be verified
};

// Smoothness at the generic point: generic rank of the Jacobian equals
// nvars - expected_dim.
SmoothnessReport jacobian_smooth_check(const PresentedAlgebra& algebra, std::size_t expected_dim);

}  // namespace taudiff
