#include "taudiff/ideal.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace taudiff {

Poly reduce(const Poly& f, std::span<const Poly> basis) {
  std::vector<Term> remainder;
  Poly p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    const Poly* divisor = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && divides(g.leading_exponents(), lt.exps)) {
        divisor = &g;
        break;
      }
    }
    if (divisor != nullptr) {
      const FieldElem c = divisor->leading_coefficient().is_one()
                              ? lt.coeff
                              : lt.coeff / divisor->leading_coefficient();
      p = p.minus_term_times(quotient(lt.exps, divisor->leading_exponents()), c, *divisor);
    } else {
      remainder.push_back(lt);
      std::vector<Term> rest(p.terms().begin() + 1, p.terms().end());
      p = Poly::from_sorted_terms(p.ctx(), std::move(rest));
    }
  }
  return Poly::from_sorted_terms(f.ctx(), std::move(remainder));
}

namespace {

Poly s_polynomial(const Poly& f, const Poly& g) {
  const Exponents l = lcm(f.leading_exponents(), g.leading_exponents());
  const Poly a = f.times_term(quotient(l, f.leading_exponents()), g.leading_coefficient());
  return a.minus_term_times(quotient(l, g.leading_exponents()), f.leading_coefficient(), g);
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

}  // namespace

std::vector<Poly> groebner_basis(std::span<const Poly> gens, const GroebnerLimits& limits) {
  std::vector<Poly> basis;
  if (gens.empty()) return basis;
  const RingCtxPtr ctx = gens.front().ctx();
  for (const auto& g : gens) require_same_ctx(*g.ctx(), *ctx);

  // (lcm degree, i, j) with i < j
  using PairKey = std::tuple<std::uint32_t, std::size_t, std::size_t>;
  std::set<PairKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::size_t pairs_created = 0;

  auto add = [&](Poly h) {
    h = h.monic();
    const std::size_t k = basis.size();
    basis.push_back(std::move(h));
    for (std::size_t i = 0; i < k; ++i) {
      const auto d = degree(lcm(basis[i].leading_exponents(), basis[k].leading_exponents()));
      queue.emplace(d, i, k);
      pending.emplace(i, k);
      if (++pairs_created > limits.max_pairs) {
        throw Error(ErrorKind::ResourceLimit,
                    "Groebner pair bound of " + std::to_string(limits.max_pairs) + " exceeded");
      }
    }
  };

  for (const auto& g : gens) {
    Poly h = reduce(g, basis);
    if (!h.is_zero()) add(std::move(h));
  }

  while (!queue.empty()) {
    const auto [d, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    const Exponents& li = basis[i].leading_exponents();
    const Exponents& lj = basis[j].leading_exponents();
    if (coprime(li, lj)) continue;
    const Exponents l = lcm(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      if (!divides(basis[k].leading_exponents(), l)) continue;
      const auto ik = std::minmax(i, k);
      const auto jk = std::minmax(j, k);
      chain = !pending.count({ik.first, ik.second}) && !pending.count({jk.first, jk.second});
    }
    if (chain) continue;
    if (limits.max_degree != 0 && d > limits.max_degree) {
      throw Error(ErrorKind::ResourceLimit,
                  "S-pair of degree " + std::to_string(d) + " exceeds the degree bound");
    }
    Poly h = reduce(s_polynomial(basis[i], basis[j]), basis);
    if (!h.is_zero()) add(std::move(h));
  }

  // minimal basis, then tail reduction
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      const auto& lk = basis[k].leading_exponents();
      const auto& li = basis[i].leading_exponents();
      // among equal leading monomials keep the first
      redundant = divides(lk, li) && (lk != li || k < i);
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Poly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k != i) others.push_back(minimal[k]);
    }
    reduced.push_back(reduce(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
    return ctx->compare(a.leading_exponents(), b.leading_exponents()) > 0;
  });
  return reduced;
}

// ---------------------------------------------------------------------------

PresentedAlgebra::PresentedAlgebra(RingCtxPtr ctx, std::vector<Poly> gens, GroebnerLimits limits)
    : ctx_(std::move(ctx)), gens_(std::move(gens)), limits_(limits), cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) require_same_ctx(*g.ctx(), *ctx_);
}

const std::vector<Poly>& PresentedAlgebra::groebner_basis() const {
  std::call_once(cache_->once, [this] { cache_->gb = taudiff::groebner_basis(gens_, limits_); });
  return cache_->gb;
}

Poly PresentedAlgebra::normal_form(const Poly& f) const {
  require_same_ctx(*f.ctx(), *ctx_);
  const auto& gb = groebner_basis();
  if (gb.empty()) return f;
  return reduce(f, gb);
}

bool PresentedAlgebra::is_unit_ideal() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

std::vector<Poly> groebner_basis(const PresentedAlgebra& algebra) { return algebra.groebner_basis(); }
Poly normal_form(const Poly& f, const PresentedAlgebra& algebra) { return algebra.normal_form(f); }

// ---------------------------------------------------------------------------

QuotientMatrix::QuotientMatrix(PresentedAlgebra algebra, std::size_t cols)
    : algebra_(std::move(algebra)), cols_(cols) {}

QuotientMatrix::QuotientMatrix(PresentedAlgebra algebra, std::size_t cols,
                               std::vector<std::vector<Poly>> rows)
    : algebra_(std::move(algebra)), cols_(cols) {
  for (auto& r : rows) add_row(std::move(r));
}

void QuotientMatrix::add_row(std::vector<Poly> row) {
  if (row.size() != cols_) {
    throw Error(ErrorKind::ArityMismatch, "row of length " + std::to_string(row.size()) +
                                              " in a matrix with " + std::to_string(cols_) + " columns");
  }
  for (auto& e : row) e = algebra_.normal_form(e);
  rows_.push_back(std::move(row));
}

bool QuotientMatrix::is_zero() const {
  for (const auto& r : rows_) {
    for (const auto& e : r) {
      if (!e.is_zero()) return false;
    }
  }
  return true;
}

namespace {

// Nonzero-times-nonzero product, checked against the domain assumption.
Poly checked_product(const PresentedAlgebra& algebra, const Poly& a, const Poly& b) {
  Poly p = algebra.normal_form(a * b);
  if (p.is_zero()) throw NotADomainError(to_string(a), to_string(b));
  return p;
}

std::size_t pivot_cost(const Poly& p) { return p.total_degree() * 1000 + p.terms().size(); }

}  // namespace

std::size_t generic_rank(const QuotientMatrix& m) {
  const PresentedAlgebra& algebra = m.algebra();
  std::vector<std::vector<Poly>> rows = m.row_data();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
    std::optional<std::size_t> best;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      if (!best || pivot_cost(rows[r][c]) < pivot_cost(rows[*best][c])) best = r;
    }
    if (!best) continue;
    std::swap(rows[rank], rows[*best]);
    const Poly pivot = rows[rank][c];
    checked_product(algebra, pivot, pivot);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Poly a = rows[r][c];
      if (a.is_zero()) continue;
      checked_product(algebra, pivot, a);
      for (std::size_t j = c; j < m.cols(); ++j) {
        Poly scaled_row = rows[r][j].is_zero() ? Poly(algebra.ctx()) : checked_product(algebra, pivot, rows[r][j]);
        rows[r][j] = algebra.normal_form(scaled_row - a * rows[rank][j]);
      }
      // entries of a row can share a unit factor from K; strip it
      for (const auto& e : rows[r]) {
        if (e.is_zero()) continue;
        const FieldElem lc = e.leading_coefficient();
        if (!lc.is_one()) {
          const FieldElem inv = lc.inverse();
          for (auto& x : rows[r]) x = x.scaled(inv);
        }
        break;
      }
    }
    ++rank;
  }
  return rank;
}

QuotientMatrix jacobian(const PresentedAlgebra& algebra) {
  QuotientMatrix jac(algebra, algebra.nvars());
  for (const auto& g : algebra.gens()) {
    std::vector<Poly> row;
    row.reserve(algebra.nvars());
    for (std::size_t j = 0; j < algebra.nvars(); ++j) row.push_back(g.partial_derivative(j));
    jac.add_row(std::move(row));
  }
  return jac;
}

SmoothnessReport jacobian_smooth_check(const PresentedAlgebra& algebra, std::size_t expected_dim) {
  if (expected_dim > algebra.nvars()) {
    throw Error(ErrorKind::InvalidArgument, "expected dimension exceeds the number of variables");
  }
  SmoothnessReport report;
  report.expected_rank = algebra.nvars() - expected_dim;
  try {
    report.jacobian_rank = generic_rank(jacobian(algebra));
  } catch (const NotADomainError& e) {
    report.witness = e.what();
    return report;
  }
  report.smooth = report.jacobian_rank == report.expected_rank;
  if (!report.smooth) {
    report.witness = "generic Jacobian rank " + std::to_string(report.jacobian_rank) + " differs from " +
                     std::to_string(report.expected_rank);
  }
  return report;
}

}  // namespace taudiff
