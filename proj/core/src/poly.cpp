#include "taudiff/poly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace taudiff {

std::string to_string(MonomialOrder order) {
  return order == MonomialOrder::lex ? "lex" : "degrevlex";
}

RingCtx::RingCtx(BaseFieldPtr base, std::vector<std::string> vars, MonomialOrder order)
    : base_(std::move(base)), vars_(std::move(vars)), order_(order) {
  if (!base_) throw Error(ErrorKind::InvalidArgument, "ring needs a base field");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (base_->index_of(v)) {
      throw Error(ErrorKind::InvalidArgument, "ring variable '" + v + "' clashes with a base symbol");
    }
    if (!seen.insert(v).second) throw Error(ErrorKind::InvalidArgument, "duplicate ring variable '" + v + "'");
  }
}

std::optional<std::size_t> RingCtx::index_of(const std::string& name) const {
  const auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

int RingCtx::compare(const Exponents& a, const Exponents& b) const noexcept {
  if (order_ == MonomialOrder::lex) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    }
    return 0;
  }
  const auto da = degree(a);
  const auto db = degree(b);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

bool RingCtx::same_as(const RingCtx& other) const noexcept {
  if (this == &other) return true;
  return vars_ == other.vars_ && order_ == other.order_ &&
         (base_ == other.base_ || same_field(*base_, *other.base_));
}

RingCtxPtr make_ring(BaseFieldPtr base, std::vector<std::string> vars, MonomialOrder order) {
  return std::make_shared<const RingCtx>(std::move(base), std::move(vars), order);
}

void require_same_ctx(const RingCtx& a, const RingCtx& b) {
  if (!a.same_as(b)) throw Error(ErrorKind::ContextMismatch, "polynomials live in different rings");
}

bool divides(const Exponents& a, const Exponents& b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponents quotient(const Exponents& b, const Exponents& a) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

std::uint32_t degree(const Exponents& e) noexcept {
  std::uint32_t d = 0;
  for (auto x : e) d += x;
  return d;
}

// ---------------------------------------------------------------------------

namespace {

struct OrderLess {
  const RingCtx* ctx;
  bool operator()(const Exponents& a, const Exponents& b) const { return ctx->compare(a, b) > 0; }
};

using TermMap = std::map<Exponents, FieldElem, OrderLess>;

std::vector<Term> from_map(TermMap&& m) {
  std::vector<Term> out;
  out.reserve(m.size());
  for (auto& [e, c] : m) {
    if (!c.is_zero()) out.push_back(Term{e, std::move(c)});
  }
  return out;
}

}  // namespace

Poly::Poly(RingCtxPtr ctx) : ctx_(std::move(ctx)) {}

Poly::Poly(RingCtxPtr ctx, const FieldElem& constant) : ctx_(std::move(ctx)) {
  ctx_->base().check_symbols(constant);
  if (!constant.is_zero()) terms_.push_back(Term{Exponents(ctx_->nvars(), 0), constant});
}

Poly Poly::variable(RingCtxPtr ctx, std::size_t i) {
  if (i >= ctx->nvars()) throw Error(ErrorKind::IndexOutOfRange, "ring variable index out of range");
  Exponents e(ctx->nvars(), 0);
  e[i] = 1;
  return monomial(std::move(ctx), std::move(e), FieldElem(1));
}

Poly Poly::monomial(RingCtxPtr ctx, Exponents exps, const FieldElem& coeff) {
  if (exps.size() != ctx->nvars()) throw Error(ErrorKind::ArityMismatch, "exponent vector length");
  Poly p(std::move(ctx));
  if (!coeff.is_zero()) p.terms_.push_back(Term{std::move(exps), coeff});
  return p;
}

Poly Poly::from_terms(RingCtxPtr ctx, std::vector<Term> terms) {
  Poly p(std::move(ctx));
  TermMap acc(OrderLess{p.ctx_.get()});
  for (auto& t : terms) {
    if (t.exps.size() != p.nvars()) throw Error(ErrorKind::ArityMismatch, "exponent vector length");
    acc[t.exps] += t.coeff;
  }
  p.terms_ = from_map(std::move(acc));
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && degree(terms_[0].exps) == 0);
}

FieldElem Poly::constant_value() const {
  if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "polynomial is not constant");
  return terms_.empty() ? FieldElem() : terms_[0].coeff;
}

std::uint32_t Poly::total_degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, degree(t.exps));
  return d;
}

std::uint32_t Poly::degree_in(std::size_t var) const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exps[var]);
  return d;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

namespace {

Poly merge(const Poly& a, const Poly& b, bool subtract) {
  require_same_ctx(*a.ctx(), *b.ctx());
  const RingCtx& ctx = *a.ctx();
  std::vector<Term> out;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ta.size() || j < tb.size()) {
    int c;
    if (i == ta.size()) {
      c = -1;
    } else if (j == tb.size()) {
      c = 1;
    } else {
      c = ctx.compare(ta[i].exps, tb[j].exps);
    }
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      out.push_back(Term{tb[j].exps, subtract ? -tb[j].coeff : tb[j].coeff});
      ++j;
    } else {
      FieldElem s = subtract ? ta[i].coeff - tb[j].coeff : ta[i].coeff + tb[j].coeff;
      if (!s.is_zero()) out.push_back(Term{ta[i].exps, std::move(s)});
      ++i;
      ++j;
    }
  }
  return Poly::from_sorted_terms(a.ctx(), std::move(out));
}

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

Poly Poly::from_sorted_terms(RingCtxPtr ctx, std::vector<Term> terms) {
  Poly p(std::move(ctx));
  p.terms_ = std::move(terms);
  return p;
}

Poly& Poly::operator+=(const Poly& o) { return *this = merge(*this, o, false); }
Poly& Poly::operator-=(const Poly& o) { return *this = merge(*this, o, true); }
Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ctx(*a.ctx(), *b.ctx());
  if (a.is_zero() || b.is_zero()) return Poly(a.ctx());
  if (a.terms().size() == 1) return b.times_term(a.terms()[0].exps, a.terms()[0].coeff);
  if (b.terms().size() == 1) return a.times_term(b.terms()[0].exps, b.terms()[0].coeff);
  TermMap acc(OrderLess{a.ctx().get()});
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) acc[add_exps(ta.exps, tb.exps)] += ta.coeff * tb.coeff;
  }
  return Poly::from_sorted_terms(a.ctx(), from_map(std::move(acc)));
}

Poly Poly::scaled(const FieldElem& c) const {
  if (c.is_zero()) return Poly(ctx_);
  Poly p = *this;
  if (c.is_one()) return p;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Poly Poly::times_term(const Exponents& m, const FieldElem& c) const {
  if (c.is_zero()) return Poly(ctx_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // monomial orders are compatible with multiplication
  for (const auto& t : terms_) out.push_back(Term{add_exps(t.exps, m), c.is_one() ? t.coeff : t.coeff * c});
  return from_sorted_terms(ctx_, std::move(out));
}

Poly Poly::pow(unsigned k) const {
  Poly result(ctx_, FieldElem(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scaled(leading_coefficient().inverse());
}

Poly Poly::minus_term_times(const Exponents& m, const FieldElem& c, const Poly& g) const {
  return merge(*this, g.times_term(m, c), true);
}

Poly Poly::partial_derivative(std::size_t var) const {
  if (var >= nvars()) throw Error(ErrorKind::IndexOutOfRange, "partial derivative variable out of range");
  TermMap acc(OrderLess{ctx_.get()});
  for (const auto& t : terms_) {
    const auto e = t.exps[var];
    if (e == 0) continue;
    Exponents d = t.exps;
    d[var] -= 1;
    acc[d] += t.coeff * FieldElem(static_cast<long>(e));
  }
  return from_sorted_terms(ctx_, from_map(std::move(acc)));
}

Poly Poly::coeff_derivation() const {
  std::vector<Term> out;
  const BaseField& field = ctx_->base();
  for (const auto& t : terms_) {
    FieldElem d = field.derive(t.coeff);
    if (!d.is_zero()) out.push_back(Term{t.exps, std::move(d)});
  }
  return from_sorted_terms(ctx_, std::move(out));
}

FieldElem Poly::evaluate(std::span<const FieldElem> point) const {
  if (point.size() != nvars()) {
    throw Error(ErrorKind::ArityMismatch, "point has " + std::to_string(point.size()) +
                                              " coordinates, ring has " + std::to_string(nvars()));
  }
  std::vector<std::vector<FieldElem>> powers(nvars());
  auto power = [&](std::size_t i, std::uint32_t e) -> const FieldElem& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(FieldElem(1));
    while (cache.size() <= e) cache.push_back(cache.back() * point[i]);
    return cache[e];
  };
  FieldElem sum;
  for (const auto& t : terms_) {
    FieldElem v = t.coeff;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (t.exps[i] > 0) v *= power(i, t.exps[i]);
    }
    sum += v;
  }
  return sum;
}

Poly Poly::substitute(std::span<const Poly> images, const RingCtxPtr& target) const {
  if (images.size() != nvars()) throw Error(ErrorKind::ArityMismatch, "one image per ring variable is required");
  if (!same_field(ctx_->base(), target->base())) {
    throw Error(ErrorKind::ContextMismatch, "substitution across different base fields");
  }
  for (const auto& img : images) require_same_ctx(*img.ctx(), *target);
  std::vector<std::vector<Poly>> powers(nvars());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(target, FieldElem(1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Poly sum(target);
  for (const auto& t : terms_) {
    Poly v(target, t.coeff);
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (t.exps[i] > 0) v *= power(i, t.exps[i]);
    }
    sum += v;
  }
  return sum;
}

namespace {

std::vector<std::size_t> var_map(const RingCtx& from, const RingCtx& to) {
  std::vector<std::size_t> map(from.nvars());
  for (std::size_t i = 0; i < from.nvars(); ++i) {
    const auto j = to.index_of(from.var_name(i));
    if (!j) throw Error(ErrorKind::ContextMismatch, "target ring lacks variable '" + from.var_name(i) + "'");
    map[i] = *j;
  }
  return map;
}

}  // namespace

Poly Poly::embed(const RingCtxPtr& target) const {
  if (!same_field(ctx_->base(), target->base())) {
    throw Error(ErrorKind::ContextMismatch, "embedding across different base fields");
  }
  const auto map = var_map(*ctx_, *target);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(target->nvars(), 0);
    for (std::size_t i = 0; i < nvars(); ++i) e[map[i]] = t.exps[i];
    out.push_back(Term{std::move(e), t.coeff});
  }
  return from_terms(target, std::move(out));
}

Poly Poly::extend_scalars(const RingCtxPtr& target, std::span<const std::uint32_t> symbol_map) const {
  const auto map = var_map(*ctx_, *target);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(target->nvars(), 0);
    for (std::size_t i = 0; i < nvars(); ++i) e[map[i]] = t.exps[i];
    out.push_back(Term{std::move(e), t.coeff.remap(symbol_map)});
  }
  return from_terms(target, std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
  if (!a.ctx_->same_as(*b.ctx_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

Poly poly_arith(PolyOp op, const Poly& f, const Poly& g) {
  switch (op) {
    case PolyOp::add: return f + g;
    case PolyOp::sub: return f - g;
    case PolyOp::mul: return f * g;
  }
  return f;
}

Poly partial_derivative(const Poly& f, std::size_t var) { return f.partial_derivative(var); }
Poly coeff_derivation(const Poly& f) { return f.coeff_derivation(); }
FieldElem evaluate(const Poly& f, std::span<const FieldElem> point) { return f.evaluate(point); }

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  const RingCtx& ctx = *f.ctx();
  const auto& names = ctx.base().symbols();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < ctx.nvars(); ++i) {
      if (t.exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx.var_name(i);
      if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
    }
    const std::string c = to_string(t.coeff, names);
    std::string term;
    if (mono.empty()) {
      term = c;
    } else if (t.coeff.is_one()) {
      term = mono;
    } else if (t.coeff == FieldElem(-1)) {
      term = "-" + mono;
    } else if (t.coeff.is_polynomial() && t.coeff.num().terms().size() > 1) {
      term = "(" + c + ")*" + mono;
    } else {
      term = c + "*" + mono;
    }
    if (first) {
      os << term;
      first = false;
    } else if (term.front() == '-') {
      os << " - " << term.substr(1);
    } else {
      os << " + " << term;
    }
  }
  return os.str();
}

}  // namespace taudiff
