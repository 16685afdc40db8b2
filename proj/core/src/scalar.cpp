#include "taudiff/scalar.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace taudiff {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::NotADomainSuspected: return "NotADomainSuspected";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NotAnAlgebraMap: return "NotAnAlgebraMap";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NotAnExtension: return "NotAnExtension";
    case ErrorKind::NotTauDerivation: return "NotTauDerivation";
    case ErrorKind::NotAMorphism: return "NotAMorphism";
    case ErrorKind::BasePointMismatch: return "BasePointMismatch";
    case ErrorKind::NotOnVariety: return "NotOnVariety";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

std::string to_string(const Rat& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// SymMonomial

SymMonomial::SymMonomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  std::vector<Factor> merged;
  for (const auto& f : factors_) {
    if (f.second == 0) continue;
    if (!merged.empty() && merged.back().first == f.first) {
      merged.back().second += f.second;
    } else {
      merged.push_back(f);
    }
  }
  factors_ = std::move(merged);
  for (const auto& f : factors_) degree_ += f.second;
}

SymMonomial SymMonomial::variable(std::uint32_t symbol, std::uint32_t exponent) {
  return SymMonomial({{symbol, exponent}});
}

std::uint32_t SymMonomial::exponent(std::uint32_t symbol) const noexcept {
  for (const auto& [s, e] : factors_) {
    if (s == symbol) return e;
    if (s > symbol) break;
  }
  return 0;
}

std::optional<std::uint32_t> SymMonomial::max_symbol() const noexcept {
  if (factors_.empty()) return std::nullopt;
  return factors_.back().first;
}

SymMonomial SymMonomial::operator*(const SymMonomial& other) const {
  SymMonomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool SymMonomial::divides(const SymMonomial& other) const noexcept {
  for (const auto& [s, e] : factors_) {
    if (other.exponent(s) < e) return false;
  }
  return true;
}

SymMonomial SymMonomial::quotient_of(const SymMonomial& other) const {
  std::vector<Factor> out;
  for (const auto& [s, e] : other.factors_) {
    const auto mine = exponent(s);
    if (e > mine) out.emplace_back(s, e - mine);
  }
  return SymMonomial(std::move(out));
}

SymMonomial SymMonomial::without(std::uint32_t symbol) const {
  std::vector<Factor> out;
  for (const auto& f : factors_) {
    if (f.first != symbol) out.push_back(f);
  }
  return SymMonomial(std::move(out));
}

int compare_degrevlex(const SymMonomial& a, const SymMonomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto i = fa.rbegin();
  auto j = fb.rbegin();
  while (i != fa.rend() && j != fb.rend()) {
    if (i->first == j->first) {
      if (i->second != j->second) return i->second < j->second ? 1 : -1;
      ++i;
      ++j;
    } else if (i->first > j->first) {
      // a has a positive exponent in a later symbol where b has none
      return -1;
    } else {
      return 1;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// QPoly

namespace {

struct DegrevlexLess {
  bool operator()(const SymMonomial& a, const SymMonomial& b) const {
    return compare_degrevlex(a, b) > 0;  // descending
  }
};

using TermMap = std::map<SymMonomial, Rat, DegrevlexLess>;

QPoly from_map(TermMap&& m) {
  std::vector<QPoly::Term> terms;
  terms.reserve(m.size());
  for (auto& [mono, c] : m) {
    if (c != 0) terms.emplace_back(mono, std::move(c));
  }
  return QPoly::from_terms(std::move(terms));
}

}  // namespace

QPoly::QPoly(const Rat& constant) {
  Rat c = constant;
  c.canonicalize();
  if (c != 0) terms_.emplace_back(SymMonomial(), std::move(c));
}

QPoly QPoly::symbol(std::uint32_t index) {
  QPoly p;
  p.terms_.emplace_back(SymMonomial::variable(index), Rat(1));
  return p;
}

QPoly QPoly::from_terms(std::vector<Term> terms) {
  // Caller promises sorted, distinct monomials; zero coefficients are dropped.
  QPoly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (t.second != 0) p.terms_.push_back(std::move(t));
  }
  return p;
}

bool QPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

bool QPoly::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

Rat QPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return Rat(0);
}

const Rat& QPoly::leading_coefficient() const { return terms_.front().second; }
const SymMonomial& QPoly::leading_monomial() const { return terms_.front().first; }

std::uint32_t QPoly::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().first.degree();
}

std::uint32_t QPoly::degree_in(std::uint32_t symbol) const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.exponent(symbol));
  return d;
}

bool QPoly::mentions(std::uint32_t symbol) const noexcept { return degree_in(symbol) > 0; }

std::optional<std::uint32_t> QPoly::max_symbol() const noexcept {
  std::optional<std::uint32_t> best;
  for (const auto& t : terms_) {
    const auto s = t.first.max_symbol();
    if (s && (!best || *s > *best)) best = s;
  }
  return best;
}

QPoly QPoly::operator-() const {
  QPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

namespace {

QPoly merge(const QPoly& a, const QPoly& b, bool subtract) {
  std::vector<QPoly::Term> out;
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
      c = compare_degrevlex(ta[i].first, tb[j].first);
    }
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      out.emplace_back(tb[j].first, subtract ? Rat(-tb[j].second) : tb[j].second);
      ++j;
    } else {
      Rat s = subtract ? Rat(ta[i].second - tb[j].second) : Rat(ta[i].second + tb[j].second);
      if (s != 0) out.emplace_back(ta[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return QPoly::from_terms(std::move(out));
}

}  // namespace

QPoly& QPoly::operator+=(const QPoly& o) { return *this = merge(*this, o, false); }
QPoly& QPoly::operator-=(const QPoly& o) { return *this = merge(*this, o, true); }
QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  if (a.is_constant()) return b.scaled(a.leading_coefficient());
  if (b.is_constant()) return a.scaled(b.leading_coefficient());
  TermMap acc;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) acc[ma * mb] += ca * cb;
  }
  return from_map(std::move(acc));
}

QPoly QPoly::scaled(const Rat& c) const {
  if (c == 0) return QPoly();
  QPoly p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

QPoly QPoly::times_monomial(const SymMonomial& m, const Rat& c) const {
  if (c == 0) return QPoly();
  QPoly p;
  p.terms_.reserve(terms_.size());
  // multiplying by a monomial preserves degrevlex order
  for (const auto& [mono, coeff] : terms_) p.terms_.emplace_back(mono * m, coeff * c);
  return p;
}

QPoly QPoly::pow(unsigned k) const {
  QPoly result(Rat(1));
  QPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

QPoly QPoly::partial(std::uint32_t symbol) const {
  TermMap acc;
  for (const auto& [mono, c] : terms_) {
    const auto e = mono.exponent(symbol);
    if (e == 0) continue;
    std::vector<SymMonomial::Factor> f = mono.factors();
    for (auto& [s, ex] : f) {
      if (s == symbol) ex -= 1;
    }
    acc[SymMonomial(std::move(f))] += c * e;
  }
  return from_map(std::move(acc));
}

QPoly QPoly::coefficient_in(std::uint32_t symbol, std::uint32_t k) const {
  TermMap acc;
  for (const auto& [mono, c] : terms_) {
    if (mono.exponent(symbol) == k) acc[mono.without(symbol)] += c;
  }
  return from_map(std::move(acc));
}

QPoly QPoly::remap(std::span<const std::uint32_t> new_index) const {
  TermMap acc;
  for (const auto& [mono, c] : terms_) {
    std::vector<SymMonomial::Factor> f;
    for (const auto& [s, e] : mono.factors()) f.emplace_back(new_index[s], e);
    acc[SymMonomial(std::move(f))] += c;
  }
  return from_map(std::move(acc));
}

QPoly exact_divide(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (b.is_constant()) return a.scaled(1 / b.leading_coefficient());
  QPoly quotient;
  QPoly rest = a;
  const auto& lm = b.leading_monomial();
  const Rat inv = 1 / b.leading_coefficient();
  while (!rest.is_zero()) {
    if (!lm.divides(rest.leading_monomial())) throw std::logic_error("exact_divide: not a divisor");
    const SymMonomial m = lm.quotient_of(rest.leading_monomial());
    const Rat c = rest.leading_coefficient() * inv;
    quotient += QPoly::from_terms({{m, c}});
    rest -= b.times_monomial(m, c);
  }
  return quotient;
}

namespace {

QPoly monic(const QPoly& p) {
  if (p.is_zero()) return p;
  const Rat& lc = p.leading_coefficient();
  if (lc == 1) return p;
  return p.scaled(1 / lc);
}

QPoly content_in(const QPoly& p, std::uint32_t v) {
  QPoly g;
  const auto d = p.degree_in(v);
  for (std::uint32_t k = 0; k <= d; ++k) {
    QPoly c = p.coefficient_in(v, k);
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

QPoly primitive_in(const QPoly& p, std::uint32_t v) {
  if (p.is_zero()) return p;
  return exact_divide(p, content_in(p, v));
}

QPoly pseudo_remainder(const QPoly& a, const QPoly& b, std::uint32_t v) {
  const auto db = b.degree_in(v);
  const QPoly lcb = b.coefficient_in(v, db);
  QPoly r = a;
  while (!r.is_zero()) {
    const auto dr = r.degree_in(v);
    if (dr < db) break;
    const QPoly lcr = r.coefficient_in(v, dr);
    r = lcb * r - (lcr * b).times_monomial(SymMonomial::variable(v, dr - db), Rat(1));
  }
  return r;
}

}  // namespace

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return QPoly(Rat(1));
  if (a == b) return monic(a);
  const auto sa = a.max_symbol();
  const auto sb = b.max_symbol();
  const std::uint32_t v = std::max(sa.value_or(0), sb.value_or(0));
  if (!a.mentions(v)) return gcd(a, content_in(b, v));
  if (!b.mentions(v)) return gcd(content_in(a, v), b);

  const QPoly ca = content_in(a, v);
  const QPoly cb = content_in(b, v);
  const QPoly g = gcd(ca, cb);
  QPoly pa = exact_divide(a, ca);
  QPoly pb = exact_divide(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    QPoly r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    pb = primitive_in(r, v);
  }
  return monic(primitive_in(pa, v) * g);
}

std::string to_string(const QPoly& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : p.terms()) {
    std::string mono_str;
    for (const auto& [s, e] : mono.factors()) {
      if (!mono_str.empty()) mono_str += "*";
      mono_str += s < names.size() ? names[s] : ("?" + std::to_string(s));
      if (e > 1) mono_str += "^" + std::to_string(e);
    }
    std::string term;
    if (mono.is_one()) {
      term = to_string(c);
    } else if (c == 1) {
      term = mono_str;
    } else if (c == -1) {
      term = "-" + mono_str;
    } else {
      term = to_string(c) + "*" + mono_str;
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

// ---------------------------------------------------------------------------
// FieldElem

FieldElem::FieldElem(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void FieldElem::normalize() {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = QPoly(Rat(1));
    return;
  }
  if (den_.is_constant()) {
    const Rat c = den_.leading_coefficient();
    if (c != 1) num_ = num_.scaled(1 / c);
    den_ = QPoly(Rat(1));
    return;
  }
  const QPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
  }
  const Rat lc = den_.leading_coefficient();
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
  if (den_.is_one()) return;
}

Rat FieldElem::rational_value() const {
  if (!is_rational()) throw Error(ErrorKind::InvalidArgument, "not a rational constant");
  return num_.constant_term() / den_.constant_term();
}

std::optional<std::uint32_t> FieldElem::max_symbol() const noexcept {
  const auto a = num_.max_symbol();
  const auto b = den_.max_symbol();
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  r.num_ = -r.num_;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (o.den_.is_one()) {
    // (a + c*b)/b stays reduced
    num_ += o.num_ * den_;
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = FieldElem();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // cross-cancel (a/b)*(c/d) using gcd(a, d) and gcd(c, b)
  QPoly a = num_;
  QPoly b = den_;
  QPoly c = o.num_;
  QPoly d = o.den_;
  if (!d.is_one()) {
    const QPoly g = gcd(a, d);
    if (!g.is_one()) {
      a = exact_divide(a, g);
      d = exact_divide(d, g);
    }
  }
  if (!b.is_one()) {
    const QPoly g = gcd(c, b);
    if (!g.is_one()) {
      c = exact_divide(c, g);
      b = exact_divide(b, g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  const Rat lc = den_.leading_coefficient();
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) { return *this *= o.inverse(); }

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  FieldElem r;
  r.num_ = den_;
  r.den_ = num_;
  const Rat lc = r.den_.leading_coefficient();
  if (lc != 1) {
    r.num_ = r.num_.scaled(1 / lc);
    r.den_ = r.den_.scaled(1 / lc);
  }
  return r;
}

FieldElem FieldElem::pow(unsigned k) const {
  FieldElem r;
  r.num_ = num_.pow(k);
  r.den_ = den_.pow(k);
  if (r.num_.is_zero()) r.den_ = QPoly(Rat(1));
  return r;
}

FieldElem FieldElem::partial(std::uint32_t symbol) const {
  const QPoly dn = num_.partial(symbol);
  if (den_.is_one()) return FieldElem(dn);
  const QPoly dd = den_.partial(symbol);
  return FieldElem(dn * den_ - num_ * dd, den_ * den_);
}

FieldElem FieldElem::remap(std::span<const std::uint32_t> new_index) const {
  return FieldElem(num_.remap(new_index), den_.remap(new_index));
}

FieldElem fe_arith(FieldOp op, const FieldElem& a, const FieldElem& b) {
  switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div:
      if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero in K");
      return a / b;
  }
  return a;
}

std::string to_string(const FieldElem& a, std::span<const std::string> names) {
  if (a.is_polynomial()) return to_string(a.num(), names);
  std::string n = to_string(a.num(), names);
  std::string d = to_string(a.den(), names);
  if (a.num().terms().size() > 1) n = "(" + n + ")";
  const bool simple_den = a.den().terms().size() == 1 && a.den().leading_monomial().factors().size() == 1;
  if (!simple_den) d = "(" + d + ")";
  return n + "/" + d;
}

// ---------------------------------------------------------------------------
// BaseField

BaseField::BaseField(std::vector<std::string> symbols, std::vector<FieldElem> derivation_images,
                     std::size_t designated)
    : symbols_(std::move(symbols)), images_(std::move(derivation_images)), designated_(designated) {
  if (symbols_.empty()) throw Error(ErrorKind::InvalidArgument, "base field needs at least one symbol");
  if (images_.size() != symbols_.size()) {
    throw Error(ErrorKind::ArityMismatch, "one derivation image per base symbol is required");
  }
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (!seen.insert(s).second) throw Error(ErrorKind::InvalidArgument, "duplicate base symbol '" + s + "'");
  }
  if (designated_ >= symbols_.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "designated symbol index out of range");
  }
  for (const auto& img : images_) check_symbols(img);
  if (!images_[designated_].is_one()) {
    throw Error(ErrorKind::InvalidArgument,
                "derivation of designated symbol '" + symbols_[designated_] + "' must be exactly 1");
  }
}

std::optional<std::size_t> BaseField::index_of(const std::string& name) const {
  const auto it = std::find(symbols_.begin(), symbols_.end(), name);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - symbols_.begin());
}

FieldElem BaseField::gen(std::size_t i) const {
  if (i >= symbols_.size()) throw Error(ErrorKind::IndexOutOfRange, "base symbol index out of range");
  return FieldElem::symbol(static_cast<std::uint32_t>(i));
}

void BaseField::check_symbols(const FieldElem& a) const {
  const auto s = a.max_symbol();
  if (s && *s >= symbols_.size()) {
    throw Error(ErrorKind::UnknownSymbol, "element mentions symbol #" + std::to_string(*s) +
                                              " outside a field with " + std::to_string(size()) +
                                              " symbols");
  }
}

FieldElem BaseField::derive_poly(const QPoly& p) const {
  FieldElem out;
  if (p.is_constant()) return out;
  std::set<std::uint32_t> used;
  for (const auto& t : p.terms()) {
    for (const auto& f : t.first.factors()) used.insert(f.first);
  }
  for (const auto s : used) {
    if (images_[s].is_zero()) continue;
    out += FieldElem(p.partial(s)) * images_[s];
  }
  return out;
}

FieldElem BaseField::derive(const FieldElem& a) const {
  check_symbols(a);
  if (a.is_rational()) return FieldElem();
  const FieldElem dn = derive_poly(a.num());
  if (a.is_polynomial()) return dn;
  const FieldElem dd = derive_poly(a.den());
  const FieldElem n(a.num());
  const FieldElem d(a.den());
  return (dn * d - n * dd) / (d * d);
}

FieldElem fe_derive(const FieldElem& a, const BaseField& field) { return field.derive(a); }

bool same_field(const BaseField& a, const BaseField& b) {
  return &a == &b || (a.symbols() == b.symbols() && a.derivation_images() == b.derivation_images() &&
                      a.designated() == b.designated());
}

}  // namespace taudiff
