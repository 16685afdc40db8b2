#include "taudiff/tau.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace taudiff {

// ---------------------------------------------------------------------------
// TauForm

TauForm::TauForm(RingCtxPtr ctx) : ctx_(std::move(ctx)) {
  coords_.assign(ctx_->nvars() + 1, Poly(ctx_));
}

TauForm::TauForm(RingCtxPtr ctx, std::vector<Poly> coords) : ctx_(std::move(ctx)), coords_(std::move(coords)) {
  if (coords_.size() != ctx_->nvars() + 1) {
    throw Error(ErrorKind::ArityMismatch, "a tau-form over " + std::to_string(ctx_->nvars()) +
                                              " variables has " + std::to_string(ctx_->nvars() + 1) +
                                              " coordinates");
  }
  for (const auto& c : coords_) require_same_ctx(*c.ctx(), *ctx_);
}

TauForm TauForm::basis(RingCtxPtr ctx, std::size_t k) {
  TauForm w(ctx);
  if (k >= w.size()) throw Error(ErrorKind::IndexOutOfRange, "tau basis index out of range");
  w.coords_[k] = Poly(ctx, FieldElem(1));
  return w;
}

bool TauForm::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

TauForm& TauForm::operator+=(const TauForm& o) {
  require_same_ctx(*ctx_, *o.ctx_);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

TauForm& TauForm::operator-=(const TauForm& o) {
  require_same_ctx(*ctx_, *o.ctx_);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

TauForm TauForm::scaled(const Poly& r) const {
  TauForm w = *this;
  for (auto& c : w.coords_) c = c * r;
  return w;
}

TauForm TauForm::scaled(const FieldElem& c) const {
  TauForm w = *this;
  for (auto& x : w.coords_) x = x.scaled(c);
  return w;
}

TauForm TauForm::reduced(const PresentedAlgebra& algebra) const {
  TauForm w = *this;
  for (auto& c : w.coords_) c = algebra.normal_form(c);
  return w;
}

bool operator==(const TauForm& a, const TauForm& b) {
  return a.ctx_->same_as(*b.ctx_) && a.coords_ == b.coords_;
}

std::vector<std::string> tau_basis_labels(const RingCtx& ctx) {
  std::vector<std::string> labels{"tau_e"};
  for (const auto& v : ctx.vars()) labels.push_back("tau_" + v);
  return labels;
}

std::vector<std::string> kahler_basis_labels(const RingCtx& ctx) {
  std::vector<std::string> labels;
  for (const auto& v : ctx.vars()) labels.push_back("d" + v);
  return labels;
}

std::string to_string(const TauForm& w) {
  const auto labels = tau_basis_labels(*w.ctx());
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Poly& c = w.coord(i);
    if (c.is_zero()) continue;
    std::string coef = to_string(c);
    if (c.terms().size() > 1) coef = "(" + coef + ")";
    const std::string term = coef + "*" + labels[i];
    if (first) {
      os << term;
      first = false;
    } else if (term.front() == '-') {
      os << " - " << term.substr(1);
    } else {
      os << " + " << term;
    }
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------

TauForm tau_of(const Poly& f) {
  std::vector<Poly> coords;
  coords.reserve(f.nvars() + 1);
  coords.push_back(f.coeff_derivation());
  for (std::size_t i = 0; i < f.nvars(); ++i) coords.push_back(f.partial_derivative(i));
  return TauForm(f.ctx(), std::move(coords));
}

TauForm iota(const Poly& r) {
  TauForm w(r.ctx());
  return TauForm::basis(r.ctx(), 0).scaled(r) + w;
}

std::vector<Poly> lambda_proj(const TauForm& w) {
  return {w.coords().begin() + 1, w.coords().end()};
}

Poly pairing(std::span<const Poly> h, const TauForm& w) {
  if (h.size() != w.size()) throw Error(ErrorKind::ArityMismatch, "pairing needs n+1 images");
  Poly out(w.ctx());
  for (std::size_t i = 0; i < h.size(); ++i) out += h[i] * w.coord(i);
  return out;
}

Poly delta_tilde(const RingCtxPtr& ctx, std::span<const TensorTerm> tensor) {
  Poly out(ctx);
  for (const auto& [r, a] : tensor) out += r.scaled(ctx->base().derive(a));
  return out;
}

KernelBasis kernel_basis(const BaseFieldPtr& field) {
  KernelBasis kb{field, {}};
  const std::size_t m = field->size();
  const std::size_t e = field->designated();
  for (std::size_t s = 0; s < m; ++s) {
    if (s == e) continue;
    // delta(e_s) de - de_s
    std::vector<FieldElem> v(m);
    v[e] = field->derivation_image(s);
    v[s] = FieldElem(-1);
    kb.vectors.push_back(std::move(v));
  }
  return kb;
}

FieldElem delta_tilde(const BaseField& field, std::span<const FieldElem> omega_k_vector) {
  if (omega_k_vector.size() != field.size()) {
    throw Error(ErrorKind::ArityMismatch, "Omega_K vector length differs from the number of base symbols");
  }
  FieldElem out;
  for (std::size_t s = 0; s < field.size(); ++s) out += omega_k_vector[s] * field.derivation_image(s);
  return out;
}

// ---------------------------------------------------------------------------
// presentations

std::size_t module_rank(const ModulePresentation& m) { return m.free_rank - generic_rank(m.relations); }

ModulePresentation omega_tau_presentation(const PresentedAlgebra& b) {
  const std::size_t n = b.nvars();
  QuotientMatrix rel(b, n + 1);
  for (const auto& g : b.gens()) rel.add_row(tau_of(g).coords());
  return ModulePresentation{b, n + 1, std::move(rel), tau_basis_labels(*b.ctx())};
}

ModulePresentation omega_kahler_presentation(const PresentedAlgebra& b) {
  return ModulePresentation{b, b.nvars(), jacobian(b), kahler_basis_labels(*b.ctx())};
}

// ---------------------------------------------------------------------------
// first fundamental sequence

Poly RingMap::apply(const Poly& f) const { return f.substitute(images, target.ctx()); }

void check_algebra_map(const RingMap& map) {
  if (map.images.size() != map.source.nvars()) {
    throw Error(ErrorKind::ArityMismatch, "ring map needs one image per source variable");
  }
  for (const auto& img : map.images) require_same_ctx(*img.ctx(), *map.target.ctx());
  for (const auto& g : map.source.gens()) {
    const Poly r = map.target.normal_form(map.apply(g));
    if (!r.is_zero()) {
      throw Error(ErrorKind::NotAnAlgebraMap,
                  "image of generator " + to_string(g) + " has nonzero normal form " + to_string(r));
    }
  }
}

namespace {

std::size_t stacked_rank(const QuotientMatrix& base, const std::vector<std::vector<Poly>>& extra) {
  QuotientMatrix m = base;
  for (const auto& r : extra) m.add_row(r);
  return generic_rank(m);
}

}  // namespace

FirstSequenceReport first_tau_sequence(const RingMap& map) {
  check_algebra_map(map);
  const PresentedAlgebra& s = map.target;
  const std::size_t nr = map.source.nvars();
  const std::size_t ns = s.nvars();

  QuotientMatrix alpha(s, ns + 1);
  alpha.add_row(TauForm::basis(s.ctx(), 0).coords());
  for (const auto& img : map.images) alpha.add_row(tau_of(img).coords());

  QuotientMatrix beta(s, ns);
  for (std::size_t k = 0; k <= ns; ++k) {
    std::vector<Poly> row(ns, Poly(s.ctx()));
    if (k > 0) row[k - 1] = s.one();
    beta.add_row(std::move(row));
  }

  QuotientMatrix rel_relative = jacobian(s);
  for (const auto& img : map.images) rel_relative.add_row(lambda_proj(tau_of(img)));
  ModulePresentation relative{s, ns, rel_relative, kahler_basis_labels(*s.ctx())};

  // alpha * beta, row by row
  std::vector<std::vector<Poly>> composite;
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    std::vector<Poly> row(ns, Poly(s.ctx()));
    for (std::size_t j = 0; j < ns; ++j) {
      for (std::size_t k = 0; k <= ns; ++k) row[j] += alpha.at(i, k) * beta.at(k, j);
    }
    composite.push_back(std::move(row));
  }

  const ModulePresentation tau_s = omega_tau_presentation(s);
  const std::size_t rank_tau_rel = generic_rank(tau_s.relations);
  const std::size_t rank_rel_rel = generic_rank(rel_relative);

  QuotientMatrix source_rel(s, nr + 1);
  for (const auto& g : map.source.gens()) {
    const TauForm tg = tau_of(g);
    std::vector<Poly> row;
    for (const auto& c : tg.coords()) row.push_back(map.apply(c));
    source_rel.add_row(std::move(row));
  }

  FirstSequenceReport report{alpha, beta, relative};
  report.image_in_kernel = stacked_rank(rel_relative, composite) == rank_rel_rel;
  report.rank_image_alpha = stacked_rank(tau_s.relations, alpha.row_data()) - rank_tau_rel;
  report.rank_relative = ns - rank_rel_rel;
  report.rank_target = ns + 1 - rank_tau_rel;
  report.rank_source = nr + 1 - generic_rank(source_rel);
  report.rank_additive = report.rank_image_alpha + report.rank_relative == report.rank_target;
  report.alpha_injective = report.rank_image_alpha == report.rank_source;
  return report;
}

// ---------------------------------------------------------------------------
// localization

namespace {

// numerator / u^power
struct Fraction {
  TauForm num;
  unsigned power;
};

Fraction add(const Fraction& a, const Fraction& b, const Poly& u) {
  if (a.power >= b.power) return {a.num + b.num.scaled(u.pow(a.power - b.power)), a.power};
  return {a.num.scaled(u.pow(b.power - a.power)) + b.num, b.power};
}

}  // namespace

LocalTauForm tau_in_localization(const Poly& f, const Poly& u, int k) {
  require_same_ctx(*f.ctx(), *u.ctx());
  if (u.is_zero()) throw Error(ErrorKind::ZeroDenominator, "localizing at the zero polynomial");
  if (k <= 0) return {tau_of(f * u.pow(static_cast<unsigned>(-k))), u, 0};
  const auto kk = static_cast<unsigned>(k);
  // 0 = tau(u * u^-1) = u tau(u^-1) + u^-1 tau u, so tau(u^-1) = -tau u / u^2
  const Fraction tau_inv{tau_of(u).scaled(FieldElem(-1)), 2};
  // tau(u^-k) = k u^-(k-1) tau(u^-1)
  const Fraction tau_inv_k{tau_inv.num.scaled(FieldElem(static_cast<long>(kk))), tau_inv.power + kk - 1};
  // tau(f u^-k) = u^-k tau f + f tau(u^-k)
  const Fraction first{tau_of(f), kk};
  const Fraction second{tau_inv_k.num.scaled(f), tau_inv_k.power};
  Fraction sum = add(first, second, u);
  return {std::move(sum.num), u, sum.power};
}

TauForm localization_residual(const Poly& f, const Poly& u, int k, const LocalTauForm& value) {
  if (k <= 0) {
    const auto kk = static_cast<unsigned>(-k);
    TauForm expected = tau_of(f).scaled(u.pow(kk));
    if (kk > 0) expected += tau_of(u).scaled(f * u.pow(kk - 1) * Poly(u.ctx(), FieldElem(static_cast<long>(kk))));
    return value.numerator - expected.scaled(u.pow(value.power));
  }
  const auto kk = static_cast<unsigned>(k);
  // multiply u^(2k) tau(f/u^k) + k f u^(k-1) tau u - u^k tau f by u^power
  const TauForm lhs = value.numerator.scaled(u.pow(2 * kk));
  const TauForm rest = tau_of(u).scaled(f * u.pow(kk - 1)).scaled(FieldElem(static_cast<long>(kk))) -
                       tau_of(f).scaled(u.pow(kk));
  return lhs + rest.scaled(u.pow(value.power));
}

// ---------------------------------------------------------------------------
// base change

BaseChange::BaseChange(BaseFieldPtr extension, const PresentedAlgebra& algebra)
    : extension_(std::move(extension)), source_(algebra), target_(algebra) {
  const BaseField& k = algebra.ctx()->base();
  const BaseField& kp = *extension_;
  symbol_map_.resize(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    const auto j = kp.index_of(k.symbol_name(i));
    if (!j) throw Error(ErrorKind::NotAnExtension, "extension lacks base symbol '" + k.symbol_name(i) + "'");
    symbol_map_[i] = static_cast<std::uint32_t>(*j);
  }
  for (std::size_t i = 0; i < k.size(); ++i) {
    const FieldElem mapped = k.derivation_image(i).remap(symbol_map_);
    if (!(mapped == kp.derivation_image(symbol_map_[i]))) {
      throw Error(ErrorKind::NotAnExtension,
                  "derivations disagree on '" + k.symbol_name(i) + "': " + k.format(k.derivation_image(i)) +
                      " vs " + kp.format(kp.derivation_image(symbol_map_[i])));
    }
  }
  if (symbol_map_[k.designated()] != kp.designated()) {
    throw Error(ErrorKind::NotAnExtension, "extension designates a different element e");
  }
  target_ctx_ = make_ring(extension_, algebra.ctx()->vars(), algebra.ctx()->order());
  std::vector<Poly> gens;
  for (const auto& g : algebra.gens()) gens.push_back(g.extend_scalars(target_ctx_, symbol_map_));
  target_ = PresentedAlgebra(target_ctx_, std::move(gens), algebra.limits());
}

Poly BaseChange::extend(const Poly& r) const { return r.extend_scalars(target_ctx_, symbol_map_); }

TauForm BaseChange::extend(const TauForm& w) const {
  std::vector<Poly> coords;
  for (const auto& c : w.coords()) coords.push_back(extend(c));
  return TauForm(target_ctx_, std::move(coords));
}

TauForm BaseChange::tau_direct(const FieldElem& a, const Poly& r) const {
  return tau_of(Poly(target_ctx_, a) * extend(r)).reduced(target_);
}

TauForm BaseChange::forward(const FieldElem& a, const Poly& r) const {
  const TauForm first = extend(tau_of(r)).scaled(a);
  const TauForm second = iota(extend(r)).scaled(extension_->derive(a));
  return (first + second).reduced(target_);
}

TauForm BaseChange::forward_linear(const TauForm& w) const {
  const std::size_t n = source_.nvars();
  TauForm out(target_ctx_);
  const Poly one = source_.one();
  out += forward(extension_->designated_element(), one).scaled(w.coord(0));
  for (std::size_t i = 0; i < n; ++i) out += forward(FieldElem(1), source_.var(i)).scaled(w.coord(i + 1));
  return out.reduced(target_);
}

TauForm BaseChange::backward_linear(const TauForm& w) const {
  const std::size_t n = source_.nvars();
  TauForm out(target_ctx_);
  const Poly e(source_.ctx(), source_.ctx()->base().designated_element());
  out += tau_of(extend(e)).scaled(w.coord(0));
  for (std::size_t i = 0; i < n; ++i) out += tau_of(extend(source_.var(i))).scaled(w.coord(i + 1));
  return out.reduced(target_);
}

BaseChange base_change_iso(BaseFieldPtr extension, const PresentedAlgebra& algebra) {
  return BaseChange(std::move(extension), algebra);
}

RoundtripReport verify_base_change(const BaseChange& bc, std::span<const FieldElem> scalars,
                                   std::span<const Poly> ring_elements) {
  RoundtripReport report;
  const BaseField& kp = bc.extension();
  auto record = [&](bool ok, const std::string& what) {
    ++report.checks;
    if (!ok) {
      report.ok = false;
      report.failures.push_back(what);
    }
  };
  for (const auto& a : scalars) {
    for (const auto& r : ring_elements) {
      const TauForm direct = bc.tau_direct(a, r);
      const TauForm fwd = bc.forward(a, r);
      const std::string label = "tau(" + kp.format(a) + " (x) " + to_string(r) + ")";
      record(bc.backward_linear(fwd) == direct, "backward(forward(" + label + ")) = " +
                                                    to_string(bc.backward_linear(fwd)) + ", expected " +
                                                    to_string(direct));
      record(bc.forward_linear(direct) == fwd, "forward map disagrees with the induced module map on " + label);
    }
  }
  const auto& ctx = bc.target().ctx();
  for (std::size_t k = 0; k <= ctx->nvars(); ++k) {
    const TauForm b = TauForm::basis(ctx, k);
    record(bc.forward_linear(bc.backward_linear(b)) == b, "forward(backward(basis " + std::to_string(k) + "))");
    record(bc.backward_linear(bc.forward_linear(b)) == b, "backward(forward(basis " + std::to_string(k) + "))");
  }
  return report;
}

// ---------------------------------------------------------------------------
// derivations

namespace {

// Apply d/de_s to every coefficient.
Poly coefficient_partial(const Poly& f, std::uint32_t s) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    FieldElem c = t.coeff.partial(s);
    if (!c.is_zero()) out.push_back(Term{t.exps, std::move(c)});
  }
  return Poly::from_sorted_terms(f.ctx(), std::move(out));
}

void check_spec_shape(const DerivationSpec& d) {
  if (d.image_of_vars.size() != d.ctx->nvars()) {
    throw Error(ErrorKind::ArityMismatch, "derivation needs one image per ring variable");
  }
  if (d.base_images.size() != d.ctx->base().size()) {
    throw Error(ErrorKind::ArityMismatch, "derivation needs one image per base symbol");
  }
}

}  // namespace

DerivationSpec DerivationSpec::extends_delta(RingCtxPtr ctx, std::vector<Poly> image_of_vars) {
  std::vector<Poly> base;
  for (const auto& img : ctx->base().derivation_images()) base.emplace_back(ctx, img);
  DerivationSpec d{std::move(ctx), std::move(image_of_vars), BaseAction::extends_delta, std::move(base)};
  check_spec_shape(d);
  return d;
}

DerivationSpec DerivationSpec::zero_on_K(RingCtxPtr ctx, std::vector<Poly> image_of_vars) {
  std::vector<Poly> base(ctx->base().size(), Poly(ctx));
  DerivationSpec d{std::move(ctx), std::move(image_of_vars), BaseAction::zero_on_K, std::move(base)};
  check_spec_shape(d);
  return d;
}

DerivationSpec DerivationSpec::custom(RingCtxPtr ctx, std::vector<Poly> image_of_vars,
                                      std::vector<Poly> base_images) {
  DerivationSpec d{std::move(ctx), std::move(image_of_vars), BaseAction::custom, std::move(base_images)};
  check_spec_shape(d);
  return d;
}

DerivationSpec DerivationSpec::partial(RingCtxPtr ctx, std::size_t i) {
  std::vector<Poly> images(ctx->nvars(), Poly(ctx));
  images.at(i) = Poly(ctx, FieldElem(1));
  return zero_on_K(std::move(ctx), std::move(images));
}

DerivationSpec DerivationSpec::epsilon(RingCtxPtr ctx) {
  std::vector<Poly> images(ctx->nvars(), Poly(ctx));
  return extends_delta(std::move(ctx), std::move(images));
}

Poly DerivationSpec::apply(const Poly& f) const {
  require_same_ctx(*f.ctx(), *ctx);
  Poly out(ctx);
  for (std::size_t i = 0; i < image_of_vars.size(); ++i) {
    if (!image_of_vars[i].is_zero()) out += f.partial_derivative(i) * image_of_vars[i];
  }
  for (std::size_t s = 0; s < base_images.size(); ++s) {
    if (!base_images[s].is_zero()) out += coefficient_partial(f, static_cast<std::uint32_t>(s)) * base_images[s];
  }
  return out;
}

Poly DerivationSpec::apply(const FieldElem& a) const { return apply(Poly(ctx, a)); }

bool DerivationSpec::is_zero() const {
  for (const auto& p : image_of_vars) {
    if (!p.is_zero()) return false;
  }
  for (const auto& p : base_images) {
    if (!p.is_zero()) return false;
  }
  return true;
}

bool operator==(const DerivationSpec& a, const DerivationSpec& b) {
  return a.ctx->same_as(*b.ctx) && a.image_of_vars == b.image_of_vars && a.base_images == b.base_images;
}

TauDerivationVerdict is_tau_derivation(const DerivationSpec& d) {
  check_spec_shape(d);
  const BaseField& k = d.ctx->base();
  TauDerivationVerdict v{true, 0, 0, Poly(d.ctx), Poly(d.ctx)};
  for (std::size_t a = 0; a < k.size(); ++a) {
    for (std::size_t b = a + 1; b < k.size(); ++b) {
      Poly lhs = d.base_images[b].scaled(k.derivation_image(a));
      Poly rhs = d.base_images[a].scaled(k.derivation_image(b));
      if (!(lhs == rhs)) return TauDerivationVerdict{false, a, b, std::move(lhs), std::move(rhs)};
    }
  }
  return v;
}

DerivationSpec commutator(const DerivationSpec& d1, const DerivationSpec& d2) {
  require_same_ctx(*d1.ctx, *d2.ctx);
  for (const auto* d : {&d1, &d2}) {
    const auto v = is_tau_derivation(*d);
    if (!v.ok) {
      const BaseField& k = d->ctx->base();
      throw Error(ErrorKind::NotTauDerivation,
                  std::string(d == &d1 ? "first" : "second") + " argument: delta(" + k.symbol_name(v.a) + ")*D(" +
                      k.symbol_name(v.b) + ") = " + to_string(v.lhs) + " but delta(" + k.symbol_name(v.b) +
                      ")*D(" + k.symbol_name(v.a) + ") = " + to_string(v.rhs));
    }
  }
  std::vector<Poly> vars;
  for (std::size_t i = 0; i < d1.image_of_vars.size(); ++i) {
    vars.push_back(d1.apply(d2.image_of_vars[i]) - d2.apply(d1.image_of_vars[i]));
  }
  std::vector<Poly> base;
  for (std::size_t s = 0; s < d1.base_images.size(); ++s) {
    base.push_back(d1.apply(d2.base_images[s]) - d2.apply(d1.base_images[s]));
  }
  DerivationSpec out = DerivationSpec::custom(d1.ctx, std::move(vars), std::move(base));
  bool zero_base = true;
  for (const auto& p : out.base_images) zero_base = zero_base && p.is_zero();
  if (zero_base) out.on_base = BaseAction::zero_on_K;
  return out;
}

DerivationSpec derivation_from_hom(RingCtxPtr ctx, std::vector<Poly> h) {
  if (h.size() != ctx->nvars() + 1) throw Error(ErrorKind::ArityMismatch, "hom needs n+1 images");
  const BaseField& k = ctx->base();
  std::vector<Poly> base;
  for (std::size_t s = 0; s < k.size(); ++s) base.push_back(h[0].scaled(k.derivation_image(s)));
  std::vector<Poly> vars(h.begin() + 1, h.end());
  DerivationSpec d = DerivationSpec::custom(ctx, std::move(vars), std::move(base));
  if (h[0].is_zero()) {
    d.on_base = BaseAction::zero_on_K;
  } else if (h[0] == Poly(ctx, FieldElem(1))) {
    d.on_base = BaseAction::extends_delta;
  }
  return d;
}

std::string to_string(BaseAction a) {
  switch (a) {
    case BaseAction::extends_delta: return "extends_delta";
    case BaseAction::zero_on_K: return "zero_on_K";
    case BaseAction::custom: return "custom";
  }
  return "custom";
}

// ---------------------------------------------------------------------------
// transcendence basis criterion

BasisVerdict tau_basis_check(const RingCtxPtr& ctx, std::span<const Poly> candidates) {
  const std::size_t n = ctx->nvars();
  PresentedAlgebra ring(ctx);
  QuotientMatrix m(ring, n + 1);
  m.add_row(TauForm::basis(ctx, 0).coords());
  for (const auto& b : candidates) m.add_row(tau_of(b).coords());
  BasisVerdict v;
  v.rank = generic_rank(m);
  if (candidates.size() != n) {
    v.reason = std::to_string(candidates.size()) + " candidates for a transcendence degree of " + std::to_string(n);
  } else if (v.rank != n + 1) {
    v.reason = "tau-forms span a space of dimension " + std::to_string(v.rank) + " < " + std::to_string(n + 1);
  } else {
    v.is_basis = true;
  }
  return v;
}

// ---------------------------------------------------------------------------
// split section search

namespace {

std::vector<Exponents> monomials_up_to(std::size_t n, unsigned d) {
  std::vector<Exponents> out;
  Exponents e(n, 0);
  // enumerate all exponent vectors with total degree <= d, by degree
  for (unsigned total = 0; total <= d; ++total) {
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
      if (i + 1 == n) {
        e[i] = left;
        out.push_back(e);
        return;
      }
      for (unsigned k = left + 1; k-- > 0;) {
        e[i] = k;
        rec(i + 1, left - k);
      }
    };
    if (n == 0) {
      if (total == 0) out.push_back(e);
    } else {
      rec(0, total);
    }
  }
  return out;
}

}  // namespace

std::optional<SplitSection> split_section_search(const PresentedAlgebra& b, unsigned degree_bound) {
  const RingCtxPtr& ctx = b.ctx();
  const std::size_t n = b.nvars();
  const auto& gens = b.gens();
  const std::size_t ng = gens.size();
  std::vector<TauForm> rel;
  for (const auto& g : gens) rel.push_back(tau_of(g));

  for (unsigned d = 0; d <= degree_bound; ++d) {
    const auto monos = monomials_up_to(n, d);
    const std::size_t nm = monos.size();
    const std::size_t unknowns = n * nm + ng * ng * nm;
    auto p_index = [&](std::size_t i, std::size_t mu) { return i * nm + mu; };
    auto c_index = [&](std::size_t a, std::size_t k, std::size_t mu) { return n * nm + (a * ng + k) * nm + mu; };

    // equation slot: (generator, coordinate, monomial)
    using Slot = std::tuple<std::size_t, std::size_t, Exponents>;
    std::map<Slot, std::map<std::size_t, FieldElem>> lhs;
    std::map<Slot, FieldElem> rhs;
    auto accumulate = [&](std::size_t a, std::size_t j, const Poly& p, std::size_t unknown, bool negate) {
      for (const auto& t : p.terms()) {
        auto& cell = lhs[{a, j, t.exps}][unknown];
        cell += negate ? -t.coeff : t.coeff;
      }
    };
    for (std::size_t a = 0; a < ng; ++a) {
      for (std::size_t mu = 0; mu < nm; ++mu) {
        const Poly xmu = Poly::monomial(ctx, monos[mu], FieldElem(1));
        for (std::size_t i = 0; i < n; ++i) {
          accumulate(a, 0, b.normal_form(gens[a].partial_derivative(i) * xmu), p_index(i, mu), false);
        }
        for (std::size_t k = 0; k < ng; ++k) {
          for (std::size_t j = 0; j <= n; ++j) {
            accumulate(a, j, b.normal_form(rel[k].coord(j) * xmu), c_index(a, k, mu), true);
          }
        }
      }
      const Poly target = b.normal_form(gens[a].coeff_derivation());
      for (const auto& t : target.terms()) {
        rhs[{a, 0, t.exps}] += t.coeff;
        lhs[{a, 0, t.exps}];
      }
    }

    FieldMatrix m(lhs.size(), unknowns);
    std::vector<FieldElem> r(lhs.size());
    std::size_t row = 0;
    for (const auto& [slot, cells] : lhs) {
      for (const auto& [unknown, value] : cells) m.at(row, unknown) = value;
      if (auto it = rhs.find(slot); it != rhs.end()) r[row] = it->second;
      ++row;
    }
    const auto solution = unknowns == 0 && lhs.empty() ? std::optional<std::vector<FieldElem>>(std::vector<FieldElem>{})
                                                       : solve(m, r);
    if (!solution) continue;

    SplitSection section;
    section.degree = d;
    for (std::size_t i = 0; i < n; ++i) {
      Poly p(ctx);
      for (std::size_t mu = 0; mu < nm; ++mu) {
        const FieldElem& c = (*solution)[p_index(i, mu)];
        if (!c.is_zero()) p += Poly::monomial(ctx, monos[mu], c);
      }
      section.images.push_back((TauForm::basis(ctx, i + 1) + TauForm::basis(ctx, 0).scaled(p)).reduced(b));
    }
    for (std::size_t a = 0; a < ng; ++a) {
      std::vector<Poly> row_cof;
      for (std::size_t k = 0; k < ng; ++k) {
        Poly c(ctx, FieldElem(a == k ? 1 : 0));
        for (std::size_t mu = 0; mu < nm; ++mu) {
          const FieldElem& v = (*solution)[c_index(a, k, mu)];
          if (!v.is_zero()) c += Poly::monomial(ctx, monos[mu], v);
        }
        row_cof.push_back(std::move(c));
      }
      section.cofactors.push_back(std::move(row_cof));
    }
    return section;
  }
  return std::nullopt;
}

bool verify_split_section(const PresentedAlgebra& b, const SplitSection& s, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why != nullptr) *why = msg;
    return false;
  };
  const RingCtxPtr& ctx = b.ctx();
  const std::size_t n = b.nvars();
  if (s.images.size() != n) return fail("section must have one image per dx_i");
  for (std::size_t i = 0; i < n; ++i) {
    const auto lam = lambda_proj(s.images[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const Poly expected(ctx, FieldElem(i == j ? 1 : 0));
      if (!b.normal_form(lam[j] - expected).is_zero()) {
        return fail("lambda(S(d" + ctx->var_name(i) + ")) differs from d" + ctx->var_name(i));
      }
    }
  }
  const auto& gens = b.gens();
  if (s.cofactors.size() != gens.size()) return fail("missing cofactors");
  for (std::size_t a = 0; a < gens.size(); ++a) {
    TauForm v(ctx);
    for (std::size_t j = 0; j < n; ++j) v += s.images[j].scaled(gens[a].partial_derivative(j));
    for (std::size_t k = 0; k < gens.size(); ++k) v -= tau_of(gens[k]).scaled(s.cofactors[a][k]);
    v = v.reduced(b);
    if (!v.is_zero()) {
      return fail("image of the Kahler relation of " + to_string(gens[a]) + " leaves the relation span: " +
                  to_string(v));
    }
  }
  return true;
}

}  // namespace taudiff
