#include <functional>
#include <map>
#include <sstream>

#include "taudiff_cli/cli.hpp"
#include "taudiff_cli/sampler.hpp"

namespace taudiff::cli {

namespace {

// Accumulates checks; the first few failures are kept as witnesses.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& witness) {
    ++checks_;
    if (ok) return;
    ++failed_;
    if (witnesses_.size() < 5) witnesses_.push_back(witness());
  }
  std::size_t checks() const { return checks_; }
  bool ok() const { return failed_ == 0; }

  SuiteResult finish(const std::string& name, const std::string& what) const {
    SuiteResult r{name, ok() ? Status::pass : Status::fail, {}, witnesses_};
    r.summary = ok() ? std::to_string(checks_) + " checks: " + what
                     : std::to_string(failed_) + " of " + std::to_string(checks_) + " checks failed";
    return r;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> witnesses_;
};

SuiteResult skip(const std::string& name, const std::string& why) { return {name, Status::skip, why, {}}; }

std::string str(const TauForm& w) { return to_string(w); }

std::size_t stacked_rank(const QuotientMatrix& base, const std::vector<std::vector<Poly>>& extra) {
  QuotientMatrix m = base;
  for (const auto& r : extra) m.add_row(r);
  return generic_rank(m);
}

// Expected dimension: the asserted one, else n - rank of the Jacobian.
std::size_t expected_dim(const ProblemFile& p) {
  if (p.assertions.dim) return *p.assertions.dim;
  return p.algebra.nvars() - generic_rank(jacobian(p.algebra));
}

bool declared_non_domain(const ProblemFile& p) { return p.assertions.prime && !*p.assertions.prime; }

// ---------------------------------------------------------------------------

SuiteResult leibniz(const ProblemFile& p, const SuiteOptions& o) {
  Tally t;
  Sampler s(o.seed);
  const RingCtxPtr& ctx = p.ring();
  const BaseField& k = ctx->base();
  for (std::size_t i = 0; i < o.samples; ++i) {
    const Poly f = s.poly(ctx, 3, 3);
    const Poly g = s.poly(ctx, 3, 3);
    const TauForm lhs = tau_of(f * g);
    const TauForm rhs = tau_of(g).scaled(f) + tau_of(f).scaled(g);
    t.check(lhs == rhs, [&] { return "tau((" + to_string(f) + ")*(" + to_string(g) + ")) = " + str(lhs) +
                                     " but f tau g + g tau f = " + str(rhs); });
    const FieldElem a = s.scalar(k);
    const TauForm ta = tau_of(Poly(ctx, a));
    const TauForm expect = iota(Poly(ctx, k.derive(a)));
    t.check(ta == expect, [&] { return "tau(" + k.format(a) + ") = " + str(ta) + ", expected " + str(expect); });
    const Poly r = s.poly(ctx, 2, 2);
    const auto lam = lambda_proj(iota(r));
    bool zero = true;
    for (const auto& c : lam) zero = zero && c.is_zero();
    t.check(zero, [&] { return "lambda(iota(" + to_string(r) + ")) is not zero"; });
    std::vector<Poly> h;
    for (std::size_t j = 0; j <= ctx->nvars(); ++j) h.push_back(s.poly(ctx, 1, 2));
    const DerivationSpec d = derivation_from_hom(ctx, h);
    const Poly paired = pairing(h, tau_of(f));
    const Poly applied = d.apply(f);
    t.check(paired == applied, [&] {
      return "<h, tau(" + to_string(f) + ")> = " + to_string(paired) + " but D_h(f) = " + to_string(applied);
    });
  }
  for (std::size_t i = 0; i < k.size(); ++i) {
    const TauForm ta = tau_of(Poly(ctx, k.gen(i)));
    const TauForm expect = iota(Poly(ctx, k.derivation_image(i)));
    t.check(ta == expect, [&] { return "tau(" + k.symbol_name(i) + ") = " + str(ta); });
  }
  return t.finish("leibniz", "Leibniz rule, tau on K, lambda o iota = 0, hom pairing");
}

SuiteResult sequences(const ProblemFile& p, const SuiteOptions& o) {
  Tally t;
  const PresentedAlgebra& b = p.algebra;
  const ModulePresentation tau_b = omega_tau_presentation(b);
  const ModulePresentation kahler = omega_kahler_presentation(b);
  const std::size_t rank_tau = module_rank(tau_b);
  const std::size_t rank_kahler = module_rank(kahler);
  const std::size_t rel_rank = generic_rank(tau_b.relations);
  const std::size_t iota_rank = stacked_rank(tau_b.relations, {TauForm::basis(b.ctx(), 0).coords()}) - rel_rank;
  t.check(rank_tau - rank_kahler == 1, [&] {
    return "rank ker(lambda) = " + std::to_string(rank_tau) + " - " + std::to_string(rank_kahler) + " != 1";
  });
  t.check(iota_rank == 1, [&] { return "rank im(iota) = " + std::to_string(iota_rank); });

  // K -> B, then every declared morphism read as a ring map
  std::vector<std::pair<std::string, RingMap>> maps;
  const RingCtxPtr k_ring = make_ring(p.field, {}, b.ctx()->order());
  maps.emplace_back("K -> B", RingMap{PresentedAlgebra(k_ring), b, {}});
  for (const auto& m : p.morphisms) {
    maps.emplace_back(m.name, RingMap{m.target, p.source_of(m), m.images});
  }
  for (const auto& [name, map] : maps) {
    const FirstSequenceReport r = first_tau_sequence(map);
    t.check(r.image_in_kernel, [&] { return name + ": image of alpha is not in the kernel of beta"; });
    t.check(r.rank_additive, [&] {
      return name + ": rank im(alpha) + rank Omega_{S/R} = " + std::to_string(r.rank_image_alpha) + " + " +
             std::to_string(r.rank_relative) + " != " + std::to_string(r.rank_target);
    });
  }

  // relations for arbitrary ideal elements follow from the generator rows
  if (!b.gens().empty()) {
    Sampler s(o.seed + 1);
    for (std::size_t i = 0; i < o.samples; ++i) {
      Poly f(b.ctx());
      TauForm combo(b.ctx());
      for (const auto& g : b.gens()) {
        const Poly c = s.poly(b.ctx(), 2, 2);
        f += c * g;
        combo += tau_of(g).scaled(c);
      }
      const TauForm tf = tau_of(f);
      t.check(stacked_rank(tau_b.relations, {tf.coords()}) == rel_rank,
              [&] { return "tau(" + to_string(f) + ") leaves the span of the generator rows"; });
      t.check(tf.reduced(b) == combo.reduced(b),
              [&] { return "tau(sum c g) differs from sum c tau(g) modulo I for f = " + to_string(f); });
    }
  }
  return t.finish("sequences", "ker(lambda) = im(iota) in rank, " + std::to_string(maps.size()) +
                                   " first sequences, random ideal elements");
}

SuiteResult split(const ProblemFile& p, const SuiteOptions& o) {
  if (declared_non_domain(p) || (p.assertions.smooth && !*p.assertions.smooth)) {
    return skip("split", "input is not declared smooth");
  }
  const PresentedAlgebra& b = p.algebra;
  const std::size_t dim = expected_dim(p);
  const SmoothnessReport smooth = jacobian_smooth_check(b, dim);
  if (!smooth.smooth) {
    SuiteResult r{"split", Status::fail, "smoothness not verified", {smooth.witness}};
    if (!p.assertions.smooth) r.status = Status::skip;
    return r;
  }
  const auto section = split_section_search(b, o.degree_bound);
  if (!section) {
    return {"split", Status::fail, "no section with coefficients of degree <= " + std::to_string(o.degree_bound),
            {"linear system for the section has no solution at this bound"}};
  }
  std::string why;
  if (!verify_split_section(b, *section, &why)) return {"split", Status::fail, "section failed to verify", {why}};
  std::string images;
  for (std::size_t i = 0; i < section->images.size(); ++i) {
    if (i > 0) images += ", ";
    images += "d" + b.ctx()->var_name(i) + " -> " + str(section->images[i]);
  }
  return {"split", Status::pass, "section of degree " + std::to_string(section->degree) + ": " + images, {}};
}

SuiteResult localization(const ProblemFile& p, const SuiteOptions& o) {
  Tally t;
  Sampler s(o.seed + 2);
  const RingCtxPtr& ctx = p.ring();
  for (std::size_t i = 0; i < o.samples; ++i) {
    const Poly f = s.poly(ctx, 2, 3);
    const Poly u = s.nonzero_poly(ctx, 2, 2);
    const int k = s.uniform(-1, 3);
    const LocalTauForm v = tau_in_localization(f, u, k);
    const TauForm res = localization_residual(f, u, k, v);
    t.check(res.is_zero(), [&] {
      return "tau((" + to_string(f) + ")/(" + to_string(u) + ")^" + std::to_string(k) + ") residual " + str(res);
    });
    if (k > 0) {
      t.check(v.power == static_cast<unsigned>(k) + 1, [&] { return "denominator power " + std::to_string(v.power); });
    }
  }
  return t.finish("localization", "quotient rule for tau(f/u^k)");
}

std::string fresh_symbol(const ProblemFile& p) {
  for (int i = 0;; ++i) {
    std::string name = i == 0 ? "s" : "s" + std::to_string(i);
    if (!p.field->index_of(name) && !p.ring()->index_of(name)) return name;
  }
}

SuiteResult basechange(const ProblemFile& p, const SuiteOptions& o) {
  Tally t;
  Sampler s(o.seed + 3);
  const BaseField& k = *p.field;
  const std::string name = fresh_symbol(p);
  std::vector<std::string> symbols = k.symbols();
  symbols.push_back(name);
  const std::size_t sidx = symbols.size() - 1;
  const FieldElem sym = FieldElem(QPoly::symbol(static_cast<std::uint32_t>(sidx)));
  const std::vector<std::pair<std::string, FieldElem>> images{
      {"0", FieldElem(0)}, {name, sym}, {k.symbol_name(k.designated()), k.designated_element()}};
  for (const auto& [label, image] : images) {
    std::vector<FieldElem> ds = k.derivation_images();
    ds.push_back(image);
    const auto ext = std::make_shared<const BaseField>(symbols, ds, k.designated());
    const BaseChange bc = base_change_iso(ext, p.algebra);
    std::vector<FieldElem> scalars{sym, ext->designated_element(), sym * ext->designated_element() + FieldElem(1),
                                   FieldElem(1) / (sym + FieldElem(1)), FieldElem(Rat(2, 3))};
    std::vector<Poly> elems{p.algebra.one()};
    for (std::size_t i = 0; i < p.algebra.nvars(); ++i) elems.push_back(p.algebra.var(i));
    for (const auto& g : p.algebra.gens()) elems.push_back(g);
    for (std::size_t i = 0; i < 3; ++i) elems.push_back(s.poly(p.ring(), 2, 2));
    const RoundtripReport r = verify_base_change(bc, scalars, elems);
    for (std::size_t i = 0; i < r.checks; ++i) {
      const bool ok = i >= r.failures.size();
      t.check(ok, [&, i] { return "d(" + name + ") = " + label + ": " + r.failures[i]; });
    }
  }
  return t.finish("basechange", "roundtrips over " + std::to_string(images.size()) + " extensions by " + name);
}

SuiteResult commutators(const ProblemFile& p, const SuiteOptions& o) {
  Tally t;
  Sampler s(o.seed + 4);
  const RingCtxPtr& ctx = p.ring();
  const std::size_t n = ctx->nvars();
  auto random_derivation = [&]() {
    std::vector<Poly> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back(s.poly(ctx, 2, 2));
    switch (s.uniform(0, 2)) {
      case 0: return DerivationSpec::extends_delta(ctx, vars);
      case 1: return DerivationSpec::zero_on_K(ctx, vars);
      default: {
        std::vector<Poly> h{s.poly(ctx, 1, 2)};
        for (auto& v : vars) h.push_back(v);
        return derivation_from_hom(ctx, h);
      }
    }
  };
  auto negated = [](DerivationSpec d) {
    for (auto& x : d.image_of_vars) x = -x;
    for (auto& x : d.base_images) x = -x;
    return d;
  };
  for (std::size_t i = 0; i < o.samples; ++i) {
    const DerivationSpec d1 = random_derivation();
    const DerivationSpec d2 = random_derivation();
    const DerivationSpec c = commutator(d1, d2);
    const auto verdict = is_tau_derivation(c);
    t.check(verdict.ok, [&] { return "commutator fails the tau test on (" + std::to_string(verdict.a) + ", " +
                                     std::to_string(verdict.b) + ")"; });
    t.check(c == negated(commutator(d2, d1)), [&] { return "commutator is not antisymmetric"; });
    t.check(commutator(d1, d1).is_zero(), [&] { return "[D, D] is not zero"; });
    const Poly f = s.poly(ctx, 3, 3);
    const Poly lhs = c.apply(f);
    const Poly rhs = d1.apply(d2.apply(f)) - d2.apply(d1.apply(f));
    t.check(lhs == rhs, [&] { return "[D1, D2](" + to_string(f) + ") = " + to_string(lhs) + " vs " + to_string(rhs); });
  }
  const DerivationSpec eps = DerivationSpec::epsilon(ctx);
  for (std::size_t i = 0; i < n; ++i) {
    const DerivationSpec c = commutator(DerivationSpec::partial(ctx, i), eps);
    t.check(c.is_zero(), [&] { return "[d/d" + ctx->var_name(i) + ", epsilon] is not zero"; });
  }
  return t.finish("commutator", "closure, antisymmetry, [d/dx, epsilon] = 0");
}

SuiteResult kernel(const ProblemFile& p, const SuiteOptions&) {
  Tally t;
  const KernelBasis kb = kernel_basis(p.field);
  const std::size_t m = p.field->size();
  t.check(kb.vectors.size() + 1 == m,
          [&] { return std::to_string(kb.vectors.size()) + " kernel vectors for " + std::to_string(m) + " symbols"; });
  FieldMatrix mat(0, m);
  for (const auto& v : kb.vectors) {
    const FieldElem d = delta_tilde(*p.field, v);
    t.check(d.is_zero(), [&] { return "delta_tilde of a kernel vector is " + p.field->format(d); });
    mat.append_row(v);
  }
  t.check(rank(mat) == kb.vectors.size(), [&] { return "kernel vectors are dependent"; });
  return t.finish("kernel", std::to_string(kb.vectors.size()) + " independent kernel vectors");
}

std::vector<std::vector<FieldElem>> sample_points(const ProblemFile& p) {
  std::vector<std::vector<FieldElem>> pts;
  for (const auto& pt : p.points) {
    if (point_on(p.algebra, pt).on) pts.push_back(pt);
  }
  if (pts.empty()) pts = search_rational_points(p.algebra, 3);
  return pts;
}

SuiteResult torsor(const ProblemFile& p, const SuiteOptions&) {
  const auto pts = sample_points(p);
  if (pts.empty()) return skip("torsor", "no rational point found");
  Tally t;
  const ConeAlgebra cone = prolongation_cone(p.algebra);
  const SlicedVariety tx = slice_cone(cone, Slice::tangent);
  const SlicedVariety x1 = slice_cone(cone, Slice::prolongation);
  const BaseField& k = *p.field;
  const std::size_t n = p.algebra.nvars();
  std::string listed;
  for (const auto& a : pts) {
    const std::string at = format_point(k, a);
    listed += (listed.empty() ? "" : ", ") + at;
    const AffineFiber tf = fiber_at(tx, a);
    const AffineFiber pf = fiber_at(x1, a);
    t.check(pf.particular.has_value(), [&] { return "prolongation fiber over " + at + " is empty"; });
    if (!pf.particular) continue;
    const FiberPoint w{a, *pf.particular};
    std::vector<FieldElem> vsum(n);
    for (const auto& d : tf.directions) {
      for (std::size_t i = 0; i < n; ++i) vsum[i] += d[i];
    }
    const FiberPoint v{a, vsum};
    const FiberPoint moved = torsor_act(tx, x1, v, w);
    t.check(point_on(x1, moved).on, [&] { return "v + w leaves the prolongation over " + at; });
    const FiberPoint same = torsor_act(tx, x1, FiberPoint{a, std::vector<FieldElem>(n)}, w);
    t.check(same.fiber == w.fiber, [&] { return "zero vector moves w over " + at; });
    const FiberPoint diff = torsor_difference(x1, moved, w);
    t.check(point_on(tx, diff).on && diff.fiber == v.fiber,
            [&] { return "difference of prolongation points over " + at + " is not the tangent vector"; });
    for (const auto& d : pf.directions) {
      std::vector<FieldElem> other = w.fiber;
      for (std::size_t i = 0; i < n; ++i) other[i] += d[i];
      const FiberPoint w2{a, other};
      const FiberPoint dd = torsor_difference(x1, w2, w);
      const auto on = point_on(tx, dd);
      t.check(on.on, [&] { return "difference over " + at + " is not tangent: " + on.witness; });
    }
    t.check(tf.directions.size() == pf.directions.size(),
            [&] { return "tangent and prolongation fibers over " + at + " differ in dimension"; });
  }
  return t.finish("torsor", std::to_string(pts.size()) + " points " + listed);
}

SuiteResult slices(const ProblemFile& p, const SuiteOptions&) {
  Tally t;
  const ConeAlgebra cone = prolongation_cone(p.algebra);
  const SliceReport r = check_slices(cone);
  for (const auto& f : r.failures) t.check(false, [&] { return f; });
  t.check(r.coherent, [] { return "slice coherence"; });
  t.check(r.surjective, [] { return "surjection onto slices"; });
  t.check(r.buium, [] { return "Buium coincidence"; });
  t.check(!r.cone_nonempty || r.disjoint, [] { return "disjointness certificate"; });
  std::string extra;
  if (!declared_non_domain(p)) {
    const std::size_t er = embedding_rank(p.algebra);
    const std::size_t tr = module_rank(omega_tau_presentation(p.algebra));
    t.check(er == tr, [&] {
      return "image of tau-differentials in the prolongation has rank " + std::to_string(er) + ", expected " +
             std::to_string(tr);
    });
    extra = ", embedding rank " + std::to_string(er);
  }
  return t.finish("slices", "coherence, surjection, Buium map, disjointness" + extra);
}

SuiteResult lifts(const ProblemFile& p, const SuiteOptions&) {
  if (p.morphisms.empty()) return skip("lift-equivariance", "no morphisms declared");
  Tally t;
  const auto base_pts = sample_points(p);
  std::map<std::string, std::vector<std::vector<FieldElem>>> pts_on_target;

  // identity
  {
    const ConeLift id = lift_morphism(identity_morphism(p.algebra));
    bool ok = true;
    for (std::size_t i = 0; i < id.images.size(); ++i) ok = ok && id.images[i] == Poly::variable(id.source.cone_ctx, i);
    t.check(ok, [] { return "lift of the identity is not the identity"; });
  }

  for (const auto& decl : p.morphisms) {
    const Morphism f = p.morphism(decl);
    const ConeLift lf = lift_morphism(f);
    std::string why;
    t.check(lift_respects_cones(lf, &why), [&] { return decl.name + ": " + why; });

    if (const MorphismDecl* prev = p.find_morphism(decl.source)) {
      const Morphism g = p.morphism(*prev);
      const ConeLift whole = lift_morphism(compose(f, g));
      const ConeLift parts = compose(lf, lift_morphism(g));
      bool same = true;
      for (std::size_t i = 0; i < whole.images.size(); ++i) {
        same = same && whole.source.cone_ideal.normal_form(whole.images[i] - parts.images[i]).is_zero();
      }
      t.check(same, [&] { return "lift(" + decl.name + " o " + prev->name + ") differs from the composite of lifts"; });
    }

    const std::vector<std::vector<FieldElem>>& src_pts =
        decl.source == "X" ? base_pts : pts_on_target[decl.source];
    const SlicedVariety sx = prolongation(f.source);
    const SlicedVariety stx = tangent_variety(f.source);
    const SlicedVariety ty = prolongation(f.target);
    const SlicedVariety tty = tangent_variety(f.target);
    std::vector<std::vector<FieldElem>> images;
    for (const auto& a : src_pts) {
      const std::string at = format_point(*p.field, a);
      const AffineFiber pf = fiber_at(sx, a);
      const AffineFiber tf = fiber_at(stx, a);
      if (!pf.particular) continue;
      const FiberPoint w{a, *pf.particular};
      std::vector<FieldElem> vf(a.size());
      for (const auto& d : tf.directions) {
        for (std::size_t i = 0; i < vf.size(); ++i) vf[i] += d[i];
      }
      const FiberPoint v{a, vf};
      FiberPoint wv = w;
      for (std::size_t i = 0; i < vf.size(); ++i) wv.fiber[i] += vf[i];
      const FiberPoint lw = apply_lift(lf, w, FieldElem(1));
      const FiberPoint lwv = apply_lift(lf, wv, FieldElem(1));
      const FiberPoint dv = apply_lift(lf, v, FieldElem(0));
      std::vector<FieldElem> expect = lw.fiber;
      for (std::size_t i = 0; i < expect.size(); ++i) expect[i] += dv.fiber[i];
      t.check(lwv.fiber == expect, [&] { return decl.name + ": lift(w + v) != lift(w) + df(v) over " + at; });
      t.check(point_on(ty, lw).on, [&] { return decl.name + ": lifted point leaves the target prolongation"; });
      t.check(point_on(tty, dv).on, [&] { return decl.name + ": df(v) leaves the target tangent variety"; });
      images.push_back(lw.base_point);
    }
    pts_on_target[decl.name] = std::move(images);
  }
  return t.finish("lift-equivariance", std::to_string(p.morphisms.size()) +
                                           " morphisms: cone compatibility, functoriality, df-equivariance");
}

SuiteResult basis(const ProblemFile& p, const SuiteOptions&) {
  Tally t;
  const RingCtxPtr& ctx = p.ring();
  const std::size_t n = ctx->nvars();
  std::vector<Poly> vars, squares;
  for (std::size_t i = 0; i < n; ++i) {
    vars.push_back(Poly::variable(ctx, i));
    squares.push_back(Poly::variable(ctx, i).pow(2));
  }
  const BasisVerdict v1 = tau_basis_check(ctx, vars);
  t.check(v1.is_basis, [&] { return "variables rejected: " + v1.reason; });
  const BasisVerdict v2 = tau_basis_check(ctx, squares);
  t.check(v2.is_basis, [&] { return "squares of variables rejected: " + v2.reason; });
  if (n > 0) {
    std::vector<Poly> with_constant = vars;
    with_constant[0] = Poly(ctx, ctx->base().designated_element() + FieldElem(1));
    const BasisVerdict v3 = tau_basis_check(ctx, with_constant);
    t.check(!v3.is_basis, [&] { return "a set containing an element of K was accepted"; });
  }
  return t.finish("basis", "transcendence-basis verdicts");
}

using SuiteFn = SuiteResult (*)(const ProblemFile&, const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"leibniz", leibniz},       {"sequences", sequences},   {"split", split},
      {"localization", localization}, {"basechange", basechange}, {"commutator", commutators},
      {"kernel", kernel},         {"torsor", torsor},         {"slices", slices},
      {"lift-equivariance", lifts}, {"basis", basis}};
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const ProblemFile& p, const SuiteOptions& options) {
  for (const auto& [n, fn] : suites()) {
    if (n != name) continue;
    try {
      return fn(p, options);
    } catch (const NotADomainError& e) {
      return {name, Status::skip, "not a domain", {e.what()}};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

std::string format(const SuiteResult& r) {
  static const char* tags[] = {"PASS", "FAIL", "SKIP"};
  std::ostringstream os;
  os << tags[static_cast<int>(r.status)] << " " << r.name << ": " << r.summary << "\n";
  for (const auto& d : r.details) os << "  witness: " << d << "\n";
  return os.str();
}

}  // namespace taudiff::cli
