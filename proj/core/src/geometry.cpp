#include "taudiff/geometry.hpp"

#include <functional>

namespace taudiff {

namespace {

std::vector<std::string> tau_names(const RingCtx& ctx) {
  std::vector<std::string> out;
  for (const auto& v : ctx.vars()) out.push_back("tau_" + v);
  return out;
}

// Map a slice-ring polynomial not involving tau_x back to the base ring.
Poly slice_to_base(const Poly& p, const PresentedAlgebra& b) {
  const std::size_t n = b.nvars();
  std::vector<Poly> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(b.var(i));
  for (std::size_t i = 0; i < n; ++i) images.push_back(b.zero());
  return p.substitute(images, b.ctx());
}

std::vector<FieldElem> concat(std::span<const FieldElem> a, std::span<const FieldElem> b) {
  std::vector<FieldElem> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

PointCheck check_generators(const std::vector<Poly>& gens, std::span<const FieldElem> p) {
  PointCheck out;
  for (const auto& g : gens) {
    const FieldElem v = g.evaluate(p);
    if (!v.is_zero()) {
      out.on = false;
      out.witness = to_string(g) + " -> " + g.ctx()->base().format(v);
      return out;
    }
  }
  return out;
}

}  // namespace

std::string format_point(const BaseField& k, std::span<const FieldElem> p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) s += ", ";
    s += k.format(p[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

Poly linearize(const TauForm& w, const RingCtxPtr& cone_ctx) {
  const std::size_t n = w.ctx()->nvars();
  if (cone_ctx->nvars() != 2 * n + 1) throw Error(ErrorKind::ArityMismatch, "cone ring has the wrong size");
  Poly out(cone_ctx);
  for (std::size_t i = 0; i < n; ++i) {
    const Poly& c = w.coord(i + 1);
    if (!c.is_zero()) out += c.embed(cone_ctx) * Poly::variable(cone_ctx, n + i);
  }
  if (!w.coord(0).is_zero()) out += w.coord(0).embed(cone_ctx) * Poly::variable(cone_ctx, 2 * n);
  return out;
}

ConeAlgebra prolongation_cone(const PresentedAlgebra& b) {
  const RingCtx& ctx = *b.ctx();
  std::vector<std::string> vars = ctx.vars();
  for (auto& v : tau_names(ctx)) vars.push_back(std::move(v));
  vars.emplace_back("tau_e");
  RingCtxPtr cone_ctx = make_ring(ctx.base_ptr(), std::move(vars), ctx.order());
  std::vector<Poly> gens;
  for (const auto& g : b.gens()) gens.push_back(g.embed(cone_ctx));
  for (const auto& g : b.gens()) {
    Poly rel = linearize(tau_of(g), cone_ctx);
    if (!rel.is_zero()) gens.push_back(std::move(rel));
  }
  PresentedAlgebra ideal(cone_ctx, std::move(gens), b.limits());
  return ConeAlgebra{b, std::move(cone_ctx), std::move(ideal)};
}

std::string to_string(Slice s) { return s == Slice::prolongation ? "prolongation" : "tangent"; }

Poly restrict_to_slice(const Poly& cone_poly, const SlicedVariety& v) {
  const std::size_t n = v.cone.n();
  std::vector<Poly> images;
  for (std::size_t i = 0; i < 2 * n; ++i) images.push_back(Poly::variable(v.ctx, i));
  images.emplace_back(v.ctx, FieldElem(v.tau_e_value()));
  return cone_poly.substitute(images, v.ctx);
}

SlicedVariety slice_cone(const ConeAlgebra& cone, Slice slice) {
  const RingCtx& ctx = *cone.base.ctx();
  std::vector<std::string> vars = ctx.vars();
  for (auto& v : tau_names(ctx)) vars.push_back(std::move(v));
  RingCtxPtr sctx = make_ring(ctx.base_ptr(), std::move(vars), ctx.order());
  SlicedVariety out{cone, slice, sctx, PresentedAlgebra(sctx)};
  std::vector<Poly> gens;
  for (const auto& g : cone.cone_ideal.gens()) {
    Poly r = restrict_to_slice(g, out);
    if (!r.is_zero()) gens.push_back(std::move(r));
  }
  out.ideal = PresentedAlgebra(sctx, std::move(gens), cone.base.limits());
  return out;
}

SlicedVariety prolongation(const PresentedAlgebra& b) { return slice_cone(prolongation_cone(b), Slice::prolongation); }
SlicedVariety tangent_variety(const PresentedAlgebra& b) { return slice_cone(prolongation_cone(b), Slice::tangent); }

Poly buium_tau(const Poly& f, const SlicedVariety& prolong) {
  const std::size_t n = f.nvars();
  const BaseField& k = f.ctx()->base();
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Exponents e(2 * n, 0);
    std::copy(t.exps.begin(), t.exps.end(), e.begin());
    const FieldElem dc = k.derive(t.coeff);
    if (!dc.is_zero()) out.push_back(Term{e, dc});
    for (std::size_t i = 0; i < n; ++i) {
      if (t.exps[i] == 0) continue;
      Exponents d = e;
      --d[i];
      ++d[n + i];
      out.push_back(Term{std::move(d), t.coeff * FieldElem(static_cast<long>(t.exps[i]))});
    }
  }
  return Poly::from_terms(prolong.ctx, std::move(out));
}

// ---------------------------------------------------------------------------
// points

PointCheck point_on(const PresentedAlgebra& v, std::span<const FieldElem> p) {
  if (p.size() != v.nvars()) {
    throw Error(ErrorKind::ArityMismatch, "point has " + std::to_string(p.size()) + " coordinates, expected " +
                                              std::to_string(v.nvars()));
  }
  return check_generators(v.gens(), p);
}

PointCheck point_on(const SlicedVariety& v, const FiberPoint& p) {
  const std::size_t n = v.cone.n();
  if (p.base_point.size() != n || p.fiber.size() != n) {
    throw Error(ErrorKind::ArityMismatch, "fiber point needs " + std::to_string(n) + " base and fiber coordinates");
  }
  return check_generators(v.ideal.gens(), concat(p.base_point, p.fiber));
}

AffineFiber fiber_at(const SlicedVariety& v, std::span<const FieldElem> base_point) {
  const std::size_t n = v.cone.n();
  const PointCheck on = point_on(v.cone.base, base_point);
  if (!on.on) throw Error(ErrorKind::NotOnVariety, "base point is not on X: " + on.witness);
  const std::vector<FieldElem> at_zero = concat(base_point, std::vector<FieldElem>(n));
  FieldMatrix m(0, n);
  std::vector<FieldElem> rhs;
  for (const auto& h : v.ideal.gens()) {
    std::vector<FieldElem> row(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (h.degree_in(n + j) > 1) throw Error(ErrorKind::InvalidArgument, "slice relation is not affine-linear");
      row[j] = h.partial_derivative(n + j).evaluate(at_zero);
    }
    m.append_row(row);
    rhs.push_back(-h.evaluate(at_zero));
  }
  AffineFiber out;
  if (m.rows() == 0) {
    out.particular = std::vector<FieldElem>(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<FieldElem> e(n);
      e[j] = FieldElem(1);
      out.directions.push_back(std::move(e));
    }
    return out;
  }
  out.particular = solve(m, rhs);
  out.directions = nullspace(m);
  return out;
}

FiberPoint torsor_act(const SlicedVariety& tangent, const SlicedVariety& prolong, const FiberPoint& v,
                      const FiberPoint& w) {
  const BaseField& k = tangent.ctx->base();
  if (v.base_point != w.base_point) {
    throw Error(ErrorKind::BasePointMismatch, format_point(k, v.base_point) + " vs " + format_point(k, w.base_point));
  }
  if (auto c = point_on(tangent, v); !c.on) throw Error(ErrorKind::NotOnVariety, "tangent vector: " + c.witness);
  if (auto c = point_on(prolong, w); !c.on) throw Error(ErrorKind::NotOnVariety, "prolongation point: " + c.witness);
  FiberPoint out{w.base_point, w.fiber};
  for (std::size_t i = 0; i < out.fiber.size(); ++i) out.fiber[i] += v.fiber[i];
  return out;
}

FiberPoint torsor_difference(const SlicedVariety& prolong, const FiberPoint& w1, const FiberPoint& w2) {
  const BaseField& k = prolong.ctx->base();
  if (w1.base_point != w2.base_point) {
    throw Error(ErrorKind::BasePointMismatch,
                format_point(k, w1.base_point) + " vs " + format_point(k, w2.base_point));
  }
  for (const auto* w : {&w1, &w2}) {
    if (auto c = point_on(prolong, *w); !c.on) throw Error(ErrorKind::NotOnVariety, c.witness);
  }
  FiberPoint out{w1.base_point, w1.fiber};
  for (std::size_t i = 0; i < out.fiber.size(); ++i) out.fiber[i] -= w2.fiber[i];
  return out;
}

std::vector<std::vector<FieldElem>> search_rational_points(const PresentedAlgebra& b, std::size_t limit,
                                                           std::size_t budget) {
  const BaseField& k = b.ctx()->base();
  const FieldElem e = k.designated_element();
  std::vector<FieldElem> cand{FieldElem(0)};
  const std::vector<Rat> small{Rat(1), Rat(2), Rat(1, 2), Rat(3), Rat(1, 3), Rat(3, 2), Rat(2, 3)};
  for (const auto& r : small) {
    cand.emplace_back(r);
    cand.emplace_back(-r);
  }
  for (const FieldElem& p : {e, e.inverse(), e * e, e + FieldElem(1), e - FieldElem(1)}) {
    for (const auto& r : small) {
      cand.push_back(p * FieldElem(r));
      cand.push_back(p * FieldElem(-r));
    }
  }
  const std::size_t n = b.nvars();
  std::vector<std::vector<FieldElem>> found;
  if (n == 0) {
    if (point_on(b, {}).on) found.emplace_back();
    return found;
  }
  std::vector<std::size_t> idx(n, 0);
  std::size_t spent = 0;
  // tuples ordered by their largest candidate index
  for (std::size_t level = 0; level < cand.size() && found.size() < limit && spent < budget; ++level) {
    std::function<void(std::size_t, bool)> rec = [&](std::size_t i, bool hit) {
      if (found.size() >= limit || spent >= budget) return;
      if (i == n) {
        if (!hit) return;
        ++spent;
        std::vector<FieldElem> p;
        for (auto j : idx) p.push_back(cand[j]);
        if (point_on(b, p).on) found.push_back(std::move(p));
        return;
      }
      for (std::size_t j = 0; j <= level; ++j) {
        idx[i] = j;
        rec(i + 1, hit || j == level);
      }
    };
    rec(0, false);
  }
  return found;
}

// ---------------------------------------------------------------------------
// morphisms

void check_morphism(const Morphism& f) {
  if (f.images.size() != f.target.nvars()) {
    throw Error(ErrorKind::ArityMismatch, "morphism needs one image per target coordinate");
  }
  for (const auto& img : f.images) require_same_ctx(*img.ctx(), *f.source.ctx());
  for (const auto& g : f.target.gens()) {
    const Poly r = f.source.normal_form(g.substitute(f.images, f.source.ctx()));
    if (!r.is_zero()) {
      throw Error(ErrorKind::NotAMorphism, "pullback of " + to_string(g) + " reduces to " + to_string(r));
    }
  }
}

Morphism compose(const Morphism& g, const Morphism& f) {
  require_same_ctx(*g.source.ctx(), *f.target.ctx());
  std::vector<Poly> images;
  for (const auto& img : g.images) images.push_back(img.substitute(f.images, f.source.ctx()));
  return Morphism{f.source, g.target, std::move(images)};
}

Morphism identity_morphism(const PresentedAlgebra& x) {
  std::vector<Poly> images;
  for (std::size_t i = 0; i < x.nvars(); ++i) images.push_back(x.var(i));
  return Morphism{x, x, std::move(images)};
}

ConeLift lift_morphism(const Morphism& f) {
  check_morphism(f);
  ConeAlgebra src = prolongation_cone(f.source);
  ConeAlgebra tgt = prolongation_cone(f.target);
  std::vector<Poly> images;
  for (const auto& img : f.images) images.push_back(img.embed(src.cone_ctx));
  for (const auto& img : f.images) images.push_back(linearize(tau_of(img), src.cone_ctx));
  images.push_back(Poly::variable(src.cone_ctx, src.tau_e_index()));
  return ConeLift{std::move(src), std::move(tgt), std::move(images)};
}

ConeLift compose(const ConeLift& g, const ConeLift& f) {
  require_same_ctx(*g.source.cone_ctx, *f.target.cone_ctx);
  std::vector<Poly> images;
  for (const auto& img : g.images) images.push_back(img.substitute(f.images, f.source.cone_ctx));
  return ConeLift{f.source, g.target, std::move(images)};
}

FiberPoint apply_lift(const ConeLift& lift, const FiberPoint& p, const FieldElem& tau_e) {
  std::vector<FieldElem> point = concat(p.base_point, p.fiber);
  point.push_back(tau_e);
  const std::size_t m = lift.target.n();
  FiberPoint out;
  for (std::size_t j = 0; j < m; ++j) out.base_point.push_back(lift.images[j].evaluate(point));
  for (std::size_t j = 0; j < m; ++j) out.fiber.push_back(lift.images[m + j].evaluate(point));
  return out;
}

bool lift_respects_cones(const ConeLift& lift, std::string* witness) {
  for (const auto& h : lift.target.cone_ideal.gens()) {
    const Poly r = lift.source.cone_ideal.normal_form(h.substitute(lift.images, lift.source.cone_ctx));
    if (!r.is_zero()) {
      if (witness != nullptr) *witness = "pullback of " + to_string(h) + " reduces to " + to_string(r);
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// slice checks

SliceReport check_slices(const ConeAlgebra& cone) {
  SliceReport report;
  const RingCtxPtr& cctx = cone.cone_ctx;
  const Poly tau_e = Poly::variable(cctx, cone.tau_e_index());
  const Poly one(cctx, FieldElem(1));
  auto fail = [&](bool& flag, std::string msg) {
    flag = false;
    report.failures.push_back(std::move(msg));
  };

  for (Slice s : {Slice::prolongation, Slice::tangent}) {
    const SlicedVariety v = slice_cone(cone, s);
    const Poly hyperplane = tau_e - Poly(cctx, FieldElem(v.tau_e_value()));
    std::vector<Poly> gens = cone.cone_ideal.gens();
    gens.push_back(hyperplane);
    const PresentedAlgebra aug(cctx, std::move(gens), cone.base.limits());

    std::vector<std::string> lhs;
    for (const auto& g : aug.groebner_basis()) {
      if (g == hyperplane) continue;
      if (g.degree_in(cone.tau_e_index()) > 0) {
        fail(report.coherent, to_string(s) + ": Groebner element " + to_string(g) + " still involves tau_e");
      }
      lhs.push_back(to_string(g));
    }
    std::vector<std::string> rhs;
    for (const auto& g : v.ideal.groebner_basis()) rhs.push_back(to_string(g));
    if (lhs != rhs) {
      std::string a, b;
      for (const auto& x : lhs) a += (a.empty() ? "" : ", ") + x;
      for (const auto& x : rhs) b += (b.empty() ? "" : ", ") + x;
      fail(report.coherent, to_string(s) + ": sliced cone basis {" + a + "} vs slice basis {" + b + "}");
    }

    for (const auto& g : v.ideal.gens()) {
      const Poly r = aug.normal_form(g.embed(cctx));
      if (!r.is_zero()) {
        fail(report.surjective, to_string(s) + ": relation " + to_string(g) + " reduces to " + to_string(r));
      }
    }

    if (s == Slice::prolongation) {
      for (const auto& g : cone.base.gens()) {
        const Poly via_cone = v.ideal.normal_form(restrict_to_slice(linearize(tau_of(g), cctx), v));
        const Poly direct = v.ideal.normal_form(buium_tau(g, v));
        if (to_string(via_cone) != to_string(direct)) {
          fail(report.buium, "tau(" + to_string(g) + "): " + to_string(via_cone) + " vs " + to_string(direct));
        }
      }
    }
  }

  report.cone_nonempty = !cone.cone_ideal.is_unit_ideal();
  std::vector<Poly> both = cone.cone_ideal.gens();
  both.push_back(tau_e);
  both.push_back(tau_e - one);
  const PresentedAlgebra sum(cctx, std::move(both), cone.base.limits());
  const bool certificate = (tau_e - (tau_e - one)) == one;
  if (!certificate || !sum.contains(one)) fail(report.disjoint, "1 is not in cone + <tau_e> + <tau_e - 1>");
  return report;
}

std::size_t embedding_rank(const PresentedAlgebra& b) {
  const std::size_t n = b.nvars();
  const SlicedVariety p = prolongation(b);
  QuotientMatrix rel(b, n + 1);
  for (const auto& h : p.ideal.gens()) {
    bool involves_tau = false;
    for (std::size_t j = 0; j < n; ++j) involves_tau = involves_tau || h.degree_in(n + j) > 0;
    if (!involves_tau) continue;
    // (constant part, coefficient of tau_x_1, ...) as elements of B
    std::vector<Poly> row;
    std::vector<Poly> zero_images;
    for (std::size_t i = 0; i < n; ++i) zero_images.push_back(Poly::variable(p.ctx, i));
    for (std::size_t i = 0; i < n; ++i) zero_images.push_back(Poly(p.ctx));
    row.push_back(slice_to_base(h.substitute(zero_images, p.ctx), b));
    for (std::size_t j = 0; j < n; ++j) row.push_back(slice_to_base(h.partial_derivative(n + j), b));
    rel.add_row(std::move(row));
  }
  const std::size_t base_rank = generic_rank(rel);
  QuotientMatrix stacked = rel;
  // images of tau_e and tau_x_i: 1 and tau_x_i
  for (std::size_t k = 0; k <= n; ++k) stacked.add_row(TauForm::basis(b.ctx(), k).coords());
  return generic_rank(stacked) - base_rank;
}

}  // namespace taudiff
