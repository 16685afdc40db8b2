#include "doctest.h"
#include "support.hpp"

using namespace taudiff;
using namespace taudiff::test;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("prolongation cones") {
  const auto k = field_t();
  const auto rx = ring(k, {"x"});
  const ConeAlgebra line = prolongation_cone(PresentedAlgebra(rx));
  CHECK(line.cone_ctx->vars() == std::vector<std::string>{"x", "tau_x", "tau_e"});
  CHECK(line.cone_ideal.gens().empty());

  const auto r = ring(k, {"x", "y"});
  const ConeAlgebra c = prolongation_cone(algebra(r, {"x^2+y^2-t"}));
  const auto& cc = c.cone_ctx;
  CHECK(strings(c.cone_ideal.gens()) ==
        strings({P(cc, "x^2+y^2-t"), P(cc, "2*x*tau_x + 2*y*tau_y - tau_e")}));
  // reduced basis, independently computed
  CHECK(same_monic_set(c.cone_ideal.groebner_basis(),
                       {P(cc, "-t*tau_x + tau_e*x/2 + tau_x*y^2 - tau_y*x*y"), P(cc, "-t + x^2 + y^2"),
                        P(cc, "-tau_e/2 + tau_x*x + tau_y*y")}));

  const ConeAlgebra u = prolongation_cone(algebra(r, {"x^2+y^2-1"}));
  CHECK(strings(u.cone_ideal.gens()) == strings({P(u.cone_ctx, "x^2+y^2-1"), P(u.cone_ctx, "2*x*tau_x + 2*y*tau_y")}));
}

TEST_CASE("slices") {
  const auto k = field_t();
  const auto rx = ring(k, {"x"});
  const SlicedVariety plane = prolongation(PresentedAlgebra(rx));
  CHECK(plane.ctx->vars() == std::vector<std::string>{"x", "tau_x"});
  CHECK(plane.ideal.gens().empty());
  CHECK(tangent_variety(PresentedAlgebra(rx)).ideal.gens().empty());

  const auto r = ring(k, {"x", "y"});
  const PresentedAlgebra circle = algebra(r, {"x^2+y^2-t"});
  const SlicedVariety p = prolongation(circle);
  CHECK(strings(p.ideal.gens()) == strings({P(p.ctx, "x^2+y^2-t"), P(p.ctx, "2*x*tau_x + 2*y*tau_y - 1")}));
  const SlicedVariety tv = tangent_variety(circle);
  CHECK(strings(tv.ideal.gens()) == strings({P(tv.ctx, "x^2+y^2-t"), P(tv.ctx, "2*x*tau_x + 2*y*tau_y")}));
  CHECK(same_monic_set(p.ideal.groebner_basis(), {P(p.ctx, "-t*tau_x + tau_x*y^2 - tau_y*x*y + x/2"),
                                                   P(p.ctx, "-t + x^2 + y^2"), P(p.ctx, "tau_x*x + tau_y*y - 1/2")}));

  // constant coefficients: both slices carry the same equations
  const PresentedAlgebra unit = algebra(r, {"x^2+y^2-1"});
  CHECK(strings(prolongation(unit).ideal.gens()) == strings(tangent_variety(unit).ideal.gens()));

  const SlicedVariety origin = tangent_variety(algebra(rx, {"x"}));
  CHECK(strings(origin.ideal.gens()) == strings({P(origin.ctx, "x"), P(origin.ctx, "tau_x")}));
  const auto fiber = fiber_at(origin, pt(k, "0"));
  REQUIRE(fiber.particular);
  CHECK(fiber.particular->at(0).is_zero());
  CHECK(fiber.directions.empty());
}

TEST_CASE("buium map agrees with the substituted tau relation") {
  const auto r = ring(field_t(), {"x", "y"});
  const PresentedAlgebra hyp = algebra(r, {"x*y - t"});
  const SlicedVariety p = prolongation(hyp);
  const Poly g = hyp.gens()[0];
  CHECK(buium_tau(g, p) == restrict_to_slice(linearize(tau_of(g), p.cone.cone_ctx), p));
  CHECK(buium_tau(g, p) == P(p.ctx, "y*tau_x + x*tau_y - 1"));
}

TEST_CASE("points") {
  const auto k = field_t();
  const auto r = ring(k, {"x", "y"});
  const PresentedAlgebra hyp = algebra(r, {"x*y - t"});
  CHECK(point_on(hyp, pt(k, "1, t")).on);
  const auto off = point_on(hyp, pt(k, "0, 0"));
  CHECK(!off.on);
  CHECK(off.witness == "x*y - t -> -t");
  CHECK(point_on(PresentedAlgebra(r), pt(k, "1/t, 7")).on);
  CHECK(kind_of([&] { (void)point_on(hyp, pt(k, "1")); }) == ErrorKind::ArityMismatch);
  CHECK(format_point(*k, pt(k, "1/t, -2")) == "(1/t, -2)");
}

TEST_CASE("torsor action") {
  const auto k = field_t();
  const auto r = ring(k, {"x", "y"});
  const PresentedAlgebra hyp = algebra(r, {"x*y - t"});
  const ConeAlgebra cone = prolongation_cone(hyp);
  const SlicedVariety tv = slice_cone(cone, Slice::tangent);
  const SlicedVariety pv = slice_cone(cone, Slice::prolongation);
  const auto a = pt(k, "1, t");
  const FiberPoint v{a, pt(k, "1, -t")};
  const FiberPoint w{a, pt(k, "0, 1")};
  CHECK(point_on(tv, v).on);
  CHECK(point_on(pv, w).on);
  const FiberPoint vw = torsor_act(tv, pv, v, w);
  CHECK(vw.fiber == pt(k, "1, 1 - t"));
  CHECK(point_on(pv, vw).on);

  const FiberPoint zero{a, pt(k, "0, 0")};
  CHECK(torsor_act(tv, pv, zero, w).fiber == w.fiber);

  const FiberPoint diff = torsor_difference(pv, vw, w);
  CHECK(diff.fiber == v.fiber);
  CHECK(point_on(tv, diff).on);

  const FiberPoint elsewhere{pt(k, "t, 1"), pt(k, "0, 1/t")};
  CHECK(kind_of([&] { (void)torsor_act(tv, pv, v, elsewhere); }) == ErrorKind::BasePointMismatch);
  CHECK(kind_of([&] { (void)torsor_act(tv, pv, w, w); }) == ErrorKind::NotOnVariety);
  CHECK(kind_of([&] { (void)fiber_at(pv, pt(k, "0, 0")); }) == ErrorKind::NotOnVariety);

  const auto fiber = fiber_at(pv, a);
  REQUIRE(fiber.particular);
  CHECK(point_on(pv, FiberPoint{a, *fiber.particular}).on);
  CHECK(fiber.directions.size() == 1);
}

TEST_CASE("rational point search") {
  const auto k = field_t();
  const auto r = ring(k, {"x", "y"});
  const auto pts = search_rational_points(algebra(r, {"x*y - t"}), 3);
  CHECK(pts.size() == 3);
  for (const auto& p : pts) CHECK(point_on(algebra(r, {"x*y - t"}), p).on);
  CHECK(search_rational_points(algebra(r, {"x^2 + y^2 - t"}), 3, 5000).empty());
}

TEST_CASE("morphism lifting") {
  const auto k = field_t();
  const auto rx = ring(k, {"x"});
  const auto ry = ring(k, {"y"});
  const PresentedAlgebra ax(rx), ay(ry);
  const Morphism square{ax, ay, {P(rx, "x^2")}};
  const ConeLift lift = lift_morphism(square);
  const auto& cc = lift.source.cone_ctx;
  CHECK(lift.images == std::vector<Poly>{P(cc, "x^2"), P(cc, "2*x*tau_x"), P(cc, "tau_e")});
  CHECK(lift_respects_cones(lift));

  const ConeLift id = lift_morphism(identity_morphism(ax));
  CHECK(id.images == std::vector<Poly>{P(cc, "x"), P(cc, "tau_x"), P(cc, "tau_e")});

  const auto r2 = ring(k, {"x", "y"});
  const auto ru = ring(k, {"u"});
  const Morphism first{algebra(r2, {"x*y - t"}), PresentedAlgebra(ru), {P(r2, "x")}};
  const ConeLift fl = lift_morphism(first);
  CHECK(fl.images[1] == P(fl.source.cone_ctx, "tau_x"));

  const Morphism shift{ay, PresentedAlgebra(ring(k, {"z"})), {P(ry, "y + t")}};
  const ConeLift composed = compose(lift_morphism(shift), lift);
  const ConeLift direct = lift_morphism(compose(shift, square));
  CHECK(composed.images == direct.images);
  CHECK(direct.images[1] == P(cc, "2*x*tau_x + tau_e"));

  const FiberPoint p{pt(k, "t"), pt(k, "1/t")};
  const FiberPoint q = apply_lift(lift, p, FieldElem(1));
  CHECK(q.base_point == pt(k, "t^2"));
  CHECK(q.fiber == pt(k, "2"));
}

TEST_CASE("morphism checks") {
  const auto k = field_t();
  const auto r = ring(k, {"x", "y"});
  const auto ru = ring(k, {"u", "v"});
  const PresentedAlgebra unit = algebra(r, {"x^2+y^2-1"});
  CHECK_NOTHROW(check_morphism(Morphism{unit, algebra(ru, {"u^2+v^2-1"}), {P(r, "-y"), P(r, "x")}}));
  CHECK(kind_of([&] { check_morphism(Morphism{unit, algebra(ru, {"u^2+v^2-1"}), {P(r, "x"), P(r, "2*y")}}); }) ==
        ErrorKind::NotAMorphism);
}

TEST_CASE("slice report") {
  const auto r = ring(field_t(), {"x", "y"});
  for (const auto* g : {"x^2+y^2-t", "x^2+y^2-1", "x*y-t"}) {
    const SliceReport rep = check_slices(prolongation_cone(algebra(r, {g})));
    CHECK(rep.coherent);
    CHECK(rep.surjective);
    CHECK(rep.disjoint);
    CHECK(rep.cone_nonempty);
    CHECK(rep.buium);
    CHECK(rep.failures.empty());
  }
  CHECK(embedding_rank(algebra(r, {"x^2+y^2-t"})) == 2);
}

}  // TEST_SUITE
