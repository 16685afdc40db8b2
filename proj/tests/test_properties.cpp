// Randomized identities with fixed seeds.

#include "doctest.h"
#include "support.hpp"
#include "taudiff_cli/sampler.hpp"

using namespace taudiff;
using namespace taudiff::test;
using taudiff::cli::Sampler;

namespace {

constexpr int kRounds = 40;

DerivationSpec random_derivation(Sampler& s, const RingCtxPtr& r) {
  std::vector<Poly> images;
  for (std::size_t i = 0; i < r->nvars(); ++i) images.push_back(s.poly(r, 2, 2));
  switch (s.uniform(0, 2)) {
    case 0:
      return DerivationSpec::zero_on_K(r, std::move(images));
    case 1:
      return DerivationSpec::extends_delta(r, std::move(images));
    default: {
      // custom, but still a tau-derivation: D(e_s) = c * delta(e_s)
      const Poly c = s.poly(r, 1, 2);
      std::vector<Poly> base;
      for (const auto& img : r->base().derivation_images()) base.push_back(c.scaled(img));
      return DerivationSpec::custom(r, std::move(images), std::move(base));
    }
  }
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("field axioms") {
  const auto k = field_tu(1, 0);
  Sampler s(11);
  for (int i = 0; i < kRounds; ++i) {
    const FieldElem a = s.scalar(*k), b = s.scalar(*k), c = s.nonzero_scalar(*k);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a / c) * c == a);
    CHECK(a - a == FieldElem());
    CHECK(fe_derive(a * b, *k) == a * fe_derive(b, *k) + b * fe_derive(a, *k));
    CHECK(fe_derive(a / c, *k) == (fe_derive(a, *k) * c - a * fe_derive(c, *k)) / (c * c));
    CHECK(parse_field_elem(k->format(a), k) == a);
  }
}

TEST_CASE("printing round trips polynomials") {
  const auto r = ring(field_tu(1, 0), {"x", "y", "z"});
  Sampler s(12);
  for (int i = 0; i < kRounds; ++i) {
    const Poly f = s.poly(r, 3, 4);
    CHECK(parse_poly(to_string(f), r) == f);
  }
}

TEST_CASE("leibniz rule and constants") {
  const auto k = field_t();
  const auto r = ring(k, {"x", "y"});
  Sampler s(13);
  for (int i = 0; i < kRounds; ++i) {
    const Poly f = s.poly(r, 3, 3), g = s.poly(r, 3, 3);
    CHECK(tau_of(f * g) == tau_of(g).scaled(f) + tau_of(f).scaled(g));
    const FieldElem a = s.scalar(*k);
    CHECK(tau_of(Poly(r, a)) == iota(Poly(r, fe_derive(a, *k))));
    CHECK(lambda_proj(iota(f)) == std::vector<Poly>(2, Poly(r)));
  }
}

TEST_CASE("hom pairing matches the derivation it defines") {
  const auto r = ring(field_tu(1, 0), {"x", "y"});
  Sampler s(14);
  for (int i = 0; i < kRounds; ++i) {
    std::vector<Poly> h;
    for (int j = 0; j < 3; ++j) h.push_back(s.poly(r, 2, 2));
    const Poly f = s.poly(r, 3, 3);
    const DerivationSpec d = derivation_from_hom(r, h);
    CHECK(d.apply(f) == pairing(h, tau_of(f)));
    CHECK(is_tau_derivation(d).ok);
  }
}

TEST_CASE("commutators of tau-derivations") {
  const auto r = ring(field_tu(1, 0), {"x", "y"});
  Sampler s(15);
  for (int i = 0; i < kRounds; ++i) {
    const DerivationSpec d1 = random_derivation(s, r), d2 = random_derivation(s, r);
    REQUIRE(is_tau_derivation(d1).ok);
    const DerivationSpec c = commutator(d1, d2);
    CHECK(is_tau_derivation(c).ok);
    CHECK(c.apply(Poly(r)).is_zero());
    const Poly f = s.poly(r, 2, 3);
    CHECK(c.apply(f) == d1.apply(d2.apply(f)) - d2.apply(d1.apply(f)));
    const DerivationSpec anti = commutator(d2, d1);
    for (std::size_t j = 0; j < r->nvars(); ++j) CHECK(anti.image_of_vars[j] == -c.image_of_vars[j]);
  }
}

TEST_CASE("quotient rule in localizations") {
  const auto r = ring(field_t(), {"x", "y"});
  Sampler s(16);
  for (int i = 0; i < kRounds; ++i) {
    const Poly f = s.poly(r, 2, 3), u = s.nonzero_poly(r, 2, 2);
    const int k = s.uniform(0, 3);
    CHECK(localization_residual(f, u, k, tau_in_localization(f, u, k)).is_zero());
  }
}

TEST_CASE("normal forms decide ideal membership") {
  const auto r = ring(field_t(), {"x", "y"});
  const PresentedAlgebra a = algebra(r, {"x^2+y^2-t", "x*y-1"});
  Sampler s(17);
  for (int i = 0; i < kRounds; ++i) {
    Poly f(r);
    for (const auto& g : a.gens()) f += s.poly(r, 2, 3) * g;
    CHECK(a.contains(f));
    const Poly h = s.poly(r, 3, 3);
    const Poly nf = a.normal_form(h);
    CHECK(a.normal_form(nf) == nf);
    CHECK(a.contains(h - nf));
  }
}

TEST_CASE("tau of ideal elements stays in the generator rows") {
  const auto r = ring(field_t(), {"x", "y"});
  const PresentedAlgebra circle = algebra(r, {"x^2+y^2-t"});
  const auto pres = omega_tau_presentation(circle);
  const std::size_t base_rank = generic_rank(pres.relations);
  Sampler s(18);
  for (int i = 0; i < kRounds; ++i) {
    const Poly c = s.poly(r, 2, 3);
    const Poly f = c * circle.gens()[0];
    QuotientMatrix stacked = pres.relations;
    stacked.add_row(tau_of(f).coords());
    CHECK(generic_rank(stacked) == base_rank);
    CHECK(tau_of(f).reduced(circle) == tau_of(circle.gens()[0]).scaled(c).reduced(circle));
  }
}

TEST_CASE("torsor laws on a hyperbola") {
  const auto k = field_t();
  const auto r = ring(k, {"x", "y"});
  const PresentedAlgebra hyp = algebra(r, {"x*y - t"});
  const ConeAlgebra cone = prolongation_cone(hyp);
  const SlicedVariety tv = slice_cone(cone, Slice::tangent);
  const SlicedVariety pv = slice_cone(cone, Slice::prolongation);
  Sampler s(19);
  for (int i = 0; i < 10; ++i) {
    const FieldElem a = s.nonzero_scalar(*k);
    const std::vector<FieldElem> base{a, k->gen(0) / a};
    const AffineFiber ft = fiber_at(tv, base), fp = fiber_at(pv, base);
    REQUIRE(ft.particular);
    REQUIRE(fp.particular);
    REQUIRE(ft.directions.size() == 1);
    auto along = [&](const std::vector<FieldElem>& p, const FieldElem& c) {
      std::vector<FieldElem> out = p;
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * ft.directions[0][j];
      return out;
    };
    const FieldElem c1 = s.scalar(*k), c2 = s.scalar(*k);
    const FiberPoint v1{base, along(*ft.particular, c1)}, v2{base, along(*ft.particular, c2)};
    const FiberPoint w{base, *fp.particular};
    const FiberPoint v12{base, along(v1.fiber, c2)};
    // (v1 + v2) . w = v1 . (v2 . w)
    CHECK(torsor_act(tv, pv, v12, w).fiber == torsor_act(tv, pv, v1, torsor_act(tv, pv, v2, w)).fiber);
    const FiberPoint w2 = torsor_act(tv, pv, v2, w);
    CHECK(torsor_act(tv, pv, torsor_difference(pv, w2, w), w).fiber == w2.fiber);
  }
}

}  // TEST_SUITE
