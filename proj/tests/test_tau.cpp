#include "doctest.h"
#include "support.hpp"

using namespace taudiff;
using namespace taudiff::test;

namespace {

TauForm form(const RingCtxPtr& r, const std::vector<std::string>& coords) {
  std::vector<Poly> ps;
  for (const auto& c : coords) ps.push_back(P(r, c));
  return TauForm(r, std::move(ps));
}

BaseFieldPtr field_ts(FieldElem ds) {
  return std::make_shared<BaseField>(std::vector<std::string>{"t", "s"}, std::vector<FieldElem>{FieldElem(1), ds}, 0);
}

}  // namespace

TEST_SUITE("taudiff") {

TEST_CASE("tau of polynomials") {
  const auto r = ring(field_t(), {"x", "y"});
  CHECK(tau_of(P(r, "x")) == form(r, {"0", "1", "0"}));
  CHECK(tau_of(P(r, "t")) == form(r, {"1", "0", "0"}));
  CHECK(tau_of(P(r, "t*x^2")) == form(r, {"x^2", "2*t*x", "0"}));
  CHECK(tau_of(P(r, "x^2+y^2-t")) == form(r, {"-1", "2*x", "2*y"}));
  CHECK(to_string(tau_of(P(r, "x^2+y^2-t"))) == "-1*tau_e + 2*x*tau_x + 2*y*tau_y");
  // t*x^2*y + x/t
  CHECK(tau_of(P(r, "t*x^2*y + x/t")) == form(r, {"x^2*y - x/t^2", "2*t*x*y + 1/t", "t*x^2"}));
  CHECK(to_string(TauForm(r)) == "0");
  CHECK(tau_basis_labels(*r) == std::vector<std::string>{"tau_e", "tau_x", "tau_y"});
}

TEST_CASE("iota and lambda") {
  const auto r = ring(field_t(), {"x"});
  CHECK(iota(P(r, "1")) == form(r, {"1", "0"}));
  CHECK(iota(P(r, "x")) == form(r, {"x", "0"}));
  CHECK(lambda_proj(iota(P(r, "x^2 + t"))) == std::vector<Poly>{P(r, "0")});
  CHECK(lambda_proj(tau_of(P(r, "x"))) == std::vector<Poly>{P(r, "1")});
  CHECK(lambda_proj(tau_of(P(r, "t"))) == std::vector<Poly>{P(r, "0")});
  CHECK(lambda_proj(tau_of(P(r, "t*x^2"))) == std::vector<Poly>{P(r, "2*t*x")});
}

TEST_CASE("delta tilde") {
  const auto k = field_t();
  const auto r = ring(k, {"x"});
  const std::vector<TensorTerm> one{{P(r, "1"), k->gen(0)}};
  CHECK(delta_tilde(r, one) == P(r, "1"));
  const std::vector<TensorTerm> xdt{{P(r, "x"), k->gen(0)}};
  CHECK(delta_tilde(r, xdt) == P(r, "x"));

  const auto ku = field_tu(1, 0);
  const auto ru = ring(ku, {"x"});
  const std::vector<TensorTerm> kernel{{P(ru, "u"), ku->gen(0)}, {P(ru, "-1"), ku->gen(1)}};
  CHECK(delta_tilde(ru, kernel).is_zero());
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(field_t()).vectors.empty());

  const auto ku = field_tu(1, 0);
  const auto kb = kernel_basis(ku);
  REQUIRE(kb.vectors.size() == 1);
  CHECK(kb.vectors[0] == std::vector<FieldElem>{ku->gen(1), FieldElem(-1)});
  CHECK(delta_tilde(*ku, kb.vectors[0]).is_zero());

  const auto k3 = std::make_shared<BaseField>(std::vector<std::string>{"t", "u", "w"},
                                              std::vector<FieldElem>{FieldElem(1), FieldElem::symbol(1), FieldElem(0)}, 0);
  const auto kb3 = kernel_basis(k3);
  REQUIRE(kb3.vectors.size() == 2);
  CHECK(kb3.vectors[0] == std::vector<FieldElem>{k3->gen(1), FieldElem(-1), FieldElem(0)});
  CHECK(kb3.vectors[1] == std::vector<FieldElem>{FieldElem(0), FieldElem(0), FieldElem(-1)});
  for (const auto& v : kb3.vectors) CHECK(delta_tilde(*k3, v).is_zero());
}

TEST_CASE("presentations") {
  const auto k = field_t();
  const auto rx = ring(k, {"x"});
  const auto free_line = omega_tau_presentation(PresentedAlgebra(rx));
  CHECK(free_line.free_rank == 2);
  CHECK(free_line.relations.rows() == 0);
  CHECK(module_rank(free_line) == 2);
  CHECK(module_rank(omega_kahler_presentation(PresentedAlgebra(rx))) == 1);

  const auto r = ring(k, {"x", "y"});
  const PresentedAlgebra circle = algebra(r, {"x^2+y^2-t"});
  const auto tc = omega_tau_presentation(circle);
  REQUIRE(tc.relations.rows() == 1);
  CHECK(tc.relations.row(0) == std::vector<Poly>{P(r, "-1"), P(r, "2*x"), P(r, "2*y")});
  CHECK(module_rank(tc) == 2);
  const auto kc = omega_kahler_presentation(circle);
  CHECK(kc.relations.row(0) == std::vector<Poly>{P(r, "2*x"), P(r, "2*y")});
  CHECK(module_rank(kc) == 1);

  const PresentedAlgebra origin = algebra(rx, {"x"});
  const auto to = omega_tau_presentation(origin);
  CHECK(to.relations.row(0) == std::vector<Poly>{P(rx, "0"), P(rx, "1")});
  CHECK(module_rank(to) == 1);
  CHECK(module_rank(omega_kahler_presentation(origin)) == 0);
}

TEST_CASE("first fundamental sequence") {
  const auto k = field_t();
  const auto r0 = ring(k, {});
  const auto rx = ring(k, {"x"});
  const auto rxy = ring(k, {"x", "y"});

  const auto a = first_tau_sequence(RingMap{PresentedAlgebra(r0), PresentedAlgebra(rx), {}});
  CHECK(a.rank_image_alpha == 1);
  CHECK(a.rank_relative == 1);
  CHECK(a.rank_target == 2);
  CHECK(a.rank_additive);
  CHECK(a.image_in_kernel);
  CHECK(a.alpha_injective);

  const auto b = first_tau_sequence(RingMap{PresentedAlgebra(rx), PresentedAlgebra(rxy), {P(rxy, "x")}});
  CHECK(b.rank_image_alpha == 2);
  CHECK(b.rank_relative == 1);
  CHECK(b.rank_target == 3);
  CHECK(b.rank_additive);

  const auto c = first_tau_sequence(RingMap{PresentedAlgebra(rx), algebra(rx, {"x"}), {P(rx, "x")}});
  CHECK(c.rank_relative == 0);
  CHECK(c.rank_image_alpha == c.rank_target);
  CHECK(c.image_in_kernel);

  CHECK_THROWS_AS(first_tau_sequence(RingMap{algebra(rx, {"x"}), PresentedAlgebra(rx), {P(rx, "x + 1")}}), Error);
}

TEST_CASE("tau in a localization") {
  const auto r = ring(field_t(), {"x"});
  const Poly x = P(r, "x");
  auto matches = [&](const LocalTauForm& v, const TauForm& num, unsigned power) {
    return v.numerator.scaled(v.unit.pow(power)) == num.scaled(v.unit.pow(v.power));
  };
  const auto inv = tau_in_localization(P(r, "1"), x, 1);
  CHECK(matches(inv, form(r, {"0", "-1"}), 2));
  const auto tx = tau_in_localization(P(r, "t"), x, 1);
  CHECK(matches(tx, form(r, {"x", "-t"}), 2));
  const Poly f = P(r, "t*x^3 + x");
  const auto plain = tau_in_localization(f, x, 0);
  CHECK(matches(plain, tau_of(f), 0));
  CHECK(localization_residual(f, x, 0, plain).is_zero());
  CHECK(localization_residual(P(r, "t"), x, 1, tx).is_zero());
  CHECK_THROWS_AS(tau_in_localization(f, P(r, "0"), 1), Error);
}

TEST_CASE("base change") {
  const auto k = field_t();
  const auto r = ring(k, {"x"});
  const PresentedAlgebra b(r);
  const auto ext = field_ts(FieldElem(0));
  const BaseChange bc = base_change_iso(ext, b);
  const auto& rt = bc.target().ctx();
  const FieldElem s = ext->gen(1);
  CHECK(bc.forward(s, P(r, "x")) == form(rt, {"0", "s"}));
  CHECK(bc.forward(ext->gen(0), P(r, "1")) == form(rt, {"1", "0"}));
  const TauForm tx = form(rt, {"0", "1"});
  CHECK(bc.backward_linear(bc.forward(FieldElem(1), P(r, "x"))) == tx);

  const std::vector<FieldElem> scalars{s, ext->gen(0), F(ext, "1/(s+t)")};
  const std::vector<Poly> elems{P(r, "x"), P(r, "t*x^2 + 1")};
  CHECK(verify_base_change(bc, scalars, elems).ok);

  CHECK_NOTHROW(base_change_iso(field_t(), b));
  // delta(t) = 0 in the would-be extension
  const auto wrong = std::make_shared<BaseField>(std::vector<std::string>{"s", "t"},
                                                 std::vector<FieldElem>{FieldElem(1), FieldElem(0)}, 0);
  CHECK_THROWS_AS(base_change_iso(wrong, b), Error);
}

TEST_CASE("derivations and commutators") {
  const auto k = field_t();
  const auto r = ring(k, {"x"});
  const auto dx = DerivationSpec::partial(r, 0);
  const auto eps = DerivationSpec::epsilon(r);
  CHECK(commutator(dx, eps).is_zero());
  CHECK(commutator(eps, eps).is_zero());
  const auto tdx = DerivationSpec::zero_on_K(r, {P(r, "t")});
  const auto c = commutator(eps, tdx);
  CHECK(c.apply(P(r, "x")) == P(r, "1"));
  CHECK(c.apply(P(r, "t*x^3 + x^2/t")) == dx.apply(P(r, "t*x^3 + x^2/t")));
  CHECK(is_tau_derivation(dx).ok);
  CHECK(is_tau_derivation(eps).ok);
  CHECK(eps.apply(P(r, "t*x^2")) == P(r, "x^2"));
}

TEST_CASE("tau-derivation witness") {
  const auto k = field_tu(0, 0);  // delta(u) = 0
  const auto r = ring(k, {"x"});
  const auto d = DerivationSpec::custom(r, {P(r, "0")}, {P(r, "0"), P(r, "1")});
  const auto v = is_tau_derivation(d);
  CHECK(!v.ok);
  CHECK(((v.a == 0 && v.b == 1 && v.lhs == P(r, "1") && v.rhs.is_zero()) ||
         (v.a == 1 && v.b == 0 && v.lhs.is_zero() && v.rhs == P(r, "1"))));
  CHECK_THROWS_AS(commutator(d, DerivationSpec::partial(r, 0)), Error);
}

TEST_CASE("derivations from homomorphisms") {
  const auto r = ring(field_t(), {"x"});
  const auto d0 = derivation_from_hom(r, {P(r, "1"), P(r, "0")});
  CHECK(d0.apply(P(r, "x")).is_zero());
  CHECK(d0.apply(P(r, "t*x")) == P(r, "x"));
  const auto d1 = derivation_from_hom(r, {P(r, "0"), P(r, "1")});
  CHECK(d1.apply(P(r, "t*x^2")) == P(r, "2*t*x"));
  const auto d2 = derivation_from_hom(r, {P(r, "x"), P(r, "0")});
  CHECK(d2.apply(P(r, "t")) == P(r, "x"));
  CHECK(d2.apply(P(r, "x")).is_zero());
  const std::vector<Poly> h{P(r, "x^2"), P(r, "t")};
  const Poly f = P(r, "t^2*x^3 - x/t");
  CHECK(derivation_from_hom(r, h).apply(f) == pairing(h, tau_of(f)));
}

TEST_CASE("transcendence basis check") {
  const auto r = ring(field_t(), {"x"});
  CHECK(tau_basis_check(r, std::vector<Poly>{P(r, "x")}).is_basis);
  CHECK(tau_basis_check(r, std::vector<Poly>{P(r, "x^2")}).is_basis);
  const auto v = tau_basis_check(r, std::vector<Poly>{P(r, "t+1")});
  CHECK(!v.is_basis);
  CHECK(v.rank == 1);
}

TEST_CASE("split sections") {
  const auto k = field_t();
  const auto rx = ring(k, {"x"});
  const auto line = split_section_search(PresentedAlgebra(rx), 0);
  REQUIRE(line);
  CHECK(line->images[0] == form(rx, {"0", "1"}));

  const auto r = ring(k, {"x", "y"});
  const PresentedAlgebra unit = algebra(r, {"x^2+y^2-1"});
  const auto s1 = split_section_search(unit, 2);
  REQUIRE(s1);
  CHECK(verify_split_section(unit, *s1));
  CHECK(s1->images[0] == form(r, {"0", "1", "0"}));

  const PresentedAlgebra circle = algebra(r, {"x^2+y^2-t"});
  CHECK(!split_section_search(circle, 0));
  const auto st = split_section_search(circle, 3);
  REQUIRE(st);
  CHECK(st->degree == 1);
  CHECK(st->images[0] == form(r, {"-x/(2*t)", "1", "0"}));
  CHECK(st->images[1] == form(r, {"-y/(2*t)", "0", "1"}));
  CHECK(verify_split_section(circle, *st));
  SplitSection bad = *st;
  bad.images[0] = form(r, {"0", "1", "0"});
  std::string why;
  CHECK(!verify_split_section(circle, bad, &why));
  CHECK(!why.empty());
}

}  // TEST_SUITE
