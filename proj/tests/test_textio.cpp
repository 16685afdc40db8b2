#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"

using namespace taudiff;
using namespace taudiff::test;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Position of the SyntaxError thrown by fn, or (0, 0).
std::pair<int, int> syntax_position(auto&& fn) {
  try {
    fn();
  } catch (const SyntaxError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

const char* kSmall = R"([field]
symbols = t
d(t) = 1

[ring]
vars = x, y

[ideal]
x*y - t   # hyperbola

[points]
1, t
)";

}  // namespace

TEST_SUITE("textio") {

TEST_CASE("expressions") {
  const auto k = field_t();
  const auto r = ring(k, {"x", "y"});
  CHECK(P(r, "x^2 + y^2 - t") == Poly::variable(r, 0).pow(2) + Poly::variable(r, 1).pow(2) - Poly(r, k->gen(0)));
  CHECK(P(r, "2/3*t*x^2") == Poly::monomial(r, {2, 0}, F(k, "2*t/3")));
  CHECK(P(r, "-x^2") == -(Poly::variable(r, 0).pow(2)));
  CHECK(P(r, "2^3*x") == P(r, "8*x"));
  CHECK(P(r, "((x))") == P(r, "x"));
  CHECK(P(r, "x - -y") == P(r, "x + y"));
}

TEST_CASE("expression errors") {
  const auto r = ring(field_t(), {"x", "y"});
  CHECK(syntax_position([&] { (void)P(r, "x^-1"); }) != std::pair{0, 0});
  CHECK(syntax_position([&] { (void)P(r, "2x"); }) == std::pair{1, 2});
  CHECK(syntax_position([&] { (void)P(r, "x y"); }) == std::pair{1, 3});
  CHECK(syntax_position([&] { (void)P(r, "(x + y"); }) != std::pair{0, 0});
  CHECK(syntax_position([&] { (void)P(r, "x +"); }) != std::pair{0, 0});
  CHECK(syntax_position([&] { (void)P(r, ""); }) != std::pair{0, 0});
  CHECK(syntax_position([&] { (void)P(r, "x / y"); }) != std::pair{0, 0});
  try {
    (void)parse_poly("x + z", r, 4, 10);
    FAIL("unknown symbol accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownSymbol);
    CHECK(std::string(e.what()).find("line 4, column 14") != std::string::npos);
  }
  CHECK_THROWS_AS(P(r, "x / (t - t)"), Error);
}

TEST_CASE("field elements and points") {
  const auto k = field_t();
  CHECK(F(k, "1/(t+1)") == FieldElem(1) / (k->gen(0) + FieldElem(1)));
  CHECK(pt(k, "1, t") == std::vector<FieldElem>{FieldElem(1), k->gen(0)});
  CHECK(pt(k, "(1+t)/2, -1/t").size() == 2);
  CHECK_THROWS_AS(F(k, "x"), Error);
}

TEST_CASE("problem files") {
  const ProblemFile p = parse_problem(kSmall);
  CHECK(p.ring()->vars() == std::vector<std::string>{"x", "y"});
  CHECK(strings(p.algebra.gens()) == std::vector<std::string>{"x*y - t"});
  REQUIRE(p.points.size() == 1);
  CHECK(p.points[0] == pt(p.field, "1, t"));
  CHECK(!p.assertions.smooth);
  CHECK(p.morphisms.empty());

  const ProblemFile again = parse_problem(print_problem(p));
  CHECK(print_problem(again) == print_problem(p));
}

TEST_CASE("problem file errors") {
  CHECK(syntax_position([] { (void)parse_problem("[ring]\nvars = x\n[ring]\nvars = y\n"); }).first == 3);
  CHECK(syntax_position([] { (void)parse_problem("[field]\nsymbols = t\nd(t) = 1\n[bogus]\n"); }).first == 4);
  CHECK(syntax_position([] { (void)parse_problem("[field]\nsymbols = t\nd(t) = 1\n[ring]\nvars = x\n[ideal]\nx +\n"); })
            .first == 7);
  // d(t) must be 1 for the designated symbol
  CHECK_THROWS_AS(parse_problem("[field]\nsymbols = t\nd(t) = 2\n[ring]\nvars = x\n"), Error);
  CHECK_THROWS_AS(parse_problem("[field]\nsymbols = t\nd(t) = 1\n[ring]\nvars = x\n[points]\n1, 2\n"), Error);
}

TEST_CASE("corpus round trips") {
  for (const auto* name : {"affine_line", "affine_plane", "circle_t", "circle_1", "hyperbola_t", "cubic_surface",
                           "ci_curve", "elliptic_u", "point", "double_point"}) {
    CAPTURE(name);
    const ProblemFile p = parse_problem(slurp(corpus(name)));
    const std::string printed = print_problem(p);
    CHECK(print_problem(parse_problem(printed)) == printed);
    for (const auto& m : p.morphisms) CHECK_NOTHROW(check_morphism(p.morphism(m)));
    for (const auto& q : p.points) CHECK(point_on(p.algebra, q).on);
  }
}

TEST_CASE("presentation printing") {
  const auto k = field_t();
  const auto rx = ring(k, {"x"});
  CHECK(print_presentation(omega_tau_presentation(PresentedAlgebra(rx))) == "free: tau_e, tau_x; relations: (none)");
  CHECK(print_presentation(omega_kahler_presentation(PresentedAlgebra(rx))) == "free: dx; relations: (none)");

  const auto r = ring(k, {"x", "y"});
  const PresentedAlgebra circle = algebra(r, {"x^2+y^2-t"});
  const auto tau = omega_tau_presentation(circle);
  CHECK(print_presentation(tau) == "free: tau_e, tau_x, tau_y; relations: (-1, 2*x, 2*y)");
  CHECK(print_presentation(tau, true) == "free: tau_e, tau_x, tau_y; relations: (1, -2*x, -2*y)");
  const auto back = parse_presentation(print_presentation(tau), circle);
  CHECK(print_presentation(back) == print_presentation(tau));
  CHECK(back.free_rank == 3);
}

TEST_CASE("variety printing") {
  const auto k = field_t();
  const auto r = ring(k, {"x", "y"});
  const ConeAlgebra cone = prolongation_cone(algebra(r, {"x^2+y^2-t"}));
  CHECK(print_cone(cone) == "cone: x, y, tau_x, tau_y, tau_e; ideal: x^2 + y^2 - t, 2*x*tau_x + 2*y*tau_y - tau_e");
  const std::string canon = print_cone(cone, true);
  const ParsedVariety pv = parse_variety(canon, k);
  CHECK(pv.label == "cone");
  CHECK(print_variety(pv.label, pv.algebra, true) == canon);
  CHECK(print_variety("plane", PresentedAlgebra(r)) == "plane: x, y; ideal: (none)");
  const ParsedVariety empty = parse_variety("plane: x, y; ideal: (none)", k);
  CHECK(empty.algebra.gens().empty());
}

}  // TEST_SUITE
