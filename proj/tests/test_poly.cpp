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

TEST_SUITE("poly") {

TEST_CASE("ring arithmetic") {
  const auto r = ring(field_t(), {"x", "y"});
  const Poly x = Poly::variable(r, 0);
  CHECK(poly_arith(PolyOp::add, x, -x).is_zero());
  CHECK(poly_arith(PolyOp::mul, P(r, "x+y"), P(r, "x-y")) == P(r, "x^2 - y^2"));
  CHECK(poly_arith(PolyOp::mul, P(r, "t*x"), x) == P(r, "t*x^2"));
  CHECK(poly_arith(PolyOp::sub, P(r, "x*y + 1/t"), P(r, "1/t")) == P(r, "y*x"));
  CHECK(P(r, "(x+y)^3") == P(r, "x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
}

TEST_CASE("term order and printing") {
  const auto r = ring(field_t(), {"x", "y", "z"});
  CHECK(to_string(P(r, "z^2 + x*y + y^2 + x^2")) == "x^2 + x*y + y^2 + z^2");
  CHECK(to_string(P(r, "x*z^2 + y^3")) == "y^3 + x*z^2");
  const auto lex = ring(field_t(), {"x", "y", "z"}, MonomialOrder::lex);
  CHECK(to_string(P(lex, "x*z^2 + y^3")) == "x*z^2 + y^3");
  CHECK(to_string(P(r, "0")) == "0");
  CHECK(to_string(P(r, "-x + (t+1)/t*y - 2/3")) == "-x + (t + 1)/t*y - 2/3");
}

TEST_CASE("partial derivatives") {
  const auto r = ring(field_t(), {"x", "y"});
  CHECK(partial_derivative(P(r, "x^2"), 0) == P(r, "2*x"));
  CHECK(partial_derivative(P(r, "t*x*y"), 0) == P(r, "t*y"));
  CHECK(partial_derivative(P(r, "x^2"), 1).is_zero());
  CHECK(kind_of([&] { (void)partial_derivative(P(r, "x"), 2); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("coefficient derivation") {
  const auto r = ring(field_t(), {"x"});
  CHECK(coeff_derivation(P(r, "x^2")).is_zero());
  CHECK(coeff_derivation(P(r, "t*x^2")) == P(r, "x^2"));
  CHECK(coeff_derivation(P(r, "(t^2+1)*x + t")) == P(r, "2*t*x + 1"));
  CHECK(coeff_derivation(P(r, "x/t")) == P(r, "-x/t^2"));
}

TEST_CASE("evaluation") {
  const auto k = field_t();
  const auto r = ring(k, {"x", "y"});
  CHECK(evaluate(P(r, "x^2+y^2-t"), pt(k, "0, 0")) == F(k, "-t"));
  CHECK(evaluate(P(r, "x*y-t"), pt(k, "1, t")).is_zero());
  const auto r1 = ring(k, {"x"});
  CHECK(evaluate(P(r1, "x"), pt(k, "1/t")) == F(k, "1/t"));
  CHECK(kind_of([&] { (void)evaluate(P(r, "x"), pt(k, "1")); }) == ErrorKind::ArityMismatch);
}

TEST_CASE("context checks") {
  const auto k = field_t();
  const auto r = ring(k, {"x", "y"});
  const auto s = ring(k, {"x", "z"});
  CHECK(kind_of([&] { (void)(P(r, "x") + P(s, "x")); }) == ErrorKind::ContextMismatch);
  CHECK(kind_of([&] { (void)ring(k, {"x", "x"}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([&] { (void)ring(k, {"t"}); }) == ErrorKind::InvalidArgument);
  // rings built separately from the same data are interchangeable
  const auto r2 = ring(k, {"x", "y"});
  CHECK(P(r, "x*y") + P(r2, "x") == P(r, "x*y + x"));
}

TEST_CASE("substitution and embedding") {
  const auto k = field_t();
  const auto r = ring(k, {"x", "y"});
  const auto s = ring(k, {"u"});
  const std::vector<Poly> images{P(s, "u^2"), P(s, "u + t")};
  CHECK(P(r, "x - y^2").substitute(images, s) == P(s, "-2*t*u - t^2"));
  const auto big = ring(k, {"w", "x", "y"});
  CHECK(P(r, "x*y").embed(big) == P(big, "x*y"));
  CHECK(kind_of([&] { (void)P(big, "w").embed(r); }) == ErrorKind::ContextMismatch);
}

}  // TEST_SUITE
