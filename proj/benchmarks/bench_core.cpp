#include <benchmark/benchmark.h>

#include <memory>

#include "taudiff/textio.hpp"

using namespace taudiff;

namespace {

BaseFieldPtr field_t() {
  return std::make_shared<BaseField>(std::vector<std::string>{"t"}, std::vector<FieldElem>{FieldElem(1)}, 0);
}

void BM_FieldArithmetic(benchmark::State& state) {
  const auto k = field_t();
  const FieldElem a = parse_field_elem("(t^3 + 2*t - 1)/(t^2 + 1)", k);
  const FieldElem b = parse_field_elem("(t - 5)/(3*t^2 - t)", k);
  for (auto _ : state) {
    FieldElem c = a * b + a / b - b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_FieldArithmetic);

void BM_TauOf(benchmark::State& state) {
  const auto r = make_ring(field_t(), {"x", "y", "z"});
  const Poly f = parse_poly("(t*x + y/t + z^2 - 1)^" + std::to_string(state.range(0)), r);
  for (auto _ : state) benchmark::DoNotOptimize(tau_of(f));
}
BENCHMARK(BM_TauOf)->Arg(2)->Arg(4)->Arg(6);

void BM_ConeGroebner(benchmark::State& state) {
  const auto r = make_ring(field_t(), {"x", "y", "z"});
  const std::vector<std::string> ideals{"x^2 + y^2 - t", "x^3 + y^3 + z^3 - t", "x*y - t, y*z - 1"};
  const std::string& text = ideals[static_cast<std::size_t>(state.range(0))];
  std::vector<Poly> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    gens.push_back(parse_poly(text.substr(start, comma - start), r));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  const PresentedAlgebra b(r, gens);
  for (auto _ : state) {
    const ConeAlgebra cone = prolongation_cone(b);
    benchmark::DoNotOptimize(groebner_basis(cone.cone_ideal.gens()));
  }
}
BENCHMARK(BM_ConeGroebner)->DenseRange(0, 2);

void BM_SplitSection(benchmark::State& state) {
  const auto r = make_ring(field_t(), {"x", "y"});
  const PresentedAlgebra circle(r, {parse_poly("x^2 + y^2 - t", r)});
  for (auto _ : state) benchmark::DoNotOptimize(split_section_search(circle, 3));
}
BENCHMARK(BM_SplitSection);

}  // namespace

BENCHMARK_MAIN();
