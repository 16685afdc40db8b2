#pragma once

// Seeded random elements for property checks.

#include <cstdint>
#include <random>

#include "taudiff/poly.hpp"

namespace taudiff::cli {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  // Small rational times a low power of a base symbol; sometimes 1/(e + c).
  FieldElem scalar(const BaseField& k);
  FieldElem nonzero_scalar(const BaseField& k);
  Poly poly(const RingCtxPtr& ctx, unsigned max_degree = 2, unsigned max_terms = 3);
  Poly nonzero_poly(const RingCtxPtr& ctx, unsigned max_degree = 2, unsigned max_terms = 3);

 private:
  std::mt19937_64 rng_;
};

}  // namespace taudiff::cli
