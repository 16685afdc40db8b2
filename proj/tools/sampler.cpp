#include "taudiff_cli/sampler.hpp"

namespace taudiff::cli {

FieldElem Sampler::scalar(const BaseField& k) {
  const int num = uniform(-3, 3);
  const int den = uniform(1, 3);
  Rat q(num, den);
  q.canonicalize();
  FieldElem c(q);
  switch (uniform(0, 5)) {
    case 0:
    case 1:
      return c;
    case 2:
      return c * k.gen(static_cast<std::size_t>(uniform(0, static_cast<int>(k.size()) - 1)));
    case 3:
      return c * k.gen(static_cast<std::size_t>(uniform(0, static_cast<int>(k.size()) - 1))).pow(2);
    case 4:
      return c + k.designated_element();
    default:
      return c / (k.designated_element() + FieldElem(uniform(1, 2)));
  }
}

FieldElem Sampler::nonzero_scalar(const BaseField& k) {
  for (;;) {
    FieldElem c = scalar(k);
    if (!c.is_zero()) return c;
  }
}

Poly Sampler::poly(const RingCtxPtr& ctx, unsigned max_degree, unsigned max_terms) {
  Poly out(ctx);
  const int terms = uniform(1, static_cast<int>(max_terms));
  for (int i = 0; i < terms; ++i) {
    Exponents e(ctx->nvars(), 0);
    int budget = uniform(0, static_cast<int>(max_degree));
    for (std::size_t v = 0; v < e.size() && budget > 0; ++v) {
      const int k = uniform(0, budget);
      e[v] = static_cast<std::uint32_t>(k);
      budget -= k;
    }
    out += Poly::monomial(ctx, std::move(e), scalar(ctx->base()));
  }
  return out;
}

Poly Sampler::nonzero_poly(const RingCtxPtr& ctx, unsigned max_degree, unsigned max_terms) {
  for (;;) {
    Poly p = poly(ctx, max_degree, max_terms);
    if (!p.is_zero()) return p;
  }
}

}  // namespace taudiff::cli
