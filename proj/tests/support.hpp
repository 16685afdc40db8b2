#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "taudiff/textio.hpp"

namespace taudiff::test {

// Q(t), delta(t) = 1
inline BaseFieldPtr field_t() {
  return std::make_shared<BaseField>(std::vector<std::string>{"t"}, std::vector<FieldElem>{FieldElem(1)}, 0);
}

// Q(t, u) with delta(t) = 1 and delta(u) given as text in t, u.
inline BaseFieldPtr field_tu(long du_scale_u, long du_const) {
  FieldElem du = FieldElem::symbol(1) * FieldElem(du_scale_u) + FieldElem(du_const);
  return std::make_shared<BaseField>(std::vector<std::string>{"t", "u"}, std::vector<FieldElem>{FieldElem(1), du}, 0);
}

inline RingCtxPtr ring(const BaseFieldPtr& k, std::vector<std::string> vars,
                       MonomialOrder order = MonomialOrder::degrevlex) {
  return make_ring(k, std::move(vars), order);
}

inline Poly P(const RingCtxPtr& ctx, const std::string& text) { return parse_poly(text, ctx); }

inline FieldElem F(const BaseFieldPtr& k, const std::string& text) { return parse_field_elem(text, k); }

inline std::vector<FieldElem> pt(const BaseFieldPtr& k, const std::string& text) { return parse_point(text, k); }

inline PresentedAlgebra algebra(const RingCtxPtr& ctx, const std::vector<std::string>& gens) {
  std::vector<Poly> ps;
  for (const auto& g : gens) ps.push_back(P(ctx, g));
  return PresentedAlgebra(ctx, std::move(ps));
}

inline std::vector<std::string> strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(to_string(p));
  return out;
}

// Same polynomials up to order, each made monic.
inline bool same_monic_set(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  auto key = [](const std::vector<Poly>& ps) {
    std::vector<std::string> s;
    for (const auto& p : ps) s.push_back(to_string(p.monic()));
    std::sort(s.begin(), s.end());
    return s;
  };
  return key(a) == key(b);
}

inline std::string corpus(const std::string& name) { return std::string(TAUDIFF_CORPUS_DIR) + "/" + name + ".prob"; }

}  // namespace taudiff::test
