#pragma once

// Affine prolongation cones, their two hyperplane slices (the prolongation
// and the tangent variety), morphism lifting and the fiberwise torsor action.
//
// Cone coordinates are ordered (x_1..x_n, tau_x_1..tau_x_n, tau_e); slices drop
// tau_e and keep (x, tau_x).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "taudiff/tau.hpp"

namespace taudiff {

struct ConeAlgebra {
  PresentedAlgebra base;
  RingCtxPtr cone_ctx;
  PresentedAlgebra cone_ideal;

  std::size_t n() const noexcept { return base.nvars(); }
  std::size_t tau_e_index() const noexcept { return 2 * n(); }
};

ConeAlgebra prolongation_cone(const PresentedAlgebra& b);

// A tau-form as the degree-1 polynomial sum_i w_i * (tau coordinate i) in the
// cone ring.
Poly linearize(const TauForm& w, const RingCtxPtr& cone_ctx);

enum class Slice { prolongation, tangent };
std::string to_string(Slice s);

struct SlicedVariety {
  ConeAlgebra cone;
  Slice slice;
  RingCtxPtr ctx;  // (x, tau_x)
  PresentedAlgebra ideal;

  // tau_e takes this value on the slice.
  long tau_e_value() const noexcept { return slice == Slice::prolongation ? 1 : 0; }
};

SlicedVariety slice_cone(const ConeAlgebra& cone, Slice slice);
SlicedVariety prolongation(const PresentedAlgebra& b);
SlicedVariety tangent_variety(const PresentedAlgebra& b);

// Cone polynomial with tau_e replaced by the slice value.
Poly restrict_to_slice(const Poly& cone_poly, const SlicedVariety& v);

// f^delta + sum_i (df/dx_i) tau_x_i, written out term by term in the
// prolongation ring.
Poly buium_tau(const Poly& f, const SlicedVariety& prolong);

struct PointCheck {
  bool on = true;
  std::string witness;  // "<generator> -> <value>" for the first failure
};

PointCheck point_on(const PresentedAlgebra& v, std::span<const FieldElem> p);
// "(a, b, ...)"
std::string format_point(const BaseField& field, std::span<const FieldElem> p);

struct FiberPoint {
  std::vector<FieldElem> base_point;
  std::vector<FieldElem> fiber;
};

PointCheck point_on(const SlicedVariety& v, const FiberPoint& p);

// The fiber of a slice over a base point is an affine subspace of K^n.
struct AffineFiber {
  std::optional<std::vector<FieldElem>> particular;  // empty fiber if unset
  std::vector<std::vector<FieldElem>> directions;
};
AffineFiber fiber_at(const SlicedVariety& v, std::span<const FieldElem> base_point);

// v on the tangent slice acts on w on the prolongation slice.
FiberPoint torsor_act(const SlicedVariety& tangent, const SlicedVariety& prolong, const FiberPoint& v,
                      const FiberPoint& w);
// w1 - w2 for two points of the prolongation over the same base point; lies on
// the tangent slice.
FiberPoint torsor_difference(const SlicedVariety& prolong, const FiberPoint& w1, const FiberPoint& w2);

// Rational points of small height on V(I).  Candidate coordinates are built
// from small rationals and low powers of the designated symbol.
std::vector<std::vector<FieldElem>> search_rational_points(const PresentedAlgebra& b, std::size_t limit = 3,
                                                           std::size_t budget = 200000);

// X -> Y: images of Y's variables in X's ring.
struct Morphism {
  PresentedAlgebra source;
  PresentedAlgebra target;
  std::vector<Poly> images;
};
// Throws NotAMorphism if some generator of Y's ideal does not pull back into
// X's ideal.
void check_morphism(const Morphism& f);
// g after f.
Morphism compose(const Morphism& g, const Morphism& f);
Morphism identity_morphism(const PresentedAlgebra& x);

// Images of Y's cone coordinates (y, tau_y, tau_e) in X's cone ring.
struct ConeLift {
  ConeAlgebra source;
  ConeAlgebra target;
  std::vector<Poly> images;
};
ConeLift lift_morphism(const Morphism& f);
ConeLift compose(const ConeLift& g, const ConeLift& f);
// Evaluate the lift at the cone point (base_point, fiber, tau_e).
FiberPoint apply_lift(const ConeLift& lift, const FiberPoint& p, const FieldElem& tau_e);
// Does the lift carry the cone ideal of Y into that of X?
bool lift_respects_cones(const ConeLift& lift, std::string* witness = nullptr);

struct SliceReport {
  bool coherent = true;       // Groebner bases agree with the sliced ones
  bool surjective = true;     // slice relations lie in cone + <tau_e - c>
  bool disjoint = true;       // cone + <tau_e> + <tau_e - 1> is the unit ideal
  bool cone_nonempty = true;
  bool buium = true;          // substituted tau relations match buium_tau
  std::vector<std::string> failures;
};
SliceReport check_slices(const ConeAlgebra& cone);

// Generic rank of the image of the tau-differentials in the degree <= 1 part
// of the prolongation ring, measured against the slice relations.
std::size_t embedding_rank(const PresentedAlgebra& b);

}  // namespace taudiff
