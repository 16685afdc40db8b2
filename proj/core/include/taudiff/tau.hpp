#pragma once

// The tau-derivation calculus over K[x_1..x_n] and its quotients.
//
// Elements of the module of tau-differentials of K[x] are coordinate vectors
// in the free basis (tau_e, tau_x1, ..., tau_xn); tau_e always comes first.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "taudiff/ideal.hpp"
#include "taudiff/linear.hpp"

namespace taudiff {

class TauForm {
 public:
  explicit TauForm(RingCtxPtr ctx);
  TauForm(RingCtxPtr ctx, std::vector<Poly> coords);
  // The k-th basis element; k = 0 is tau_e.
  static TauForm basis(RingCtxPtr ctx, std::size_t k);

  const RingCtxPtr& ctx() const noexcept { return ctx_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const Poly& coord(std::size_t i) const { return coords_.at(i); }
  const std::vector<Poly>& coords() const noexcept { return coords_; }
  bool is_zero() const;

  TauForm& operator+=(const TauForm& o);
  TauForm& operator-=(const TauForm& o);
  friend TauForm operator+(TauForm a, const TauForm& b) { return a += b; }
  friend TauForm operator-(TauForm a, const TauForm& b) { return a -= b; }
  TauForm scaled(const Poly& r) const;
  TauForm scaled(const FieldElem& c) const;
  TauForm reduced(const PresentedAlgebra& algebra) const;

  friend bool operator==(const TauForm& a, const TauForm& b);

 private:
  RingCtxPtr ctx_;
  std::vector<Poly> coords_;
};

// Basis labels tau_e, tau_<x1>, ..., tau_<xn>.
std::vector<std::string> tau_basis_labels(const RingCtx& ctx);
std::vector<std::string> kahler_basis_labels(const RingCtx& ctx);

// tau f = (df/de) tau_e + sum_i (df/dx_i) tau_x_i.
TauForm tau_of(const Poly& f);
TauForm iota(const Poly& r);
std::vector<Poly> lambda_proj(const TauForm& w);
// <h, w> = sum_i h_i w_i.
Poly pairing(std::span<const Poly> h, const TauForm& w);

struct TensorTerm {
  Poly r;
  FieldElem a;
};
// sum r * delta(a) for r (x) da.
Poly delta_tilde(const RingCtxPtr& ctx, std::span<const TensorTerm> tensor);

// Elements of the kernel of R (x) Omega_K -> R, as coordinate vectors in the
// basis (de_1, ..., de_m) of Omega_K.
struct KernelBasis {
  BaseFieldPtr field;
  std::vector<std::vector<FieldElem>> vectors;
};
KernelBasis kernel_basis(const BaseFieldPtr& field);
FieldElem delta_tilde(const BaseField& field, std::span<const FieldElem> omega_k_vector);

// Free module of rank free_rank modulo the row span of relations.
struct ModulePresentation {
  PresentedAlgebra algebra;
  std::size_t free_rank;
  QuotientMatrix relations;
  std::vector<std::string> basis_labels;
};

std::size_t module_rank(const ModulePresentation& m);
ModulePresentation omega_tau_presentation(const PresentedAlgebra& b);
ModulePresentation omega_kahler_presentation(const PresentedAlgebra& b);

// An algebra map R -> S given by the images (in S's ring) of R's variables.
struct RingMap {
  PresentedAlgebra source;
  PresentedAlgebra target;
  std::vector<Poly> images;

  Poly apply(const Poly& f) const;
};
// Throws NotAnAlgebraMap when an ideal generator of the source does not map
// into the target ideal.
void check_algebra_map(const RingMap& map);

struct FirstSequenceReport {
  QuotientMatrix alpha;           // (n_R + 1) x (n_S + 1)
  QuotientMatrix beta;            // (n_S + 1) x n_S
  ModulePresentation relative;    // Omega_{S/R}
  std::size_t rank_source = 0;    // S (x) Omega^tau_R
  std::size_t rank_image_alpha = 0;
  std::size_t rank_relative = 0;
  std::size_t rank_target = 0;    // Omega^tau_S
  bool image_in_kernel = false;
  bool rank_additive = false;
  bool alpha_injective = false;   // at generic rank level
};
FirstSequenceReport first_tau_sequence(const RingMap& map);

// tau(f / u^k) = numerator / u^power.
struct LocalTauForm {
  TauForm numerator;
  Poly unit;
  unsigned power;
};
LocalTauForm tau_in_localization(const Poly& f, const Poly& u, int k);
// u^(2k) tau(f/u^k) + k f u^(k-1) tau u - u^k tau f, cleared of denominators.
TauForm localization_residual(const Poly& f, const Poly& u, int k, const LocalTauForm& value);

// Base change along K -> K'.  The target ring K'[x] has the same variables.
class BaseChange {
 public:
  BaseChange(BaseFieldPtr extension, const PresentedAlgebra& algebra);

  const PresentedAlgebra& source() const noexcept { return source_; }
  const PresentedAlgebra& target() const noexcept { return target_; }
  const BaseField& extension() const noexcept { return *extension_; }
  std::span<const std::uint32_t> symbol_map() const noexcept { return symbol_map_; }

  Poly extend(const Poly& r) const;
  TauForm extend(const TauForm& w) const;
  // tau(a (x) r) computed directly in the module over K'.
  TauForm tau_direct(const FieldElem& a, const Poly& r) const;
  // Image of tau(a (x) r): a (x) tau r + delta(a) (x) r tau_e.
  TauForm forward(const FieldElem& a, const Poly& r) const;
  // The forward map applied to a form over K' (linear extension).
  TauForm forward_linear(const TauForm& w) const;
  // a (x) tau r  |->  a tau(1 (x) r), extended linearly; w has coordinates in
  // K'[x] with respect to 1 (x) tau_e, 1 (x) tau_x_i.
  TauForm backward_linear(const TauForm& w) const;

 private:
  BaseFieldPtr extension_;
  PresentedAlgebra source_;
  RingCtxPtr target_ctx_;
  PresentedAlgebra target_;
  std::vector<std::uint32_t> symbol_map_;
};

struct RoundtripReport {
  bool ok = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

// Throws NotAnExtension if the derivations disagree on shared symbols.
BaseChange base_change_iso(BaseFieldPtr extension, const PresentedAlgebra& algebra);
// Checks both composites on the generators tau(a (x) r) for the supplied
// scalars a and ring elements r, and on the basis of both modules.
RoundtripReport verify_base_change(const BaseChange& bc, std::span<const FieldElem> scalars,
                                   std::span<const Poly> ring_elements);

enum class BaseAction { extends_delta, zero_on_K, custom };

// A derivation of K[x] into itself, fixed by its values on x_1..x_n and on the
// base symbols.
struct DerivationSpec {
  RingCtxPtr ctx;
  std::vector<Poly> image_of_vars;
  BaseAction on_base = BaseAction::zero_on_K;
  std::vector<Poly> base_images;  // D(e_s), one per base symbol

  static DerivationSpec extends_delta(RingCtxPtr ctx, std::vector<Poly> image_of_vars);
  static DerivationSpec zero_on_K(RingCtxPtr ctx, std::vector<Poly> image_of_vars);
  static DerivationSpec custom(RingCtxPtr ctx, std::vector<Poly> image_of_vars, std::vector<Poly> base_images);
  // d/dx_i
  static DerivationSpec partial(RingCtxPtr ctx, std::size_t i);
  // epsilon = d/de, delta on coefficients
  static DerivationSpec epsilon(RingCtxPtr ctx);

  Poly apply(const Poly& f) const;
  Poly apply(const FieldElem& a) const;
  bool is_zero() const;
  friend bool operator==(const DerivationSpec& a, const DerivationSpec& b);
};

struct TauDerivationVerdict {
  bool ok = true;
  std::size_t a = 0;  // witness base symbols
  std::size_t b = 0;
  Poly lhs;           // delta(e_a) D(e_b)
  Poly rhs;           // delta(e_b) D(e_a)
};

TauDerivationVerdict is_tau_derivation(const DerivationSpec& d);
// [D1, D2] on generators; throws NotTauDerivation if an input fails the test.
DerivationSpec commutator(const DerivationSpec& d1, const DerivationSpec& d2);
DerivationSpec derivation_from_hom(RingCtxPtr ctx, std::vector<Poly> h);

struct BasisVerdict {
  bool is_basis = false;
  std::size_t rank = 0;
  std::string reason;
};
// Do {tau b : b in candidates} and tau_e form a basis over Frac(K[x])?
BasisVerdict tau_basis_check(const RingCtxPtr& ctx, std::span<const Poly> candidates);

struct SplitSection {
  unsigned degree = 0;
  std::vector<TauForm> images;                 // S(dx_i) = tau_x_i + p_i tau_e
  std::vector<std::vector<Poly>> cofactors;    // per generator, per relation row
};
// Search for a section of lambda with coefficients of degree <= degree_bound.
std::optional<SplitSection> split_section_search(const PresentedAlgebra& b, unsigned degree_bound = 3);
// Independent certificate check of a section.
bool verify_split_section(const PresentedAlgebra& b, const SplitSection& s, std::string* why = nullptr);

std::string to_string(const TauForm& w);
std::string to_string(BaseAction a);

}  // namespace taudiff
