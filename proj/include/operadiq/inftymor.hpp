#pragma once

#include "operadiq/convolution.hpp"
#include "operadiq/fixtures.hpp"

namespace operadiq {

// canonical key {n, c, x_1..x_n} of C(n) ⊗_{S_n} A^{⊗n} -> A'
using KeyMap = std::function<Vec(const Key& k)>;

// B_α A -> B_α A' stored by its corestriction ψ to the cogenerators A'
struct InftyAlgMorphism {
  TwMor alpha;
  AlgPtr src, tgt;
  int cap = 0;  // highest arity of a component
  KeyMap psi;
};

// Ω_α D' -> Ω_α D stored by its restriction φ to the generators D'
struct InftyCoalgMorphism {
  TwMor alpha;
  CoalgPtr src, tgt;
  AlgPtr omega;  // Ω_α D truncated at the arity cap
  PointMap phi;  // x ↦ element of omega
};

// ∞-morphisms of homotopy Lie (SYM) or shifted homotopy associative (NS) algebras: the case
// α = ι : C -> ΩC with C = Com∨ or As∨
using InftyLinfMorphism = InftyAlgMorphism;

// ψ_n vanishes on keys above the arity cap; weights (optional) bound the bar construction used to verify
struct BarBound {
  int arity = 0;
  std::vector<int> weight;
  int wcap = -1;
};

InftyAlgMorphism strict_alg_morphism(const TwMor& a, const AlgPtr& src, const AlgPtr& tgt, const LinMap& f, int cap);
InftyCoalgMorphism strict_coalg_morphism(const TwMor& a, const CoalgPtr& src, const CoalgPtr& tgt, const LinMap& f,
                                         int cap);
InftyAlgMorphism identity_infty(const TwMor& a, const AlgPtr& A, int cap);
InftyCoalgMorphism identity_infty(const TwMor& a, const CoalgPtr& D, int cap);

// the coalgebra map determined by ψ, on one key of B_α src
Elt coalg_extension(const InftyAlgMorphism& m, const Key& k);
LinMap first_component(const InftyAlgMorphism& m);
LinMap first_component(const InftyCoalgMorphism& m);

// chain map condition of the induced (co)algebra map on every basis element within the caps
Report check_infty(const InftyAlgMorphism& m, const BarBound& b = {});
Report check_infty(const InftyCoalgMorphism& m);

// second ∘ first
InftyAlgMorphism compose_infty(const InftyAlgMorphism& second, const InftyAlgMorphism& first);
InftyCoalgMorphism compose_infty(const InftyCoalgMorphism& second, const InftyCoalgMorphism& first);
bool same_components(const InftyAlgMorphism& a, const InftyAlgMorphism& b, const BarBound& bound);
bool same_components(const InftyCoalgMorphism& a, const InftyCoalgMorphism& b);

struct Classification {
  bool iso = false;
  bool qi = false;
  bool boundary_unknown = false;  // some homology degree at the window edge was not decided
};
Classification classify(const InftyAlgMorphism& m);
Classification classify(const InftyCoalgMorphism& m);

// inverse by solving weight by weight (the induced map is triangular); bound fixes the truncation
InftyAlgMorphism invert_infty_iso(const InftyAlgMorphism& m, const BarBound& bound);
InftyCoalgMorphism invert_infty_iso(const InftyCoalgMorphism& m);

// hom^α_ℓ(Φ, 1): hom^α(D, A) ⇝ hom^α(D', A), μ_n∨ ⊗ F ↦ γ_A F φ_n
InftyLinfMorphism induce_left(const InftyCoalgMorphism& Phi, const AlgPtr& A);
// hom^α_r(1, Ψ): hom^α(D, A) ⇝ hom^α(D, A'), μ_n∨ ⊗ F ↦ Ψ F Δ^n_D
InftyLinfMorphism induce_right(const InftyAlgMorphism& Psi, const CoalgPtr& D);

// hom_ℓ(Φ1 Φ2, 1) = hom_ℓ(Φ2, 1) hom_ℓ(Φ1, 1) with Φ1 ∘ Φ2 : D'' ⇝ D' ⇝ D
Report composition_law_check(const InftyCoalgMorphism& Phi1, const InftyCoalgMorphism& Phi2, const AlgPtr& A,
                             const BarBound& bound);
// hom_r(1, Ψ1 Ψ2) = hom_r(1, Ψ1) hom_r(1, Ψ2) with Ψ1 ∘ Ψ2 : A ⇝ A' ⇝ A''
Report composition_law_check(const InftyAlgMorphism& Psi1, const InftyAlgMorphism& Psi2, const CoalgPtr& D,
                             const BarBound& bound);

// evaluation of a morphism between convolution algebras on a tensor of (not necessarily
// homogeneous) maps given as vectors in the hom basis
Vec evaluate_on_maps(const InftyLinfMorphism& m, const std::vector<Vec>& fs);

// ---- homotopy transfer ----

struct Transfer {
  AlgPtr H;                      // algebra over As∞ = ΩAs¡
  std::vector<std::map<Key, Vec>> m;  // raw m_n = γ_H(s⁻¹c_n; ..) per arity
  InftyAlgMorphism i_inf;        // relative to ι : As¡ -> As∞, target A pulled back to As∞
};
// A associative, (i, p, h) a contraction onto H; transferred structure up to arity cap
Transfer htt_transfer(const AlgPtr& A, const AlgPtr& H, const Contraction& c, int cap);
// the product read off the transferred structure in the As convention (κ(c_2) = -μ_2)
Vec transferred_product(const Transfer& t, int a, int b);
// when m_{>=3} = 0: i_∞ as an ∞_κ-morphism between the associative algebras H and A
InftyAlgMorphism kappa_morphism(const Transfer& t, const AlgPtr& Hassoc, const AlgPtr& A);

// ---- the counterexample ----

struct Counterexample {
  Vec left_then_right;  // hom_ℓ(Φ, 1) hom_r(1, i_∞)(μ_3∨ ⊗ F) at v_4, in A^2
  Vec right_then_left;  // hom_r(1, i_∞) hom_ℓ(Φ, 1)(μ_3∨ ⊗ F) at v_4
  Elt intermediate;     // As(i_∞) F proj_3 As(Δ_V) Φ(v_4), keys over As in A^2
  Vec intermediate_value;  // γ of the intermediate
  std::string left_str, right_str, intermediate_str;
  bool equal = false;
};
// modify_phi (optional) replaces Φ, for negative controls
Counterexample counterexample(const std::function<PointMap(PointMap)>& modify_phi = {});

// ---- rectification ----

// weights are extended additively to the rectified side; d never raises them, and below the cap
// the truncated constructions are complete
struct AlgRectification {
  AlgPtr rectified;        // g^* Ω_{g α} B_α A
  InftyAlgMorphism unit;   // N_A : A ⇝ rectified
  std::vector<int> weight, rectified_weight;
  int wcap = -1;
};
struct CoalgRectification {
  CoalgPtr rectified;       // f_* B_{α f} Ω_α D
  InftyCoalgMorphism counit;  // E_D : rectified ⇝ D
  std::vector<int> weight, rectified_weight;
  int wcap = -1;
};
AlgRectification rectify(const TwMor& a, const AlgPtr& A, int cap, const std::optional<OperadMorphism>& g = {},
                         std::vector<int> weight = {}, int wcap = -1);
CoalgRectification rectify(const TwMor& a, const CoalgPtr& D, int cap, const std::optional<CooperadMorphism>& f = {},
                           std::vector<int> weight = {});
// classification on the subcomplexes of weight <= wcap (plain classify without weights)
Classification classify(const AlgRectification& r);
Classification classify(const CoalgRectification& r);

}  // namespace operadiq
