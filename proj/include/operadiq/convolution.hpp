#pragma once

#include "operadiq/algcoalg.hpp"

namespace operadiq {

// F = E_1 ⊗ .. ⊗ E_n on elementary maps E_{y,a} applied to terms c ⊗ y_1..y_n attached to rows x:
// Σ_σ (-1)^θ eval(n, c, a_σ(1)..a_σ(n)) placed at E_{x,-}, θ = |c||F| + σ(F) + Σ_i |y_i| Σ_{j>i} |E_σ(j)|
class HomEval {
 public:
  using Terms = std::function<Elt(int x)>;
  using Eval = std::function<Vec(int n, int c, const std::vector<int>& as)>;
  HomEval(Mode mode, Terms terms, int rows, Basis ys, Basis ain, std::function<int(int, int)> cdeg);
  Vec act(int n, const Eval& eval, const std::vector<int>& Es, int na_out) const;

 private:
  struct Term {
    int x, c;
    Q q;
  };
  Mode mode_;
  Basis ys_, ain_;
  int na_ = 0;
  std::function<int(int, int)> cdeg_;
  std::vector<std::map<std::vector<int>, std::vector<Term>>> by_n_;
};

// hom(D, A) as an algebra over the convolution operad hom(C, P)
AlgPtr hom_algebra(const CoalgPtr& D, const AlgPtr& A);

// M̄_α: SLie∞ (SYM) or SAs∞ (NS) -> hom(C, P), the generator in arity n goes to α(n)
OperadMorphism morphism_from_twisting(const TwMor& a);
// reads α(n) back off the images of the generators
TwMor twisting_from_morphism(const OperadMorphism& M, const CooperadPtr& C, const OperadPtr& P);

// the homotopy algebra hom^α(D, A); brackets ℓ_n = γ_A (α ⊗ F) Δ^n_D
AlgPtr convolution_algebra(const TwMor& a, const CoalgPtr& D, const AlgPtr& A);
std::shared_ptr<const CobarOperad> homotopy_operad(Mode mode, int cap);

// the generator relations of a homotopy algebra (d applied to ℓ_n) and graded symmetry
Report check_homotopy_relations(const PAlgebra& g, const Sampling& s = {});

// 1/n! in SYM mode, 1 in NS mode
Q mc_coefficient(Mode mode, int n);
// dx + Σ_{2<=n<=nmax} c_n ℓ_n(x, .., x)
Vec mc_curvature(const PAlgebra& g, const Vec& x, int nmax);

struct MCVerdict {
  bool bracket_side = false;
  bool twisting_side = false;
  bool agree = false;
  Vec residual;  // the bracket-side residual in hom(D, A)
};
// φ ∈ hom(D, A) of degree 0 on the basis E_{v,a}
MCVerdict mc_check(const TwMor& a, const CoalgPtr& D, const AlgPtr& A, const Vec& phi);
PointMap point_map_of(const Vec& phi, int dimA);
Vec hom_vec_of(const PointMap& f, int dimD, int dimA);

// brackets of hom^{f^*α}(D, A) against hom^α(f_*D, A) on every tuple up to the sampling limit
Report naturality_check(const TwMor& a, const CooperadMorphism& f, const CoalgPtr& D, const AlgPtr& A, int nmax,
                        const Sampling& s = {});
// brackets of hom^{g_*α}(D, A) against hom^α(D, g^*A)
Report naturality_check(const TwMor& a, const OperadMorphism& g, const CoalgPtr& D, const AlgPtr& A, int nmax,
                        const Sampling& s = {});
// M̄_{f^*α} = f^* M̄_α as operad morphisms
Report naturality_check(const TwMor& a, const CooperadMorphism& f);

// ---- duality and the tensor variant ----

OperadPtr dual_operad(const CooperadPtr& C);
CooperadPtr dual_cooperad(const OperadPtr& P);
TwMor dualize_tw(const TwMor& a);
// D∨ as an algebra over C∨ for a finite-dimensional coalgebra D
AlgPtr dual_algebra(const CoalgPtr& D, const OperadPtr& Cdual);

// change of basis of C(n): new basis vector i is Σ_j M[i][j] c_j (degree preserving, invertible)
using BasisChange = std::vector<Matrix>;  // index = arity, empty = canonical basis

// A ⊗ Cd with ℓ_n(a_1⊗x_1, ..) = Σ_i (-1)^ε γ_A(α(c_i) ⊗ a..) ⊗ γ_Cd(c_i∨ ⊗ x..)
AlgPtr tensor_algebra(const TwMor& a, const AlgPtr& A, const AlgPtr& Cd, const BasisChange& change = {});
// hom(D, A) -> A ⊗ D∨ on elementary maps, E_{v,a} ↦ (-1)^{s(v,a)} a ⊗ v∨
LinMap hom_tensor_iso(const ChainComplex& D, const ChainComplex& A, const Basis& tensor_basis);
LinMap hom_tensor_inverse(const ChainComplex& D, const ChainComplex& A, const Basis& tensor_basis);
// compares ℓ_n on every tuple (or samples) under a linear map between the two algebras
Report brackets_intertwined(const PAlgebra& g, const PAlgebra& h, const LinMap& f, int nmax, const Sampling& s = {});

}  // namespace operadiq
