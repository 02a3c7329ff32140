#pragma once

#include "operadiq/algcoalg.hpp"

namespace operadiq {

// An algebra with an additive weight on its basis; products and d respect the weight.
struct WeightedAlg {
  AlgPtr alg;
  std::vector<int> weight;
};

// A^n: augmentation ideal of k[x, y], |x| = 0, |y| = 1, dy = x^n, as an As-algebra,
// modulo the monomials of x-weight above wcap (wt x = 1, wt y = n)
WeightedAlg make_An(int n, int wcap, int arity_cap);
// H^n = span{z, .., z^{n-1}} with z^a z^b = z^{a+b} for a + b < n
WeightedAlg make_Hn(int n, int arity_cap);
// labels of the monomials of A^n
std::string an_label(int a, int e);

struct Contraction {
  LinMap i, p, h;
};
Contraction make_contraction(int n, const PAlgebra& A, const PAlgebra& H);
// p i = id, id - i p = d h + h d, and h i = 0, p h = 0, h h = 0
Report check_contraction(const Contraction& c, const ChainComplex& A, const ChainComplex& H);

// V = span{v_1..v_I}, |v_i| = i, as an As¡-coalgebra. Δ^2 is prescribed and the higher
// components follow from coassociativity.
CoalgPtr make_V(int I, int arity_cap);
// the printed closed forms of the weight 2 and weight 3 components of Δ_V(v_n)
Elt printed_delta_V(const CCoalgebra& V, int n, int weight);

// Φ(v_n) = Σ over compositions (i_1..i_k) of n of μ_k ⊗ v_{i_1} .. v_{i_k}, as a map V -> Ω_κ V
LinMap make_Phi(const CCoalgebra& V, const PAlgebra& omega);

// f_i ∈ hom(V, H^2): f_i(v_1) = z, f_1(v_2) = z, f_2(v_2) = f_3(v_2) = 0
Vec make_f(int i, const CCoalgebra& V, const PAlgebra& H);

}  // namespace operadiq
