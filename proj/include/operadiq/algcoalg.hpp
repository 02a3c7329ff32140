#pragma once

#include "operadiq/trees.hpp"

namespace operadiq {

// {n, c, x_1, ..., x_n}: c a basis element of X(n), x_j basis indices of a complex
using Key = std::vector<int>;
using Elt = Lin<Key>;

// Canonical representative of c ⊗ y_1..y_n in X(n) ⊗_{S_n} V^{⊗n}. Items are compared by
// value and carry the given degrees. Returns the sign relating the two, 0 if the class vanishes.
int canon_coinv(const Collection& X, int n, int& c, std::vector<int>& items, std::vector<int>& degs);

// the same on a key {n, c, x..} in place
int canon_key(const Collection& C, const GradedBasis& D, Key& k);
Elt canonical_elt(const Collection& C, const GradedBasis& D, const Elt& e);

// ⊕_{1<=n<=wcap} X(n) ⊗_{S_n} V^{⊗n}, optionally bounded by an additive weight on V
class SchurSpace {
 public:
  SchurSpace(std::shared_ptr<const Collection> X, ChainComplex V, int wcap, std::vector<int> vweight = {},
             int vcap = -1);

  const Collection& coll() const { return *X_; }
  const std::shared_ptr<const Collection>& coll_ptr() const { return X_; }
  const ChainComplex& base() const { return V_; }
  const Basis& basis() const { return basis_; }
  int size() const { return static_cast<int>(keys_.size()); }
  const Key& key(int i) const { return keys_.at(i); }
  int arity(int i) const { return keys_.at(i)[0]; }
  int wcap() const { return wcap_; }
  int vweight(int v) const { return vweight_.empty() ? 0 : vweight_.at(v); }
  bool in_caps(const Key& k) const;
  int degree_of(const Key& k) const;
  // sign and index of the canonical form; sign 0 if the class vanishes or leaves the caps
  Signed index(const Key& k) const;
  std::string key_label(const Key& k) const;
  // d_X ∘ 1 + 1 ∘' d_V on one key
  Elt d1(const Key& k) const;
  Vec to_vec(const Elt& e) const;
  Elt from_vec(const Vec& v) const;

 private:
  std::shared_ptr<const Collection> X_;
  ChainComplex V_;
  int wcap_, vcap_;
  std::vector<int> vweight_;
  std::vector<Key> keys_;
  std::map<Key, int> index_;
  Basis basis_;
};

using SchurPtr = std::shared_ptr<const SchurSpace>;

class PAlgebra {
 public:
  using Gamma = std::function<Vec(int n, int p, const std::vector<int>& xs)>;
  PAlgebra(OperadPtr P, ChainComplex A, Gamma g, std::string name = "");

  const Operad& op() const { return *P_; }
  const OperadPtr& op_ptr() const { return P_; }
  const ChainComplex& complex() const { return A_; }
  const GradedBasis& basis() const { return *A_.basis; }
  int dim() const { return static_cast<int>(A_.basis->size()); }
  int degree(int x) const { return A_.basis->degree(x); }
  const std::string& name() const { return name_; }

  Vec gamma(int n, int p, const std::vector<int>& xs) const;
  Vec gamma_vec(int n, const Vec& p, const std::vector<Vec>& xs) const;
  Vec d(const Vec& v) const { return A_.d.apply(v); }

  SchurPtr free_space;    // set on free algebras
  int exact_weight = 0;   // free algebras: d is exact on weights up to this bound

 private:
  OperadPtr P_;
  ChainComplex A_;
  Gamma g_;
  std::string name_;
  mutable std::map<Key, Vec> cache_;
};

using AlgPtr = std::shared_ptr<const PAlgebra>;

class CCoalgebra {
 public:
  // Σ_{n>=2} c ⊗ y_1..y_n in canonical keys; the term id ⊗ x is implicit
  using Delta = std::function<Elt(int x)>;
  CCoalgebra(CooperadPtr C, ChainComplex D, Delta delta, std::string name = "");

  const Cooperad& coop() const { return *C_; }
  const CooperadPtr& coop_ptr() const { return C_; }
  const ChainComplex& complex() const { return D_; }
  const GradedBasis& basis() const { return *D_.basis; }
  int dim() const { return static_cast<int>(D_.basis->size()); }
  int degree(int x) const { return D_.basis->degree(x); }
  const std::string& name() const { return name_; }

  const Elt& delta(int x) const;
  Elt delta_n(int x, int n) const;
  int bound(int x) const;

  SchurPtr cofree_space;  // set on cofree coalgebras

 private:
  CooperadPtr C_;
  ChainComplex D_;
  Delta delta_;
  std::string name_;
  mutable std::vector<std::optional<Elt>> cache_;
};

using CoalgPtr = std::shared_ptr<const CCoalgebra>;

// How many tuples an exhaustive check may visit before switching to seeded samples.
struct Sampling {
  long long exhaustive_limit = 20000;
  int samples = 200;
  unsigned long long seed = 1;
};

Report check_algebra(const PAlgebra& A, const Sampling& s = {});
Report check_coalgebra(const CCoalgebra& D);

// (id ⊗ x_1..) key used for the cogenerator / generator component
inline Key unit_key(int x) { return Key{1, 0, x}; }

// ---- bar and cobar relative to a twisting morphism ----

CoalgPtr bar_construction(const TwMor& a, const AlgPtr& A, int wcap, std::vector<int> vweight = {}, int vcap = -1);
AlgPtr cobar_construction(const TwMor& a, const CoalgPtr& D, int wcap);

// ---- relative twisting morphisms ----

using PointMap = std::function<Vec(int x)>;

PointMap as_point_map(const LinMap& f);
// ⋆_α(φ)(x) = γ_A(α ∘ φ) Δ_D(x) for φ of degree 0
Vec star_alpha(const TwMor& a, const CCoalgebra& D, const PAlgebra& A, const PointMap& phi, int x);
// ∂φ + ⋆_α(φ) at x
Vec rel_residual(const TwMor& a, const CCoalgebra& D, const PAlgebra& A, const PointMap& phi, int x);
Report check_rel_twisting(const TwMor& a, const CCoalgebra& D, const PAlgebra& A, const PointMap& phi);

// ---- Rosetta ----

// φ ∈ Tw_α(D, A) to the algebra map Ω_αD -> A on the free basis and the coalgebra map D -> B_αA
LinMap alg_map_of(const PAlgebra& omega, const PAlgebra& A, const PointMap& phi);
LinMap coalg_map_of(const CCoalgebra& D, const CCoalgebra& bar, const PointMap& phi);
Report check_alg_morphism(const PAlgebra& src, const PAlgebra& tgt, const LinMap& F);
Report check_coalg_morphism(const CCoalgebra& src, const CCoalgebra& tgt, const LinMap& G);
// inverse directions; refuse inputs lacking their defining property
LinMap twisting_of_alg_map(const PAlgebra& omega, const PAlgebra& A, const LinMap& F);
LinMap twisting_of_coalg_map(const CCoalgebra& D, const CCoalgebra& bar, const LinMap& G);

struct Rosetta {
  LinMap twisting;  // D -> A
  LinMap alg_map;   // Ω_αD -> A
  LinMap coalg_map; // D -> B_αA
  Report report;
};
enum class RosettaFrom { Twisting, AlgMap, CoalgMap };
Rosetta rosetta_convert(const TwMor& a, const CoalgPtr& D, const AlgPtr& A, int wcap, RosettaFrom from,
                        const LinMap& input);

// ---- change of (co)operad ----

CoalgPtr push_coalg(const CooperadMorphism& f, const CoalgPtr& D);
AlgPtr pull_alg(const OperadMorphism& g, const AlgPtr& A);

// ---- algebras over cobar operads ----

using GenAction = std::function<Vec(int k, int e, const std::vector<int>& xs)>;
// the algebra over ΩC determined by the actions of the generators s^{-1}e, e ∈ C(k)
AlgPtr cobar_algebra(const std::shared_ptr<const CobarOperad>& om, ChainComplex A, GenAction act, std::string name = "");
// the operad morphism ΩC -> Q determined by the images of the generators
OperadMorphism cobar_morphism(const std::shared_ptr<const CobarOperad>& om, const OperadPtr& Q,
                              const std::function<Vec(int k, int e)>& gen);
// T = A' ∘_S B with B the subtree at the last vertex child of the root (sign · canonical forms)
struct Peel {
  int sign, m, a;
  std::vector<int> S;
  int k, b;
};
std::optional<Peel> peel_tree(const TreeSpace& ts, int n, int idx);

// bracket of a homotopy algebra: the corolla with the single generator in arity n
Vec ell(const PAlgebra& g, const std::vector<int>& xs);
Vec ell_vec(const PAlgebra& g, const std::vector<Vec>& xs);

// utilities shared by the modules built on top
std::vector<int> degrees_of(const GradedBasis& b, const std::vector<int>& xs);
int sum_degrees(const GradedBasis& b, const std::vector<int>& xs, int from, int to);
std::string vec_string(const GradedBasis& b, const Vec& v);

}  // namespace operadiq
