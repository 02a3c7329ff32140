#pragma once

#include "operadiq/inftymor.hpp"

namespace operadiq {

// span of vectors in reduced row echelon form; rows keyed by their pivot (lowest index)
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(const std::vector<Vec>& gens);
  static Subspace of_basis(const std::vector<int>& idx);

  // false if v already lies in the span
  bool insert(Vec v);
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return reduce(v).empty(); }
  bool within(const Subspace& o) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  bool empty() const { return rows_.empty(); }
  std::vector<Vec> basis() const;
  bool operator==(const Subspace& o) const { return rows_ == o.rows_; }

 private:
  std::map<int, Vec> rows_;
};

enum class Completeness { Terminating, Declared };
enum class Tri { Pass, Fail, Unknown };
const char* tri_name(Tri t);

// g = F_1 ⊇ F_2 ⊇ ..; levels[k-1] = F_k, levels past the end repeat the last one
struct FilteredLinf {
  AlgPtr g;
  std::vector<Subspace> levels;
  Completeness mode = Completeness::Declared;

  const Subspace& level(int k) const;
  int length() const { return static_cast<int>(levels.size()); }
};

// largest n with v ∈ F_n (v ≠ 0); a basis adapted to the flag with the level of each vector
std::vector<std::pair<Vec, int>> adapted_basis(const FilteredLinf& f);

FilteredLinf canonical_filtration(const AlgPtr& g, int max_levels = 32);
Report check_filtered(const FilteredLinf& f, const Sampling& s = {});

struct NilpotencyReport {
  bool pass = true;
  std::map<int, int> index;  // degree -> least k with (F_k)_d = 0
  std::string detail;
};
NilpotencyReport check_degreewise_nilpotent(const FilteredLinf& f, int dlo, int dhi);

// g/F as an algebra over the same operad, with the projection
struct Quotient {
  AlgPtr alg;
  LinMap projection;
};
Quotient quotient_algebra(const AlgPtr& A, const Subspace& ideal);

// ---- Sullivan forms ----

// t_1^{e_1}..t_n^{e_n} dt_{i_1}..dt_{i_k} (i_1 < .. < i_k as a bit set); t_0 and dt_0 are eliminated
struct Monomial {
  std::vector<int> t;
  unsigned dt = 0;
  auto operator<=>(const Monomial&) const = default;
};
using Form = Lin<Monomial>;

class SullivanForms {
 public:
  SullivanForms(int n, int poly_cap = 4);
  int n() const { return n_; }
  int poly_cap() const { return P_; }

  Form one() const;
  Form t(int i) const;   // 0 <= i <= n
  Form dt(int i) const;
  Form mul(const Form& a, const Form& b) const;
  Form d(const Form& a) const;
  static int degree(const Monomial& m);
  static int poly_degree(const Monomial& m);
  std::string label(const Monomial& m) const;
  std::string str(const Form& f) const;

  // monomials of polynomial degree <= poly_cap
  const std::vector<Monomial>& basis() const { return basis_; }
  // pullback along the coface δ^i : Δ^{n-1} -> Δ^n, and along the codegeneracy σ^i : Δ^{n+1} -> Δ^n
  Form face(int i, const Form& a) const;
  Form degeneracy(int i, const Form& a) const;
  // the quotient by the ideal of polynomial degree > cap
  Form truncate(const Form& a) const;

 private:
  Form apply_morphism(const std::vector<Form>& timg, const SullivanForms& tgt, const Form& a) const;
  int n_, P_;
  std::vector<Monomial> basis_;
};

// g ⊗ Ω_n (Ω_n truncated at its polynomial cap) with ℓ_k(x_1⊗a_1, ..) = ± ℓ_k(x_1, ..) ⊗ a_1..a_k
AlgPtr tensor_extend(const AlgPtr& g, const SullivanForms& om);

// elements of g ⊗ Ω_n: monomial -> coefficient vector in g
using GForm = std::map<Monomial, Vec>;
std::string gform_string(const GradedBasis& g, const SullivanForms& om, const GForm& x);

struct MCSimplexVerdict {
  Tri verdict = Tri::Pass;
  std::string witness;
  std::vector<Tri> faces;  // one per supplied boundary simplex
};
// Maurer–Cartan equation in g/F_r g ⊗ Ω_n; boundary (optional) holds the expected faces d_0..d_n
MCSimplexVerdict mc_simplex_check(const FilteredLinf& f, const SullivanForms& om, const GForm& x, int r,
                                  const std::vector<GForm>& boundary = {});

// ---- filtrations of convolution algebras ----

// F_1 A = A ⊇ F_2 A ⊇ ..: d and every operation respect the filtration
Report check_filtered_algebra(const PAlgebra& A, const std::vector<Subspace>& F, const Sampling& s = {});
// F_n hom^α(D, A) = hom^α(D, F_n A); refuses an invalid algebra filtration
FilteredLinf convolution_filtration(const TwMor& a, const CoalgPtr& D, const AlgPtr& A, const std::vector<Subspace>& FA,
                                    Completeness mode = Completeness::Terminating);
// θ_k(F_{n_1}, .., F_{n_k}) ⊆ F_{n_1 + .. + n_k} within the arity cap of θ
Report filtered_check_induced(const InftyLinfMorphism& m, const FilteredLinf& src, const FilteredLinf& tgt,
                              const Sampling& s = {});

// g ⊗̂ C∨ ≅ hom^ι(C, g) level by level: for every r up to the termination of the filtration,
// (g/F_r) ⊗ C∨ and hom^ι(C, g/F_r) have intertwined brackets. Declared filtrations are refused.
struct LevelReport {
  int level;
  Report report;
};
std::vector<LevelReport> isom_hom_tensor(const TwMor& iota, const CoalgPtr& C, const FilteredLinf& g, int nmax,
                                         const Sampling& s = {});

}  // namespace operadiq
