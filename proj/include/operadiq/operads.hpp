#pragma once

#include "operadiq/chaincx.hpp"

#include <functional>

namespace operadiq {

enum class Mode { NS, SYM };

inline const char* mode_name(Mode m) { return m == Mode::NS ? "NS" : "SYM"; }

// A basis element times a sign; sign 0 means the element vanishes.
struct Signed {
  int sign = 1;
  int idx = 0;
};

// Leaf j of the composite a∘_S b: b's leaves take the labels S (increasing), a's leaf
// sitting at min S receives b, a's remaining leaves take the complement in order.
std::vector<int> outer_labels(int n, const std::vector<int>& S);
std::vector<int> interval(int i, int k);
bool is_interval(const std::vector<int>& S);

// Shared by operads and cooperads: arity-wise chain complexes with a monomial S_n action.
class Collection {
 public:
  virtual ~Collection() = default;
  Mode mode() const { return mode_; }
  int cap() const { return cap_; }
  const std::string& name() const { return name_; }

  const ChainComplex& component(int n) const;
  const GradedBasis& basis(int n) const { return *component(n).basis; }
  int size(int n) const { return static_cast<int>(basis(n).size()); }
  int degree(int n, int i) const { return basis(n).degree(i); }
  const std::string& label(int n, int i) const { return basis(n).label(i); }

  // relabel leaf j -> rho[j] (0-based); identity in NS mode
  virtual Signed act(int n, int i, const Perm& rho) const;
  LinMap action_map(int n, const Perm& rho) const;

 protected:
  Collection(Mode mode, int cap, std::string name);
  void set_component(int n, ChainComplex c);

  Mode mode_;
  int cap_;
  std::string name_;
  std::vector<ChainComplex> comps_;  // index = arity
};

class Operad : public Collection {
 public:
  // a ∈ P(m), b ∈ P(k), S ⊂ {1..m+k-1}; in NS mode S must be an interval
  virtual Vec compose(int m, int a, const std::vector<int>& S, int k, int b) const = 0;
  Vec compose_i(int m, int a, int i, int k, int b) const { return compose(m, a, interval(i, k), k, b); }
  Vec compose_vec(int m, const Vec& a, const std::vector<int>& S, int k, const Vec& b) const;
  LinMap partial_map(int m, int i, int k) const;

 protected:
  using Collection::Collection;
};

struct DecTerm {
  Q coef;
  int m, a;
  std::vector<int> S;
  int k, b;
};

struct FullDec {
  Q coef;
  int root;                              // in C(blocks.size())
  std::vector<std::vector<int>> blocks;  // ordered by min; 1-based leaf labels
  std::vector<int> parts;                // part j lives in C(|blocks[j]|); arity 1 part is id
};

class Cooperad : public Collection {
 public:
  // reduced infinitesimal decomposition: both pieces of arity >= 2
  virtual std::vector<DecTerm> decompose(int n, int c) const = 0;
  // two-level decompositions including the trivial ones, derived from decompose
  const std::vector<FullDec>& full_decompose(int n, int c) const;
  int weight_bound(int n, int) const { return n - 1; }

 protected:
  using Collection::Collection;

 private:
  mutable std::map<std::pair<int, int>, std::vector<FullDec>> full_cache_;
};

using OperadPtr = std::shared_ptr<const Operad>;
using CooperadPtr = std::shared_ptr<const Cooperad>;

// ---- operad operations ----

// γ(μ; ν_1..ν_k) assembled left to right from partial compositions
struct Arg {
  int n;
  int idx;
};
Vec gamma(const Operad& P, int k, int mu, const std::vector<Arg>& nus);

// two-level element μ ⊗ ν_1 ⊗ … ⊗ ν_k, keyed by (k, μ, n_1, ν_1, …)
using TwoLevel = std::vector<int>;
TwoLevel two_level(int k, int mu, const std::vector<Arg>& nus);
// f on the base, g on exactly one slot; f and g are arity-wise maps of the given degrees
struct ArityMap {
  int degree = 0;
  std::vector<LinMap> comp;  // index = arity, entry 0 unused
  const LinMap& at(int n) const { return comp.at(n); }
};
Lin<TwoLevel> inf_composite(const ArityMap& f, const ArityMap& g, const TwoLevel& x);

ArityMap zero_arity_map(const Collection& src, const Collection& tgt, int degree);
ArityMap identity_arity_map(const Collection& c);

struct Report {
  bool pass = true;
  int arity = 0;
  std::string detail;
  int cap = 0;
};

Report check_operad_axioms(const Operad& P);
Report check_cooperad_axioms(const Cooperad& C);

// ---- builtins ----

OperadPtr make_as(int cap);
OperadPtr make_com(int cap);
OperadPtr make_trivial_operad(Mode mode, int cap);
CooperadPtr make_as_shriek(int cap);
CooperadPtr make_as_dual(int cap);
CooperadPtr make_com_dual(int cap);
CooperadPtr make_trivial_cooperad(Mode mode, int cap);

// ---- twisting morphisms ----

struct TwMor {
  CooperadPtr C;
  OperadPtr P;
  ArityMap alpha;  // degree -1
};

ArityMap star(const Cooperad& C, const Operad& P, const ArityMap& f, const ArityMap& g);
ArityMap bracket(const Cooperad& C, const Operad& P, const ArityMap& f, const ArityMap& g);
ArityMap arity_add(const ArityMap& f, const ArityMap& g, const Q& c = 1);
bool arity_zero(const ArityMap& f);
ArityMap conv_differential(const Cooperad& C, const Operad& P, const ArityMap& f);
Report check_op_twisting(const TwMor& a);
Report check_equivariant(const Collection& src, const Collection& tgt, const ArityMap& f);

TwMor kappa_as(int cap);

// ---- morphisms ----

struct OperadMorphism {
  OperadPtr src, tgt;
  ArityMap f;  // degree 0
};
struct CooperadMorphism {
  CooperadPtr src, tgt;
  ArityMap f;
};
Report check_operad_morphism(const OperadMorphism& g);
Report check_cooperad_morphism(const CooperadMorphism& f);
TwMor push_tw(const OperadMorphism& g, const TwMor& a);
TwMor pull_tw(const CooperadMorphism& f, const TwMor& a);

// ---- convolution operad ----

// hom(C(n), P(n)) on elementary maps E_{c,p}: c -> p, composition
// (f ∘_S g)(x) = Σ (-1)^{|g||a|} f(a) ∘_S g(b) over the terms a ∘_S b of Δ_(1)(x)
class ConvolutionOperad : public Operad {
 public:
  ConvolutionOperad(CooperadPtr C, OperadPtr P);
  Vec compose(int m, int a, const std::vector<int>& S, int k, int b) const override;
  Signed act(int n, int i, const Perm& rho) const override;
  int elem(int n, int c, int p) const { return c * P_->size(n) + p; }
  std::pair<int, int> split(int n, int i) const { return {i / P_->size(n), i % P_->size(n)}; }
  const CooperadPtr& coop() const { return C_; }
  const OperadPtr& op() const { return P_; }
  // the arity-wise map encoded by an element of hom(C(n), P(n))
  LinMap as_map(int n, const Vec& v) const;
  Vec from_map(int n, const LinMap& f) const;

 private:
  using Key = std::tuple<int, int, std::vector<int>, int, int>;
  CooperadPtr C_;
  OperadPtr P_;
  std::vector<std::map<Key, std::vector<std::pair<int, Q>>>> terms_;  // per arity
};

std::shared_ptr<const ConvolutionOperad> convolution_operad(CooperadPtr C, OperadPtr P);

// ---- averaging ----

// orbit average of v ∈ P(n) and the projection back; two-sided inverse on coinvariants
Vec average(const Collection& c, int n, const Vec& v);

}  // namespace operadiq
