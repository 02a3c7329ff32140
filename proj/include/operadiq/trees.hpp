#pragma once

#include "operadiq/operads.hpp"

namespace operadiq {

// ch[j] >= 0 is a node index, ch[j] < 0 is the leaf labelled -ch[j]
struct TreeNode {
  int k = 0;
  int dec = 0;
  std::vector<int> ch;
};

struct Tree {
  std::vector<TreeNode> nodes;  // tensor order of the vertex decorations
  int root = 0;
};

// Rooted trees with vertices of arity >= 2 decorated by a graded collection E, leaves
// labelled 1..n. Canonical form: children ordered by minimal leaf (SYM) and vertices
// listed in pre-order. Changing the vertex order costs the Koszul sign of the degrees.
class TreeSpace {
 public:
  using Act = std::function<Signed(int k, int e, const Perm& rho)>;
  TreeSpace(Mode mode, int cap, std::vector<Basis> gens, Act act);

  Mode mode() const { return mode_; }
  int cap() const { return cap_; }
  const Basis& basis(int n) const { return bases_.at(n); }
  const Tree& tree(int n, int idx) const { return trees_.at(n).at(idx); }
  const GradedBasis& gens(int k) const { return *gens_.at(k); }

  int degree(const Tree& t) const;
  std::string label(const Tree& t) const;
  int arity(const Tree& t) const;
  // the canonical representative of t with the sign relating them
  Signed canonical(Tree t) const;
  Signed graft(int m, int t1, const std::vector<int>& S, int k, int t2) const;
  Signed relabel(int n, int t, const Perm& rho) const;
  int corolla(int k, int e) const;
  // leaf set below each node
  std::vector<std::vector<int>> leaf_sets(const Tree& t) const;

 private:
  void enumerate(const std::vector<int>& labels, std::vector<Tree>& out) const;

  Mode mode_;
  int cap_;
  std::vector<Basis> gens_;
  Act act_;
  std::vector<Basis> bases_;
  std::vector<std::vector<Tree>> trees_;
};

using GenNamer = std::function<std::string(int k, const std::string& label)>;

class CobarOperad : public Operad {
 public:
  CobarOperad(CooperadPtr C, std::string name, GenNamer namer = {});
  Vec compose(int m, int a, const std::vector<int>& S, int k, int b) const override;
  Signed act(int n, int i, const Perm& rho) const override;
  const TreeSpace& trees() const { return *ts_; }
  const CooperadPtr& source() const { return C_; }

 private:
  CooperadPtr C_;
  std::unique_ptr<TreeSpace> ts_;
};

class BarCooperad : public Cooperad {
 public:
  explicit BarCooperad(OperadPtr P);
  std::vector<DecTerm> decompose(int n, int c) const override;
  Signed act(int n, int i, const Perm& rho) const override;
  const TreeSpace& trees() const { return *ts_; }
  const OperadPtr& source() const { return P_; }

 private:
  OperadPtr P_;
  std::unique_ptr<TreeSpace> ts_;
  std::vector<std::vector<std::vector<DecTerm>>> dec_;
};

std::shared_ptr<const CobarOperad> cobar_operad(CooperadPtr C, std::string name = "", GenNamer namer = {});
std::shared_ptr<const BarCooperad> bar_operad(OperadPtr P);

// ι: C -> ΩC and π: B̄P -> P
TwMor iota_of(const std::shared_ptr<const CobarOperad>& omega);
TwMor pi_of(const std::shared_ptr<const BarCooperad>& bar);
// the cooperad morphism C -> B̄P determined by α (π ∘ f_α = α)
CooperadMorphism f_alpha(const TwMor& a, const std::shared_ptr<const BarCooperad>& bar);

std::shared_ptr<const CobarOperad> make_slie_inf(int cap);
std::shared_ptr<const CobarOperad> make_sas_inf(int cap);
std::shared_ptr<const CobarOperad> make_as_inf(int cap);  // Ω As¡, generators of degree n-2
TwMor iota_com(int cap);

// d^2 = 0 on the cobar construction, the working test for coassociativity of Δ_(1)
Report check_coassociativity(const CooperadPtr& C);

}  // namespace operadiq
