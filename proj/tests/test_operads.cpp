#include "doctest.h"
#include "operadiq/trees.hpp"

#include <random>

using namespace operadiq;

namespace {

// planar trees with all vertices of arity >= 2 and n leaves (little Schröder numbers)
long planar_count(int n) {
  std::vector<long> s(n + 1, 0);
  s[1] = 1;
  for (int m = 2; m <= n; ++m) {
    // root of arity k >= 2 whose subtrees have sizes summing to m
    std::vector<std::vector<long>> ways(m + 1, std::vector<long>(m + 1, 0));
    ways[0][0] = 1;
    for (int k = 1; k <= m; ++k)
      for (int tot = 0; tot <= m; ++tot)
        for (int last = 1; last <= tot && last < m; ++last) ways[k][tot] += ways[k - 1][tot - last] * s[last];
    for (int k = 2; k <= m; ++k) s[m] += ways[k][m];
  }
  return s[n];
}

// labelled trees, all vertices of arity >= 2: 1, 1, 4, 26, 236, 2752
long labelled_count(int n) {
  static const long t[] = {0, 1, 1, 4, 26, 236, 2752};
  return t[n];
}

}  // namespace

TEST_CASE("As and Com") {
  auto As = make_as(5);
  auto Com = make_com(4);
  CHECK(check_operad_axioms(*As).pass);
  CHECK(check_operad_axioms(*Com).pass);
  for (int n = 1; n <= 5; ++n) CHECK(As->size(n) == 1);
  Vec left = gamma(*As, 2, 0, {{2, 0}, {1, 0}});
  Vec right = gamma(*As, 2, 0, {{1, 0}, {2, 0}});
  CHECK(left == Vec{{0, Q(1)}});
  CHECK(left == right);
  CHECK(gamma(*As, 3, 0, {{1, 0}, {1, 0}, {1, 0}}) == Vec{{0, Q(1)}});
}

TEST_CASE("builtin cooperads") {
  for (auto C : {make_as_shriek(5), make_as_dual(5), make_com_dual(5)}) {
    CHECK(check_cooperad_axioms(*C).pass);
    CHECK(check_coassociativity(C).pass);
  }
  auto C = make_as_shriek(4);
  CHECK(C->degree(3, 0) == 2);
  CHECK(C->size(4) == 1);
}

TEST_CASE("full decomposition counts") {
  auto C = make_as_dual(5);
  // two-level planar trees with n leaves: compositions of n for the parts, root any arity
  // count = Σ_k C(n-1, k-1) over k, minus nothing: each composition gives exactly one term
  for (int n = 2; n <= 5; ++n) CHECK(C->full_decompose(n, 0).size() == (1u << (n - 1)));
  auto D = make_com_dual(4);
  // set partitions of {1..4}: Bell(4) = 15
  CHECK(D->full_decompose(4, 0).size() == 15u);
}

TEST_CASE("kappa is twisting, a corrupted copy is not") {
  TwMor k = kappa_as(5);
  CHECK(check_op_twisting(k).pass);
  TwMor bad = k;
  bad.alpha.comp[2] = scale(bad.alpha.comp[2], Q(0));
  CHECK(check_op_twisting(bad).pass);
  // a cooperad whose arity-3 decomposition has both signs equal breaks MC
  class Flipped : public Cooperad {
   public:
    explicit Flipped(CooperadPtr base) : Cooperad(Mode::NS, base->cap(), "flip"), base_(base) {
      for (int n = 1; n <= base->cap(); ++n) set_component(n, base->component(n));
    }
    std::vector<DecTerm> decompose(int n, int c) const override {
      auto t = base_->decompose(n, c);
      if (n == 3) t[1].coef = -t[1].coef;
      return t;
    }
    CooperadPtr base_;
  };
  TwMor f{std::make_shared<Flipped>(make_as_shriek(5)), make_as(5), k.alpha};
  Report r = check_op_twisting(f);
  CHECK(!r.pass);
  CHECK(r.arity == 3);
  CHECK(!check_coassociativity(f.C).pass);
}

TEST_CASE("SLie∞ and SAs∞") {
  auto L = make_slie_inf(5);
  for (int n = 1; n <= 5; ++n) CHECK(L->size(n) == labelled_count(n));
  for (int n = 2; n <= 5; ++n) {
    int g = L->basis(n).at("[ℓ" + std::to_string(n) + "](" + [&] {
      std::string s;
      for (int j = 1; j <= n; ++j) s += (j > 1 ? "," : "") + std::to_string(j);
      return s;
    }() + ")");
    CHECK(L->degree(n, g) == -1);
    // graded symmetric: a transposition fixes the generator
    Perm t(n);
    for (int j = 0; j < n; ++j) t[j] = j;
    std::swap(t[0], t[1]);
    Signed s = L->act(n, g, t);
    CHECK(s.sign == 1);
    CHECK(s.idx == g);
  }
  CHECK(check_operad_axioms(*make_slie_inf(4)).pass);
  CHECK(check_op_twisting(iota_of(L)).pass);

  auto A = make_sas_inf(5);
  for (int n = 2; n <= 5; ++n) CHECK(A->size(n) == planar_count(n));
  CHECK(check_operad_axioms(*A).pass);
  int m3 = A->basis(3).at("[m3](1,2,3)");
  int l = A->basis(3).at("[m2]([m2](1,2),3)");
  int r = A->basis(3).at("[m2](1,[m2](2,3))");
  Vec d = A->component(3).d.col(m3);
  // shifted convention: both generators odd, the two terms enter with the same sign
  CHECK(d.size() == 2);
  CHECK(d.at(l) == -1);
  CHECK(d.at(r) == -1);
}

TEST_CASE("A∞ from As¡") {
  auto A = make_as_inf(5);
  CHECK(check_operad_axioms(*A).pass);
  CHECK(A->degree(3, A->basis(3).at("[m3](1,2,3)")) == 1);
  CHECK(A->degree(4, A->basis(4).at("[m4](1,2,3,4)")) == 2);
  CHECK(check_op_twisting(iota_of(A)).pass);
  Vec d = A->component(3).d.col(A->basis(3).at("[m3](1,2,3)"));
  CHECK(d.at(A->basis(3).at("[m2]([m2](1,2),3)")) == -d.at(A->basis(3).at("[m2](1,[m2](2,3))")));
}

TEST_CASE("bar constructions") {
  auto B = bar_operad(make_as(5));
  for (int n = 1; n <= 5; ++n) CHECK(B->size(n) == planar_count(n));
  CHECK(check_cooperad_axioms(*B).pass);
  CHECK(check_coassociativity(B).pass);
  CHECK(check_op_twisting(pi_of(B)).pass);
  auto BC = bar_operad(make_com(4));
  CHECK(BC->size(4) == labelled_count(4));
  CHECK(check_cooperad_axioms(*BC).pass);
  CHECK(check_op_twisting(pi_of(BC)).pass);
}

TEST_CASE("f_iota is a cooperad morphism lifting iota") {
  const int cap = 4;
  TwMor io = iota_com(cap);
  auto B = bar_operad(io.P);
  CHECK(check_cooperad_axioms(*B).pass);
  CooperadMorphism f = f_alpha(io, B);
  Report r = check_cooperad_morphism(f);
  CHECK_MESSAGE(r.pass, r.detail);
  TwMor pi = pi_of(B);
  for (int n = 2; n <= cap; ++n) CHECK(compose(pi.alpha.at(n), f.f.at(n)) == io.alpha.at(n));
  TwMor k = kappa_as(5);
  auto BA = bar_operad(k.P);
  Report r2 = check_cooperad_morphism(f_alpha(k, BA));
  CHECK_MESSAGE(r2.pass, r2.detail);
}

TEST_CASE("star and bracket") {
  auto C = make_as_shriek(5);
  auto P = make_as(5);
  std::mt19937_64 g(11);
  auto rnd = [&](int deg) {
    ArityMap f = zero_arity_map(*C, *P, deg);
    for (int n = 2; n <= 5; ++n)
      if (C->degree(n, 0) + deg == 0) f.comp[n].add(0, 0, Q(static_cast<long>(g() % 7) - 3));
    return f;
  };
  ArityMap f = rnd(-1), h = rnd(-2), k = rnd(-3);
  CHECK(arity_zero(star(*C, *P, f, zero_arity_map(*C, *P, -1))));
  CHECK(bracket(*C, *P, f, f).comp == arity_add(star(*C, *P, f, f), star(*C, *P, f, f)).comp);
  // pre-Lie: (f⋆g)⋆h - f⋆(g⋆h) graded symmetric in g, h
  auto assoc = [&](const ArityMap& a, const ArityMap& b, const ArityMap& c) {
    return arity_add(star(*C, *P, star(*C, *P, a, b), c), star(*C, *P, a, star(*C, *P, b, c)), Q(-1));
  };
  ArityMap lhs = assoc(f, h, k);
  ArityMap rhs = assoc(f, k, h);
  CHECK(lhs.comp == arity_add(zero_arity_map(*C, *P, lhs.degree), rhs, Q(sign_of(h.degree * k.degree))).comp);
}

TEST_CASE("infinitesimal composite") {
  auto P = make_sas_inf(4);
  ArityMap id = identity_arity_map(*P);
  ArityMap z = zero_arity_map(*P, *P, 0);
  TwoLevel x = two_level(2, 0, {{1, 0}, {1, 0}});
  CHECK(inf_composite(id, z, x).empty());
  CHECK(inf_composite(id, id, x).size() == 1);
  CHECK(inf_composite(id, id, x).begin()->second == 2);
  // a differential applied to one slot at a time, against an explicit enumeration
  ArityMap d;
  d.degree = -1;
  d.comp.resize(5);
  for (int n = 1; n <= 4; ++n) d.comp[n] = P->component(n).d;
  int m3 = P->basis(3).at("[m3](1,2,3)");
  int m2 = P->basis(2).at("[m2](1,2)");
  TwoLevel y = two_level(2, m2, {{3, m3}, {3, m3}});
  auto got = inf_composite(id, d, y);
  Lin<TwoLevel> want;
  int s = 1;  // d passes m2 (degree -1) before the first slot
  s = -s;
  for (const auto& [t, q] : d.at(3).col(m3)) add_to(want, two_level(2, m2, {{3, t}, {3, m3}}), q * s);
  for (const auto& [t, q] : d.at(3).col(m3)) add_to(want, two_level(2, m2, {{3, m3}, {3, t}}), q);
  CHECK(got == want);
}

TEST_CASE("averaging") {
  auto L = make_slie_inf(4);
  Vec v{{3, Q(1)}};
  Vec a = average(*L, 3, v);
  CHECK(average(*L, 3, a) == a);
}

TEST_CASE("convolution operad") {
  auto H = convolution_operad(make_as_shriek(4), make_as(4));
  CHECK(check_operad_axioms(*H).pass);
  int f = H->elem(2, 0, 0);
  // (f ∘_1 f)(c3): Δ_(1)(c3) ∋ +c2 ∘_1 c2, and (-1)^{|f||c2|} = -1
  CHECK(H->compose_i(2, f, 1, 2, f) == Vec{{H->elem(3, 0, 0), Q(-1)}});
  CHECK(H->compose_i(2, f, 2, 2, f) == Vec{{H->elem(3, 0, 0), Q(1)}});
  CHECK(H->compose(1, 0, interval(1, 2), 2, f) == Vec{{f, Q(1)}});
  auto T = convolution_operad(make_trivial_cooperad(Mode::NS, 3), make_as(3));
  CHECK(T->size(1) == 1);
  CHECK(T->size(2) == 0);
  auto HS = convolution_operad(make_com_dual(4), make_slie_inf(4));
  CHECK(check_operad_axioms(*HS).pass);
}
