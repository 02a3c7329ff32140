#include "doctest.h"
#include "operadiq/convolution.hpp"
#include "operadiq/fixtures.hpp"

#include <random>

using namespace operadiq;

namespace {

Sampling wide() {
  Sampling s;
  s.exhaustive_limit = 100000;
  return s;
}

// u (2), w (3), t (5) with ℓ2(u, u) = w and ℓ3(u, u, u) = t
AlgPtr small_slie(const std::shared_ptr<const CobarOperad>& om) {
  auto B = std::make_shared<GradedBasis>(1, 6);
  int u = B->add("u", 2), w = B->add("w", 3), t = B->add("t", 5);
  Basis b = B;
  return cobar_algebra(om, ChainComplex::zero(b), [u, w, t](int k, int, const std::vector<int>& xs) {
    for (int x : xs)
      if (x != u) return Vec{};
    if (k == 2) return Vec{{w, Q(1)}};
    if (k == 3) return Vec{{t, Q(1)}};
    return Vec{};
  }, "g");
}

}  // namespace

TEST_CASE("hom(V, A^2) under κ: homotopy relations through arity four") {
  auto tw = kappa_as(4);
  auto V = make_V(3, 4);
  auto A = make_An(2, 3, 4);
  auto g = convolution_algebra(tw, V, A.alg);
  CHECK(compose(g->complex().d, g->complex().d).is_zero());
  Report r = check_homotopy_relations(*g, wide());
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("SYM convolution algebra over ι: Com∨ -> SLie∞") {
  auto tw = iota_com(3);
  auto om = std::dynamic_pointer_cast<const CobarOperad>(tw.P);
  REQUIRE(om);
  auto g = small_slie(om);
  Report rg = check_homotopy_relations(*g, wide());
  CHECK_MESSAGE(rg.pass, rg.detail);
  auto D = bar_construction(tw, g, 3);
  Report rd = check_coalgebra(*D);
  CHECK_MESSAGE(rd.pass, rd.detail);
  auto h = convolution_algebra(tw, D, g);
  Sampling s;
  s.exhaustive_limit = 5000;
  s.samples = 400;
  Report r = check_homotopy_relations(*h, s);
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("M̄_α is an operad morphism and returns α") {
  auto tw = kappa_as(4);
  OperadMorphism M = morphism_from_twisting(tw);
  Report r = check_operad_morphism(M);
  CHECK_MESSAGE(r.pass, r.detail);
  TwMor back = twisting_from_morphism(M, tw.C, tw.P);
  for (int n = 2; n <= 4; ++n) CHECK(back.alpha.at(n) == tw.alpha.at(n));

  auto ti = iota_com(4);
  OperadMorphism Mi = morphism_from_twisting(ti);
  Report ri = check_operad_morphism(Mi);
  CHECK_MESSAGE(ri.pass, ri.detail);
}

TEST_CASE("MC predicates agree: bracket expansion against the ⋆_α residual") {
  auto tw = kappa_as(4);
  auto V = make_V(3, 4);
  auto A = make_An(2, 3, 4);
  auto g = convolution_algebra(tw, V, A.alg);
  std::vector<int> deg0;
  for (int e = 0; e < g->dim(); ++e)
    if (g->degree(e) == 0) deg0.push_back(e);
  REQUIRE(!deg0.empty());
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-2, 2);
  int hits = 0;
  for (int trial = 0; trial < 20; ++trial) {
    Vec phi;
    for (int e : deg0) add_to(phi, e, Q(coef(rng)));
    MCVerdict v = mc_check(tw, V, A.alg, phi);
    CHECK(v.agree);
    CHECK(v.bracket_side == v.twisting_side);
    hits += v.bracket_side;
  }
  MESSAGE("MC elements among 20 random maps: " << hits);

  // the universal twisting morphism V -> Ω_κ V is an MC element
  auto O = cobar_construction(tw, V, 4);
  Vec iota;
  for (int x = 0; x < V->dim(); ++x) iota.emplace(x * O->dim() + O->free_space->index(unit_key(x)).idx, Q(1));
  MCVerdict u = mc_check(tw, V, O, iota);
  CHECK(u.agree);
  CHECK(u.bracket_side);
  CHECK(u.twisting_side);
  Vec twice = scaled(iota, Q(2));
  MCVerdict u2 = mc_check(tw, V, O, twice);
  CHECK(u2.agree);
  CHECK_FALSE(u2.bracket_side);
}

TEST_CASE("brackets vanish for a coalgebra with trivial decomposition") {
  auto tw = kappa_as(4);
  auto B = std::make_shared<GradedBasis>(0, 3);
  B->add("e", 1);
  B->add("f", 2);
  auto D = std::make_shared<CCoalgebra>(tw.C, ChainComplex::zero(B), [](int) { return Elt{}; }, "D");
  auto A = make_An(2, 3, 4);
  auto g = convolution_algebra(tw, D, A.alg);
  for (int a = 0; a < g->dim(); ++a)
    for (int b = 0; b < g->dim(); ++b) CHECK(ell(*g, {a, b}).empty());
  LinMap dh = hom_complex(D->complex(), A.alg->complex()).d;
  for (int a = 0; a < g->dim(); ++a) CHECK(ell(*g, {a}) == dh.col(a));
}

TEST_CASE("ℓ2 on hom(V, A^2) against a two-term expansion") {
  auto tw = kappa_as(4);
  auto V = make_V(3, 4);
  auto A = make_An(2, 3, 4);
  auto g = convolution_algebra(tw, V, A.alg);
  const int na = A.alg->dim();
  const int v1 = 0, v3 = 2;
  // Δ^2(v3) = q μ2∨ ⊗ v1 v1, so ℓ2(f, g)(v3) = q (-1)^{|μ2∨|(|f|+|g|) + |v1||g|} γ(α(μ2∨) ⊗ f(v1) g(v1))
  Elt d2 = V->delta_n(v3, 2);
  REQUIRE(d2.size() == 1);
  CHECK(d2.begin()->first == Key{2, 0, v1, v1});
  const Q q = d2.begin()->second;
  const int cdeg = tw.C->degree(2, 0);
  const Vec mu = tw.alpha.at(2).col(0);
  const std::vector<std::string> labels{"x", "y", "xy", "x^2"};
  for (const auto& fa : labels)
    for (const auto& ga : labels) {
      int a = A.alg->basis().at(fa), b = A.alg->basis().at(ga);
      int ef = v1 * na + a, eg = v1 * na + b;
      long long e = static_cast<long long>(cdeg) * (g->degree(ef) + g->degree(eg)) +
                    static_cast<long long>(V->degree(v1)) * g->degree(eg);
      Vec expect;
      for (const auto& [z, c] : A.alg->gamma_vec(2, mu, {Vec{{a, Q(1)}}, Vec{{b, Q(1)}}}))
        add_to(expect, v3 * na + z, q * c * sign_of(e));
      Vec got;
      for (const auto& [x, c] : ell(*g, {ef, eg}))
        if (x / na == v3) got.emplace(x, c);
      CHECK_MESSAGE(got == expect, fa << "," << ga);
    }
}

TEST_CASE("naturality of the convolution brackets") {
  auto tw = kappa_as(4);
  auto V = make_V(3, 4);
  auto A = make_An(2, 3, 4);
  auto bar = bar_operad(make_as(4));
  TwMor pi = pi_of(bar);
  CooperadMorphism fk = f_alpha(tw, bar);
  TwMor pulled = pull_tw(fk, pi);
  for (int n = 2; n <= 4; ++n) CHECK(pulled.alpha.at(n) == tw.alpha.at(n));

  Report r1 = naturality_check(pi, fk, V, A.alg, 3);
  CHECK_MESSAGE(r1.pass, r1.detail);

  auto asinf = make_as_inf(4);
  TwMor io = iota_of(asinf);
  OperadMorphism g = cobar_morphism(asinf, tw.P, [&](int k, int) { return tw.alpha.at(k).col(0); });
  REQUIRE(check_operad_morphism(g).pass);
  Report r2 = naturality_check(io, g, V, A.alg, 3);
  CHECK_MESSAGE(r2.pass, r2.detail);

  Report r3 = naturality_check(pi, fk);
  CHECK_MESSAGE(r3.pass, r3.detail);
}

TEST_CASE("duals: C∨ is an operad, P∨ a cooperad, α∨ a twisting morphism") {
  auto tw = kappa_as(4);
  auto Pd = dual_operad(tw.C);
  Report a = check_operad_axioms(*Pd);
  CHECK_MESSAGE(a.pass, a.detail);
  auto Cd = dual_cooperad(tw.P);
  Report b = check_cooperad_axioms(*Cd);
  CHECK_MESSAGE(b.pass, b.detail);
  CHECK(check_coassociativity(Cd).pass);
  Report t = check_op_twisting(dualize_tw(tw));
  CHECK_MESSAGE(t.pass, t.detail);

  auto ti = iota_com(3);
  Report ts = check_op_twisting(dualize_tw(ti));
  CHECK_MESSAGE(ts.pass, ts.detail);
  auto bar = bar_operad(make_as(4));
  auto bd = dual_operad(bar);
  Report c = check_operad_axioms(*bd);
  CHECK_MESSAGE(c.pass, c.detail);
}

TEST_CASE("tensor variant matches the convolution algebra") {
  auto tw = kappa_as(4);
  auto V = make_V(3, 4);
  auto A = make_An(2, 3, 4);
  auto Cd = dual_algebra(V, dual_operad(tw.C));
  Report ra = check_algebra(*Cd);
  CHECK_MESSAGE(ra.pass, ra.detail);
  auto g = convolution_algebra(tw, V, A.alg);
  auto t = tensor_algebra(tw, A.alg, Cd);
  LinMap iso = hom_tensor_iso(V->complex(), A.alg->complex(), t->complex().basis);
  CHECK(compose(hom_tensor_inverse(V->complex(), A.alg->complex(), t->complex().basis), iso) ==
        identity_map(g->complex().basis));
  Report r = brackets_intertwined(*g, *t, iso, 4, wide());
  CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("tensor variant does not depend on the basis of C") {
  auto tw = kappa_as(4);
  auto bar = bar_operad(make_as(4));
  TwMor pi = pi_of(bar);
  auto V = make_V(3, 4);
  auto D = push_coalg(f_alpha(tw, bar), V);
  auto A = make_An(2, 3, 4);
  auto Cd = dual_algebra(D, dual_operad(bar));
  auto t0 = tensor_algebra(pi, A.alg, Cd);
  BasisChange ch(5);
  for (int n = 3; n <= 4; ++n) {
    const int sz = bar->size(n);
    Matrix M(sz, std::vector<Q>(sz, Q(0)));
    for (int i = 0; i < sz; ++i) {
      M[i][i] = i + 1;
      for (int j = i + 1; j < sz; ++j)
        if (bar->degree(n, i) == bar->degree(n, j)) M[i][j] = j - i;
    }
    ch[n] = M;
  }
  auto t1 = tensor_algebra(pi, A.alg, Cd, ch);
  Report r = brackets_intertwined(*t0, *t1, identity_map(t0->complex().basis), 4, wide());
  CHECK_MESSAGE(r.pass, r.detail);
  auto g = convolution_algebra(pi, D, A.alg);
  Report r2 = brackets_intertwined(*g, *t1, hom_tensor_iso(D->complex(), A.alg->complex(), t1->complex().basis), 4, wide());
  CHECK_MESSAGE(r2.pass, r2.detail);
}
