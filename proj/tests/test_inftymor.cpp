#include "doctest.h"
#include "operadiq/inftymor.hpp"

using namespace operadiq;

namespace {

InftyCoalgMorphism phi_on_V(int I, int cap) {
  auto tw = kappa_as(cap);
  auto V = make_V(I, cap);
  auto O = cobar_construction(tw, V, cap);
  return {tw, V, V, O, as_point_map(make_Phi(*V, *O))};
}

}  // namespace

TEST_CASE("homotopy transfer from A^2 to H^2") {
  auto A = make_An(2, 4, 4);
  auto H = make_Hn(2, 4);
  Transfer t = htt_transfer(A.alg, H.alg, make_contraction(2, *A.alg, *H.alg), 4);
  const int z = H.alg->basis().at("z");
  CHECK(transferred_product(t, z, z).empty());
  CHECK(t.m[3].empty());
  CHECK(t.m[4].empty());
  Report ra = check_algebra(*t.H);
  CHECK_MESSAGE(ra.pass, ra.detail);
  Report ri = check_infty(t.i_inf);
  CHECK_MESSAGE(ri.pass, ri.detail);
  Vec i2 = t.i_inf.psi(Key{2, 0, z, z});
  CHECK(vec_string(A.alg->basis(), i2) == "y");
}

TEST_CASE("counterexample") {
  Counterexample c = counterexample();
  MESSAGE(c.left_str);
  MESSAGE(c.right_str);
  MESSAGE(c.intermediate_str);
  CHECK(c.left_str == "-x^3");
  CHECK(c.right_then_left.empty());
  CHECK_FALSE(c.equal);
  CHECK(c.intermediate_value == c.left_then_right);
  CHECK(c.intermediate_str == "μ2⊗x⊗y - μ2⊗y⊗x - μ3⊗x⊗x⊗x");
}

TEST_CASE("Φ is an ∞_κ-morphism through v_6 and a flipped sign is detected") {
  auto Phi = phi_on_V(6, 6);
  Report r = check_infty(Phi);
  CHECK_MESSAGE(r.pass, r.detail);
  const int v3 = Phi.src->basis().at("v3");
  InftyCoalgMorphism bad = Phi;
  bad.phi = [Phi, v3](int x) {
    Vec v = Phi.phi(x);
    if (x == v3) {
      auto it = std::prev(v.end());
      it->second = -it->second;
    }
    return v;
  };
  Report rb = check_infty(bad);
  CHECK_FALSE(rb.pass);
}

TEST_CASE("strict morphisms, identities and composition") {
  auto tw = kappa_as(4);
  auto A = make_An(2, 3, 4);
  auto id = identity_infty(tw, A.alg, 4);
  BarBound b{3, A.weight, 3};
  CHECK(check_infty(id, b).pass);
  auto zero = strict_alg_morphism(tw, A.alg, A.alg, zero_map(A.alg->complex().basis, A.alg->complex().basis, 0), 4);
  CHECK(check_infty(zero, b).pass);
  CHECK(same_components(compose_infty(id, id), id, b));

  auto Phi = phi_on_V(4, 4);
  auto PP = compose_infty(Phi, Phi);
  Report r = check_infty(PP);
  CHECK_MESSAGE(r.pass, r.detail);
  auto idV = identity_infty(tw, Phi.src, 4);
  CHECK(same_components(compose_infty(Phi, idV), Phi));
  CHECK(same_components(compose_infty(idV, Phi), Phi));
  CHECK_FALSE(same_components(PP, Phi));
}

TEST_CASE("classification") {
  auto tw = kappa_as(4);
  auto A = make_An(2, 4, 4);
  auto H = make_Hn(2, 4);
  Classification ci = classify(identity_infty(tw, A.alg, 4));
  CHECK(ci.iso);
  CHECK(ci.qi);
  Transfer t = htt_transfer(A.alg, H.alg, make_contraction(2, *A.alg, *H.alg), 4);
  auto iinf = kappa_morphism(t, H.alg, A.alg);
  CHECK(check_infty(iinf).pass);
  Classification cq = classify(iinf);
  CHECK_FALSE(cq.iso);
  CHECK(cq.qi);
  auto zero = strict_alg_morphism(tw, A.alg, A.alg, zero_map(A.alg->complex().basis, A.alg->complex().basis, 0), 4);
  Classification cz = classify(zero);
  CHECK_FALSE(cz.iso);
  CHECK_FALSE(cz.qi);
  CHECK(classify(phi_on_V(4, 4)).iso);
}

TEST_CASE("inverting ∞-isomorphisms") {
  auto Phi = phi_on_V(4, 4);
  auto inv = invert_infty_iso(Phi);
  CHECK(check_infty(inv).pass);
  auto idV = identity_infty(Phi.alpha, Phi.src, 4);
  CHECK(same_components(compose_infty(Phi, inv), idV));
  CHECK(same_components(compose_infty(inv, Phi), idV));

  auto A = make_An(2, 3, 3);
  auto Phi3 = phi_on_V(3, 3);
  auto th = induce_left(Phi3, A.alg);
  std::vector<int> w;
  for (int v = 0; v < 3; ++v)
    for (int a = 0; a < A.alg->dim(); ++a) w.push_back(3 - v);
  BarBound b{3, w, 3};
  auto thi = invert_infty_iso(th, b);
  auto idh = identity_infty(th.alpha, th.src, 3);
  CHECK(same_components(compose_infty(th, thi), idh, b));
  CHECK(same_components(compose_infty(thi, th), idh, b));
}

TEST_CASE("induced ∞-morphisms of convolution algebras") {
  auto A = make_An(2, 4, 4);
  auto H = make_Hn(2, 4);
  auto Phi = phi_on_V(4, 4);
  std::vector<int> wA, wH;
  for (int v = 0; v < 4; ++v) {
    for (int a = 0; a < A.alg->dim(); ++a) wA.push_back(4 - v);
    for (int a = 0; a < H.alg->dim(); ++a) wH.push_back(4 - v);
  }
  auto th = induce_left(Phi, A.alg);
  Report rl = check_infty(th, {4, wA, 4});
  CHECK_MESSAGE(rl.pass, rl.detail);
  Transfer t = htt_transfer(A.alg, H.alg, make_contraction(2, *A.alg, *H.alg), 4);
  auto iinf = kappa_morphism(t, H.alg, A.alg);
  auto tr = induce_right(iinf, Phi.src);
  Report rr = check_infty(tr, {4, wH, 4});
  CHECK_MESSAGE(rr.pass, rr.detail);

  Report c1 = composition_law_check(Phi, Phi, A.alg, {4, wA, 4});
  CHECK_MESSAGE(c1.pass, c1.detail);
  auto idA = identity_infty(iinf.alpha, A.alg, 4);
  Report c2 = composition_law_check(idA, iinf, Phi.src, {4, wH, 4});
  CHECK_MESSAGE(c2.pass, c2.detail);
}

TEST_CASE("rectification") {
  auto tw = kappa_as(3);
  auto A = make_An(2, 3, 3);
  auto ra = rectify(tw, A.alg, 3, {}, A.weight, 3);
  Report ru = check_infty(ra.unit, {3, A.weight, 3});
  CHECK_MESSAGE(ru.pass, ru.detail);
  Classification ca = classify(ra);
  CHECK(ca.qi);
  CHECK_FALSE(ca.iso);

  auto V = make_V(3, 3);
  auto rc = rectify(tw, V, 3, {}, {1, 2, 3});
  Report re = check_infty(rc.counit);
  CHECK_MESSAGE(re.pass, re.detail);
  LinMap e1 = first_component(rc.counit);
  CHECK(rank_of(to_dense(e1)) == V->dim());
  Classification c = classify(rc);
  CHECK(c.qi);
  CHECK_FALSE(c.iso);
}

TEST_CASE("transfer over the identity contraction returns the original product") {
  auto A = make_An(2, 3, 3);
  const Basis& b = A.alg->complex().basis;
  Contraction id{identity_map(b), identity_map(b), zero_map(b, b, 1)};
  Transfer t = htt_transfer(A.alg, A.alg, id, 3);
  for (int a = 0; a < A.alg->dim(); ++a)
    for (int c = 0; c < A.alg->dim(); ++c) CHECK(transferred_product(t, a, c) == A.alg->gamma(2, 0, {a, c}));
  CHECK(t.m[3].empty());
  CHECK(check_infty(t.i_inf, {3, A.weight, 3}).pass);
}

TEST_CASE("induced morphisms in degenerate cases") {
  auto tw = kappa_as(4);
  auto A = make_An(2, 3, 4);
  auto Phi = phi_on_V(4, 4);
  std::vector<int> w;
  for (int v = 0; v < 4; ++v)
    for (int a = 0; a < A.alg->dim(); ++a) w.push_back(4 - v);
  BarBound b{4, w, 4};
  auto idV = identity_infty(tw, Phi.src, 4);
  auto th = induce_left(idV, A.alg);
  CHECK(same_components(th, identity_infty(th.alpha, th.src, 4), b));
  auto idA = identity_infty(tw, A.alg, 4);
  auto tr = induce_right(idA, Phi.src);
  CHECK(same_components(tr, identity_infty(tr.alpha, tr.src, 4), b));

  // trivial decomposition map: only the first component survives
  auto D = std::make_shared<CCoalgebra>(tw.C, Phi.src->complex(), [](int) { return Elt{}; }, "V0");
  auto iinf = kappa_morphism(htt_transfer(A.alg, make_Hn(2, 4).alg,
                                          make_contraction(2, *A.alg, *make_Hn(2, 4).alg), 4),
                             make_Hn(2, 4).alg, A.alg);
  auto t0 = induce_right(iinf, D);
  const int e = 0;
  CHECK(t0.psi(Key{2, 0, e, e}).empty());
  CHECK(t0.psi(Key{3, 0, e, e, e}).empty());
  CHECK_FALSE(t0.psi(unit_key(e)).empty());

  // multilinearity: one zero factor
  auto thP = induce_left(Phi, A.alg);
  CHECK(evaluate_on_maps(thP, {Vec{{0, Q(1)}}, Vec{}, Vec{{1, Q(1)}}}).empty());
}

TEST_CASE("strict quasi-isomorphisms induce ∞-quasi-isomorphisms") {
  auto A = make_An(2, 4, 4);
  auto H = make_Hn(2, 4);
  auto V = make_V(4, 4);
  Transfer t = htt_transfer(A.alg, H.alg, make_contraction(2, *A.alg, *H.alg), 4);
  auto iinf = kappa_morphism(t, H.alg, A.alg);
  Classification c = classify(induce_right(iinf, V));
  CHECK(c.qi);
  CHECK_FALSE(c.iso);
  auto Phi = phi_on_V(4, 4);
  CHECK(classify(induce_left(Phi, A.alg)).iso);
}

TEST_CASE("strict compositions and inverses") {
  auto tw = kappa_as(3);
  auto A = make_An(2, 3, 3);
  const Basis& b = A.alg->complex().basis;
  BarBound bb{3, A.weight, 3};
  auto neg = strict_alg_morphism(tw, A.alg, A.alg, scale(identity_map(b), Q(-1)), 3);
  Report r = check_infty(neg, bb);
  CHECK_FALSE(r.pass);  // -id is not multiplicative
  auto id = identity_infty(tw, A.alg, 3);
  CHECK(same_components(invert_infty_iso(id, bb), id, bb));
  auto Phi = phi_on_V(3, 3);
  auto idV = identity_infty(tw, Phi.src, 3);
  CHECK(same_components(invert_infty_iso(idV), idV));
}

TEST_CASE("homotopy transfer from A^3 to H^3") {
  auto A = make_An(3, 5, 4);
  auto H = make_Hn(3, 4);
  Transfer t = htt_transfer(A.alg, H.alg, make_contraction(3, *A.alg, *H.alg), 4);
  const GradedBasis& hb = H.alg->basis();
  const GradedBasis& ab = A.alg->basis();
  const int z = hb.at("z"), z2 = hb.at("z^2");
  CHECK(vec_string(hb, transferred_product(t, z, z)) == "z^2");
  CHECK(transferred_product(t, z, z2).empty());
  CHECK(transferred_product(t, z2, z).empty());
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      Vec i2 = t.i_inf.psi(Key{2, 0, a - 1, b - 1});
      if (a + b >= 3) CHECK(vec_string(ab, i2) == an_label(a + b - 3, 1));
      else CHECK(i2.empty());
    }
  Report ri = check_infty(t.i_inf, {4, H.weight, 4});
  CHECK_MESSAGE(ri.pass, ri.detail);
  CHECK(t.m[3].empty());
  CHECK(t.m[4].empty());
}
