#include "doctest.h"
#include "operadiq/chaincx.hpp"

#include <random>

using namespace operadiq;

namespace {

std::string mono(int a, bool y) {
  std::string s = a == 0 ? "" : (a == 1 ? "x" : "x^" + std::to_string(a));
  return y ? s + "y" : s;
}

// A^n truncated at x-degree W, window widened by one on each side
ChainComplex an_complex(int n, int W) {
  auto B = std::make_shared<GradedBasis>(-1, 2);
  for (int a = 1; a <= W; ++a) B->add(mono(a, false), 0);
  for (int a = 0; a + n <= W; ++a) B->add(mono(a, true), 1);
  LinMap d(B, B, -1);
  for (int a = 0; a + n <= W; ++a) d.add(B->at(mono(a, true)), B->at(mono(a + n, false)), 1);
  return ChainComplex(B, d);
}

ChainComplex two_term() {
  auto B = std::make_shared<GradedBasis>(-1, 2);
  B->add("e", 1);
  B->add("f", 0);
  LinMap d(B, B, -1);
  d.add(0, 1, 1);
  return ChainComplex(B, d);
}

}  // namespace

TEST_CASE("hom differential") {
  auto A = an_complex(2, 5);
  CHECK(hom_differential(A, A, identity_map(A.basis)).is_zero());
  CHECK(hom_differential(A, A, A.d).is_zero());
  // f: y -> x^2, degree -1; compare against per-element evaluation
  LinMap f(A.basis, A.basis, -1);
  f.add(A.basis->at("y"), A.basis->at("x^2"), 1);
  LinMap df = hom_differential(A, A, f);
  for (std::size_t i = 0; i < A.basis->size(); ++i) {
    Vec v{{static_cast<int>(i), Q(1)}};
    Vec want = A.d.apply(f.apply(v));
    axpy(want, Q(1), f.apply(A.d.apply(v)));  // -(-1)^{-1} = +1
    CHECK(df.col(static_cast<int>(i)) == want);
  }
  CHECK(hom_differential(A, A, df).is_zero());
}

TEST_CASE("d squared verdicts") {
  auto A = an_complex(3, 6);
  CHECK(check_d_squared(A).pass);
  CHECK(check_d_squared(ChainComplex::zero(A.basis)).pass);
  auto B = std::make_shared<GradedBasis>(0, 2);
  B->add("a", 2);
  B->add("b", 1);
  B->add("c", 0);
  LinMap d(B, B, -1);
  d.add(0, 1, 1);
  d.add(1, 2, 1);
  auto v = check_d_squared(ChainComplex(B, d));
  CHECK(!v.pass);
  CHECK(v.detail == "a");
}

TEST_CASE("dual") {
  auto c = two_term();
  auto dc = dual(c);
  CHECK(dc.basis->degree(dc.basis->at("e∨")) == -1);
  CHECK(dc.d.col(dc.basis->at("f∨")) == Vec{{dc.basis->at("e∨"), Q(-1)}});
  auto ddc = dual(dc);
  CHECK(ddc.basis->label(0) == "e");
  LinMap iso = double_dual_iso(c);
  CHECK(hom_differential(c, ddc, iso).is_zero());
  CHECK(is_quasi_iso(c, ddc, iso));
  // dual of H^2 (one generator z in degree 0, zero d)
  auto H = std::make_shared<GradedBasis>(-1, 1);
  H->add("z", 0);
  auto dH = dual(ChainComplex::zero(H));
  CHECK(dH.basis->label(0) == "z∨");
  CHECK(dH.basis->degree(0) == 0);
  CHECK(dH.d.is_zero());
}

TEST_CASE("suspension") {
  auto A = an_complex(2, 4);
  auto sA = suspend(A, 1);
  CHECK(sA.d.col(sA.basis->at("sy")) == Vec{{sA.basis->at("sx^2"), Q(-1)}});
  auto back = suspend(sA, -1);
  CHECK(*back.basis == *A.basis);
  CHECK(back.d == A.d);
}

TEST_CASE("homology of A^n") {
  for (int n : {2, 3}) {
    auto A = an_complex(n, 7);
    auto h = homology(A);
    CHECK(h.dim(0) == n - 1);
    CHECK(h.dim(1) == 0);
    CHECK(!h.dim(-1).has_value());
    CHECK(!h.dim(2).has_value());
    CHECK(h.reps.at(0).size() == static_cast<std::size_t>(n - 1));
  }
  CHECK(homology(two_term()).dim(0) == 0);
}

TEST_CASE("homology dims agree with dense rank-nullity") {
  std::mt19937_64 g(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto B = std::make_shared<GradedBasis>(-1, 3);
    for (int i = 0; i < 6; ++i) B->add("b" + std::to_string(i), i / 2);
    LinMap d(B, B, -1);
    auto r = [&](int m) { return Q(static_cast<long>(g() % (2 * m + 1)) - m); };
    // d1 = u v^T on degree 1 -> 0; d2 has columns in ker d1 = span(-v1, v0)
    Q u0 = r(2), u1 = r(2), v0 = r(2), v1 = r(2), c4 = r(2), c5 = r(2);
    d.add(2, 0, u0 * v0);
    d.add(2, 1, u1 * v0);
    d.add(3, 0, u0 * v1);
    d.add(3, 1, u1 * v1);
    d.add(4, 2, -c4 * v1);
    d.add(4, 3, c4 * v0);
    d.add(5, 2, -c5 * v1);
    d.add(5, 3, c5 * v0);
    ChainComplex C(B, d);
    REQUIRE(check_d_squared(C).pass);
    auto h = homology(C);
    Matrix M = to_dense(d);
    // restrict to the deg1 -> deg0 and deg2 -> deg1 blocks
    Matrix d1{{M[0][2], M[0][3]}, {M[1][2], M[1][3]}};
    Matrix d2{{M[2][4], M[2][5]}, {M[3][4], M[3][5]}};
    int r1 = rank_of(d1), r2 = rank_of(d2);
    CHECK(h.dim(1) == 2 - r1 - r2);
    CHECK(bareiss_rank(d1) == r1);
  }
}

TEST_CASE("tensor complex") {
  auto A = an_complex(2, 4);
  auto U = unit_complex();
  auto AU = tensor_complex({A, U});
  CHECK(AU.basis->size() == A.basis->size());
  auto AA = tensor_complex({A, A});
  CHECK(check_d_squared(AA).pass);
  auto h = homology(AA);
  // Kunneth: H^2 ⊗ H^2 is one-dimensional in degree 0
  CHECK(h.dim(0) == 1);
  CHECK(h.dim(1) == 0);
}
