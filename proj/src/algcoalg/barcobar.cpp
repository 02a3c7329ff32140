#include "operadiq/algcoalg.hpp"

#include <algorithm>

namespace operadiq {

namespace {

std::vector<Vec> units(const std::vector<int>& xs) {
  std::vector<Vec> v;
  for (int x : xs) v.push_back(Vec{{x, Q(1)}});
  return v;
}

// d_2 of the bar construction on one key: the coderivation extending γ_A(α ∘ 1)
Elt bar_d2(const TwMor& a, const PAlgebra& A, const Key& key) {
  Elt out;
  const int n = key[0], c = key[1];
  if (n < 2) return out;
  const Cooperad& C = *a.C;
  const GradedBasis& B = A.basis();
  std::vector<int> xs(key.begin() + 2, key.end());
  for (const auto& [z, q] : A.gamma_vec(n, a.alpha.at(n).col(c), units(xs))) add_to(out, Key{1, 0, z}, q);
  for (const auto& t : C.decompose(n, c)) {
    auto outer = outer_labels(n, t.S);
    // (a, b, x_1..x_n) -> (a, x_before, b, x_S, x_after)
    std::vector<int> degs{C.degree(t.m, t.a), C.degree(t.k, t.b)};
    for (int x : xs) degs.push_back(B.degree(x));
    std::vector<int> order{0};
    long long before = 0;
    bool seen = false;
    for (int l : outer) {
      if (l == t.S.front()) {
        order.push_back(1);
        for (int s : t.S) order.push_back(s + 1);
        seen = true;
      } else {
        order.push_back(l + 1);
        if (!seen) before += B.degree(xs[l - 1]);
      }
    }
    int sign = koszul_sign(degs, order) * sign_of(C.degree(t.m, t.a) + before);
    std::vector<int> inner;
    for (int s : t.S) inner.push_back(xs[s - 1]);
    Vec w = A.gamma_vec(t.k, a.alpha.at(t.k).col(t.b), units(inner));
    for (const auto& [z, qz] : w) {
      Key kk{t.m, t.a};
      for (int l : outer) kk.push_back(l == t.S.front() ? z : xs[l - 1]);
      add_to(out, kk, t.coef * qz * sign);
    }
  }
  return out;
}

Elt cofree_delta(const SchurSpace& S, int i) {
  const Key& key = S.key(i);
  const int n = key[0];
  const Cooperad& C = dynamic_cast<const Cooperad&>(S.coll());
  const GradedBasis& V = *S.base().basis;
  const GradedBasis& SB = *S.basis();
  Elt out;
  if (n < 2) return out;
  for (const auto& fd : C.full_decompose(n, key[1])) {
    const int kb = static_cast<int>(fd.blocks.size());
    if (kb < 2) continue;
    std::vector<int> degs{C.degree(kb, fd.root)};
    for (int j = 0; j < kb; ++j) degs.push_back(C.degree(static_cast<int>(fd.blocks[j].size()), fd.parts[j]));
    for (int j = 0; j < n; ++j) degs.push_back(V.degree(key[2 + j]));
    std::vector<int> order{0};
    Key outer{kb, fd.root};
    Q coef = fd.coef;
    for (int j = 0; j < kb; ++j) {
      order.push_back(1 + j);
      const auto& blk = fd.blocks[j];
      Key sub{static_cast<int>(blk.size()), fd.parts[j]};
      for (int l : blk) {
        order.push_back(kb + l);
        sub.push_back(key[1 + l]);
      }
      Signed s = S.index(sub);
      if (!s.sign) {
        coef = 0;
        break;
      }
      coef *= s.sign;
      outer.push_back(s.idx);
    }
    if (coef == 0) continue;
    coef *= koszul_sign(degs, order);
    int so = canon_key(C, SB, outer);
    if (so) add_to(out, outer, coef * so);
  }
  return out;
}

// γ of the free algebra P(V) truncated at weight W
Vec free_gamma(const SchurSpace& S, const Operad& P, int n, int q, const std::vector<int>& xs) {
  const GradedBasis& V = *S.base().basis;
  std::vector<int> degs{P.degree(n, q)};
  std::vector<int> order{0};
  std::vector<Arg> args;
  std::vector<int> flat;
  int total = 0, pos = 1;
  std::vector<int> ppos;
  for (int x : xs) {
    const Key& k = S.key(x);
    ppos.push_back(pos);
    degs.push_back(P.degree(k[0], k[1]));
    ++pos;
    for (int j = 0; j < k[0]; ++j) {
      degs.push_back(V.degree(k[2 + j]));
      flat.push_back(pos++);
      (void)j;
    }
    args.push_back({k[0], k[1]});
    total += k[0];
  }
  if (total > S.wcap()) return {};
  for (int p : ppos) order.push_back(p);
  for (int f : flat) order.push_back(f);
  int sign = koszul_sign(degs, order);
  Vec out;
  Vec r = gamma(P, n, q, args);
  for (const auto& [ri, c] : r) {
    Key kk{total, ri};
    for (int x : xs) {
      const Key& k = S.key(x);
      kk.insert(kk.end(), k.begin() + 2, k.end());
    }
    Signed s = S.index(kk);
    if (s.sign) add_to(out, s.idx, c * sign * s.sign);
  }
  return out;
}

}  // namespace

CoalgPtr bar_construction(const TwMor& a, const AlgPtr& A, int wcap, std::vector<int> vweight, int vcap) {
  if (a.P.get() != &A->op() && a.P->name() != A->op().name())
    throw ValidationError("bar construction: algebra is not over the target of the twisting morphism");
  auto S = std::make_shared<SchurSpace>(a.C, A->complex(), wcap, std::move(vweight), vcap);
  LinMap d(S->basis(), S->basis(), -1);
  for (int i = 0; i < S->size(); ++i) {
    const Key& k = S->key(i);
    Elt e = S->d1(k);
    for (const auto& [kk, q] : bar_d2(a, *A, k)) {
      if (!S->in_caps(kk)) throw CapOverflow("bar construction: differential leaves the weight caps");
      add_to(e, kk, q);
    }
    d.set(i, S->to_vec(e));
  }
  ChainComplex cx(S->basis(), d);
  const SchurSpace* sp = S.get();
  auto keep = S;
  auto D = std::make_shared<CCoalgebra>(a.C, cx, [sp, keep](int x) { return cofree_delta(*sp, x); }, "B(" + A->name() + ")");
  D->cofree_space = S;
  return D;
}

AlgPtr cobar_construction(const TwMor& a, const CoalgPtr& D, int wcap) {
  if (a.C.get() != &D->coop() && a.C->name() != D->coop().name())
    throw ValidationError("cobar construction: coalgebra is not over the source of the twisting morphism");
  const Operad& P = *a.P;
  auto S = std::make_shared<SchurSpace>(a.P, D->complex(), wcap);
  const GradedBasis& DB = D->basis();
  int maxb = 1;
  for (int x = 0; x < D->dim(); ++x) maxb = std::max(maxb, D->bound(x));
  LinMap d(S->basis(), S->basis(), -1);
  for (int i = 0; i < S->size(); ++i) {
    const Key& k = S->key(i);
    Elt e = S->d1(k);
    const int n = k[0], p = k[1];
    long long before = 0;
    for (int j = 1; j <= n; ++j) {
      const int xj = k[1 + j];
      for (const auto& [dk, q] : D->delta(xj)) {
        const int kk = dk[0], c = dk[1];
        if (n + kk - 1 > S->wcap()) continue;
        int sign = -sign_of(P.degree(n, p) + before) * sign_of((a.C->degree(kk, c) - 1) * before);
        Vec comp = P.compose_vec(n, Vec{{p, Q(1)}}, interval(j, kk), kk, a.alpha.at(kk).col(c));
        for (const auto& [r, qr] : comp) {
          Key nk{n + kk - 1, r};
          for (int l = 1; l < j; ++l) nk.push_back(k[1 + l]);
          nk.insert(nk.end(), dk.begin() + 2, dk.end());
          for (int l = j + 1; l <= n; ++l) nk.push_back(k[1 + l]);
          add_to(e, nk, q * qr * sign);
        }
      }
      before += DB.degree(xj);
    }
    d.set(i, S->to_vec(e));
  }
  ChainComplex cx(S->basis(), d);
  const SchurSpace* sp = S.get();
  auto keep = S;
  OperadPtr Pp = a.P;
  auto alg = std::make_shared<PAlgebra>(
      a.P, cx, [sp, keep, Pp](int n, int q, const std::vector<int>& xs) { return free_gamma(*sp, *Pp, n, q, xs); },
      "Ω(" + D->name() + ")");
  alg->free_space = S;
  alg->exact_weight = S->wcap() - (maxb - 1);
  return alg;
}

}  // namespace operadiq
