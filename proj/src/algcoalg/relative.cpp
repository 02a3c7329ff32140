#include "operadiq/algcoalg.hpp"

#include <algorithm>

namespace operadiq {

namespace {

Report fail(int n, std::string d, int cap) { return {false, n, std::move(d), cap}; }

}  // namespace

PointMap as_point_map(const LinMap& f) {
  if (f.degree() != 0) throw ValidationError("point map must have degree 0");
  return [f](int x) { return f.col(x); };
}

Vec star_alpha(const TwMor& a, const CCoalgebra& D, const PAlgebra& A, const PointMap& phi, int x) {
  Vec out;
  for (const auto& [k, q] : D.delta(x)) {
    const int n = k[0];
    std::vector<Vec> args;
    bool zero = false;
    for (int j = 0; j < n && !zero; ++j) {
      args.push_back(phi(k[2 + j]));
      zero = args.back().empty();
    }
    if (zero) continue;
    axpy(out, q, A.gamma_vec(n, a.alpha.at(n).col(k[1]), args));
  }
  return out;
}

Vec rel_residual(const TwMor& a, const CCoalgebra& D, const PAlgebra& A, const PointMap& phi, int x) {
  Vec r = A.d(phi(x));
  for (const auto& [y, q] : D.complex().d.col(x)) axpy(r, -q, phi(y));
  axpy(r, Q(1), star_alpha(a, D, A, phi, x));
  return r;
}

Report check_rel_twisting(const TwMor& a, const CCoalgebra& D, const PAlgebra& A, const PointMap& phi) {
  const int cap = a.C->cap();
  for (int x = 0; x < D.dim(); ++x) {
    Vec r = rel_residual(a, D, A, phi, x);
    if (!r.empty())
      return fail(D.bound(x), "∂φ + ⋆_α(φ) at " + D.basis().label(x) + " is " + vec_string(A.basis(), r), cap);
  }
  return {true, 0, "", cap};
}

// ---- Rosetta ----

LinMap alg_map_of(const PAlgebra& omega, const PAlgebra& A, const PointMap& phi) {
  if (!omega.free_space) throw ValidationError("alg_map_of: source is not a free algebra");
  const SchurSpace& S = *omega.free_space;
  LinMap F(S.basis(), A.complex().basis, 0);
  for (int i = 0; i < S.size(); ++i) {
    const Key& k = S.key(i);
    std::vector<Vec> args;
    for (int j = 0; j < k[0]; ++j) args.push_back(phi(k[2 + j]));
    F.set(i, A.gamma_vec(k[0], Vec{{k[1], Q(1)}}, args));
  }
  return F;
}

namespace {

Elt expand_key(const Key& k, const Q& q, const PointMap& phi) {
  Elt out;
  const int n = k[0];
  Key cur{n, k[1]};
  std::vector<Vec> imgs;
  for (int j = 0; j < n; ++j) imgs.push_back(phi(k[2 + j]));
  std::function<void(int, const Q&)> go = [&](int j, const Q& c) {
    if (j == n) {
      add_to(out, cur, c);
      return;
    }
    for (const auto& [z, qz] : imgs[j]) {
      cur.push_back(z);
      go(j + 1, c * qz);
      cur.pop_back();
    }
  };
  go(0, q);
  return out;
}

}  // namespace

LinMap coalg_map_of(const CCoalgebra& D, const CCoalgebra& bar, const PointMap& phi) {
  if (!bar.cofree_space) throw ValidationError("coalg_map_of: target is not a cofree coalgebra");
  const SchurSpace& S = *bar.cofree_space;
  LinMap G(D.complex().basis, S.basis(), 0);
  for (int x = 0; x < D.dim(); ++x) {
    Elt e = expand_key(unit_key(x), Q(1), phi);
    for (const auto& [k, q] : D.delta(x)) axpy(e, Q(1), expand_key(k, q, phi));
    G.set(x, S.to_vec(e));
  }
  return G;
}

Report check_alg_morphism(const PAlgebra& src, const PAlgebra& tgt, const LinMap& F) {
  if (!src.free_space) throw ValidationError("check_alg_morphism: source must be a free algebra");
  const SchurSpace& S = *src.free_space;
  const int cap = S.wcap();
  for (int i = 0; i < S.size(); ++i) {
    const Key& k = S.key(i);
    std::vector<Vec> args;
    for (int j = 0; j < k[0]; ++j) args.push_back(F.col(S.index(unit_key(k[2 + j])).idx));
    if (F.col(i) != tgt.gamma_vec(k[0], Vec{{k[1], Q(1)}}, args))
      return fail(k[0], "map does not respect γ at " + S.basis()->label(i), cap);
    if (k[0] > src.exact_weight) continue;
    if (F.apply(src.complex().d.col(i)) != tgt.d(F.col(i)))
      return fail(k[0], "map is not a chain map at " + S.basis()->label(i), cap);
  }
  return {true, 0, "", cap};
}

Report check_coalg_morphism(const CCoalgebra& src, const CCoalgebra& tgt, const LinMap& G) {
  if (!tgt.cofree_space) throw ValidationError("check_coalg_morphism: target must be cofree");
  const SchurSpace& S = *tgt.cofree_space;
  const int cap = S.wcap();
  PointMap proj = [&](int x) {
    Vec v;
    for (const auto& [i, q] : G.col(x))
      if (S.key(i)[0] == 1) add_to(v, S.key(i)[2], q);
    return v;
  };
  LinMap G2 = coalg_map_of(src, tgt, proj);
  for (int x = 0; x < src.dim(); ++x) {
    if (src.bound(x) > cap) continue;
    if (G.col(x) != G2.col(x)) return fail(src.bound(x), "map is not determined by its corestriction at " + src.basis().label(x), cap);
    if (G.apply(src.complex().d.col(x)) != tgt.complex().d.apply(G.col(x)))
      return fail(src.bound(x), "map is not a chain map at " + src.basis().label(x), cap);
  }
  return {true, 0, "", cap};
}

LinMap twisting_of_alg_map(const PAlgebra& omega, const PAlgebra& A, const LinMap& F) {
  Report r = check_alg_morphism(omega, A, F);
  if (!r.pass) throw ValidationError("not a morphism of algebras: " + r.detail);
  const SchurSpace& S = *omega.free_space;
  const int dimD = static_cast<int>(S.base().basis->size());
  LinMap phi(S.base().basis, A.complex().basis, 0);
  for (int x = 0; x < dimD; ++x) phi.set(x, F.col(S.index(unit_key(x)).idx));
  return phi;
}

LinMap twisting_of_coalg_map(const CCoalgebra& D, const CCoalgebra& bar, const LinMap& G) {
  Report r = check_coalg_morphism(D, bar, G);
  if (!r.pass) throw ValidationError("not a morphism of coalgebras: " + r.detail);
  const SchurSpace& S = *bar.cofree_space;
  LinMap phi(D.complex().basis, S.base().basis, 0);
  for (int x = 0; x < D.dim(); ++x)
    for (const auto& [i, q] : G.col(x))
      if (S.key(i)[0] == 1) phi.add(x, S.key(i)[2], q);
  return phi;
}

Rosetta rosetta_convert(const TwMor& a, const CoalgPtr& D, const AlgPtr& A, int wcap, RosettaFrom from,
                        const LinMap& input) {
  auto omega = cobar_construction(a, D, wcap);
  auto bar = bar_construction(a, A, wcap);
  Rosetta out;
  switch (from) {
    case RosettaFrom::Twisting: out.twisting = input; break;
    case RosettaFrom::AlgMap: out.twisting = twisting_of_alg_map(*omega, *A, input); break;
    case RosettaFrom::CoalgMap: out.twisting = twisting_of_coalg_map(*D, *bar, input); break;
  }
  PointMap phi = as_point_map(out.twisting);
  out.alg_map = alg_map_of(*omega, *A, phi);
  out.coalg_map = coalg_map_of(*D, *bar, phi);
  Report tw = check_rel_twisting(a, *D, *A, phi);
  Report am = check_alg_morphism(*omega, *A, out.alg_map);
  Report cm = check_coalg_morphism(*D, *bar, out.coalg_map);
  out.report = tw;
  if (tw.pass != am.pass || tw.pass != cm.pass) {
    out.report.pass = false;
    out.report.detail = "the three descriptions disagree: twisting " + std::string(tw.pass ? "holds" : "fails") +
                        ", algebra map " + (am.pass ? "holds" : "fails") + ", coalgebra map " + (cm.pass ? "holds" : "fails");
  }
  return out;
}

// ---- change of (co)operad ----

CoalgPtr push_coalg(const CooperadMorphism& f, const CoalgPtr& D) {
  if (f.src.get() != &D->coop() && f.src->name() != D->coop().name())
    throw ValidationError("push_coalg: coalgebra is not over the source cooperad");
  const Cooperad& T = *f.tgt;
  ArityMap fm = f.f;
  CoalgPtr keep = D;
  CooperadPtr tgt = f.tgt;
  auto delta = [keep, fm, tgt](int x) {
    Elt out;
    for (const auto& [k, q] : keep->delta(x))
      for (const auto& [c2, r] : fm.at(k[0]).col(k[1])) {
        Key kk = k;
        kk[1] = c2;
        int s = canon_key(*tgt, keep->basis(), kk);
        if (s) add_to(out, kk, q * r * s);
      }
    return out;
  };
  (void)T;
  return std::make_shared<CCoalgebra>(f.tgt, D->complex(), delta, D->name());
}

AlgPtr pull_alg(const OperadMorphism& g, const AlgPtr& A) {
  if (g.tgt.get() != &A->op() && g.tgt->name() != A->op().name())
    throw ValidationError("pull_alg: algebra is not over the target operad");
  AlgPtr keep = A;
  ArityMap gm = g.f;
  auto gamma = [keep, gm](int n, int p, const std::vector<int>& xs) {
    std::vector<Vec> args;
    for (int x : xs) args.push_back(Vec{{x, Q(1)}});
    return keep->gamma_vec(n, gm.at(n).col(p), args);
  };
  return std::make_shared<PAlgebra>(g.src, A->complex(), gamma, A->name());
}

}  // namespace operadiq
