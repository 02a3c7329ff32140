#include "operadiq/operads.hpp"

#include <algorithm>

namespace operadiq {

ArityMap star(const Cooperad& C, const Operad& P, const ArityMap& f, const ArityMap& g) {
  ArityMap out = zero_arity_map(C, P, f.degree + g.degree);
  for (int n = 2; n <= C.cap(); ++n)
    for (int c = 0; c < C.size(n); ++c) {
      Vec acc;
      for (const auto& t : C.decompose(n, c)) {
        Q s = t.coef * sign_of(static_cast<long long>(g.degree) * C.degree(t.m, t.a));
        axpy(acc, s, P.compose_vec(t.m, f.at(t.m).col(t.a), t.S, t.k, g.at(t.k).col(t.b)));
      }
      out.comp[n].set(c, acc);
    }
  return out;
}

ArityMap arity_add(const ArityMap& f, const ArityMap& g, const Q& c) {
  if (f.degree != g.degree) throw ValidationError("arity_add: degree mismatch");
  ArityMap out = f;
  for (std::size_t n = 1; n < f.comp.size(); ++n) out.comp[n] = add(f.comp[n], scale(g.comp[n], c));
  return out;
}

bool arity_zero(const ArityMap& f) {
  for (std::size_t n = 1; n < f.comp.size(); ++n)
    if (!f.comp[n].is_zero()) return false;
  return true;
}

ArityMap bracket(const Cooperad& C, const Operad& P, const ArityMap& f, const ArityMap& g) {
  return arity_add(star(C, P, f, g), star(C, P, g, f), Q(-sign_of(static_cast<long long>(f.degree) * g.degree)));
}

ArityMap conv_differential(const Cooperad& C, const Operad& P, const ArityMap& f) {
  ArityMap out = zero_arity_map(C, P, f.degree - 1);
  for (int n = 1; n <= C.cap(); ++n) out.comp[n] = hom_differential(C.component(n), P.component(n), f.at(n));
  return out;
}

namespace {

Vec act_vec(const Collection& c, int n, const Vec& v, const Perm& rho) {
  Vec out;
  for (const auto& [i, q] : v) {
    Signed s = c.act(n, i, rho);
    if (s.sign) add_to(out, s.idx, q * s.sign);
  }
  return out;
}

}  // namespace

Report check_equivariant(const Collection& src, const Collection& tgt, const ArityMap& f) {
  if (src.mode() != Mode::SYM) return {true, 0, "", src.cap()};
  for (int n = 2; n <= src.cap(); ++n) {
    std::vector<Perm> gens;
    for (int j = 0; j + 1 < n; ++j) {
      Perm t(n);
      for (int l = 0; l < n; ++l) t[l] = l;
      std::swap(t[j], t[j + 1]);
      gens.push_back(t);
    }
    for (int x = 0; x < src.size(n); ++x)
      for (const auto& r : gens) {
        Vec lhs = f.at(n).apply(act_vec(src, n, Vec{{x, Q(1)}}, r));
        Vec rhs = act_vec(tgt, n, f.at(n).col(x), r);
        if (lhs != rhs) return {false, n, "map not equivariant at " + src.label(n, x), src.cap()};
      }
  }
  return {true, 0, "", src.cap()};
}

Report check_op_twisting(const TwMor& a) {
  const int cap = a.C->cap();
  if (a.alpha.degree != -1) return {false, 0, "twisting morphism must have degree -1", cap};
  if (a.C->mode() != a.P->mode() || a.P->cap() != cap) return {false, 0, "mode or cap mismatch", cap};
  if (!a.alpha.at(1).is_zero()) return {false, 1, "twisting morphism must vanish on id", cap};
  Report eq = check_equivariant(*a.C, *a.P, a.alpha);
  if (!eq.pass) return eq;
  ArityMap mc = arity_add(conv_differential(*a.C, *a.P, a.alpha), star(*a.C, *a.P, a.alpha, a.alpha));
  for (int n = 1; n <= cap; ++n)
    for (int c = 0; c < a.C->size(n); ++c)
      if (!mc.at(n).col(c).empty()) return {false, n, "Maurer-Cartan equation fails on " + a.C->label(n, c), cap};
  return {true, 0, "", cap};
}

Report check_operad_morphism(const OperadMorphism& g) {
  const auto& P = *g.src;
  const auto& Q2 = *g.tgt;
  const int cap = P.cap();
  if (g.f.degree != 0) return {false, 0, "operad morphism must have degree 0", cap};
  if (g.f.at(1).col(0) != Vec{{0, Q(1)}}) return {false, 1, "operad morphism must fix id", cap};
  for (int n = 1; n <= cap; ++n)
    if (!hom_differential(P.component(n), Q2.component(n), g.f.at(n)).is_zero())
      return {false, n, "not a chain map", cap};
  Report eq = check_equivariant(P, Q2, g.f);
  if (!eq.pass) return eq;
  for (int m = 2; m <= cap; ++m)
    for (int k = 2; m + k - 1 <= cap; ++k)
      for (int a = 0; a < P.size(m); ++a)
        for (int b = 0; b < P.size(k); ++b)
          for (int i = 1; i <= m; ++i) {
            Vec lhs = g.f.at(m + k - 1).apply(P.compose_i(m, a, i, k, b));
            Vec rhs = Q2.compose_vec(m, g.f.at(m).col(a), interval(i, k), k, g.f.at(k).col(b));
            if (lhs != rhs) return {false, m + k - 1, "does not commute with composition", cap};
          }
  return {true, 0, "", cap};
}

Report check_cooperad_morphism(const CooperadMorphism& f) {
  const auto& C = *f.src;
  const auto& D = *f.tgt;
  const int cap = C.cap();
  if (f.f.degree != 0) return {false, 0, "cooperad morphism must have degree 0", cap};
  for (int n = 1; n <= cap; ++n)
    if (!hom_differential(C.component(n), D.component(n), f.f.at(n)).is_zero())
      return {false, n, "not a chain map", cap};
  Report eq = check_equivariant(C, D, f.f);
  if (!eq.pass) return eq;
  using Key = std::tuple<int, int, std::vector<int>, int, int>;
  for (int n = 2; n <= cap; ++n)
    for (int c = 0; c < C.size(n); ++c) {
      Lin<Key> lhs, rhs;
      for (const auto& [d, q] : f.f.at(n).col(c))
        for (const auto& t : D.decompose(n, d)) add_to(lhs, Key{t.m, t.a, t.S, t.k, t.b}, q * t.coef);
      for (const auto& t : C.decompose(n, c))
        for (const auto& [a2, qa] : f.f.at(t.m).col(t.a))
          for (const auto& [b2, qb] : f.f.at(t.k).col(t.b)) add_to(rhs, Key{t.m, a2, t.S, t.k, b2}, t.coef * qa * qb);
      if (lhs != rhs) return {false, n, "does not commute with decomposition at " + C.label(n, c), cap};
    }
  return {true, 0, "", cap};
}

TwMor push_tw(const OperadMorphism& g, const TwMor& a) {
  TwMor out{a.C, g.tgt, zero_arity_map(*a.C, *g.tgt, -1)};
  for (int n = 1; n <= a.C->cap(); ++n) out.alpha.comp[n] = compose(g.f.at(n), a.alpha.at(n));
  Report r = check_op_twisting(out);
  if (!r.pass) throw Error("push_tw produced a non-twisting map: " + r.detail);
  return out;
}

TwMor pull_tw(const CooperadMorphism& f, const TwMor& a) {
  TwMor out{f.src, a.P, zero_arity_map(*f.src, *a.P, -1)};
  for (int n = 1; n <= a.P->cap(); ++n) out.alpha.comp[n] = compose(a.alpha.at(n), f.f.at(n));
  Report r = check_op_twisting(out);
  if (!r.pass) throw Error("pull_tw produced a non-twisting map: " + r.detail);
  return out;
}

}  // namespace operadiq
