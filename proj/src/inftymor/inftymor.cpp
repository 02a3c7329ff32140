#include "operadiq/inftymor.hpp"

#include <algorithm>

namespace operadiq {

namespace {

Report fail(int n, std::string d, int cap) { return {false, n, std::move(d), cap}; }

std::shared_ptr<const SchurSpace> key_space(const TwMor& a, const AlgPtr& A, const BarBound& b, int fallback) {
  const int arity = b.arity > 0 ? b.arity : fallback;
  std::vector<int> w = b.weight;
  if (!w.empty() && static_cast<int>(w.size()) != A->dim()) w.clear();
  return std::make_shared<SchurSpace>(a.C, A->complex(), arity, w, w.empty() ? -1 : b.wcap);
}

Elt omega_elt(const InftyCoalgMorphism& m, int x) { return m.omega->free_space->from_vec(m.phi(x)); }

}  // namespace

// ---- construction ----

InftyAlgMorphism strict_alg_morphism(const TwMor& a, const AlgPtr& src, const AlgPtr& tgt, const LinMap& f, int cap) {
  if (f.degree() != 0) throw ValidationError("strict morphism must have degree 0");
  return {a, src, tgt, cap, [f](const Key& k) { return k[0] == 1 ? f.col(k[2]) : Vec{}; }};
}

InftyCoalgMorphism strict_coalg_morphism(const TwMor& a, const CoalgPtr& src, const CoalgPtr& tgt, const LinMap& f,
                                         int cap) {
  if (f.degree() != 0) throw ValidationError("strict morphism must have degree 0");
  auto omega = cobar_construction(a, tgt, cap);
  const SchurSpace* S = omega->free_space.get();
  return {a, src, tgt, omega, [f, S, omega](int x) {
            Vec v;
            for (const auto& [y, q] : f.col(x)) add_to(v, S->index(unit_key(y)).idx, q);
            return v;
          }};
}

InftyAlgMorphism identity_infty(const TwMor& a, const AlgPtr& A, int cap) {
  return strict_alg_morphism(a, A, A, identity_map(A->complex().basis), cap);
}

InftyCoalgMorphism identity_infty(const TwMor& a, const CoalgPtr& D, int cap) {
  return strict_coalg_morphism(a, D, D, identity_map(D->complex().basis), cap);
}

Elt coalg_extension(const InftyAlgMorphism& m, const Key& k) {
  const Cooperad& C = *m.alpha.C;
  const GradedBasis& AB = m.src->basis();
  const GradedBasis& TB = m.tgt->basis();
  const int n = k[0];
  Elt out;
  if (n == 1) {
    for (const auto& [z, q] : m.psi(k)) add_to(out, unit_key(z), q);
    return out;
  }
  for (const auto& fd : C.full_decompose(n, k[1])) {
    const int kb = static_cast<int>(fd.blocks.size());
    std::vector<int> degs{C.degree(kb, fd.root)};
    for (int j = 0; j < kb; ++j) degs.push_back(C.degree(static_cast<int>(fd.blocks[j].size()), fd.parts[j]));
    for (int j = 0; j < n; ++j) degs.push_back(AB.degree(k[2 + j]));
    std::vector<int> order{0};
    std::vector<Vec> imgs;
    Q coef = fd.coef;
    for (int j = 0; j < kb && coef != 0; ++j) {
      order.push_back(1 + j);
      const auto& blk = fd.blocks[j];
      Key sub{static_cast<int>(blk.size()), fd.parts[j]};
      for (int l : blk) {
        order.push_back(kb + l);
        sub.push_back(k[1 + l]);
      }
      const int s = canon_key(C, AB, sub);
      if (!s) coef = 0;
      else {
        imgs.push_back(m.psi(sub));
        coef *= s;
        if (imgs.back().empty()) coef = 0;
      }
    }
    if (coef == 0) continue;
    coef *= koszul_sign(degs, order);
    Key outer{kb, fd.root};
    std::function<void(int, const Q&)> go = [&](int j, const Q& c) {
      if (j == kb) {
        Key kk = outer;
        const int s = canon_key(C, TB, kk);
        if (s) add_to(out, kk, c * s);
        return;
      }
      for (const auto& [z, q] : imgs[j]) {
        outer.push_back(z);
        go(j + 1, c * q);
        outer.pop_back();
      }
    };
    go(0, coef);
  }
  return out;
}

LinMap first_component(const InftyAlgMorphism& m) {
  LinMap f(m.src->complex().basis, m.tgt->complex().basis, 0);
  for (int x = 0; x < m.src->dim(); ++x) f.set(x, m.psi(unit_key(x)));
  return f;
}

LinMap first_component(const InftyCoalgMorphism& m) {
  LinMap f(m.src->complex().basis, m.tgt->complex().basis, 0);
  for (int x = 0; x < m.src->dim(); ++x)
    for (const auto& [k, q] : omega_elt(m, x))
      if (k[0] == 1) f.add(x, k[2], q);
  return f;
}

// ---- verification ----

Report check_infty(const InftyAlgMorphism& m, const BarBound& b) {
  const int arity = b.arity > 0 ? b.arity : m.cap;
  CoalgPtr B;
  try {
    std::vector<int> w = b.weight;
    B = bar_construction(m.alpha, m.src, arity, w, w.empty() ? -1 : b.wcap);
  } catch (const CapOverflow& e) {
    return fail(arity, std::string("bar construction leaves the caps: ") + e.what(), arity);
  }
  const SchurSpace* S = B->cofree_space.get();
  PointMap phi = [&](int i) { return m.psi(S->key(i)); };
  Report r = check_rel_twisting(m.alpha, *B, *m.tgt, phi);
  r.cap = arity;
  return r;
}

Report check_infty(const InftyCoalgMorphism& m) {
  Report r = check_rel_twisting(m.alpha, *m.src, *m.omega, m.phi);
  r.cap = m.omega->free_space->wcap();
  return r;
}

// ---- composition ----

InftyAlgMorphism compose_infty(const InftyAlgMorphism& second, const InftyAlgMorphism& first) {
  if (first.tgt.get() != second.src.get() && first.tgt->name() != second.src->name())
    throw ValidationError("compose_infty: morphisms are not composable");
  const int cap = std::min(first.alpha.C->cap(), first.cap * second.cap);
  InftyAlgMorphism out{first.alpha, first.src, second.tgt, cap, {}};
  auto cache = std::make_shared<std::map<Key, Vec>>();
  out.psi = [first, second, cache](const Key& k) {
    auto it = cache->find(k);
    if (it != cache->end()) return it->second;
    Vec v;
    for (const auto& [kk, q] : coalg_extension(first, k)) axpy(v, q, second.psi(kk));
    cache->emplace(k, v);
    return v;
  };
  return out;
}

InftyCoalgMorphism compose_infty(const InftyCoalgMorphism& second, const InftyCoalgMorphism& first) {
  if (first.tgt.get() != second.src.get() && first.tgt->name() != second.src->name())
    throw ValidationError("compose_infty: morphisms are not composable");
  auto F = std::make_shared<LinMap>(alg_map_of(*first.omega, *second.omega, second.phi));
  PointMap p1 = first.phi;
  return {first.alpha, first.src, second.tgt, second.omega, [F, p1](int x) { return F->apply(p1(x)); }};
}

bool same_components(const InftyAlgMorphism& a, const InftyAlgMorphism& b, const BarBound& bound) {
  auto S = key_space(a.alpha, a.src, bound, std::max(a.cap, b.cap));
  for (int i = 0; i < S->size(); ++i)
    if (a.psi(S->key(i)) != b.psi(S->key(i))) return false;
  return true;
}

bool same_components(const InftyCoalgMorphism& a, const InftyCoalgMorphism& b) {
  for (int x = 0; x < a.src->dim(); ++x)
    if (omega_elt(a, x) != omega_elt(b, x)) return false;
  return true;
}

// ---- classification and inversion ----

namespace {

Classification classify_map(const LinMap& f, const ChainComplex& src, const ChainComplex& tgt) {
  Classification c;
  const Matrix M = to_dense(f);
  const int ns = static_cast<int>(src.basis->size()), nt = static_cast<int>(tgt.basis->size());
  c.iso = ns == nt && rank_of(M) == ns;
  auto hs = homology(src), ht = homology(tgt);
  for (const auto& [d, v] : hs.dims) c.boundary_unknown |= !v.has_value();
  for (const auto& [d, v] : ht.dims) c.boundary_unknown |= !v.has_value();
  c.qi = is_quasi_iso(src, tgt, f);
  return c;
}

// the span of the basis elements of weight <= wcap, with the inclusion
std::pair<ChainComplex, std::vector<int>> weight_part(const ChainComplex& c, const std::vector<int>& w, int wcap) {
  auto B = std::make_shared<GradedBasis>(c.basis->dmin(), c.basis->dmax());
  std::vector<int> keep, pos(c.basis->size(), -1);
  for (std::size_t i = 0; i < c.basis->size(); ++i)
    if (w.at(i) <= wcap) {
      pos[i] = B->add(c.basis->label(i), c.basis->degree(i));
      keep.push_back(static_cast<int>(i));
    }
  Basis b = B;
  LinMap d(b, b, c.d.degree());
  for (int i : keep)
    for (const auto& [j, q] : c.d.col(i)) {
      if (pos[j] < 0) throw ValidationError("weight_part: the differential raises the weight");
      d.add(pos[i], pos[j], q);
    }
  return {ChainComplex{b, d}, pos};
}

Classification classify_weighted(const LinMap& f, const ChainComplex& src, const std::vector<int>& ws,
                                 const ChainComplex& tgt, const std::vector<int>& wt, int wcap) {
  auto [s, ps] = weight_part(src, ws, wcap);
  auto [t, pt] = weight_part(tgt, wt, wcap);
  LinMap g(s.basis, t.basis, f.degree());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i] < 0) continue;
    for (const auto& [j, q] : f.col(static_cast<int>(i))) {
      if (pt[j] < 0) throw ValidationError("classify: the map raises the weight");
      g.add(ps[i], pt[j], q);
    }
  }
  return classify_map(g, s, t);
}

}  // namespace

Classification classify(const InftyAlgMorphism& m) {
  return classify_map(first_component(m), m.src->complex(), m.tgt->complex());
}

Classification classify(const InftyCoalgMorphism& m) {
  return classify_map(first_component(m), m.src->complex(), m.tgt->complex());
}

InftyAlgMorphism invert_infty_iso(const InftyAlgMorphism& m, const BarBound& bound) {
  if (!classify(m).iso) throw ValidationError("invert_infty_iso: the first component is not invertible");
  const int arity = bound.arity > 0 ? bound.arity : m.cap;
  BarBound b = bound;
  b.arity = arity;
  auto Ss = key_space(m.alpha, m.src, b, arity);
  auto St = key_space(m.alpha, m.tgt, b, arity);
  if (Ss->size() != St->size()) throw ValidationError("invert_infty_iso: truncations have different sizes");
  const int N = Ss->size();
  Matrix G(N, std::vector<Q>(N, Q(0)));
  for (int i = 0; i < N; ++i)
    for (const auto& [k, q] : coalg_extension(m, Ss->key(i))) {
      Signed s = St->index(k);
      if (s.sign) G[s.idx][i] += q * s.sign;
    }
  auto Ginv = std::make_shared<Matrix>(inverse_matrix(G));
  std::vector<int> unit_rows;
  for (int i = 0; i < N; ++i)
    if (Ss->key(i)[0] == 1) unit_rows.push_back(i);
  InftyAlgMorphism inv{m.alpha, m.tgt, m.src, arity, {}};
  inv.psi = [Ss, St, Ginv, unit_rows](const Key& k) {
    Vec v;
    Signed s = St->index(k);
    if (!s.sign) return v;
    for (int i : unit_rows) add_to(v, Ss->key(i)[2], (*Ginv)[i][s.idx] * s.sign);
    return v;
  };
  return inv;
}

InftyCoalgMorphism invert_infty_iso(const InftyCoalgMorphism& m) {
  if (!classify(m).iso) throw ValidationError("invert_infty_iso: the first component is not invertible");
  const int cap = m.omega->free_space->wcap();
  auto osrc = cobar_construction(m.alpha, m.src, cap);
  LinMap F = alg_map_of(*osrc, *m.omega, m.phi);
  const Matrix M = to_dense(F);
  if (M.size() != M.front().size()) throw ValidationError("invert_infty_iso: truncations have different sizes");
  // to_dense is indexed [target][source]
  auto inv = std::make_shared<Matrix>(inverse_matrix(M));
  const SchurSpace* St = m.omega->free_space.get();
  return {m.alpha, m.tgt, m.src, osrc, [inv, St](int x) {
            Vec v;
            const int col = St->index(unit_key(x)).idx;
            for (std::size_t r = 0; r < inv->size(); ++r) add_to(v, static_cast<int>(r), (*inv)[r][col]);
            return v;
          }};
}

// ---- induced ∞-morphisms ----

InftyLinfMorphism induce_left(const InftyCoalgMorphism& Phi, const AlgPtr& A) {
  const TwMor& a = Phi.alpha;
  const int cap = Phi.omega->free_space->wcap();
  auto om = homotopy_operad(a.C->mode(), std::min(a.C->cap(), a.P->cap()));
  TwMor io = iota_of(om);
  auto src = convolution_algebra(a, Phi.tgt, A);
  auto tgt = convolution_algebra(a, Phi.src, A);
  InftyCoalgMorphism keep = Phi;
  const Operad& P = *a.P;
  auto ctx = std::make_shared<HomEval>(
      a.C->mode(), [keep](int x) { return omega_elt(keep, x); }, Phi.src->dim(), Phi.tgt->complex().basis,
      A->complex().basis, [&P, op = a.P](int n, int p) { return op->degree(n, p); });
  (void)P;
  const int na = A->dim();
  auto ev = [A](int n, int p, const std::vector<int>& as) { return A->gamma(n, p, as); };
  KeyMap psi = [ctx, ev, na](const Key& k) {
    return ctx->act(k[0], ev, std::vector<int>(k.begin() + 2, k.end()), na);
  };
  return {io, src, tgt, std::min(cap, io.C->cap()), psi};
}

InftyLinfMorphism induce_right(const InftyAlgMorphism& Psi, const CoalgPtr& D) {
  const TwMor& a = Psi.alpha;
  auto om = homotopy_operad(a.C->mode(), std::min(a.C->cap(), a.P->cap()));
  TwMor io = iota_of(om);
  auto src = convolution_algebra(a, D, Psi.src);
  auto tgt = convolution_algebra(a, D, Psi.tgt);
  auto terms = [D](int x) {
    Elt e = D->delta(x);
    add_to(e, unit_key(x), Q(1));
    return e;
  };
  CooperadPtr C = a.C;
  auto ctx = std::make_shared<HomEval>(C->mode(), terms, D->dim(), D->complex().basis, Psi.src->complex().basis,
                                       [C](int n, int c) { return C->degree(n, c); });
  InftyAlgMorphism keep = Psi;
  auto ev = [keep, C](int n, int c, const std::vector<int>& as) {
    Key k{n, c};
    k.insert(k.end(), as.begin(), as.end());
    const int s = canon_key(*C, keep.src->basis(), k);
    if (!s) return Vec{};
    return scaled(keep.psi(k), Q(s));
  };
  const int na = Psi.tgt->dim();
  KeyMap psi = [ctx, ev, na](const Key& k) {
    return ctx->act(k[0], ev, std::vector<int>(k.begin() + 2, k.end()), na);
  };
  return {io, src, tgt, io.C->cap(), psi};
}

Report composition_law_check(const InftyCoalgMorphism& Phi1, const InftyCoalgMorphism& Phi2, const AlgPtr& A,
                             const BarBound& bound) {
  auto lhs = induce_left(compose_infty(Phi1, Phi2), A);
  auto rhs = compose_infty(induce_left(Phi2, A), induce_left(Phi1, A));
  auto S = key_space(lhs.alpha, lhs.src, bound, lhs.cap);
  for (int i = 0; i < S->size(); ++i)
    if (lhs.psi(S->key(i)) != rhs.psi(S->key(i)))
      return fail(S->key(i)[0], "components differ at " + S->key_label(S->key(i)), S->wcap());
  return {true, 0, "", S->wcap()};
}

Report composition_law_check(const InftyAlgMorphism& Psi1, const InftyAlgMorphism& Psi2, const CoalgPtr& D,
                             const BarBound& bound) {
  auto lhs = induce_right(compose_infty(Psi1, Psi2), D);
  auto rhs = compose_infty(induce_right(Psi1, D), induce_right(Psi2, D));
  auto S = key_space(lhs.alpha, lhs.src, bound, lhs.cap);
  for (int i = 0; i < S->size(); ++i)
    if (lhs.psi(S->key(i)) != rhs.psi(S->key(i)))
      return fail(S->key(i)[0], "components differ at " + S->key_label(S->key(i)), S->wcap());
  return {true, 0, "", S->wcap()};
}

Vec evaluate_on_maps(const InftyLinfMorphism& m, const std::vector<Vec>& fs) {
  const int n = static_cast<int>(fs.size());
  const Cooperad& C = *m.alpha.C;
  Vec out;
  Key k{n, 0};
  std::function<void(int, const Q&)> go = [&](int j, const Q& c) {
    if (j == n) {
      Key kk = k;
      const int s = canon_key(C, m.src->basis(), kk);
      if (s) axpy(out, c * s, m.psi(kk));
      return;
    }
    for (const auto& [e, q] : fs[j]) {
      k.push_back(e);
      go(j + 1, c * q);
      k.pop_back();
    }
  };
  go(0, Q(1));
  return out;
}

// ---- homotopy transfer ----

Transfer htt_transfer(const AlgPtr& A, const AlgPtr& H, const Contraction& c, int cap) {
  Report rc = check_contraction(c, A->complex(), H->complex());
  if (!rc.pass) throw ValidationError("htt_transfer: not a contraction: " + rc.detail);
  if (A->op().mode() != Mode::NS) throw ValidationError("htt_transfer: expects an associative algebra");
  auto asinf = make_as_inf(cap);
  TwMor io = iota_of(asinf);
  TwMor kap = kappa_as(cap);
  OperadMorphism g = cobar_morphism(asinf, A->op_ptr(), [&](int k, int) { return kap.alpha.at(k).col(0); });
  AlgPtr Ap = pull_alg(g, A);

  Transfer t;
  auto m = std::make_shared<std::vector<std::map<Key, Vec>>>(cap + 1);
  auto psi = std::make_shared<std::map<Key, Vec>>();
  for (int h = 0; h < H->dim(); ++h) (*psi)[unit_key(h)] = c.i.col(h);

  auto build_H = [&]() {
    auto mm = m;
    return cobar_algebra(asinf, H->complex(), [mm](int k, int e, const std::vector<int>& xs) {
      if (k >= static_cast<int>(mm->size())) return Vec{};
      Key key{k, e};
      key.insert(key.end(), xs.begin(), xs.end());
      auto it = (*mm)[k].find(key);
      return it == (*mm)[k].end() ? Vec{} : it->second;
    }, H->name() + "∞");
  };
  KeyMap psi_map = [psi](const Key& k) {
    auto it = psi->find(k);
    return it == psi->end() ? Vec{} : it->second;
  };

  for (int n = 2; n <= cap; ++n) {
    AlgPtr Hn = build_H();
    CoalgPtr B = bar_construction(io, Hn, n);
    const SchurSpace* S = B->cofree_space.get();
    PointMap pm = [&](int i) { return psi_map(S->key(i)); };
    std::map<Key, Vec> mn, pn;
    for (int i = 0; i < S->size(); ++i) {
      const Key& k = S->key(i);
      if (k[0] != n) continue;
      Vec R = rel_residual(io, *B, *Ap, pm, i);
      Vec mv = c.p.apply(R), hv = scaled(c.h.apply(R), Q(-1));
      if (!mv.empty()) mn[k] = mv;
      if (!hv.empty()) pn[k] = hv;
    }
    (*m)[n] = std::move(mn);
    for (auto& [k, v] : pn) (*psi)[k] = std::move(v);
  }
  t.H = build_H();
  t.m = *m;
  t.i_inf = {io, t.H, Ap, cap, psi_map};
  return t;
}

Vec transferred_product(const Transfer& t, int a, int b) {
  if (t.m.size() < 3) return {};
  auto it = t.m[2].find(Key{2, 0, a, b});
  return it == t.m[2].end() ? Vec{} : scaled(it->second, Q(-1));
}

InftyAlgMorphism kappa_morphism(const Transfer& t, const AlgPtr& Hassoc, const AlgPtr& A) {
  for (std::size_t n = 3; n < t.m.size(); ++n)
    if (!t.m[n].empty()) throw ValidationError("kappa_morphism: the transferred structure has nonzero m_" + std::to_string(n));
  for (int a = 0; a < Hassoc->dim(); ++a)
    for (int b = 0; b < Hassoc->dim(); ++b)
      if (transferred_product(t, a, b) != Hassoc->gamma(2, 0, {a, b}))
        throw ValidationError("kappa_morphism: the product of H differs from the transferred one");
  const int cap = t.i_inf.cap;
  return {kappa_as(cap), Hassoc, A, cap, t.i_inf.psi};
}

// ---- the counterexample ----

namespace {

std::string elt_string(const Collection& P, const GradedBasis& B, const Elt& e) {
  if (e.empty()) return "0";
  std::string s;
  for (const auto& [k, q] : e) {
    std::string term = P.label(k[0], k[1]);
    for (std::size_t j = 2; j < k.size(); ++j) term += "⊗" + B.label(k[j]);
    if (s.empty()) s = (q == 1 ? "" : q == -1 ? "-" : to_string(q) + "·") + term;
    else if (q > 0) s += " + " + (q == 1 ? "" : to_string(q) + "·") + term;
    else s += " - " + (q == -1 ? "" : to_string(Q(-q)) + "·") + term;
  }
  return s;
}

// As(Ψ) F proj_n As(Δ_D) Φ(x): keys over As in the target of Ψ
Elt left_route_intermediate(const InftyCoalgMorphism& Phi, const InftyAlgMorphism& Psi, const std::vector<Vec>& fs,
                            int x) {
  const Operad& P = *Phi.alpha.P;
  const Cooperad& C = *Phi.alpha.C;
  const CCoalgebra& D = *Phi.tgt;
  const GradedBasis& DB = D.basis();
  const GradedBasis& AB = Psi.src->basis();
  const int n = static_cast<int>(fs.size());
  const int na = Psi.src->dim();
  Elt out;
  for (const auto& [K, q] : omega_elt(Phi, x)) {
    const int k = K[0];
    std::vector<std::vector<std::pair<Key, Q>>> choices(k);
    for (int j = 0; j < k; ++j) {
      choices[j].push_back({unit_key(K[2 + j]), Q(1)});
      for (const auto& [dk, dq] : D.delta(K[2 + j])) choices[j].push_back({dk, dq});
    }
    std::vector<std::pair<Key, Q>> pick(k);
    std::function<void(int, int)> rec = [&](int j, int used) {
      if (used > n) return;
      if (j == k) {
        if (used != n) return;
        // (p, c_1, Y_1, .., c_k, Y_k) -> (p, c_1..c_k, Y_1..Y_k)
        std::vector<int> degs{P.degree(k, K[1])}, ys, order{0}, cpos, ypos;
        int pdeg = degs[0];
        for (int b = 0; b < k; ++b) {
          const Key& kb = pick[b].first;
          cpos.push_back(static_cast<int>(degs.size()));
          degs.push_back(C.degree(kb[0], kb[1]));
          pdeg += degs.back();
          for (int l = 0; l < kb[0]; ++l) {
            ypos.push_back(static_cast<int>(degs.size()));
            degs.push_back(DB.degree(kb[2 + l]));
            ys.push_back(kb[2 + l]);
          }
        }
        order.insert(order.end(), cpos.begin(), cpos.end());
        order.insert(order.end(), ypos.begin(), ypos.end());
        Q coef = q * koszul_sign(degs, order);
        for (const auto& pk : pick) coef *= pk.second;
        // F on p ⊗ y_1..y_n with σ = id
        std::vector<int> as(n);
        std::function<void(int, const Q&, long long)> apply = [&](int i, const Q& c, long long fdeg) {
          if (i == n) {
            long long th = static_cast<long long>(pdeg) * fdeg;
            for (int a = 0; a < n; ++a)
              for (int b = a + 1; b < n; ++b)
                th += static_cast<long long>(DB.degree(ys[a])) * (AB.degree(as[b]) - DB.degree(ys[b]));
            // back to (p, c_1, A_1, ..): same reordering with the degrees of the a's
            std::vector<int> d2{P.degree(k, K[1])};
            int pos = 0;
            for (int b = 0; b < k; ++b) {
              const Key& kb = pick[b].first;
              d2.push_back(C.degree(kb[0], kb[1]));
              for (int l = 0; l < kb[0]; ++l) d2.push_back(AB.degree(as[pos++]));
            }
            Q cc = c * sign_of(th) * koszul_sign(d2, order);
            std::vector<Vec> blocks;
            pos = 0;
            for (int b = 0; b < k; ++b) {
              const Key& kb = pick[b].first;
              Key sub{kb[0], kb[1]};
              for (int l = 0; l < kb[0]; ++l) sub.push_back(as[pos++]);
              blocks.push_back(Psi.psi(sub));
              if (blocks.back().empty()) return;
            }
            Key outk{k, K[1]};
            std::function<void(int, const Q&)> expand = [&](int b, const Q& c2) {
              if (b == k) {
                add_to(out, outk, c2);
                return;
              }
              for (const auto& [z, qz] : blocks[b]) {
                outk.push_back(z);
                expand(b + 1, c2 * qz);
                outk.pop_back();
              }
            };
            expand(0, cc);
            return;
          }
          for (const auto& [e, qe] : fs[i]) {
            if (e / na != ys[i]) continue;
            as[i] = e % na;
            apply(i + 1, c * qe, fdeg + AB.degree(as[i]) - DB.degree(ys[i]));
          }
        };
        apply(0, coef, 0);
        return;
      }
      for (const auto& ch : choices[j]) {
        pick[j] = ch;
        rec(j + 1, used + ch.first[0]);
      }
    };
    rec(0, 0);
  }
  return out;
}

Vec row_of(const Vec& hom, int x, int na) {
  Vec v;
  for (const auto& [e, q] : hom)
    if (e / na == x) v.emplace(e % na, q);
  return v;
}

}  // namespace

Counterexample counterexample(const std::function<PointMap(PointMap)>& modify_phi) {
  const int cap = 4;
  auto tw = kappa_as(cap);
  auto V = make_V(4, cap);
  auto A = make_An(2, 4, cap);
  auto H = make_Hn(2, cap);
  Contraction ctr = make_contraction(2, *A.alg, *H.alg);
  Transfer t = htt_transfer(A.alg, H.alg, ctr, cap);
  InftyAlgMorphism iinf = kappa_morphism(t, H.alg, A.alg);
  auto O = cobar_construction(tw, V, cap);
  LinMap Phi_map = make_Phi(*V, *O);
  InftyCoalgMorphism Phi{tw, V, V, O, as_point_map(Phi_map)};
  if (modify_phi) Phi.phi = modify_phi(Phi.phi);

  std::vector<Vec> fs;
  for (int i = 1; i <= 3; ++i) fs.push_back(make_f(i, *V, *H.alg));
  const int v4 = V->basis().at("v4");

  auto right = induce_right(iinf, V);        // hom(V, H^2) ⇝ hom(V, A^2)
  auto left_A = induce_left(Phi, A.alg);     // hom(V, A^2) ⇝ hom(V, A^2)
  auto left_H = induce_left(Phi, H.alg);     // hom(V, H^2) ⇝ hom(V, H^2)
  auto lr = compose_infty(left_A, right);
  auto rl = compose_infty(right, left_H);

  Counterexample r;
  r.left_then_right = row_of(evaluate_on_maps(lr, fs), v4, A.alg->dim());
  r.right_then_left = row_of(evaluate_on_maps(rl, fs), v4, A.alg->dim());
  r.intermediate = left_route_intermediate(Phi, iinf, fs, v4);
  for (const auto& [k, q] : r.intermediate)
    axpy(r.intermediate_value, q, A.alg->gamma(k[0], k[1], std::vector<int>(k.begin() + 2, k.end())));
  r.left_str = vec_string(A.alg->basis(), r.left_then_right);
  r.right_str = vec_string(A.alg->basis(), r.right_then_left);
  r.intermediate_str = elt_string(A.alg->op(), A.alg->basis(), r.intermediate);
  r.equal = r.left_then_right == r.right_then_left;
  return r;
}

// ---- rectification ----

AlgRectification rectify(const TwMor& a, const AlgPtr& A, int cap, const std::optional<OperadMorphism>& g,
                         std::vector<int> weight, int wcap) {
  TwMor a2 = g ? push_tw(*g, a) : a;
  auto B = bar_construction(a, A, cap, weight, wcap);
  auto Om = cobar_construction(a2, B, cap);
  AlgRectification r;
  r.rectified = g ? pull_alg(*g, Om) : Om;
  const SchurSpace* SB = B->cofree_space.get();
  const SchurSpace* SO = Om->free_space.get();
  CoalgPtr keepB = B;
  AlgPtr keepO = Om;
  r.unit = {a, A, r.rectified, cap, [SB, SO, keepB, keepO](const Key& k) {
              Vec v;
              Signed s = SB->index(k);
              if (!s.sign) return v;
              Signed t = SO->index(unit_key(s.idx));
              if (t.sign) v.emplace(t.idx, Q(s.sign * t.sign));
              return v;
            }};
  if (!weight.empty()) {
    std::vector<int> wb(B->dim());
    for (int i = 0; i < B->dim(); ++i)
      for (std::size_t j = 2; j < SB->key(i).size(); ++j) wb[i] += weight.at(SB->key(i)[j]);
    r.rectified_weight.assign(Om->dim(), 0);
    for (int i = 0; i < Om->dim(); ++i)
      for (std::size_t j = 2; j < SO->key(i).size(); ++j) r.rectified_weight[i] += wb[SO->key(i)[j]];
    r.weight = std::move(weight);
    r.wcap = wcap >= 0 ? wcap : cap;
  }
  return r;
}

CoalgRectification rectify(const TwMor& a, const CoalgPtr& D, int cap, const std::optional<CooperadMorphism>& f,
                           std::vector<int> weight) {
  TwMor a2 = f ? pull_tw(*f, a) : a;
  auto Om = cobar_construction(a, D, cap);
  // weights of Ω_α D: arity-one generators count one, so the bar stays finite
  const SchurSpace* SO = Om->free_space.get();
  std::vector<int> w(Om->dim());
  for (int i = 0; i < Om->dim(); ++i) w[i] = SO->key(i)[0];
  auto B = bar_construction(a2, Om, cap, w, cap);
  CoalgRectification r;
  r.rectified = f ? push_coalg(*f, B) : B;
  const SchurSpace* SB = B->cofree_space.get();
  auto omega = cobar_construction(a, D, cap);
  CoalgPtr keepB = B;
  r.counit = {a, r.rectified, D, omega, [SB, keepB](int x) {
                const Key& k = SB->key(x);
                return k[0] == 1 ? Vec{{k[2], Q(1)}} : Vec{};
              }};
  if (!weight.empty()) {
    std::vector<int> wo(Om->dim());
    for (int i = 0; i < Om->dim(); ++i)
      for (std::size_t j = 2; j < SO->key(i).size(); ++j) wo[i] += weight.at(SO->key(i)[j]);
    r.rectified_weight.assign(B->dim(), 0);
    for (int i = 0; i < B->dim(); ++i)
      for (std::size_t j = 2; j < SB->key(i).size(); ++j) r.rectified_weight[i] += wo[SB->key(i)[j]];
    r.weight = std::move(weight);
    r.wcap = cap;
  }
  return r;
}

Classification classify(const AlgRectification& r) {
  if (r.weight.empty()) return classify(r.unit);
  return classify_weighted(first_component(r.unit), r.unit.src->complex(), r.weight, r.unit.tgt->complex(),
                           r.rectified_weight, r.wcap);
}

Classification classify(const CoalgRectification& r) {
  if (r.weight.empty()) return classify(r.counit);
  return classify_weighted(first_component(r.counit), r.counit.src->complex(), r.rectified_weight,
                           r.counit.tgt->complex(), r.weight, r.wcap);
}

}  // namespace operadiq
