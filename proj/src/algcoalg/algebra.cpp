#include "operadiq/algcoalg.hpp"

#include <algorithm>
#include <random>

namespace operadiq {

namespace {

Report fail(int n, std::string d, int cap) { return {false, n, std::move(d), cap}; }

std::string tuple_str(const GradedBasis& b, const std::vector<int>& xs) {
  std::string s = "(";
  for (std::size_t j = 0; j < xs.size(); ++j) s += (j ? "," : "") + b.label(xs[j]);
  return s + ")";
}

std::vector<Vec> units(const std::vector<int>& xs) {
  std::vector<Vec> v;
  for (int x : xs) v.push_back(Vec{{x, Q(1)}});
  return v;
}

// every tuple of length n, or seeded samples when there are too many
std::vector<std::vector<int>> tuples(int dim, int n, const Sampling& s, unsigned long long salt) {
  std::vector<std::vector<int>> out;
  if (dim == 0) return out;
  long double total = 1;
  for (int j = 0; j < n; ++j) total *= dim;
  if (total <= static_cast<long double>(s.exhaustive_limit)) {
    std::vector<int> t(n, 0);
    while (true) {
      out.push_back(t);
      int j = n - 1;
      while (j >= 0 && ++t[j] == dim) t[j--] = 0;
      if (j < 0) break;
    }
    return out;
  }
  std::mt19937_64 rng(s.seed * 1000003ULL + salt);
  std::uniform_int_distribution<int> pick(0, dim - 1);
  for (int r = 0; r < s.samples; ++r) {
    std::vector<int> t(n);
    for (auto& x : t) x = pick(rng);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Perm> test_perms(int n) {
  if (n <= 3) return all_permutations(n);
  std::vector<Perm> out;
  for (int j = 0; j + 1 < n; ++j) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::swap(p[j], p[j + 1]);
    out.push_back(p);
  }
  Perm cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  out.push_back(cyc);
  return out;
}

using CompKey = std::vector<int>;  // {m, a, i, k, b, y_1..y_n}

// canonical form of (a ∘_i b) ⊗ y in (C ∘_(1) C)(n) ⊗_{S_n} D^{⊗n}
int canon_composite(const Collection& C, const GradedBasis& D, CompKey& key) {
  if (C.mode() == Mode::NS) return 1;
  const int m = key[0], i = key[2], k = key[3];
  int a = key[1], b = key[4];
  const int n = m + k - 1;
  std::vector<int> ys(key.begin() + 5, key.end());
  std::vector<int> inner(ys.begin() + (i - 1), ys.begin() + (i - 1 + k)), idegs = degrees_of(D, inner);
  int sign = canon_coinv(C, k, b, inner, idegs);
  if (!sign) return 0;
  const int db = C.degree(k, b);
  int block_deg = db;
  for (int d : idegs) block_deg += d;
  std::vector<int> outer, odegs;
  for (int r = 1; r <= m; ++r) {
    if (r < i) outer.push_back(ys[r - 1]);
    else if (r == i) outer.push_back(-1);
    else outer.push_back(ys[r + k - 2]);
    odegs.push_back(r == i ? block_deg : D.degree(outer.back()));
  }
  sign *= sign_of(static_cast<long long>(db) * sum_degrees(D, ys, 0, i - 1));
  int s2 = canon_coinv(C, m, a, outer, odegs);
  if (!s2) return 0;
  sign *= s2;
  int i2 = static_cast<int>(std::find(outer.begin(), outer.end(), -1) - outer.begin()) + 1;
  CompKey out{m, a, i2, k, b};
  long long before = 0;
  for (int r = 1; r <= m; ++r) {
    if (r == i2) out.insert(out.end(), inner.begin(), inner.end());
    else {
      out.push_back(outer[r - 1]);
      if (r < i2) before += D.degree(outer[r - 1]);
    }
  }
  sign *= sign_of(db * before);
  (void)n;
  key = std::move(out);
  return sign;
}

// d on C(n) ⊗ D^{⊗n} for one key
Elt key_differential(const Collection& C, const ChainComplex& D, const Key& k) {
  Elt out;
  const int n = k[0];
  for (const auto& [c2, q] : C.component(n).d.col(k[1])) {
    Key kk = k;
    kk[1] = c2;
    add_to(out, kk, q);
  }
  long long e = C.degree(n, k[1]);
  for (int j = 0; j < n; ++j) {
    for (const auto& [y2, q] : D.d.col(k[2 + j])) {
      Key kk = k;
      kk[2 + j] = y2;
      add_to(out, kk, q * sign_of(e));
    }
    e += D.basis->degree(k[2 + j]);
  }
  return out;
}

}  // namespace

int canon_key(const Collection& C, const GradedBasis& D, Key& k) {
  const int n = k[0];
  int c = k[1];
  std::vector<int> items(k.begin() + 2, k.end()), degs = degrees_of(D, items);
  int s = canon_coinv(C, n, c, items, degs);
  k = Key{n, c};
  k.insert(k.end(), items.begin(), items.end());
  return s;
}

Elt canonical_elt(const Collection& C, const GradedBasis& D, const Elt& e) {
  if (C.mode() == Mode::NS) return e;
  Elt out;
  for (const auto& [k, q] : e) {
    Key kk = k;
    int s = canon_key(C, D, kk);
    if (s) add_to(out, kk, q * s);
  }
  return out;
}

// ---- algebras ----

PAlgebra::PAlgebra(OperadPtr P, ChainComplex A, Gamma g, std::string name)
    : P_(std::move(P)), A_(std::move(A)), g_(std::move(g)), name_(std::move(name)) {}

Vec PAlgebra::gamma(int n, int p, const std::vector<int>& xs) const {
  if (static_cast<int>(xs.size()) != n) throw ValidationError("gamma: wrong number of inputs");
  if (n == 1) {
    if (p != 0) throw ValidationError("gamma: arity one is the identity");
    return Vec{{xs[0], Q(1)}};
  }
  if (n > P_->cap()) throw CapOverflow("algebra " + name_ + ": arity " + std::to_string(n) + " beyond cap");
  Key k{n, p};
  k.insert(k.end(), xs.begin(), xs.end());
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;
  Vec v = g_(n, p, xs);
  cache_.emplace(std::move(k), v);
  return v;
}

Vec PAlgebra::gamma_vec(int n, const Vec& p, const std::vector<Vec>& xs) const {
  Vec out;
  if (p.empty()) return out;
  for (const auto& v : xs)
    if (v.empty()) return out;
  std::vector<int> cur(n);
  std::function<void(int, const Q&)> go = [&](int j, const Q& c) {
    if (j == n) {
      for (const auto& [pi, q] : p) axpy(out, c * q, gamma(n, pi, cur));
      return;
    }
    for (const auto& [x, q] : xs[j]) {
      cur[j] = x;
      go(j + 1, c * q);
    }
  };
  go(0, Q(1));
  return out;
}

Report check_algebra(const PAlgebra& A, const Sampling& s) {
  const Operad& P = A.op();
  const GradedBasis& B = A.basis();
  const int cap = P.cap();
  for (int n = 2; n <= cap; ++n) {
    for (const auto& xs : tuples(A.dim(), n, s, static_cast<unsigned long long>(n))) {
      auto xv = units(xs);
      for (int p = 0; p < P.size(n); ++p) {
        const int dp = P.degree(n, p);
        Vec lhs = A.d(A.gamma(n, p, xs));
        Vec rhs = A.gamma_vec(n, P.component(n).d.col(p), xv);
        long long e = dp;
        for (int j = 0; j < n; ++j) {
          auto xd = xv;
          xd[j] = A.d(xv[j]);
          axpy(rhs, Q(sign_of(e)), A.gamma_vec(n, Vec{{p, Q(1)}}, xd));
          e += B.degree(xs[j]);
        }
        if (lhs != rhs) return fail(n, "γ is not a chain map at " + P.label(n, p) + tuple_str(B, xs), cap);
        if (P.mode() == Mode::SYM) {
          for (const auto& rho : test_perms(n)) {
            Signed a = P.act(n, p, rho);
            std::vector<int> ys(n);
            for (int j = 0; j < n; ++j) ys[rho[j]] = xs[j];
            Vec r;
            if (a.sign)
              r = scaled(A.gamma(n, a.idx, ys), Q(a.sign * koszul_sign(degrees_of(B, xs), inverse(rho))));
            if (r != A.gamma(n, p, xs)) return fail(n, "γ is not equivariant at " + P.label(n, p) + tuple_str(B, xs), cap);
          }
        }
      }
      // associativity along every partial composition landing in arity n
      for (int m = 2; m < n; ++m) {
        const int k = n - m + 1;
        for (int a = 0; a < P.size(m); ++a)
          for (int b = 0; b < P.size(k); ++b)
            for (int i = 1; i <= m; ++i) {
              Vec lhs = A.gamma_vec(n, P.compose_i(m, a, i, k, b), xv);
              std::vector<int> inner(xs.begin() + (i - 1), xs.begin() + (i - 1 + k));
              std::vector<Vec> outer;
              for (int j = 1; j < i; ++j) outer.push_back(xv[j - 1]);
              outer.push_back(A.gamma(k, b, inner));
              for (int j = i + k; j <= n; ++j) outer.push_back(xv[j - 1]);
              Q sg = sign_of(static_cast<long long>(P.degree(k, b)) * sum_degrees(B, xs, 0, i - 1));
              Vec rhs = scaled(A.gamma_vec(m, Vec{{a, Q(1)}}, outer), sg);
              if (lhs != rhs)
                return fail(n, "γ is not associative at " + P.label(m, a) + "∘" + std::to_string(i) + P.label(k, b) +
                                   tuple_str(B, xs),
                            cap);
            }
      }
    }
  }
  return {true, 0, "", cap};
}

// ---- coalgebras ----

CCoalgebra::CCoalgebra(CooperadPtr C, ChainComplex D, Delta delta, std::string name)
    : C_(std::move(C)), D_(std::move(D)), delta_(std::move(delta)), name_(std::move(name)) {
  cache_.resize(D_.basis->size());
}

const Elt& CCoalgebra::delta(int x) const {
  auto& slot = cache_.at(x);
  if (!slot) slot = delta_(x);
  return *slot;
}

Elt CCoalgebra::delta_n(int x, int n) const {
  Elt out;
  for (const auto& [k, q] : delta(x))
    if (k[0] == n) out.emplace(k, q);
  return out;
}

int CCoalgebra::bound(int x) const {
  int b = 1;
  for (const auto& [k, q] : delta(x)) b = std::max(b, k[0]);
  return b;
}

Report check_coalgebra(const CCoalgebra& D) {
  const Cooperad& C = D.coop();
  const GradedBasis& B = D.basis();
  const int cap = C.cap();
  for (int x = 0; x < D.dim(); ++x) {
    for (const auto& [k, q] : D.delta(x)) {
      if (k[0] < 2 || k[0] > cap || static_cast<int>(k.size()) != k[0] + 2)
        return fail(k[0], "malformed coproduct term of " + B.label(x), cap);
      int deg = C.degree(k[0], k[1]);
      for (int j = 0; j < k[0]; ++j) deg += B.degree(k[2 + j]);
      if (deg != B.degree(x)) return fail(k[0], "coproduct does not preserve degree at " + B.label(x), cap);
      Key kk = k;
      if (canon_key(C, B, kk) != 1 || kk != k) return fail(k[0], "coproduct term not in canonical form at " + B.label(x), cap);
    }
    // chain map
    Elt lhs;
    for (const auto& [x2, q] : D.complex().d.col(x)) axpy(lhs, q, D.delta(x2));
    Elt rhs;
    for (const auto& [k, q] : D.delta(x)) axpy(rhs, q, key_differential(C, D.complex(), k));
    rhs = canonical_elt(C, B, rhs);
    if (lhs != rhs) return fail(D.bound(x), "coproduct is not a chain map at " + B.label(x), cap);
    // coassociativity of the infinitesimal pieces
    Lin<CompKey> L, R;
    for (const auto& [k, q] : D.delta(x)) {
      const int n = k[0];
      std::vector<int> ys(k.begin() + 2, k.end());
      auto ydeg = degrees_of(B, ys);
      for (const auto& t : C.decompose(n, k[1])) {
        auto outer = outer_labels(n, t.S);
        std::vector<int> order;
        int slot = 0;
        for (std::size_t r = 0; r < outer.size(); ++r) {
          if (outer[r] == t.S.front()) {
            slot = static_cast<int>(r) + 1;
            for (int l : t.S) order.push_back(l - 1);
          } else {
            order.push_back(outer[r] - 1);
          }
        }
        CompKey ck{t.m, t.a, slot, t.k, t.b};
        for (int o : order) ck.push_back(ys[o]);
        int s = koszul_sign(ydeg, order) * canon_composite(C, B, ck);
        if (s) add_to(L, ck, q * t.coef * s);
      }
      long long before = 0;
      for (int j = 1; j <= n; ++j) {
        const int yj = ys[j - 1];
        for (const auto& [k2, q2] : D.delta(yj)) {
          const int kk = k2[0];
          if (n + kk - 1 > cap) return fail(n + kk - 1, "iterated coproduct of " + B.label(x) + " leaves the arity cap", cap);
          CompKey ck{n, k[1], j, kk, k2[1]};
          for (int r = 1; r < j; ++r) ck.push_back(ys[r - 1]);
          for (int r = 0; r < kk; ++r) ck.push_back(k2[2 + r]);
          for (int r = j + 1; r <= n; ++r) ck.push_back(ys[r - 1]);
          int s = sign_of(static_cast<long long>(C.degree(kk, k2[1])) * before) * canon_composite(C, B, ck);
          if (s) add_to(R, ck, q * q2 * s);
        }
        before += B.degree(yj);
      }
    }
    if (L != R) return fail(D.bound(x), "coproduct is not coassociative at " + B.label(x), cap);
  }
  return {true, 0, "", cap};
}

// ---- algebras over cobar operads ----

std::optional<Peel> peel_tree(const TreeSpace& ts, int n, int idx) {
  const Tree& T = ts.tree(n, idx);
  if (T.nodes.empty()) return std::nullopt;
  const TreeNode& root = T.nodes[T.root];
  int slot = -1;
  for (int j = 0; j < root.k; ++j)
    if (root.ch[j] >= 0) slot = j;
  if (slot < 0) return std::nullopt;
  const int bnode = root.ch[slot];
  auto ls = ts.leaf_sets(T);
  const std::vector<int>& L = ls[bnode];
  const int k = static_cast<int>(L.size());
  const int m = n - k + 1;
  // nodes of the subtree in tensor order
  std::vector<char> inB(T.nodes.size(), 0);
  std::function<void(int)> mark = [&](int v) {
    inB[v] = 1;
    for (int c : T.nodes[v].ch)
      if (c >= 0) mark(c);
  };
  mark(bnode);
  auto outer = outer_labels(n, L);
  std::vector<int> renA(T.nodes.size(), -1), renB(T.nodes.size(), -1);
  Tree A, B;
  for (std::size_t v = 0; v < T.nodes.size(); ++v) {
    if (inB[v]) renB[v] = static_cast<int>(B.nodes.size()), B.nodes.push_back(T.nodes[v]);
    else renA[v] = static_cast<int>(A.nodes.size()), A.nodes.push_back(T.nodes[v]);
  }
  A.root = renA[T.root];
  B.root = renB[bnode];
  for (auto& nd : A.nodes)
    for (auto& c : nd.ch) {
      if (c == bnode) c = -L.front();
      if (c < 0) c = -(static_cast<int>(std::lower_bound(outer.begin(), outer.end(), -c) - outer.begin()) + 1);
      else c = renA[c];
    }
  for (auto& nd : B.nodes)
    for (auto& c : nd.ch) {
      if (c < 0) c = -(static_cast<int>(std::lower_bound(L.begin(), L.end(), -c) - L.begin()) + 1);
      else c = renB[c];
    }
  // the node order A then B agrees with the tensor order of T
  std::vector<int> order;
  for (std::size_t v = 0; v < T.nodes.size(); ++v)
    if (!inB[v]) order.push_back(static_cast<int>(v));
  for (std::size_t v = 0; v < T.nodes.size(); ++v)
    if (inB[v]) order.push_back(static_cast<int>(v));
  std::vector<int> degs;
  for (const auto& nd : T.nodes) degs.push_back(ts.gens(nd.k).degree(nd.dec));
  int s0 = koszul_sign(degs, order);
  Signed sa = ts.canonical(A), sb = ts.canonical(B);
  if (!sa.sign || !sb.sign) throw ValidationError("peel_tree: subtree vanished");
  Signed chk = ts.graft(m, sa.idx, L, k, sb.idx);
  if (chk.idx != idx || chk.sign != sa.sign * sb.sign * s0) throw ValidationError("peel_tree: graft disagrees with tree");
  return Peel{chk.sign, m, sa.idx, L, k, sb.idx};
}

AlgPtr cobar_algebra(const std::shared_ptr<const CobarOperad>& om, ChainComplex A, GenAction act, std::string name) {
  auto holder = std::make_shared<const PAlgebra*>(nullptr);
  const TreeSpace* ts = &om->trees();
  const GradedBasis* B = A.basis.get();
  auto g = [om, ts, B, act, holder](int n, int t, const std::vector<int>& xs) -> Vec {
    const PAlgebra& self = **holder;
    auto pl = peel_tree(*ts, n, t);
    if (!pl) {
      const TreeNode& nd = ts->tree(n, t).nodes.front();
      return act(nd.k, nd.dec, xs);
    }
    // (A ∘_S B) ⊗ x = ±(A ∘_i B) ⊗ x' with the block moved into place
    auto outer = outer_labels(n, pl->S);
    std::vector<int> order, before;
    int slot = 0;
    for (std::size_t r = 0; r < outer.size(); ++r) {
      if (outer[r] == pl->S.front()) {
        slot = static_cast<int>(r);
        for (int l : pl->S) order.push_back(l - 1);
      } else {
        order.push_back(outer[r] - 1);
      }
    }
    int sign = pl->sign * koszul_sign(degrees_of(*B, xs), order);
    long long bdeg = 0;
    for (int r = 0; r < slot; ++r) bdeg += B->degree(xs[outer[r] - 1]);
    const Tree& bt = ts->tree(pl->k, pl->b);
    sign *= sign_of(bdeg * ts->degree(bt));
    std::vector<int> inner;
    for (int l : pl->S) inner.push_back(xs[l - 1]);
    std::vector<Vec> args;
    for (std::size_t r = 0; r < outer.size(); ++r) {
      if (static_cast<int>(r) == slot) args.push_back(self.gamma(pl->k, pl->b, inner));
      else args.push_back(Vec{{xs[outer[r] - 1], Q(1)}});
    }
    return scaled(self.gamma_vec(pl->m, Vec{{pl->a, Q(1)}}, args), Q(sign));
  };
  auto alg = std::make_shared<PAlgebra>(om, std::move(A), g, std::move(name));
  *holder = alg.get();
  return alg;
}

OperadMorphism cobar_morphism(const std::shared_ptr<const CobarOperad>& om, const OperadPtr& Qp,
                              const std::function<Vec(int k, int e)>& gen) {
  const TreeSpace& ts = om->trees();
  ArityMap f;
  f.degree = 0;
  f.comp.resize(om->cap() + 1);
  for (int n = 1; n <= om->cap(); ++n) {
    f.comp[n] = LinMap(om->component(n).basis, Qp->component(n).basis, 0);
    for (int t = 0; t < om->size(n); ++t) {
      if (n == 1) {
        f.comp[n].set(t, Vec{{0, Q(1)}});
        continue;
      }
      auto pl = peel_tree(ts, n, t);
      if (!pl) {
        const TreeNode& nd = ts.tree(n, t).nodes.front();
        f.comp[n].set(t, gen(nd.k, nd.dec));
        continue;
      }
      Vec v = Qp->compose_vec(pl->m, f.comp[pl->m].col(pl->a), pl->S, pl->k, f.comp[pl->k].col(pl->b));
      f.comp[n].set(t, scaled(v, Q(pl->sign)));
    }
  }
  return OperadMorphism{om, Qp, f};
}

Vec ell(const PAlgebra& g, const std::vector<int>& xs) {
  auto om = dynamic_cast<const CobarOperad*>(&g.op());
  if (!om) throw ValidationError("ell: not an algebra over a cobar operad");
  const int n = static_cast<int>(xs.size());
  if (n == 1) return g.d(Vec{{xs[0], Q(1)}});
  return g.gamma(n, om->trees().corolla(n, 0), xs);
}

Vec ell_vec(const PAlgebra& g, const std::vector<Vec>& xs) {
  auto om = dynamic_cast<const CobarOperad*>(&g.op());
  if (!om) throw ValidationError("ell: not an algebra over a cobar operad");
  const int n = static_cast<int>(xs.size());
  if (n == 1) return g.d(xs[0]);
  return g.gamma_vec(n, Vec{{om->trees().corolla(n, 0), Q(1)}}, xs);
}

}  // namespace operadiq
