#include "operadiq/trees.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace operadiq {

TreeSpace::TreeSpace(Mode mode, int cap, std::vector<Basis> gens, Act act)
    : mode_(mode), cap_(cap), gens_(std::move(gens)), act_(std::move(act)) {
  gens_.resize(cap + 1);
  for (auto& g : gens_)
    if (!g) g = std::make_shared<GradedBasis>(-1, 1);
  bases_.resize(cap + 1);
  trees_.resize(cap + 1);
  {
    auto b = std::make_shared<GradedBasis>(-1, 1);
    b->add("id", 0);
    bases_[1] = b;
    trees_[1].push_back(Tree{});
  }
  for (int n = 2; n <= cap; ++n) {
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    std::vector<Tree> ts;
    enumerate(labels, ts);
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& t : ts) {
      int d = degree(t);
      lo = first ? d : std::min(lo, d);
      hi = first ? d : std::max(hi, d);
      first = false;
    }
    auto b = std::make_shared<GradedBasis>(lo - 1, hi + 1);
    for (const auto& t : ts) b->add(label(t), degree(t));
    bases_[n] = b;
    trees_[n] = std::move(ts);
  }
}

namespace {

// set partitions of `labels` into at least two blocks, blocks ordered by minimum
void set_partitions(const std::vector<int>& labels, std::vector<std::vector<std::vector<int>>>& out) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> rgs(n, 0);
  while (true) {
    int nb = *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (nb >= 2) {
      std::vector<std::vector<int>> blocks(nb);
      for (int i = 0; i < n; ++i) blocks[rgs[i]].push_back(labels[i]);
      out.push_back(blocks);
    }
    int i = n - 1;
    for (; i > 0; --i) {
      int mx = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= mx) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
}

void compositions(const std::vector<int>& labels, std::vector<std::vector<std::vector<int>>>& out) {
  const int n = static_cast<int>(labels.size());
  for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
    std::vector<std::vector<int>> blocks(1);
    for (int i = 0; i < n; ++i) {
      blocks.back().push_back(labels[i]);
      if (i + 1 < n && (mask >> i & 1)) blocks.emplace_back();
    }
    out.push_back(blocks);
  }
}

void append_subtree(Tree& into, const Tree& sub, int parent, int slot) {
  const int off = static_cast<int>(into.nodes.size());
  for (auto nd : sub.nodes) {
    for (auto& c : nd.ch)
      if (c >= 0) c += off;
    into.nodes.push_back(nd);
  }
  into.nodes[parent].ch[slot] = off + sub.root;
}

}  // namespace

void TreeSpace::enumerate(const std::vector<int>& labels, std::vector<Tree>& out) const {
  std::vector<std::vector<std::vector<int>>> parts;
  if (mode_ == Mode::SYM) set_partitions(labels, parts);
  else compositions(labels, parts);
  for (const auto& blocks : parts) {
    const int k = static_cast<int>(blocks.size());
    if (k > cap_ || gens_[k]->size() == 0) continue;
    std::vector<std::vector<Tree>> subs(k);
    bool empty = false;
    for (int j = 0; j < k; ++j) {
      if (blocks[j].size() == 1) continue;
      enumerate(blocks[j], subs[j]);
      if (subs[j].empty()) empty = true;
    }
    if (empty) continue;
    for (int e = 0; e < static_cast<int>(gens_[k]->size()); ++e) {
      std::vector<std::size_t> pick(k, 0);
      while (true) {
        Tree t;
        TreeNode root{k, e, std::vector<int>(k)};
        for (int j = 0; j < k; ++j) root.ch[j] = -blocks[j][0];
        t.nodes.push_back(root);
        for (int j = 0; j < k; ++j)
          if (blocks[j].size() > 1) append_subtree(t, subs[j][pick[j]], 0, j);
        out.push_back(std::move(t));
        int j = k - 1;
        for (; j >= 0; --j) {
          if (blocks[j].size() == 1) continue;
          if (++pick[j] < subs[j].size()) break;
          pick[j] = 0;
        }
        if (j < 0) break;
      }
    }
  }
}

int TreeSpace::degree(const Tree& t) const {
  int d = 0;
  for (const auto& nd : t.nodes) d += gens_[nd.k]->degree(nd.dec);
  return d;
}

std::string TreeSpace::label(const Tree& t) const {
  if (t.nodes.empty()) return "id";
  std::function<std::string(int)> go = [&](int v) {
    const auto& nd = t.nodes[v];
    std::string s = "[" + gens_[nd.k]->label(nd.dec) + "](";
    for (int j = 0; j < nd.k; ++j) {
      if (j) s += ",";
      s += nd.ch[j] < 0 ? std::to_string(-nd.ch[j]) : go(nd.ch[j]);
    }
    return s + ")";
  };
  return go(t.root);
}

int TreeSpace::arity(const Tree& t) const {
  if (t.nodes.empty()) return 1;
  int n = 1;
  for (const auto& nd : t.nodes) n += nd.k - 1;
  return n;
}

std::vector<std::vector<int>> TreeSpace::leaf_sets(const Tree& t) const {
  std::vector<std::vector<int>> ls(t.nodes.size());
  std::function<void(int)> go = [&](int v) {
    for (int c : t.nodes[v].ch) {
      if (c < 0) ls[v].push_back(-c);
      else {
        go(c);
        ls[v].insert(ls[v].end(), ls[c].begin(), ls[c].end());
      }
    }
    std::sort(ls[v].begin(), ls[v].end());
  };
  if (!t.nodes.empty()) go(t.root);
  return ls;
}

Signed TreeSpace::canonical(Tree t) const {
  if (t.nodes.empty()) return {1, 0};
  const int n = arity(t);
  if (n > cap_) throw CapOverflow("tree beyond arity cap");
  int sign = 1;
  std::vector<int> minleaf(t.nodes.size(), INT_MAX);
  std::function<int(int)> low = [&](int v) {
    int m = INT_MAX;
    for (int c : t.nodes[v].ch) m = std::min(m, c < 0 ? -c : low(c));
    return minleaf[v] = m;
  };
  low(t.root);
  if (mode_ == Mode::SYM) {
    for (auto& nd : t.nodes) {
      auto key = [&](int c) { return c < 0 ? -c : minleaf[c]; };
      std::vector<int> order(nd.k);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int x, int y) { return key(nd.ch[x]) < key(nd.ch[y]); });
      bool sorted = true;
      for (int j = 0; j < nd.k; ++j) sorted &= order[j] == j;
      if (sorted) continue;
      Perm rho(nd.k);
      std::vector<int> nch(nd.k);
      for (int pos = 0; pos < nd.k; ++pos) {
        rho[order[pos]] = pos;
        nch[pos] = nd.ch[order[pos]];
      }
      Signed s = act_(nd.k, nd.dec, rho);
      if (!s.sign) return {0, 0};
      sign *= s.sign;
      nd.dec = s.idx;
      nd.ch = nch;
    }
  }
  std::vector<int> pre;
  std::function<void(int)> walk = [&](int v) {
    pre.push_back(v);
    for (int c : t.nodes[v].ch)
      if (c >= 0) walk(c);
  };
  walk(t.root);
  if (pre.size() != t.nodes.size()) throw ValidationError("tree is not connected");
  std::vector<int> degs(t.nodes.size());
  for (std::size_t v = 0; v < t.nodes.size(); ++v) degs[v] = gens_[t.nodes[v].k]->degree(t.nodes[v].dec);
  sign *= koszul_sign(degs, pre);
  std::vector<int> where(t.nodes.size());
  for (std::size_t p = 0; p < pre.size(); ++p) where[pre[p]] = static_cast<int>(p);
  Tree c;
  for (int v : pre) {
    TreeNode nd = t.nodes[v];
    for (auto& x : nd.ch)
      if (x >= 0) x = where[x];
    c.nodes.push_back(nd);
  }
  int idx = bases_[n]->find(label(c));
  if (idx < 0) throw ValidationError("tree outside the enumerated basis: " + label(c));
  return {sign, idx};
}

Signed TreeSpace::graft(int m, int t1, const std::vector<int>& S, int k, int t2) const {
  const int n = m + k - 1;
  if (n > cap_) throw CapOverflow("graft beyond arity cap");
  if (mode_ == Mode::NS && !is_interval(S)) throw ValidationError("non-interval graft in NS mode");
  auto outer = outer_labels(n, S);
  const Tree& A = trees_[m].at(t1);
  const Tree& B = trees_[k].at(t2);
  if (A.nodes.empty()) {
    Tree b = B;
    for (auto& nd : b.nodes)
      for (auto& c : nd.ch)
        if (c < 0) c = -S[-c - 1];
    return canonical(b);
  }
  Tree t = A;
  const int off = static_cast<int>(A.nodes.size());
  for (auto& nd : t.nodes)
    for (auto& c : nd.ch)
      if (c < 0) {
        int l = outer[-c - 1];
        c = (l == S.front() && !B.nodes.empty()) ? off + B.root : -l;
      }
  for (auto nd : B.nodes) {
    for (auto& c : nd.ch) c = c < 0 ? -S[-c - 1] : c + off;
    t.nodes.push_back(nd);
  }
  return canonical(t);
}

Signed TreeSpace::relabel(int n, int idx, const Perm& rho) const {
  Tree t = trees_.at(n).at(idx);
  for (auto& nd : t.nodes)
    for (auto& c : nd.ch)
      if (c < 0) c = -(rho[-c - 1] + 1);
  return canonical(t);
}

int TreeSpace::corolla(int k, int e) const {
  Tree t;
  TreeNode nd{k, e, std::vector<int>(k)};
  for (int j = 0; j < k; ++j) nd.ch[j] = -(j + 1);
  t.nodes.push_back(nd);
  return bases_.at(k)->at(label(t));
}

// ---- cobar ----

namespace {

std::vector<Basis> shifted_gens(const Collection& C, int shift, const GenNamer& namer) {
  std::vector<Basis> g(C.cap() + 1);
  for (int k = 2; k <= C.cap(); ++k) {
    const auto& b = C.basis(k);
    auto e = std::make_shared<GradedBasis>(b.dmin() + shift, b.dmax() + shift);
    for (std::size_t i = 0; i < b.size(); ++i) {
      const auto& l = b.label(static_cast<int>(i));
      std::string name = namer ? namer(k, l) : (shift < 0 ? "s⁻¹" : "s") + l;
      e->add(name, b.degree(static_cast<int>(i)) + shift);
    }
    g[k] = e;
  }
  return g;
}

// positions of t's vertices renumbered so that a new vertex can be inserted at `at`
Tree with_inserted(const Tree& t, int at, TreeNode fresh, int& fresh_index) {
  auto shift = [&](int v) { return v >= at ? v + 1 : v; };
  Tree out;
  out.root = shift(t.root);
  out.nodes.resize(t.nodes.size() + 1);
  for (std::size_t v = 0; v < t.nodes.size(); ++v) {
    TreeNode nd = t.nodes[v];
    for (auto& c : nd.ch)
      if (c >= 0) c = shift(c);
    out.nodes[shift(static_cast<int>(v))] = nd;
  }
  for (auto& c : fresh.ch)
    if (c >= 0) c = shift(c);
  out.nodes[at] = fresh;
  fresh_index = at;
  return out;
}

}  // namespace

CobarOperad::CobarOperad(CooperadPtr C, std::string name, GenNamer namer)
    : Operad(C->mode(), C->cap(), name.empty() ? "Ω" + C->name() : std::move(name)), C_(std::move(C)) {
  const Cooperad& Cr = *C_;
  const Cooperad* cp = C_.get();
  ts_ = std::make_unique<TreeSpace>(mode(), cap(), shifted_gens(Cr, -1, namer),
                                    [cp](int k, int e, const Perm& rho) { return cp->act(k, e, rho); });
  for (int n = 1; n <= cap(); ++n) {
    Basis B = ts_->basis(n);
    LinMap d(B, B, -1);
    for (int idx = 0; idx < static_cast<int>(B->size()); ++idx) {
      const Tree& T = ts_->tree(n, idx);
      Vec out;
      long long prefix = 0;
      for (std::size_t v = 0; v < T.nodes.size(); ++v) {
        const TreeNode& nd = T.nodes[v];
        const Q pre = sign_of(prefix);
        // d(s⁻¹c) = -s⁻¹ d_C c - Σ (-1)^{|a|} s⁻¹a ∘_S s⁻¹b
        for (const auto& [c2, q] : Cr.component(nd.k).d.col(nd.dec)) {
          Tree t2 = T;
          t2.nodes[v].dec = c2;
          Signed s = ts_->canonical(t2);
          if (s.sign) add_to(out, s.idx, -pre * q * s.sign);
        }
        for (const auto& term : Cr.decompose(nd.k, nd.dec)) {
          auto outer = outer_labels(nd.k, term.S);
          TreeNode bnode{term.k, term.b, {}};
          for (int s : term.S) bnode.ch.push_back(nd.ch[s - 1]);
          int bi = 0;
          Tree t2 = with_inserted(T, static_cast<int>(v) + 1, bnode, bi);
          TreeNode& anode = t2.nodes[v];
          std::vector<int> ach;
          for (int o : outer) {
            if (o == term.S.front()) ach.push_back(bi);
            else {
              int c = nd.ch[o - 1];
              ach.push_back(c >= 0 && c >= static_cast<int>(v) + 1 ? c + 1 : c);
            }
          }
          anode.k = term.m;
          anode.dec = term.a;
          anode.ch = ach;
          Signed s = ts_->canonical(t2);
          if (s.sign) add_to(out, s.idx, -pre * term.coef * sign_of(Cr.degree(term.m, term.a)) * s.sign);
        }
        prefix += ts_->gens(nd.k).degree(nd.dec);
      }
      d.set(idx, out);
    }
    set_component(n, ChainComplex(B, d));
  }
}

Vec CobarOperad::compose(int m, int a, const std::vector<int>& S, int k, int b) const {
  Signed s = ts_->graft(m, a, S, k, b);
  if (!s.sign) return {};
  return Vec{{s.idx, Q(s.sign)}};
}

Signed CobarOperad::act(int n, int i, const Perm& rho) const {
  if (mode() == Mode::NS) return Operad::act(n, i, rho);
  return ts_->relabel(n, i, rho);
}

// ---- bar ----

BarCooperad::BarCooperad(OperadPtr P) : Cooperad(P->mode(), P->cap(), "B̄" + P->name()), P_(std::move(P)) {
  const Operad& Pr = *P_;
  const Operad* pp = P_.get();
  ts_ = std::make_unique<TreeSpace>(mode(), cap(), shifted_gens(Pr, 1, {}),
                                    [pp](int k, int e, const Perm& rho) { return pp->act(k, e, rho); });
  dec_.resize(cap() + 1);
  for (int n = 1; n <= cap(); ++n) {
    Basis B = ts_->basis(n);
    LinMap d(B, B, -1);
    dec_[n].resize(B->size());
    for (int idx = 0; idx < static_cast<int>(B->size()); ++idx) {
      const Tree& T = ts_->tree(n, idx);
      const int p = static_cast<int>(T.nodes.size());
      std::vector<int> degs(p);
      for (int v = 0; v < p; ++v) degs[v] = ts_->gens(T.nodes[v].k).degree(T.nodes[v].dec);
      auto ls = ts_->leaf_sets(T);
      Vec out;
      long long prefix = 0;
      for (int v = 0; v < p; ++v) {
        const TreeNode& nd = T.nodes[v];
        for (const auto& [p2, q] : Pr.component(nd.k).d.col(nd.dec)) {
          Tree t2 = T;
          t2.nodes[v].dec = p2;
          Signed s = ts_->canonical(t2);
          if (s.sign) add_to(out, s.idx, -Q(sign_of(prefix)) * q * s.sign);
        }
        // contract each edge v -> w
        for (int slot = 0; slot < nd.k; ++slot) {
          int w = nd.ch[slot];
          if (w < 0) continue;
          const TreeNode& wn = T.nodes[w];
          std::vector<int> order;
          for (int u = 0; u <= v; ++u) order.push_back(u);
          order.push_back(w);
          for (int u = v + 1; u < p; ++u)
            if (u != w) order.push_back(u);
          int sgn = koszul_sign(degs, order) * sign_of(prefix) * sign_of(Pr.degree(nd.k, nd.dec));
          std::vector<int> merged;
          std::vector<int> S;
          if (mode() == Mode::SYM) {
            merged = nd.ch;
            merged.erase(merged.begin() + slot);
            merged.insert(merged.end(), wn.ch.begin(), wn.ch.end());
            auto key = [&](int c) { return c < 0 ? -c : ls[c].front(); };
            std::sort(merged.begin(), merged.end(), [&](int x, int y) { return key(x) < key(y); });
            for (std::size_t j = 0; j < merged.size(); ++j)
              if (std::find(wn.ch.begin(), wn.ch.end(), merged[j]) != wn.ch.end()) S.push_back(static_cast<int>(j) + 1);
          } else {
            merged.assign(nd.ch.begin(), nd.ch.begin() + slot);
            merged.insert(merged.end(), wn.ch.begin(), wn.ch.end());
            merged.insert(merged.end(), nd.ch.begin() + slot + 1, nd.ch.end());
            S = interval(slot + 1, wn.k);
          }
          const int km = static_cast<int>(merged.size());
          Vec comp = Pr.compose(nd.k, nd.dec, S, wn.k, wn.dec);
          for (const auto& [pm, q] : comp) {
            Tree t2;
            std::vector<int> where(p, -1);
            int cnt = 0;
            for (int u = 0; u < p; ++u)
              if (u != w) where[u] = cnt++;
            for (int u = 0; u < p; ++u) {
              if (u == w) continue;
              TreeNode x = u == v ? TreeNode{km, pm, merged} : T.nodes[u];
              for (auto& c : x.ch)
                if (c >= 0) c = where[c];
              t2.nodes.push_back(x);
            }
            t2.root = where[T.root];
            Signed s = ts_->canonical(t2);
            if (s.sign) add_to(out, s.idx, Q(sgn) * q * s.sign);
          }
        }
        prefix += degs[v];
      }
      d.set(idx, out);

      // cut the full subtree at each non-root vertex
      std::vector<int> sub_end(p);
      std::function<int(int)> span = [&](int v) {
        int e = v + 1;
        for (int c : T.nodes[v].ch)
          if (c >= 0) e = std::max(e, span(c));
        return sub_end[v] = e;
      };
      if (p) span(0);
      for (int w = 1; w < p; ++w) {
        const int we = sub_end[w];
        std::vector<int> order;
        for (int u = 0; u < p; ++u)
          if (u < w || u >= we) order.push_back(u);
        for (int u = w; u < we; ++u) order.push_back(u);
        int sgn = koszul_sign(degs, order);
        const std::vector<int>& S = ls[w];
        const int k = static_cast<int>(S.size());
        const int m = n - k + 1;
        auto outer = outer_labels(n, S);
        auto rank_outer = [&](int l) { return static_cast<int>(std::lower_bound(outer.begin(), outer.end(), l) - outer.begin()) + 1; };
        auto rank_S = [&](int l) { return static_cast<int>(std::lower_bound(S.begin(), S.end(), l) - S.begin()) + 1; };
        Tree top, bot;
        std::vector<int> where(p, -1);
        int ct = 0, cb = 0;
        for (int u = 0; u < p; ++u) where[u] = (u < w || u >= we) ? ct++ : cb++;
        for (int u = 0; u < p; ++u) {
          TreeNode x = T.nodes[u];
          bool in_bot = u >= w && u < we;
          for (auto& c : x.ch) {
            if (c < 0) c = in_bot ? -rank_S(-c) : -rank_outer(-c);
            else if (c == w) c = -rank_outer(S.front());
            else c = where[c];
          }
          (in_bot ? bot : top).nodes.push_back(x);
        }
        Signed st = ts_->canonical(top), sb = ts_->canonical(bot);
        if (!st.sign || !sb.sign) continue;
        dec_[n][idx].push_back(DecTerm{Q(sgn * st.sign * sb.sign), m, st.idx, S, k, sb.idx});
      }
    }
    set_component(n, ChainComplex(B, d));
  }
}

std::vector<DecTerm> BarCooperad::decompose(int n, int c) const { return dec_.at(n).at(c); }

Signed BarCooperad::act(int n, int i, const Perm& rho) const {
  if (mode() == Mode::NS) return Cooperad::act(n, i, rho);
  return ts_->relabel(n, i, rho);
}

std::shared_ptr<const CobarOperad> cobar_operad(CooperadPtr C, std::string name, GenNamer namer) {
  return std::make_shared<CobarOperad>(std::move(C), std::move(name), std::move(namer));
}

std::shared_ptr<const BarCooperad> bar_operad(OperadPtr P) { return std::make_shared<BarCooperad>(std::move(P)); }

TwMor iota_of(const std::shared_ptr<const CobarOperad>& omega) {
  TwMor t{omega->source(), omega, zero_arity_map(*omega->source(), *omega, -1)};
  for (int k = 2; k <= omega->cap(); ++k)
    for (int e = 0; e < omega->source()->size(k); ++e) t.alpha.comp[k].add(e, omega->trees().corolla(k, e), 1);
  return t;
}

TwMor pi_of(const std::shared_ptr<const BarCooperad>& bar) {
  TwMor t{bar, bar->source(), zero_arity_map(*bar, *bar->source(), -1)};
  for (int k = 2; k <= bar->cap(); ++k)
    for (int e = 0; e < bar->source()->size(k); ++e) t.alpha.comp[k].add(bar->trees().corolla(k, e), e, 1);
  return t;
}

CooperadMorphism f_alpha(const TwMor& a, const std::shared_ptr<const BarCooperad>& bar) {
  const Cooperad& C = *a.C;
  const TreeSpace& ts = bar->trees();
  CooperadMorphism out{a.C, bar, zero_arity_map(C, *bar, 0)};
  out.f.comp[1].add(0, 0, 1);
  for (int n = 2; n <= C.cap(); ++n)
    for (int c = 0; c < C.size(n); ++c) {
      Vec img;
      for (const auto& [p, q] : a.alpha.at(n).col(c)) add_to(img, ts.corolla(n, p), q);
      for (const auto& t : C.decompose(n, c)) {
        const Vec& fa = out.f.at(t.m).col(t.a);
        for (const auto& [p, qb] : a.alpha.at(t.k).col(t.b)) {
          int cor = ts.corolla(t.k, p);
          for (const auto& [T1, qa] : fa) {
            Signed s = ts.graft(t.m, T1, t.S, t.k, cor);
            if (!s.sign) continue;
            const Tree& T = ts.tree(n, s.idx);
            auto ls = ts.leaf_sets(T);
            if (ls.back() != t.S) continue;
            add_to(img, s.idx, t.coef * qa * qb * s.sign);
          }
        }
      }
      out.f.comp[n].set(c, img);
    }
  return out;
}

std::shared_ptr<const CobarOperad> make_slie_inf(int cap) {
  return cobar_operad(make_com_dual(cap), "SLie∞", [](int k, const std::string&) { return "ℓ" + std::to_string(k); });
}

std::shared_ptr<const CobarOperad> make_sas_inf(int cap) {
  return cobar_operad(make_as_dual(cap), "SAs∞", [](int k, const std::string&) { return "m" + std::to_string(k); });
}

std::shared_ptr<const CobarOperad> make_as_inf(int cap) {
  return cobar_operad(make_as_shriek(cap), "As∞", [](int k, const std::string&) { return "m" + std::to_string(k); });
}

TwMor iota_com(int cap) { return iota_of(make_slie_inf(cap)); }

Report check_coassociativity(const CooperadPtr& C) {
  auto om = cobar_operad(C);
  for (int n = 1; n <= C->cap(); ++n) {
    const auto& cx = om->component(n);
    for (int i = 0; i < static_cast<int>(cx.basis->size()); ++i)
      if (!cx.d.apply(cx.d.col(i)).empty())
        return {false, n, "cobar differential squares to a nonzero element on " + cx.basis->label(i), C->cap()};
  }
  return {true, 0, "", C->cap()};
}

}  // namespace operadiq
