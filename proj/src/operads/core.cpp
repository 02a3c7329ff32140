#include "operadiq/operads.hpp"

#include <algorithm>
#include <numeric>

namespace operadiq {

std::vector<int> outer_labels(int n, const std::vector<int>& S) {
  std::vector<char> in(n + 1, 0);
  for (int s : S) in.at(s) = 1;
  std::vector<int> out;
  const int lo = S.front();
  for (int l = 1; l <= n; ++l)
    if (!in[l] || l == lo) out.push_back(l);
  return out;
}

std::vector<int> interval(int i, int k) {
  std::vector<int> S(k);
  std::iota(S.begin(), S.end(), i);
  return S;
}

bool is_interval(const std::vector<int>& S) {
  for (std::size_t j = 1; j < S.size(); ++j)
    if (S[j] != S[j - 1] + 1) return false;
  return true;
}

Collection::Collection(Mode mode, int cap, std::string name) : mode_(mode), cap_(cap), name_(std::move(name)) {
  if (cap < 1) throw ValidationError("arity cap must be at least 1");
  if (mode == Mode::SYM && cap > 6) throw CapOverflow("symmetric collections are limited to arity 6");
  comps_.resize(cap + 1);
}

const ChainComplex& Collection::component(int n) const {
  if (n < 1 || n > cap_) throw CapOverflow(name_ + ": arity " + std::to_string(n) + " beyond cap " + std::to_string(cap_));
  return comps_[n];
}

void Collection::set_component(int n, ChainComplex c) { comps_.at(n) = std::move(c); }

Signed Collection::act(int, int i, const Perm& rho) const {
  for (std::size_t j = 0; j < rho.size(); ++j)
    if (rho[j] != static_cast<int>(j)) throw ValidationError(name_ + ": no symmetric group action in NS mode");
  return {1, i};
}

LinMap Collection::action_map(int n, const Perm& rho) const {
  const auto& c = component(n);
  LinMap f(c.basis, c.basis, 0);
  for (int i = 0; i < size(n); ++i) {
    Signed s = act(n, i, rho);
    if (s.sign) f.add(i, s.idx, s.sign);
  }
  return f;
}

Vec Operad::compose_vec(int m, const Vec& a, const std::vector<int>& S, int k, const Vec& b) const {
  Vec out;
  for (const auto& [i, ci] : a)
    for (const auto& [j, cj] : b) axpy(out, ci * cj, compose(m, i, S, k, j));
  return out;
}

LinMap Operad::partial_map(int m, int i, int k) const {
  int n = m + k - 1;
  if (n > cap()) throw CapOverflow("partial composition beyond cap");
  std::vector<Basis> f{component(m).basis, component(k).basis};
  Basis T = tensor_basis(f);
  LinMap r(T, component(n).basis, 0);
  for (int a = 0; a < size(m); ++a)
    for (int b = 0; b < size(k); ++b) r.set(tensor_index(f, {a, b}), compose_i(m, a, i, k, b));
  return r;
}

const std::vector<FullDec>& Cooperad::full_decompose(int n, int c) const {
  auto key = std::make_pair(n, c);
  auto it = full_cache_.find(key);
  if (it != full_cache_.end()) return it->second;

  std::vector<FullDec> out;
  {
    FullDec triv{Q(1), c, {}, {}};
    for (int l = 1; l <= n; ++l) {
      triv.blocks.push_back({l});
      triv.parts.push_back(0);
    }
    out.push_back(triv);
  }
  if (n >= 2) out.push_back(FullDec{Q(1), 0, {interval(1, n)}, {c}});

  for (const auto& t : decompose(n, c)) {
    auto outer = outer_labels(n, t.S);
    const int lo = t.S.front();
    const int slot = static_cast<int>(std::find(outer.begin(), outer.end(), lo) - outer.begin()) + 1;
    for (const auto& d : full_decompose(t.m, t.a)) {
      if (d.blocks.size() == 1) continue;
      bool ok = true;
      std::size_t slot_block = 0;
      for (std::size_t j = 0; j < d.blocks.size() && ok; ++j) {
        const auto& blk = d.blocks[j];
        bool has_slot = std::find(blk.begin(), blk.end(), slot) != blk.end();
        if (has_slot) {
          slot_block = j;
          if (blk.size() != 1) ok = false;
        } else if (blk.size() > 1 && outer[blk.front() - 1] > lo) {
          ok = false;
        }
      }
      if (!ok) continue;
      FullDec r{t.coef * d.coef, d.root, {}, d.parts};
      for (std::size_t j = 0; j < d.blocks.size(); ++j) {
        if (j == slot_block) {
          r.blocks.push_back(t.S);
          r.parts[j] = t.b;
        } else {
          std::vector<int> g;
          for (int l : d.blocks[j]) g.push_back(outer[l - 1]);
          r.blocks.push_back(g);
        }
      }
      out.push_back(std::move(r));
    }
  }
  return full_cache_.emplace(key, std::move(out)).first->second;
}

Vec gamma(const Operad& P, int k, int mu, const std::vector<Arg>& nus) {
  if (static_cast<int>(nus.size()) != k) throw ValidationError("gamma: wrong number of inputs");
  int total = 0;
  for (const auto& a : nus) total += a.n;
  if (total > P.cap()) throw CapOverflow("gamma: arity beyond cap");
  Vec cur{{mu, Q(1)}};
  int arity = k, pos = 1;
  for (const auto& nu : nus) {
    cur = P.compose_vec(arity, cur, interval(pos, nu.n), nu.n, Vec{{nu.idx, Q(1)}});
    arity += nu.n - 1;
    pos += nu.n;
  }
  return cur;
}

TwoLevel two_level(int k, int mu, const std::vector<Arg>& nus) {
  TwoLevel t{k, mu};
  for (const auto& a : nus) {
    t.push_back(a.n);
    t.push_back(a.idx);
  }
  return t;
}

Lin<TwoLevel> inf_composite(const ArityMap& f, const ArityMap& g, const TwoLevel& x) {
  const int k = x[0];
  Lin<TwoLevel> out;
  const Vec& fmu = f.at(k).col(x[1]);
  long long before = f.at(k).source()->degree(x[1]);
  for (int j = 0; j < k; ++j) {
    int nj = x[2 + 2 * j], vj = x[3 + 2 * j];
    const Vec& gv = g.at(nj).col(vj);
    Q sgn = sign_of(static_cast<long long>(g.degree) * before);
    for (const auto& [mu2, c1] : fmu)
      for (const auto& [v2, c2] : gv) {
        TwoLevel y = x;
        y[1] = mu2;
        y[3 + 2 * j] = v2;
        add_to(out, y, sgn * c1 * c2);
      }
    before += g.at(nj).source()->degree(vj);
  }
  return out;
}

ArityMap zero_arity_map(const Collection& src, const Collection& tgt, int degree) {
  ArityMap f;
  f.degree = degree;
  f.comp.resize(src.cap() + 1);
  for (int n = 1; n <= src.cap(); ++n) f.comp[n] = LinMap(src.component(n).basis, tgt.component(n).basis, degree);
  return f;
}

ArityMap identity_arity_map(const Collection& c) {
  ArityMap f;
  f.comp.resize(c.cap() + 1);
  for (int n = 1; n <= c.cap(); ++n) f.comp[n] = identity_map(c.component(n).basis);
  return f;
}

namespace {

std::string vec_str(const Collection& c, int n, const Vec& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [i, q] : v) {
    if (!s.empty()) s += " + ";
    s += to_string(q) + "*" + c.label(n, i);
  }
  return s;
}

Report fail(int arity, std::string detail, int cap) { return Report{false, arity, std::move(detail), cap}; }

// position map of leaves when a^rho ∘_{rho(i)} b^tau is compared with (a ∘_i b)
Perm induced_perm(int m, int i, int k, const Perm& rho, const Perm& tau) {
  const int n = m + k - 1;
  const int ip = rho[i - 1] + 1;
  auto place_a = [&](int q) { return q < ip ? q : q + k - 1; };
  Perm out(n);
  for (int p = 1; p <= n; ++p) {
    int dst;
    if (p < i) dst = place_a(rho[p - 1] + 1);
    else if (p < i + k) dst = ip + tau[p - i];
    else dst = place_a(rho[p - k] + 1);
    out[p - 1] = dst - 1;
  }
  return out;
}

Vec act_vec(const Collection& c, int n, const Vec& v, const Perm& rho) {
  Vec out;
  for (const auto& [i, q] : v) {
    Signed s = c.act(n, i, rho);
    if (s.sign) add_to(out, s.idx, q * s.sign);
  }
  return out;
}

std::vector<Perm> test_perms(int n) {
  std::vector<Perm> ps;
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  ps.push_back(id);
  for (int j = 0; j + 1 < n; ++j) {
    Perm t = id;
    std::swap(t[j], t[j + 1]);
    ps.push_back(t);
  }
  if (n > 2) {
    Perm cyc(n);
    for (int j = 0; j < n; ++j) cyc[j] = (j + 1) % n;
    ps.push_back(cyc);
  }
  return ps;
}

Report check_component_basics(const Collection& C) {
  const auto& b1 = C.basis(1);
  if (b1.size() != 1 || b1.label(0) != "id" || b1.degree(0) != 0)
    return fail(1, "arity one must be spanned by id in degree 0", C.cap());
  for (int n = 1; n <= C.cap(); ++n) {
    auto v = check_d_squared(C.component(n));
    if (!v.pass) return fail(n, "d^2 != 0 on " + v.detail, C.cap());
    if (C.mode() != Mode::SYM) continue;
    auto perms = test_perms(n);
    for (int x = 0; x < C.size(n); ++x)
      for (const auto& r : perms) {
        Vec lhs = C.component(n).d.apply(act_vec(C, n, Vec{{x, Q(1)}}, r));
        Vec rhs = act_vec(C, n, C.component(n).d.col(x), r);
        if (lhs != rhs) return fail(n, "differential not equivariant at " + C.label(n, x), C.cap());
        for (const auto& t : perms) {
          Vec two = act_vec(C, n, act_vec(C, n, Vec{{x, Q(1)}}, t), r);
          Vec one = act_vec(C, n, Vec{{x, Q(1)}}, compose_perm(r, t));
          if (two != one) return fail(n, "not a group action at " + C.label(n, x), C.cap());
        }
      }
  }
  return {true, 0, "", C.cap()};
}

}  // namespace

Report check_operad_axioms(const Operad& P) {
  Report base = check_component_basics(P);
  if (!base.pass) return base;
  const int cap = P.cap();
  for (int m = 1; m <= cap; ++m)
    for (int a = 0; a < P.size(m); ++a) {
      Vec e{{a, Q(1)}};
      if (P.compose(1, 0, interval(1, m), m, a) != e) return fail(m, "left unit fails on " + P.label(m, a), cap);
      for (int i = 1; i <= m; ++i)
        if (P.compose(m, a, {i}, 1, 0) != e) return fail(m, "right unit fails on " + P.label(m, a), cap);
    }
  for (int m = 2; m <= cap; ++m)
    for (int k = 2; m + k - 1 <= cap; ++k) {
      const int n = m + k - 1;
      for (int a = 0; a < P.size(m); ++a)
        for (int b = 0; b < P.size(k); ++b) {
          const int da = P.degree(m, a), db = P.degree(k, b);
          for (int i = 1; i <= m; ++i) {
            Vec ab = P.compose_i(m, a, i, k, b);
            // derivation
            Vec lhs = P.component(n).d.apply(ab);
            Vec rhs = P.compose_vec(m, P.component(m).d.col(a), interval(i, k), k, Vec{{b, Q(1)}});
            axpy(rhs, Q(sign_of(da)), P.compose_vec(m, Vec{{a, Q(1)}}, interval(i, k), k, P.component(k).d.col(b)));
            if (lhs != rhs) return fail(n, "differential is not a derivation on " + P.label(m, a) + "∘" + P.label(k, b), cap);
            if (P.mode() == Mode::SYM) {
              // shuffle compositions agree with acted interval compositions
              std::vector<int> pick(n, 0);
              std::fill(pick.end() - k, pick.end(), 1);
              do {
                std::vector<int> S;
                for (int l = 0; l < n; ++l)
                  if (pick[l]) S.push_back(l + 1);
                auto outer = outer_labels(n, S);
                int slot = static_cast<int>(std::find(outer.begin(), outer.end(), S.front()) - outer.begin()) + 1;
                if (slot != i) continue;
                Perm rho(n);
                for (int p = 1; p <= n; ++p) {
                  if (p < i) rho[p - 1] = outer[p - 1] - 1;
                  else if (p < i + k) rho[p - 1] = S[p - i] - 1;
                  else rho[p - 1] = outer[p - k] - 1;
                }
                if (P.compose(m, a, S, k, b) != act_vec(P, n, ab, rho))
                  return fail(n, "shuffle composition disagrees with action", cap);
              } while (std::next_permutation(pick.begin(), pick.end()));
              for (const auto& rho : test_perms(m))
                for (const auto& tau : test_perms(k)) {
                  Signed sa = P.act(m, a, rho), sb = P.act(k, b, tau);
                  Vec l2;
                  if (sa.sign && sb.sign)
                    l2 = scaled(P.compose_i(m, sa.idx, rho[i - 1] + 1, k, sb.idx), Q(sa.sign * sb.sign));
                  Vec r2 = act_vec(P, n, ab, induced_perm(m, i, k, rho, tau));
                  if (l2 != r2) return fail(n, "composition not equivariant", cap);
                }
            }
            for (int l = 2; n + l - 1 <= cap; ++l)
              for (int c = 0; c < P.size(l); ++c) {
                const int dc = P.degree(l, c);
                Vec cv{{c, Q(1)}};
                for (int j = 1; j <= k; ++j) {
                  Vec s1 = P.compose_vec(n, ab, interval(i + j - 1, l), l, cv);
                  Vec s2 = P.compose_vec(m, Vec{{a, Q(1)}}, interval(i, k + l - 1), k + l - 1, P.compose_i(k, b, j, l, c));
                  if (s1 != s2) return fail(n + l - 1, "sequential associativity fails", cap);
                }
                for (int j = i + 1; j <= m; ++j) {
                  Vec p1 = P.compose_vec(n, ab, interval(j + k - 1, l), l, cv);
                  Vec ac = P.compose_i(m, a, j, l, c);
                  Vec p2 = P.compose_vec(m + l - 1, ac, interval(i, k), k, Vec{{b, Q(1)}});
                  if (p1 != scaled(p2, Q(sign_of(static_cast<long long>(db) * dc))))
                    return fail(n + l - 1, "parallel associativity fails on " + vec_str(P, n + l - 1, p1), cap);
                }
              }
          }
        }
    }
  return {true, 0, "", cap};
}

namespace {

using TermKey = std::tuple<int, int, std::vector<int>, int, int>;

void add_term(Lin<TermKey>& out, const Collection& C, int n, int m, int a, std::vector<int> Lb, std::vector<int> La, int k,
              int b, const Q& coef) {
  // relabel pieces so that b's labels increase and a's slot labels increase
  std::vector<int> sb = Lb, sa = La;
  std::sort(sb.begin(), sb.end());
  std::sort(sa.begin(), sa.end());
  Perm tau(k), rho(m);
  for (int r = 0; r < k; ++r) tau[r] = static_cast<int>(std::lower_bound(sb.begin(), sb.end(), Lb[r]) - sb.begin());
  for (int q = 0; q < m; ++q) rho[q] = static_cast<int>(std::lower_bound(sa.begin(), sa.end(), La[q]) - sa.begin());
  Signed xa = C.act(m, a, rho), xb = C.act(k, b, tau);
  if (!xa.sign || !xb.sign) return;
  (void)n;
  add_to(out, TermKey{m, xa.idx, sb, k, xb.idx}, coef * xa.sign * xb.sign);
}

Lin<TermKey> dec_lin(const Cooperad& C, int n, const Vec& v) {
  Lin<TermKey> out;
  for (const auto& [c, q] : v)
    for (const auto& t : C.decompose(n, c)) add_to(out, TermKey{t.m, t.a, t.S, t.k, t.b}, q * t.coef);
  return out;
}

}  // namespace

Report check_cooperad_axioms(const Cooperad& C) {
  Report base = check_component_basics(C);
  if (!base.pass) return base;
  const int cap = C.cap();
  for (int n = 2; n <= cap; ++n)
    for (int c = 0; c < C.size(n); ++c) {
      for (const auto& t : C.decompose(n, c)) {
        if (t.m < 2 || t.k < 2 || t.m + t.k - 1 != n || static_cast<int>(t.S.size()) != t.k)
          return fail(n, "malformed decomposition term of " + C.label(n, c), cap);
        if (!std::is_sorted(t.S.begin(), t.S.end())) return fail(n, "unsorted shuffle in decomposition", cap);
        if (C.mode() == Mode::NS && !is_interval(t.S)) return fail(n, "non-interval slot in NS decomposition", cap);
        if (C.degree(t.m, t.a) + C.degree(t.k, t.b) != C.degree(n, c))
          return fail(n, "decomposition does not preserve degree at " + C.label(n, c), cap);
      }
      // compatibility with the differential
      Lin<TermKey> lhs = dec_lin(C, n, C.component(n).d.col(c));
      Lin<TermKey> rhs;
      for (const auto& t : C.decompose(n, c)) {
        for (const auto& [a2, q] : C.component(t.m).d.col(t.a)) add_to(rhs, TermKey{t.m, a2, t.S, t.k, t.b}, t.coef * q);
        Q s = sign_of(C.degree(t.m, t.a));
        for (const auto& [b2, q] : C.component(t.k).d.col(t.b)) add_to(rhs, TermKey{t.m, t.a, t.S, t.k, b2}, s * t.coef * q);
      }
      if (lhs != rhs) return fail(n, "decomposition is not a chain map at " + C.label(n, c), cap);
      if (C.mode() != Mode::SYM) continue;
      for (const auto& sigma : test_perms(n)) {
        Signed sc = C.act(n, c, sigma);
        Lin<TermKey> l2;
        if (sc.sign) l2 = dec_lin(C, n, Vec{{sc.idx, Q(sc.sign)}});
        Lin<TermKey> r2;
        for (const auto& t : C.decompose(n, c)) {
          auto outer = outer_labels(n, t.S);
          std::vector<int> Lb, La;
          for (int s : t.S) Lb.push_back(sigma[s - 1] + 1);
          int lo = *std::min_element(Lb.begin(), Lb.end());
          for (int o : outer) La.push_back(o == t.S.front() ? lo : sigma[o - 1] + 1);
          add_term(r2, C, n, t.m, t.a, Lb, La, t.k, t.b, t.coef);
        }
        if (l2 != r2) return fail(n, "decomposition not equivariant at " + C.label(n, c), cap);
      }
    }
  return {true, 0, "", cap};
}

Vec average(const Collection& c, int n, const Vec& v) {
  if (c.mode() == Mode::NS) return v;
  Vec out;
  auto perms = all_permutations(n);
  Q w = Q(1) / static_cast<long>(perms.size());
  for (const auto& p : perms) axpy(out, w, act_vec(c, n, v, p));
  return out;
}

}  // namespace operadiq
