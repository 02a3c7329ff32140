#include "operadiq/mcspace.hpp"

#include <bit>
#include <random>
#include <set>

namespace operadiq {

// ---- Subspace ----

Subspace::Subspace(const std::vector<Vec>& gens) {
  for (const auto& v : gens) insert(v);
}

Subspace Subspace::of_basis(const std::vector<int>& idx) {
  Subspace s;
  for (int i : idx) s.insert(Vec{{i, Q(1)}});
  return s;
}

Vec Subspace::reduce(Vec v) const {
  for (const auto& [p, row] : rows_) {
    auto it = v.find(p);
    if (it != v.end()) axpy(v, -Q(it->second), row);
  }
  return v;
}

bool Subspace::insert(Vec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const int p = v.begin()->first;
  v = scaled(v, 1 / v.begin()->second);
  for (auto& [q, row] : rows_) {
    auto it = row.find(p);
    if (it != row.end()) axpy(row, -Q(it->second), v);
  }
  rows_.emplace(p, std::move(v));
  return true;
}

bool Subspace::within(const Subspace& o) const {
  for (const auto& [p, row] : rows_)
    if (!o.contains(row)) return false;
  return true;
}

std::vector<Vec> Subspace::basis() const {
  std::vector<Vec> out;
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

const char* tri_name(Tri t) { return t == Tri::Pass ? "PASS" : t == Tri::Fail ? "FAIL" : "UNKNOWN"; }

const Subspace& FilteredLinf::level(int k) const {
  if (levels.empty()) throw ValidationError("filtration without levels");
  return levels.at(std::clamp(k, 1, length()) - 1);
}

std::vector<std::pair<Vec, int>> adapted_basis(const FilteredLinf& f) {
  std::vector<std::pair<Vec, int>> out;
  Subspace acc;
  for (int k = f.length(); k >= 1; --k)
    for (const auto& row : f.level(k).basis())
      if (acc.insert(row)) out.emplace_back(row, k);
  return out;
}

namespace {

Report fail(int n, std::string d) { return {false, n, std::move(d), 0}; }

Vec unit(int i) { return Vec{{i, Q(1)}}; }

int op_cap(const PAlgebra& g) { return g.op().cap(); }

// visit tuples of indices into [0, sizes[i]) exhaustively or by seeded samples
void for_tuples(const std::vector<int>& sizes, const Sampling& s, const std::function<bool(const std::vector<int>&)>& f) {
  long long total = 1;
  for (int n : sizes) {
    if (n == 0) return;
    total = std::min<long long>(total * n, s.exhaustive_limit + 1);
  }
  std::vector<int> t(sizes.size(), 0);
  if (total <= s.exhaustive_limit) {
    while (true) {
      if (!f(t)) return;
      std::size_t j = 0;
      while (j < t.size() && ++t[j] == sizes[j]) t[j++] = 0;
      if (j == t.size()) return;
    }
  }
  std::mt19937_64 rng(s.seed);
  for (int r = 0; r < s.samples; ++r) {
    for (std::size_t j = 0; j < t.size(); ++j) t[j] = std::uniform_int_distribution<int>(0, sizes[j] - 1)(rng);
    if (!f(t)) return;
  }
}

std::string vec_str(const PAlgebra& g, const Vec& v) { return vec_string(g.basis(), v); }

}  // namespace

// ---- canonical filtration ----

FilteredLinf canonical_filtration(const AlgPtr& g, int max_levels) {
  const int N = g->dim();
  const int cap = op_cap(*g);
  const bool sym = g->op().mode() == Mode::SYM;
  FilteredLinf f{g, {}, Completeness::Declared};
  std::vector<int> all(N);
  for (int i = 0; i < N; ++i) all[i] = i;
  f.levels.push_back(Subspace::of_basis(all));
  std::vector<std::vector<Vec>> span{f.levels[0].basis()};
  for (int k = 2; k <= max_levels; ++k) {
    Subspace S;
    std::vector<Vec> fresh;
    auto add = [&](const Vec& v) {
      if (S.insert(v)) fresh.push_back(v);
    };
    // ℓ_m(F_{k_1}, .., F_{k_m}) with k_i < k and Σ k_i >= k
    for (int m = 2; m <= cap; ++m) {
      std::vector<int> ks(m, 1);
      while (true) {
        int sum = 0;
        for (int x : ks) sum += x;
        if (sum >= k) {
          std::vector<int> sizes;
          for (int x : ks) sizes.push_back(static_cast<int>(span[x - 1].size()));
          Sampling all_tuples;
          all_tuples.exhaustive_limit = 1LL << 40;
          for_tuples(sizes, all_tuples, [&](const std::vector<int>& t) {
            std::vector<Vec> xs;
            for (int i = 0; i < m; ++i) xs.push_back(span[ks[i] - 1][t[i]]);
            add(ell_vec(*g, xs));
            return true;
          });
        }
        int j = 0;
        while (j < m && ++ks[j] == k) ks[j++] = 1;
        if (j == m) break;
      }
    }
    // closure under d and brackets with everything
    while (!fresh.empty()) {
      Vec v = fresh.back();
      fresh.pop_back();
      add(g->d(v));
      for (int m = 2; m <= cap; ++m)
        for (int p = 0; p < (sym ? 1 : m); ++p) {
          std::vector<int> sizes(m - 1, N);
          Sampling all_tuples;
          all_tuples.exhaustive_limit = 1LL << 40;
          for_tuples(sizes, all_tuples, [&](const std::vector<int>& t) {
            std::vector<Vec> xs;
            for (int i = 0, j = 0; i < m; ++i) xs.push_back(i == p ? v : unit(t[j++]));
            add(ell_vec(*g, xs));
            return true;
          });
        }
    }
    const bool stable = S == f.levels.back();
    f.levels.push_back(S);
    span.push_back(S.basis());
    if (S.empty()) {
      f.mode = Completeness::Terminating;
      break;
    }
    if (stable) break;
  }
  return f;
}

Report check_filtered(const FilteredLinf& f, const Sampling& s) {
  const PAlgebra& g = *f.g;
  if (f.levels.empty() || f.level(1).dim() != g.dim()) return fail(0, "F_1 is not the whole algebra");
  for (int k = 1; k < f.length(); ++k)
    if (!f.level(k + 1).within(f.level(k))) return fail(0, "F_" + std::to_string(k + 1) + " is not inside F_" + std::to_string(k));
  for (int k = 1; k <= f.length(); ++k)
    for (const auto& row : f.level(k).basis())
      if (!f.level(k).contains(g.d(row)))
        return fail(1, "d leaves F_" + std::to_string(k) + " at " + vec_str(g, row));
  auto ab = adapted_basis(f);
  const int nb = static_cast<int>(ab.size());
  for (int m = 2; m <= op_cap(g); ++m) {
    Report r;
    for_tuples(std::vector<int>(m, nb), s, [&](const std::vector<int>& t) {
      std::vector<Vec> xs;
      int lev = 0;
      for (int i : t) {
        xs.push_back(ab[i].first);
        lev += ab[i].second;
      }
      Vec out = ell_vec(g, xs);
      if (!f.level(lev).contains(out)) {
        std::string w;
        for (const auto& x : xs) w += (w.empty() ? "" : ", ") + vec_str(g, x);
        r = fail(m, "ℓ_" + std::to_string(m) + "(" + w + ") = " + vec_str(g, out) + " is not in F_" + std::to_string(lev));
        return false;
      }
      return true;
    });
    if (!r.pass) return r;
  }
  if (f.mode == Completeness::Terminating && !f.levels.back().empty())
    return fail(0, "the filtration is declared terminating but its last level is nonzero");
  return {true, 0, "", op_cap(g)};
}

NilpotencyReport check_degreewise_nilpotent(const FilteredLinf& f, int dlo, int dhi) {
  NilpotencyReport r;
  const GradedBasis& B = f.g->basis();
  for (int d = dlo; d <= dhi; ++d) {
    int found = 0;
    for (int k = 1; k <= f.length() && !found; ++k) {
      bool zero = true;
      for (const auto& row : f.level(k).basis())
        if (B.degree(row.begin()->first) == d) zero = false;
      if (zero) found = k;
    }
    if (!found) {
      r.pass = false;
      if (r.detail.empty()) r.detail = "no level of the filtration vanishes in degree " + std::to_string(d);
    } else {
      r.index[d] = found;
    }
  }
  return r;
}

Quotient quotient_algebra(const AlgPtr& A, const Subspace& ideal) {
  const GradedBasis& B = A->basis();
  const int N = A->dim();
  std::vector<int> pos(N, -1), lift;
  auto QB = std::make_shared<GradedBasis>(B.dmin(), B.dmax());
  std::set<int> pivots;
  for (const auto& row : ideal.basis()) pivots.insert(row.begin()->first);
  for (int i = 0; i < N; ++i)
    if (!pivots.count(i)) {
      pos[i] = QB->add(B.label(i), B.degree(i));
      lift.push_back(i);
    }
  Basis qb = QB;
  LinMap proj(A->complex().basis, qb, 0);
  for (int i = 0; i < N; ++i) {
    Vec v;
    for (const auto& [j, q] : ideal.reduce(unit(i))) {
      if (pos[j] < 0) throw ValidationError("quotient_algebra: reduction left a pivot");
      add_to(v, pos[j], q);
    }
    proj.set(i, v);
  }
  auto P = std::make_shared<LinMap>(proj);
  LinMap d(qb, qb, -1);
  for (std::size_t j = 0; j < lift.size(); ++j) d.set(static_cast<int>(j), P->apply(A->d(unit(lift[j]))));
  PAlgebra::Gamma gam = [A, P, lift](int n, int p, const std::vector<int>& xs) {
    std::vector<int> ys;
    for (int x : xs) ys.push_back(lift[x]);
    return P->apply(A->gamma(n, p, ys));
  };
  return {std::make_shared<PAlgebra>(A->op_ptr(), ChainComplex(qb, d), gam, A->name() + "/F"), proj};
}

// ---- Sullivan forms ----

namespace {

int exterior_sign(unsigned a, unsigned b) {
  int inv = 0;
  for (unsigned i = 0; i < 32; ++i)
    if (a >> i & 1u) inv += std::popcount(b & ((1u << i) - 1u));
  return (inv & 1) ? -1 : 1;
}

}  // namespace

SullivanForms::SullivanForms(int n, int poly_cap) : n_(n), P_(poly_cap) {
  if (n < 0 || n > 30) throw ValidationError("SullivanForms: dimension out of range");
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) <= left) basis_.push_back({e, mask});
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
    e[i] = 0;
  };
  rec(0, P_);
  std::sort(basis_.begin(), basis_.end());
}

Form SullivanForms::one() const { return Form{{Monomial{std::vector<int>(n_, 0), 0}, Q(1)}}; }

Form SullivanForms::t(int i) const {
  if (i < 0 || i > n_) throw ValidationError("t_i out of range");
  if (i > 0) {
    Monomial m{std::vector<int>(n_, 0), 0};
    m.t[i - 1] = 1;
    return Form{{m, Q(1)}};
  }
  Form f = one();
  for (int j = 1; j <= n_; ++j) axpy(f, Q(-1), t(j));
  return f;
}

Form SullivanForms::dt(int i) const { return d(t(i)); }

int SullivanForms::degree(const Monomial& m) { return -std::popcount(m.dt); }

int SullivanForms::poly_degree(const Monomial& m) {
  int s = std::popcount(m.dt);
  for (int e : m.t) s += e;
  return s;
}

Form SullivanForms::mul(const Form& a, const Form& b) const {
  Form out;
  for (const auto& [ma, qa] : a)
    for (const auto& [mb, qb] : b) {
      if (ma.dt & mb.dt) continue;
      Monomial m{ma.t, ma.dt | mb.dt};
      for (int i = 0; i < n_; ++i) m.t[i] += mb.t[i];
      add_to(out, m, qa * qb * exterior_sign(ma.dt, mb.dt));
    }
  return out;
}

Form SullivanForms::d(const Form& a) const {
  Form out;
  for (const auto& [m, q] : a)
    for (int i = 0; i < n_; ++i) {
      if (m.t[i] == 0 || (m.dt >> i & 1u)) continue;
      Monomial r{m.t, m.dt | (1u << i)};
      r.t[i] -= 1;
      add_to(out, r, q * m.t[i] * exterior_sign(1u << i, m.dt));
    }
  return out;
}

std::string SullivanForms::label(const Monomial& m) const {
  std::string s;
  for (int i = 0; i < n_; ++i)
    if (m.t[i]) s += "t" + std::to_string(i + 1) + (m.t[i] > 1 ? "^" + std::to_string(m.t[i]) : "");
  for (int i = 0; i < n_; ++i)
    if (m.dt >> i & 1u) s += "dt" + std::to_string(i + 1);
  return s.empty() ? "1" : s;
}

std::string SullivanForms::str(const Form& f) const {
  if (f.empty()) return "0";
  std::string s;
  for (const auto& [m, q] : f) {
    std::string c = q == 1 ? "" : q == -1 ? "-" : to_string(q) + "·";
    if (m.t == std::vector<int>(n_, 0) && m.dt == 0 && (q == 1 || q == -1)) c += "1";
    else c += label(m);
    if (!s.empty() && c[0] != '-') s += " + ";
    else if (!s.empty()) {
      s += " - ";
      c = c.substr(1);
    }
    s += c;
  }
  return s;
}

Form SullivanForms::truncate(const Form& a) const {
  Form out;
  for (const auto& [m, q] : a)
    if (poly_degree(m) <= P_) out.emplace(m, q);
  return out;
}

Form SullivanForms::apply_morphism(const std::vector<Form>& timg, const SullivanForms& tgt, const Form& a) const {
  Form out;
  for (const auto& [m, q] : a) {
    Form term = tgt.one();
    for (int j = 0; j < n_; ++j)
      for (int e = 0; e < m.t[j]; ++e) term = tgt.mul(term, timg[j]);
    for (int j = 0; j < n_; ++j)
      if (m.dt >> j & 1u) term = tgt.mul(term, tgt.d(timg[j]));
    axpy(out, q, term);
  }
  return out;
}

Form SullivanForms::face(int i, const Form& a) const {
  if (n_ == 0 || i < 0 || i > n_) throw ValidationError("face index out of range");
  SullivanForms tgt(n_ - 1, P_);
  std::vector<Form> timg;
  for (int j = 1; j <= n_; ++j) timg.push_back(j < i ? tgt.t(j) : j == i ? Form{} : tgt.t(j - 1));
  return apply_morphism(timg, tgt, a);
}

Form SullivanForms::degeneracy(int i, const Form& a) const {
  if (i < 0 || i > n_) throw ValidationError("degeneracy index out of range");
  SullivanForms tgt(n_ + 1, P_);
  std::vector<Form> timg;
  for (int j = 1; j <= n_; ++j) {
    if (j < i) timg.push_back(tgt.t(j));
    else if (j == i) {
      Form f = tgt.t(i);
      axpy(f, Q(1), tgt.t(i + 1));
      timg.push_back(f);
    } else timg.push_back(tgt.t(j + 1));
  }
  return apply_morphism(timg, tgt, a);
}

AlgPtr tensor_extend(const AlgPtr& g, const SullivanForms& om) {
  auto cob = std::dynamic_pointer_cast<const CobarOperad>(g->op_ptr());
  if (!cob) throw ValidationError("tensor_extend: not an algebra over a cobar operad");
  const GradedBasis& GB = g->basis();
  const auto& mons = om.basis();
  const int nm = static_cast<int>(mons.size());
  std::map<Monomial, int> midx;
  for (int i = 0; i < nm; ++i) midx[mons[i]] = i;
  auto B = std::make_shared<GradedBasis>(GB.dmin() - om.n(), GB.dmax());
  for (int x = 0; x < g->dim(); ++x)
    for (int i = 0; i < nm; ++i)
      B->add(GB.label(x) + "⊗" + om.label(mons[i]), GB.degree(x) + SullivanForms::degree(mons[i]));
  Basis b = B;
  auto put = [midx, nm](Vec& out, const Vec& xs, const Form& f, const Q& c) {
    for (const auto& [m, q] : f) {
      auto it = midx.find(m);
      if (it == midx.end()) continue;
      for (const auto& [x, p] : xs) add_to(out, x * nm + it->second, c * q * p);
    }
  };
  LinMap d(b, b, -1);
  for (int x = 0; x < g->dim(); ++x)
    for (int i = 0; i < nm; ++i) {
      Vec v;
      Form f{{mons[i], Q(1)}};
      put(v, g->d(unit(x)), f, Q(1));
      put(v, unit(x), om.d(f), Q(sign_of(GB.degree(x))));
      d.set(x * nm + i, v);
    }
  SullivanForms omc = om;
  return cobar_algebra(cob, ChainComplex(b, d), [g, cob, omc, mons, nm, put](int k, int e, const std::vector<int>& xs) {
    std::vector<int> gx;
    Form prod = omc.one();
    long long sg = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      gx.push_back(xs[i] / nm);
      const Monomial& m = mons[xs[i] % nm];
      prod = omc.mul(prod, Form{{m, Q(1)}});
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j)
        sg += static_cast<long long>(SullivanForms::degree(mons[xs[i] % nm])) * g->degree(gx[j]);
    Vec out;
    if (prod.empty()) return out;
    put(out, g->gamma(k, cob->trees().corolla(k, e), gx), omc.truncate(prod), Q(sign_of(sg)));
    return out;
  }, g->name() + "⊗Ω" + std::to_string(om.n()));
}

std::string gform_string(const GradedBasis& g, const SullivanForms& om, const GForm& x) {
  std::string s;
  for (const auto& [m, v] : x) {
    if (v.empty()) continue;
    s += (s.empty() ? "" : " + ") + ("(" + vec_string(g, v) + ")⊗" + om.label(m));
  }
  return s.empty() ? "0" : s;
}

// ---- Maurer–Cartan simplices ----

MCSimplexVerdict mc_simplex_check(const FilteredLinf& f, const SullivanForms& om, const GForm& x, int r,
                                  const std::vector<GForm>& boundary) {
  const PAlgebra& g = *f.g;
  const GradedBasis& GB = g.basis();
  MCSimplexVerdict out;
  struct Term {
    Monomial m;
    int x;
    Q q;
  };
  std::vector<Term> terms;
  for (const auto& [m, v] : x)
    for (const auto& [xi, q] : v) {
      if (GB.degree(xi) + SullivanForms::degree(m) != 0)
        throw ValidationError("mc_simplex_check: the candidate is not of degree 0");
      terms.push_back({m, xi, q});
    }
  const Subspace& Fr = f.level(r);
  auto reduce_all = [&](const GForm& y) {
    GForm z;
    for (const auto& [m, v] : y) {
      Vec w = Fr.reduce(v);
      if (!w.empty()) z.emplace(m, w);
    }
    return z;
  };
  const int cap = op_cap(g);
  if (r > f.length() && f.mode == Completeness::Declared) {
    out.verdict = Tri::Unknown;
    out.witness = "F_" + std::to_string(r) + " lies past the declared levels";
  }
  for (int k = cap + 1; k < r; ++k)
    if (!f.level(k).empty()) {
      out.verdict = Tri::Unknown;
      out.witness = "ℓ_" + std::to_string(k) + " lies above the arity cap and F_" + std::to_string(k) + " is nonzero";
    }

  GForm R;
  auto add_g = [&](const Vec& v, const Form& fm, const Q& c) {
    for (const auto& [m, q] : fm) axpy(R[m], c * q, v);
  };
  for (const auto& t : terms) {
    Form one{{t.m, Q(1)}};
    add_g(g.d(unit(t.x)), one, t.q);
    add_g(unit(t.x), om.d(one), t.q * sign_of(GB.degree(t.x)));
  }
  if (out.verdict != Tri::Unknown) {
    std::map<std::vector<int>, Vec> cache;
    const int T = static_cast<int>(terms.size());
    for (int k = 2; k <= std::min(cap, std::max(1, r - 1)); ++k) {
      const Q c = mc_coefficient(g.op().mode(), k);
      Sampling all;
      all.exhaustive_limit = 1LL << 40;
      for_tuples(std::vector<int>(k, T), all, [&](const std::vector<int>& t) {
        std::vector<int> xs;
        Form prod = om.one();
        Q q = c;
        long long sg = 0;
        for (int i = 0; i < k; ++i) {
          xs.push_back(terms[t[i]].x);
          prod = om.mul(prod, Form{{terms[t[i]].m, Q(1)}});
          q *= terms[t[i]].q;
        }
        if (prod.empty()) return true;
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j)
            sg += static_cast<long long>(SullivanForms::degree(terms[t[i]].m)) * GB.degree(xs[j]);
        auto it = cache.find(xs);
        if (it == cache.end()) it = cache.emplace(xs, ell(g, xs)).first;
        add_g(it->second, prod, q * sign_of(sg));
        return true;
      });
    }
    GForm red = reduce_all(R);
    if (!red.empty()) {
      out.verdict = Tri::Fail;
      out.witness = "curvature " + gform_string(GB, om, red);
    }
  }
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    SullivanForms low(om.n() - 1, om.poly_cap());
    GForm fx;
    for (const auto& [m, v] : x)
      for (const auto& [m2, q] : om.face(static_cast<int>(i), Form{{m, Q(1)}})) axpy(fx[m2], q, v);
    for (const auto& [m, v] : boundary[i]) axpy(fx[m], Q(-1), v);
    out.faces.push_back(reduce_all(fx).empty() ? Tri::Pass : Tri::Fail);
  }
  return out;
}

// ---- filtrations of convolution algebras ----

Report check_filtered_algebra(const PAlgebra& A, const std::vector<Subspace>& F, const Sampling& s) {
  if (F.empty() || F.front().dim() != A.dim()) return fail(0, "F_1 is not the whole algebra");
  FilteredLinf f{nullptr, F, Completeness::Declared};
  for (std::size_t k = 1; k < F.size(); ++k)
    if (!F[k].within(F[k - 1])) return fail(0, "the filtration is not descending at level " + std::to_string(k + 1));
  for (std::size_t k = 0; k < F.size(); ++k)
    for (const auto& row : F[k].basis())
      if (!F[k].contains(A.d(row))) return fail(1, "d leaves F_" + std::to_string(k + 1) + " at " + vec_str(A, row));
  auto ab = adapted_basis(f);
  const int nb = static_cast<int>(ab.size());
  for (int m = 2; m <= A.op().cap(); ++m)
    for (int p = 0; p < A.op().size(m); ++p) {
      Report r;
      for_tuples(std::vector<int>(m, nb), s, [&](const std::vector<int>& t) {
        std::vector<Vec> xs;
        int lev = 0;
        for (int i : t) {
          xs.push_back(ab[i].first);
          lev += ab[i].second;
        }
        Vec out = A.gamma_vec(m, Vec{{p, Q(1)}}, xs);
        if (!f.level(lev).contains(out)) {
          r = fail(m, A.op().label(m, p) + " leaves F_" + std::to_string(lev) + ": " + vec_str(A, out));
          return false;
        }
        return true;
      });
      if (!r.pass) return r;
    }
  return {true, 0, "", A.op().cap()};
}

FilteredLinf convolution_filtration(const TwMor& a, const CoalgPtr& D, const AlgPtr& A, const std::vector<Subspace>& FA,
                                    Completeness mode) {
  Report r = check_filtered_algebra(*A, FA);
  if (!r.pass) throw ValidationError("convolution_filtration: not a filtered algebra: " + r.detail);
  FilteredLinf f{convolution_algebra(a, D, A), {}, mode};
  const int na = A->dim();
  for (const auto& lev : FA) {
    Subspace S;
    for (const auto& row : lev.basis())
      for (int v = 0; v < D->dim(); ++v) {
        Vec e;
        for (const auto& [x, q] : row) e.emplace(v * na + x, q);
        S.insert(e);
      }
    f.levels.push_back(S);
  }
  return f;
}

Report filtered_check_induced(const InftyLinfMorphism& m, const FilteredLinf& src, const FilteredLinf& tgt,
                              const Sampling& s) {
  auto ab = adapted_basis(src);
  const int nb = static_cast<int>(ab.size());
  for (int k = 1; k <= m.cap; ++k) {
    Report r;
    for_tuples(std::vector<int>(k, nb), s, [&](const std::vector<int>& t) {
      std::vector<Vec> xs;
      int lev = 0;
      for (int i : t) {
        xs.push_back(ab[i].first);
        lev += ab[i].second;
      }
      Vec out = evaluate_on_maps(m, xs);
      if (!tgt.level(lev).contains(out)) {
        r = fail(k, "θ_" + std::to_string(k) + " leaves F_" + std::to_string(lev) + ": " + vec_string(m.tgt->basis(), out));
        return false;
      }
      return true;
    });
    if (!r.pass) return r;
  }
  return {true, 0, "", m.cap};
}

std::vector<LevelReport> isom_hom_tensor(const TwMor& iota, const CoalgPtr& C, const FilteredLinf& g, int nmax,
                                         const Sampling& s) {
  if (g.mode != Completeness::Terminating || !g.levels.back().empty())
    throw ValidationError("isom_hom_tensor: the filtration has no finite tower of quotients (not locally finite here)");
  auto Cd = dual_algebra(C, dual_operad(iota.C));
  std::vector<LevelReport> out;
  for (int r = 2; r <= g.length(); ++r) {
    Quotient q = quotient_algebra(g.g, g.level(r));
    auto conv = convolution_algebra(iota, C, q.alg);
    auto t = tensor_algebra(iota, q.alg, Cd);
    LinMap iso = hom_tensor_iso(C->complex(), q.alg->complex(), t->complex().basis);
    out.push_back({r, brackets_intertwined(*conv, *t, iso, nmax, s)});
  }
  return out;
}

}  // namespace operadiq
