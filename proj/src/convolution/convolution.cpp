#include "operadiq/convolution.hpp"

#include <algorithm>
#include <random>

namespace operadiq {

namespace {

Report fail(int n, std::string d, int cap) { return {false, n, std::move(d), cap}; }

std::vector<std::vector<int>> tuple_list(int dim, int n, const Sampling& s, unsigned long long salt) {
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
  std::mt19937_64 rng(s.seed * 7919ULL + salt);
  std::uniform_int_distribution<int> pick(0, dim - 1);
  for (int r = 0; r < s.samples; ++r) {
    std::vector<int> t(n);
    for (auto& x : t) x = pick(rng);
    out.push_back(std::move(t));
  }
  return out;
}

int common_cap(const Collection& a, const Collection& b) { return std::min(a.cap(), b.cap()); }

std::shared_ptr<const HomEval> delta_eval(const CoalgPtr& D, const AlgPtr& A) {
  return std::make_shared<HomEval>(D->coop().mode(), [D](int x) { return D->delta(x); }, D->dim(), D->complex().basis,
                                   A->complex().basis, [D](int n, int c) { return D->coop().degree(n, c); });
}

Vec difference(const Vec& a, const Vec& b) {
  Vec r = a;
  axpy(r, Q(-1), b);
  return r;
}

}  // namespace

HomEval::HomEval(Mode mode, Terms terms, int rows, Basis ys, Basis ain, std::function<int(int, int)> cdeg)
    : mode_(mode), ys_(std::move(ys)), ain_(std::move(ain)), cdeg_(std::move(cdeg)) {
  na_ = static_cast<int>(ain_->size());
  for (int x = 0; x < rows; ++x)
    for (const auto& [k, q] : terms(x)) {
      const int n = k[0];
      if (n >= static_cast<int>(by_n_.size())) by_n_.resize(n + 1);
      by_n_[n][std::vector<int>(k.begin() + 2, k.end())].push_back({x, k[1], q});
    }
}

Vec HomEval::act(int n, const Eval& eval, const std::vector<int>& Es, int na_out) const {
  Vec out;
  if (n >= static_cast<int>(by_n_.size()) || by_n_[n].empty()) return out;
  std::vector<int> vs(n), as(n), edeg(n);
  long long fdeg = 0;
  for (int i = 0; i < n; ++i) {
    vs[i] = Es[i] / na_;
    as[i] = Es[i] % na_;
    edeg[i] = ain_->degree(as[i]) - ys_->degree(vs[i]);
    fdeg += edeg[i];
  }
  std::vector<Perm> perms;
  if (mode_ == Mode::SYM) perms = all_permutations(n);
  else {
    Perm id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    perms.push_back(id);
  }
  for (const auto& sigma : perms) {
    std::vector<int> ys(n);
    for (int i = 0; i < n; ++i) ys[i] = vs[sigma[i]];
    auto it = by_n_[n].find(ys);
    if (it == by_n_[n].end()) continue;
    const int base = koszul_sign(edeg, sigma);
    long long e = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) e += static_cast<long long>(ys_->degree(ys[i])) * edeg[sigma[j]];
    std::vector<int> args(n);
    for (int i = 0; i < n; ++i) args[i] = as[sigma[i]];
    for (const auto& t : it->second) {
      Vec val = eval(n, t.c, args);
      if (val.empty()) continue;
      const int s = base * sign_of(e + fdeg * cdeg_(n, t.c));
      for (const auto& [a, q] : val) add_to(out, t.x * na_out + a, t.q * q * s);
    }
  }
  return out;
}

AlgPtr hom_algebra(const CoalgPtr& D, const AlgPtr& A) {
  auto conv = convolution_operad(D->coop_ptr(), A->op_ptr());
  auto ctx = delta_eval(D, A);
  ChainComplex H = hom_complex(D->complex(), A->complex());
  const int na = A->dim();
  auto g = [ctx, conv, A, na](int n, int e, const std::vector<int>& Es) {
    auto [c0, p0] = conv->split(n, e);
    auto ev = [&, c0 = c0, p0 = p0](int k, int c, const std::vector<int>& as) {
      return c == c0 ? A->gamma(k, p0, as) : Vec{};
    };
    return ctx->act(n, ev, Es, na);
  };
  return std::make_shared<PAlgebra>(conv, H, g, "hom(" + D->name() + "," + A->name() + ")");
}

std::shared_ptr<const CobarOperad> homotopy_operad(Mode mode, int cap) {
  return mode == Mode::SYM ? make_slie_inf(cap) : make_sas_inf(cap);
}

OperadMorphism morphism_from_twisting(const TwMor& a) {
  Report r = check_op_twisting(a);
  if (!r.pass) throw ValidationError("morphism_from_twisting: not a twisting morphism: " + r.detail);
  auto om = homotopy_operad(a.C->mode(), common_cap(*a.C, *a.P));
  auto conv = convolution_operad(a.C, a.P);
  return cobar_morphism(om, conv, [&](int k, int) { return conv->from_map(k, a.alpha.at(k)); });
}

TwMor twisting_from_morphism(const OperadMorphism& M, const CooperadPtr& C, const OperadPtr& P) {
  auto om = std::dynamic_pointer_cast<const CobarOperad>(M.src);
  auto conv = std::dynamic_pointer_cast<const ConvolutionOperad>(M.tgt);
  if (!om || !conv) throw ValidationError("twisting_from_morphism: expects a map from a cobar operad to hom(C,P)");
  TwMor t{C, P, zero_arity_map(*C, *P, -1)};
  for (int n = 2; n <= om->cap(); ++n) {
    LinMap m = conv->as_map(n, M.f.at(n).col(om->trees().corolla(n, 0)));
    if (m.degree() != -1) {
      if (!m.is_zero()) throw ValidationError("twisting_from_morphism: generator image has the wrong degree");
      m = zero_map(C->component(n).basis, P->component(n).basis, -1);
    }
    t.alpha.comp[n] = m;
  }
  return t;
}

AlgPtr convolution_algebra(const TwMor& a, const CoalgPtr& D, const AlgPtr& A) {
  if (a.C.get() != &D->coop() && a.C->name() != D->coop().name())
    throw ValidationError("convolution_algebra: coalgebra is not over the source of α");
  if (a.P.get() != &A->op() && a.P->name() != A->op().name())
    throw ValidationError("convolution_algebra: algebra is not over the target of α");
  auto om = homotopy_operad(a.C->mode(), common_cap(*a.C, *a.P));
  auto ctx = delta_eval(D, A);
  ArityMap alpha = a.alpha;
  const int na = A->dim();
  auto act = [ctx, alpha, A, na](int k, int, const std::vector<int>& Es) {
    const LinMap& ak = alpha.at(k);
    auto ev = [&](int n, int c, const std::vector<int>& as) {
      std::vector<Vec> args;
      for (int x : as) args.push_back(Vec{{x, Q(1)}});
      return A->gamma_vec(n, ak.col(c), args);
    };
    return ctx->act(k, ev, Es, na);
  };
  return cobar_algebra(om, hom_complex(D->complex(), A->complex()), act, "hom^α(" + D->name() + "," + A->name() + ")");
}

Report check_homotopy_relations(const PAlgebra& g, const Sampling& s) {
  auto om = dynamic_cast<const CobarOperad*>(&g.op());
  if (!om) throw ValidationError("check_homotopy_relations: not an algebra over a cobar operad");
  const TreeSpace& ts = om->trees();
  const GradedBasis& B = g.basis();
  const int cap = om->cap();
  for (int n = 2; n <= cap; ++n)
    for (const auto& xs : tuple_list(g.dim(), n, s, static_cast<unsigned long long>(n))) {
      std::vector<Vec> xv;
      for (int x : xs) xv.push_back(Vec{{x, Q(1)}});
      for (int e = 0; e < static_cast<int>(ts.gens(n).size()); ++e) {
        const int t = ts.corolla(n, e);
        const int dt = om->degree(n, t);
        Vec lhs = g.d(g.gamma(n, t, xs));
        Vec rhs = g.gamma_vec(n, om->component(n).d.col(t), xv);
        long long acc = dt;
        for (int j = 0; j < n; ++j) {
          auto xd = xv;
          xd[j] = g.d(xv[j]);
          axpy(rhs, Q(sign_of(acc)), g.gamma_vec(n, Vec{{t, Q(1)}}, xd));
          acc += B.degree(xs[j]);
        }
        if (lhs != rhs) {
          std::string tup;
          for (int x : xs) tup += (tup.empty() ? "" : ",") + B.label(x);
          return fail(n, "relation fails for " + ts.basis(n)->label(t) + "(" + tup + "): residual " +
                             vec_string(B, difference(lhs, rhs)),
                      cap);
        }
        if (om->mode() == Mode::SYM)
          for (int j = 0; j + 1 < n; ++j) {
            Perm rho(n);
            for (int i = 0; i < n; ++i) rho[i] = i;
            std::swap(rho[j], rho[j + 1]);
            Signed a = om->act(n, t, rho);
            std::vector<int> ys = xs;
            std::swap(ys[j], ys[j + 1]);
            Vec r;
            if (a.sign) r = scaled(g.gamma(n, a.idx, ys), Q(a.sign * sign_of(static_cast<long long>(B.degree(xs[j])) * B.degree(xs[j + 1]))));
            if (r != g.gamma(n, t, xs)) return fail(n, "bracket is not graded symmetric", cap);
          }
      }
    }
  return {true, 0, "", cap};
}

Q mc_coefficient(Mode mode, int n) {
  if (mode == Mode::NS) return Q(1);
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Q(mpz_class(1), f);
}

Vec mc_curvature(const PAlgebra& g, const Vec& x, int nmax) {
  Vec r = g.d(x);
  if (x.empty()) return r;
  for (int n = 2; n <= std::min(nmax, g.op().cap()); ++n)
    axpy(r, mc_coefficient(g.op().mode(), n), ell_vec(g, std::vector<Vec>(n, x)));
  return r;
}

PointMap point_map_of(const Vec& phi, int dimA) {
  return [phi, dimA](int x) {
    Vec v;
    auto it = phi.lower_bound(x * dimA);
    for (; it != phi.end() && it->first < (x + 1) * dimA; ++it) v.emplace(it->first - x * dimA, it->second);
    return v;
  };
}

Vec hom_vec_of(const PointMap& f, int dimD, int dimA) {
  Vec v;
  for (int x = 0; x < dimD; ++x)
    for (const auto& [a, q] : f(x)) v.emplace(x * dimA + a, q);
  return v;
}

MCVerdict mc_check(const TwMor& a, const CoalgPtr& D, const AlgPtr& A, const Vec& phi) {
  auto g = convolution_algebra(a, D, A);
  for (const auto& [e, q] : phi)
    if (g->degree(e) != 0) throw ValidationError("mc_check: φ must have degree 0");
  int nmax = 1;
  for (int x = 0; x < D->dim(); ++x) nmax = std::max(nmax, D->bound(x));
  MCVerdict v;
  v.residual = mc_curvature(*g, phi, nmax);
  PointMap pm = point_map_of(phi, A->dim());
  Vec tw;
  for (int x = 0; x < D->dim(); ++x)
    for (const auto& [z, q] : rel_residual(a, *D, *A, pm, x)) tw.emplace(x * A->dim() + z, q);
  v.bracket_side = v.residual.empty();
  v.twisting_side = tw.empty();
  v.agree = tw == v.residual;
  return v;
}

Report naturality_check(const TwMor& a, const CooperadMorphism& f, const CoalgPtr& D, const AlgPtr& A, int nmax,
                        const Sampling& s) {
  auto g1 = convolution_algebra(pull_tw(f, a), D, A);
  auto g2 = convolution_algebra(a, push_coalg(f, D), A);
  return brackets_intertwined(*g1, *g2, identity_map(g1->complex().basis), nmax, s);
}

Report naturality_check(const TwMor& a, const OperadMorphism& g, const CoalgPtr& D, const AlgPtr& A, int nmax,
                        const Sampling& s) {
  auto g1 = convolution_algebra(push_tw(g, a), D, A);
  auto g2 = convolution_algebra(a, D, pull_alg(g, A));
  return brackets_intertwined(*g1, *g2, identity_map(g1->complex().basis), nmax, s);
}

Report naturality_check(const TwMor& a, const CooperadMorphism& f) {
  OperadMorphism m1 = morphism_from_twisting(pull_tw(f, a));
  OperadMorphism m0 = morphism_from_twisting(a);
  const Operad& P = *a.P;
  const int cap = m1.src->cap();
  for (int n = 1; n <= cap; ++n) {
    const int np = P.size(n);
    for (int t = 0; t < m1.src->size(n); ++t) {
      Vec pulled;
      for (const auto& [e, q] : m0.f.at(n).col(t)) {
        const int c = e / np, p = e % np;
        for (int c2 = 0; c2 < f.src->size(n); ++c2) {
          auto it = f.f.at(n).col(c2).find(c);
          if (it != f.f.at(n).col(c2).end()) add_to(pulled, c2 * np + p, q * it->second);
        }
      }
      if (pulled != m1.f.at(n).col(t))
        return fail(n, "M̄ of the pulled-back twisting morphism differs on " + m1.src->label(n, t), cap);
    }
  }
  return {true, 0, "", cap};
}

Report brackets_intertwined(const PAlgebra& g, const PAlgebra& h, const LinMap& f, int nmax, const Sampling& s) {
  const int cap = std::min({nmax, g.op().cap(), h.op().cap()});
  for (int x = 0; x < g.dim(); ++x)
    if (f.apply(g.d(Vec{{x, Q(1)}})) != h.d(f.col(x))) return fail(1, "differentials differ at " + g.basis().label(x), cap);
  for (int n = 2; n <= cap; ++n)
    for (const auto& xs : tuple_list(g.dim(), n, s, 100 + static_cast<unsigned long long>(n))) {
      std::vector<Vec> img;
      for (int x : xs) img.push_back(f.col(x));
      Vec l = f.apply(ell(g, xs));
      Vec r = ell_vec(h, img);
      if (l != r) {
        std::string tup;
        for (int x : xs) tup += (tup.empty() ? "" : ",") + g.basis().label(x);
        return fail(n, "ℓ" + std::to_string(n) + "(" + tup + "): " + vec_string(h.basis(), l) + " vs " + vec_string(h.basis(), r), cap);
      }
    }
  return {true, 0, "", cap};
}

}  // namespace operadiq

namespace operadiq {

namespace {

std::vector<std::vector<int>> subsets(int n, int k, Mode mode) {
  std::vector<std::vector<int>> out;
  if (mode == Mode::NS) {
    for (int i = 1; i + k - 1 <= n; ++i) out.push_back(interval(i, k));
    return out;
  }
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

class DualOperad : public Operad {
 public:
  explicit DualOperad(CooperadPtr C) : Operad(C->mode(), C->cap(), C->name() + "∨"), C_(std::move(C)) {
    set_component(1, C_->component(1));
    for (int n = 2; n <= cap_; ++n) set_component(n, dual(C_->component(n)));
    terms_.resize(cap_ + 1);
    for (int n = 2; n <= cap_; ++n)
      for (int c = 0; c < C_->size(n); ++c)
        for (const auto& t : C_->decompose(n, c)) {
          int s = sign_of(static_cast<long long>(C_->degree(t.m, t.a)) * C_->degree(t.k, t.b));
          terms_[n][{t.m, t.a, t.S, t.k, t.b}].emplace_back(c, t.coef * s);
        }
  }

  Vec compose(int m, int a, const std::vector<int>& S, int k, int b) const override {
    if (k == 1) return Vec{{a, Q(1)}};
    if (m == 1) return Vec{{b, Q(1)}};
    Vec out;
    const int n = m + k - 1;
    auto it = terms_.at(n).find({m, a, S, k, b});
    if (it == terms_[n].end()) return out;
    for (const auto& [c, q] : it->second) add_to(out, c, q);
    return out;
  }
  Signed act(int n, int i, const Perm& rho) const override { return C_->act(n, i, rho); }

 private:
  using TKey = std::tuple<int, int, std::vector<int>, int, int>;
  CooperadPtr C_;
  std::vector<std::map<TKey, std::vector<std::pair<int, Q>>>> terms_;
};

class DualCooperad : public Cooperad {
 public:
  explicit DualCooperad(OperadPtr P) : Cooperad(P->mode(), P->cap(), P->name() + "∨"), P_(std::move(P)) {
    set_component(1, P_->component(1));
    for (int n = 2; n <= cap_; ++n) set_component(n, dual(P_->component(n)));
    dec_.resize(cap_ + 1);
    for (int n = 3; n <= cap_; ++n) {
      dec_[n].resize(P_->size(n));
      for (int k = 2; k < n; ++k) {
        const int m = n - k + 1;
        for (const auto& S : subsets(n, k, mode_))
          for (int a = 0; a < P_->size(m); ++a)
            for (int b = 0; b < P_->size(k); ++b) {
              int s = sign_of(static_cast<long long>(P_->degree(m, a)) * P_->degree(k, b));
              for (const auto& [p, q] : P_->compose(m, a, S, k, b)) dec_[n][p].push_back({q * s, m, a, S, k, b});
            }
      }
    }
    for (int n = 1; n <= cap_ && n < 3; ++n) dec_[n].resize(P_->size(n));
  }

  std::vector<DecTerm> decompose(int n, int c) const override { return dec_.at(n).at(c); }
  Signed act(int n, int i, const Perm& rho) const override { return P_->act(n, i, rho); }

 private:
  OperadPtr P_;
  std::vector<std::vector<std::vector<DecTerm>>> dec_;
};

int iso_sign(int, int) { return 1; }

}  // namespace

OperadPtr dual_operad(const CooperadPtr& C) { return std::make_shared<DualOperad>(C); }
CooperadPtr dual_cooperad(const OperadPtr& P) { return std::make_shared<DualCooperad>(P); }

TwMor dualize_tw(const TwMor& a) {
  TwMor r{dual_cooperad(a.P), dual_operad(a.C), ArityMap{-1, {}}};
  r.alpha.comp.resize(std::min(a.C->cap(), a.P->cap()) + 1);
  for (int n = 1; n < static_cast<int>(r.alpha.comp.size()); ++n) {
    LinMap m(r.C->component(n).basis, r.P->component(n).basis, -1);
    const LinMap& f = a.alpha.at(n);
    for (int c = 0; c < a.C->size(n); ++c)
      for (const auto& [p, q] : f.col(c)) m.add(p, c, q * sign_of(a.P->degree(n, p)));
    r.alpha.comp[n] = m;
  }
  return r;
}

AlgPtr dual_algebra(const CoalgPtr& D, const OperadPtr& Cdual) {
  const int cap = std::min(Cdual->cap(), D->coop().cap());
  // (n, c, y_1..y_n) -> Σ q x
  auto table = std::make_shared<std::map<Key, std::vector<std::pair<int, Q>>>>();
  for (int x = 0; x < D->dim(); ++x)
    for (const auto& [k, q] : D->delta(x)) (*table)[k].emplace_back(x, q);
  const Mode mode = Cdual->mode();
  auto g = [table, D, mode, cap](int n, int c, const std::vector<int>& xs) {
    Vec out;
    if (n > cap) return out;
    const GradedBasis& B = D->basis();
    std::vector<int> degs = degrees_of(B, xs);
    std::vector<Perm> perms;
    if (mode == Mode::SYM) perms = all_permutations(n);
    else {
      Perm id(n);
      for (int i = 0; i < n; ++i) id[i] = i;
      perms.push_back(id);
    }
    const int cdeg = D->coop().degree(n, c);
    for (const auto& sigma : perms) {
      Key k{n, c};
      for (int i = 0; i < n; ++i) k.push_back(xs[sigma[i]]);
      auto it = table->find(k);
      if (it == table->end()) continue;
      int s = koszul_sign(degs, sigma);
      long long e = 0, acc = cdeg;
      for (int i = 0; i < n; ++i) {
        e += static_cast<long long>(degs[sigma[i]]) * acc;
        acc += degs[sigma[i]];
      }
      s *= sign_of(e);
      for (const auto& [x, q] : it->second) add_to(out, x, q * s);
    }
    return out;
  };
  return std::make_shared<PAlgebra>(Cdual, dual(D->complex()), g, D->name() + "∨");
}

AlgPtr tensor_algebra(const TwMor& a, const AlgPtr& A, const AlgPtr& Cd, const BasisChange& change) {
  const Cooperad& C = *a.C;
  if (Cd->op().name() != C.name() + "∨") throw ValidationError("tensor_algebra: second factor is not over C∨");
  const int cap = common_cap(C, *a.P);
  auto om = homotopy_operad(C.mode(), cap);
  std::vector<Basis> facs{A->complex().basis, Cd->complex().basis};
  // per arity: (|c_i|, α(c_i), c_i∨) in the chosen basis
  struct Pair {
    int deg;
    Vec alpha, dual;
  };
  auto pairs = std::make_shared<std::vector<std::vector<Pair>>>(cap + 1);
  for (int n = 2; n <= cap; ++n) {
    const int sz = C.size(n);
    Matrix M, Minv;
    bool changed = n < static_cast<int>(change.size()) && !change[n].empty();
    if (changed) {
      M = change[n];
      Minv = inverse_matrix(M);
    }
    for (int i = 0; i < sz; ++i) {
      Pair p;
      p.deg = C.degree(n, i);
      if (!changed) {
        p.alpha = a.alpha.at(n).col(i);
        p.dual = Vec{{i, Q(1)}};
      } else {
        bool seen = false;
        for (int j = 0; j < sz; ++j) {
          if (M[i][j] == 0) continue;
          if (seen && C.degree(n, j) != p.deg) throw ValidationError("tensor_algebra: basis change mixes degrees");
          if (!seen) p.deg = C.degree(n, j);
          seen = true;
          axpy(p.alpha, M[i][j], a.alpha.at(n).col(j));
        }
        for (int j = 0; j < sz; ++j) add_to(p.dual, j, Minv[j][i]);
      }
      (*pairs)[n].push_back(std::move(p));
    }
  }
  auto act = [A, Cd, facs, pairs](int k, int, const std::vector<int>& ts) {
    Vec out;
    std::vector<Vec> as, xs;
    std::vector<int> ad, xd;
    for (int t : ts) {
      auto ix = tensor_split(facs, t);
      as.push_back(Vec{{ix[0], Q(1)}});
      xs.push_back(Vec{{ix[1], Q(1)}});
      ad.push_back(A->degree(ix[0]));
      xd.push_back(Cd->degree(ix[1]));
    }
    long long base = 0, asum = 0, xacc = 0;
    for (int j = 0; j < k; ++j) {
      base += static_cast<long long>(ad[j]) * xacc;
      xacc += xd[j];
      asum += ad[j];
    }
    for (const auto& p : pairs->at(k)) {
      Vec l = A->gamma_vec(k, p.alpha, as);
      if (l.empty()) continue;
      Vec r = Cd->gamma_vec(k, p.dual, xs);
      int s = sign_of(base + static_cast<long long>(p.deg) * asum);
      for (const auto& [u, q] : l)
        for (const auto& [w, q2] : r) add_to(out, tensor_index(facs, {u, w}), q * q2 * s);
    }
    return out;
  };
  return cobar_algebra(om, tensor_complex({A->complex(), Cd->complex()}), act, A->name() + "⊗" + Cd->name());
}

LinMap hom_tensor_iso(const ChainComplex& D, const ChainComplex& A, const Basis& tensor_basis) {
  const int nd = static_cast<int>(D.basis->size()), na = static_cast<int>(A.basis->size());
  ChainComplex H = hom_complex(D, A);
  LinMap f(H.basis, tensor_basis, 0);
  for (int v = 0; v < nd; ++v)
    for (int a = 0; a < na; ++a) f.add(v * na + a, a * nd + v, iso_sign(D.basis->degree(v), A.basis->degree(a)));
  return f;
}

LinMap hom_tensor_inverse(const ChainComplex& D, const ChainComplex& A, const Basis& tensor_basis) {
  const int nd = static_cast<int>(D.basis->size()), na = static_cast<int>(A.basis->size());
  ChainComplex H = hom_complex(D, A);
  LinMap f(tensor_basis, H.basis, 0);
  for (int v = 0; v < nd; ++v)
    for (int a = 0; a < na; ++a) f.add(a * nd + v, v * na + a, iso_sign(D.basis->degree(v), A.basis->degree(a)));
  return f;
}

}  // namespace operadiq
