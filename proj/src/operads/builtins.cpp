#include "operadiq/operads.hpp"

#include <algorithm>

namespace operadiq {

namespace {

Basis one_per_arity(int n, const std::string& label, int degree) {
  auto b = std::make_shared<GradedBasis>(degree - 1, degree + 1);
  if (n == 1) b->add("id", 0);
  else b->add(label, degree);
  return b;
}

Basis empty_basis() { return std::make_shared<GradedBasis>(-1, 1); }

class OneDimOperad : public Operad {
 public:
  OneDimOperad(Mode mode, int cap, std::string name) : Operad(mode, cap, std::move(name)) {
    for (int n = 1; n <= cap; ++n) set_component(n, ChainComplex::zero(one_per_arity(n, "μ" + std::to_string(n), 0)));
  }
  Vec compose(int m, int, const std::vector<int>& S, int k, int) const override {
    if (m + k - 1 > cap()) throw CapOverflow(name() + ": composition beyond cap");
    if (mode() == Mode::NS && !is_interval(S)) throw ValidationError(name() + ": non-interval slot");
    return Vec{{0, Q(1)}};
  }
  Signed act(int n, int i, const Perm& rho) const override {
    if (mode() == Mode::SYM) return {1, i};
    return Operad::act(n, i, rho);
  }
};

class TrivialOperad : public Operad {
 public:
  TrivialOperad(Mode mode, int cap) : Operad(mode, cap, "I") {
    for (int n = 1; n <= cap; ++n)
      set_component(n, ChainComplex::zero(n == 1 ? one_per_arity(1, "", 0) : empty_basis()));
  }
  Vec compose(int, int, const std::vector<int>&, int, int) const override { return Vec{{0, Q(1)}}; }
  Signed act(int, int i, const Perm&) const override { return {1, i}; }
};

class TrivialCooperad : public Cooperad {
 public:
  TrivialCooperad(Mode mode, int cap) : Cooperad(mode, cap, "I") {
    for (int n = 1; n <= cap; ++n)
      set_component(n, ChainComplex::zero(n == 1 ? one_per_arity(1, "", 0) : empty_basis()));
  }
  std::vector<DecTerm> decompose(int, int) const override { return {}; }
  Signed act(int, int i, const Perm&) const override { return {1, i}; }
};

// One basis element per arity with Δ_(1)(e_n) = Σ coef(m, S) e_m ∘_S e_k
class OneDimCooperad : public Cooperad {
 public:
  using Coef = std::function<Q(int m, int i, int k)>;
  OneDimCooperad(Mode mode, int cap, std::string name, std::function<std::string(int)> lab, std::function<int(int)> deg,
                 Coef coef)
      : Cooperad(mode, cap, std::move(name)), coef_(std::move(coef)) {
    for (int n = 1; n <= cap; ++n) set_component(n, ChainComplex::zero(one_per_arity(n, lab(n), deg(n))));
  }
  std::vector<DecTerm> decompose(int n, int) const override {
    std::vector<DecTerm> out;
    if (mode() == Mode::NS) {
      for (int k = 2; k < n; ++k) {
        int m = n - k + 1;
        for (int i = 1; i <= m; ++i) {
          Q c = coef_(m, i, k);
          if (c != 0) out.push_back({c, m, 0, interval(i, k), k, 0});
        }
      }
      return out;
    }
    for (int k = 2; k < n; ++k) {
      int m = n - k + 1;
      std::vector<int> pick(n, 0);
      std::fill(pick.end() - k, pick.end(), 1);
      do {
        std::vector<int> S;
        for (int l = 0; l < n; ++l)
          if (pick[l]) S.push_back(l + 1);
        out.push_back({coef_(m, 0, k), m, 0, S, k, 0});
      } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return out;
  }
  Signed act(int n, int i, const Perm& rho) const override {
    if (mode() == Mode::SYM) return {1, i};
    return Cooperad::act(n, i, rho);
  }

 private:
  Coef coef_;
};

}  // namespace

OperadPtr make_as(int cap) { return std::make_shared<OneDimOperad>(Mode::NS, cap, "As"); }
OperadPtr make_com(int cap) { return std::make_shared<OneDimOperad>(Mode::SYM, cap, "Com"); }
OperadPtr make_trivial_operad(Mode mode, int cap) { return std::make_shared<TrivialOperad>(mode, cap); }
CooperadPtr make_trivial_cooperad(Mode mode, int cap) { return std::make_shared<TrivialCooperad>(mode, cap); }

// Δ_(1)(c_n) = Σ (-1)^{m + r + st} c_m ∘_{r+1} c_s with n = r + s + t, m = r + 1 + t
CooperadPtr make_as_shriek(int cap) {
  return std::make_shared<OneDimCooperad>(
      Mode::NS, cap, "As¡", [](int n) { return "c" + std::to_string(n); }, [](int n) { return n - 1; },
      [](int m, int i, int k) {
        long long r = i - 1, s = k, t = m - i;
        return Q(sign_of(m + r + s * t));
      });
}

CooperadPtr make_as_dual(int cap) {
  return std::make_shared<OneDimCooperad>(
      Mode::NS, cap, "As∨", [](int n) { return "μ" + std::to_string(n) + "∨"; }, [](int) { return 0; },
      [](int, int, int) { return Q(1); });
}

CooperadPtr make_com_dual(int cap) {
  return std::make_shared<OneDimCooperad>(
      Mode::SYM, cap, "Com∨", [](int n) { return "μ" + std::to_string(n) + "∨"; }, [](int) { return 0; },
      [](int, int, int) { return Q(1); });
}

TwMor kappa_as(int cap) {
  TwMor t{make_as_shriek(cap), make_as(cap), {}};
  t.alpha = zero_arity_map(*t.C, *t.P, -1);
  if (cap >= 2) t.alpha.comp[2].add(0, 0, -1);
  return t;
}

}  // namespace operadiq
