#include "operadiq/fixtures.hpp"

namespace operadiq {

std::string an_label(int a, int e) {
  std::string s;
  if (a == 1) s = "x";
  else if (a > 1) s = "x^" + std::to_string(a);
  if (e) s += "y";
  return s;
}

namespace {

// product of monomials (a, e) in the truncated ring, -1 if it vanishes
struct Monomials {
  int n, wcap;
  std::map<std::pair<int, int>, int> idx;
  std::vector<std::pair<int, int>> mono;
  int weight(int a, int e) const { return a + n * e; }
  int find(int a, int e) const {
    auto it = idx.find({a, e});
    return it == idx.end() ? -1 : it->second;
  }
};

}  // namespace

WeightedAlg make_An(int n, int wcap, int arity_cap) {
  if (n < 1) throw ValidationError("A^n needs n >= 1");
  if (wcap < n) throw ValidationError("A^n truncation must reach x^n");
  auto M = std::make_shared<Monomials>();
  M->n = n;
  M->wcap = wcap;
  auto b = std::make_shared<GradedBasis>(-1, 2);
  std::vector<int> weight;
  for (int a = 1; a <= wcap; ++a) {
    M->idx[{a, 0}] = b->add(an_label(a, 0), 0);
    M->mono.push_back({a, 0});
    weight.push_back(a);
  }
  for (int a = 0; a + n <= wcap; ++a) {
    M->idx[{a, 1}] = b->add(an_label(a, 1), 1);
    M->mono.push_back({a, 1});
    weight.push_back(a + n);
  }
  LinMap d(b, b, -1);
  for (std::size_t i = 0; i < M->mono.size(); ++i) {
    auto [a, e] = M->mono[i];
    if (e) d.add(static_cast<int>(i), M->find(a + n, 0), 1);
  }
  auto gamma = [M](int, int, const std::vector<int>& xs) -> Vec {
    int a = 0, e = 0;
    for (int x : xs) {
      a += M->mono[x].first;
      e += M->mono[x].second;
    }
    if (e > 1) return {};
    int j = M->find(a, e);
    if (j < 0) return {};
    return Vec{{j, Q(1)}};
  };
  auto alg = std::make_shared<PAlgebra>(make_as(arity_cap), ChainComplex(b, d), gamma, "A" + std::to_string(n));
  return {alg, weight};
}

WeightedAlg make_Hn(int n, int arity_cap) {
  auto b = std::make_shared<GradedBasis>(-1, 1);
  std::vector<int> weight;
  for (int a = 1; a < n; ++a) {
    b->add(a == 1 ? "z" : "z^" + std::to_string(a), 0);
    weight.push_back(a);
  }
  auto gamma = [n](int, int, const std::vector<int>& xs) -> Vec {
    int a = 0;
    for (int x : xs) a += x + 1;
    if (a >= n) return {};
    return Vec{{a - 1, Q(1)}};
  };
  auto alg = std::make_shared<PAlgebra>(make_as(arity_cap), ChainComplex::zero(b), gamma, "H" + std::to_string(n));
  return {alg, weight};
}

Contraction make_contraction(int n, const PAlgebra& A, const PAlgebra& H) {
  const Basis& AB = A.complex().basis;
  const Basis& HB = H.complex().basis;
  Contraction c{LinMap(HB, AB, 0), LinMap(AB, HB, 0), LinMap(AB, AB, 1)};
  for (int a = 1; a < n; ++a) c.i.add(a - 1, AB->at(an_label(a, 0)), 1);
  for (int x = 0; x < A.dim(); ++x) {
    const std::string& l = AB->label(x);
    if (AB->degree(x) != 0) continue;
    int a = l == "x" ? 1 : std::stoi(l.substr(2));
    if (a < n) c.p.add(x, a - 1, 1);
    else c.h.add(x, AB->at(an_label(a - n, 1)), 1);
  }
  return c;
}

Report check_contraction(const Contraction& c, const ChainComplex& A, const ChainComplex& H) {
  Report ok{true, 0, "", 0};
  auto bad = [](std::string d) { return Report{false, 0, std::move(d), 0}; };
  if (compose(c.p, c.i) != identity_map(H.basis)) return bad("p i is not the identity");
  if (compose(A.d, c.i) != compose(c.i, H.d) || compose(H.d, c.p) != compose(c.p, A.d)) return bad("i or p is not a chain map");
  LinMap lhs = add(identity_map(A.basis), scale(compose(c.i, c.p), -1));
  LinMap rhs = add(compose(A.d, c.h), compose(c.h, A.d));
  if (lhs != rhs) return bad("id - i p differs from d h + h d");
  if (!compose(c.h, c.i).is_zero() || !compose(c.p, c.h).is_zero() || !compose(c.h, c.h).is_zero())
    return bad("side conditions fail");
  return ok;
}

CoalgPtr make_V(int I, int arity_cap) {
  auto b = std::make_shared<GradedBasis>(0, I + 1);
  for (int i = 1; i <= I; ++i) b->add("v" + std::to_string(i), i);
  auto C = make_as_shriek(arity_cap);
  // Δ^n(v_i) as a table of coefficients on tuples of indices
  std::vector<std::map<int, std::map<std::vector<int>, Q>>> tab(arity_cap + 1);
  for (int i = 1; i <= I; ++i)
    for (int j = 1; j + 1 < i; ++j) tab[2][i][{j, i - 1 - j}] = sign_of(j);
  for (int n = 3; n <= arity_cap; ++n) {
    Q e = 0;
    for (const auto& t : C->decompose(n, 0))
      if (t.m == n - 1 && t.S == std::vector<int>{1, 2}) e = t.coef;
    if (e == 0) throw ValidationError("As¡ lacks the component c_{n-1} ∘_1 c_2");
    for (int i = 1; i <= I; ++i)
      for (const auto& [w, q] : tab[n - 1][i]) {
        // w[0] splits by Δ^2 into (y_1, y_2)
        for (const auto& [u, q2] : tab[2][w[0]]) {
          std::vector<int> y{u[0], u[1]};
          y.insert(y.end(), w.begin() + 1, w.end());
          tab[n][i][y] += q * q2 / e;
        }
      }
  }
  auto delta = [tab, I](int x) {
    Elt out;
    for (std::size_t n = 2; n < tab.size(); ++n) {
      auto it = tab[n].find(x + 1);
      if (it == tab[n].end()) continue;
      for (const auto& [y, q] : it->second) {
        if (q == 0) continue;
        Key k{static_cast<int>(n), 0};
        for (int v : y) k.push_back(v - 1);
        out.emplace(k, q);
      }
    }
    (void)I;
    return out;
  };
  return std::make_shared<CCoalgebra>(C, ChainComplex::zero(b), delta, "V");
}

Elt printed_delta_V(const CCoalgebra& V, int n, int weight) {
  Elt out;
  const int m = n;
  if (weight == 2) {
    for (int j = 1; j + 1 < m; ++j) out.emplace(Key{2, 0, j - 1, m - 1 - j - 1}, Q(sign_of(j)));
  } else if (weight == 3) {
    for (int j1 = 1; j1 < m; ++j1)
      for (int j2 = 1; j1 + j2 < m; ++j2) {
        int j3 = m - 2 - j1 - j2;
        if (j3 < 1) continue;
        out.emplace(Key{3, 0, j1 - 1, j2 - 1, j3 - 1}, Q(-sign_of(j2)));
      }
  } else {
    throw ValidationError("printed formula only covers weights 2 and 3");
  }
  (void)V;
  return out;
}

LinMap make_Phi(const CCoalgebra& V, const PAlgebra& omega) {
  if (!omega.free_space) throw ValidationError("make_Phi: target must be the cobar construction");
  const SchurSpace& S = *omega.free_space;
  LinMap phi(V.complex().basis, S.basis(), 0);
  for (int x = 0; x < V.dim(); ++x) {
    const int n = x + 1;
    std::vector<int> parts;
    std::function<void(int)> go = [&](int rest) {
      if (rest == 0) {
        Key k{static_cast<int>(parts.size()), 0};
        for (int p : parts) k.push_back(p - 1);
        Signed s = S.index(k);
        if (s.sign) phi.add(x, s.idx, s.sign);
        return;
      }
      for (int p = 1; p <= rest; ++p) {
        parts.push_back(p);
        go(rest - p);
        parts.pop_back();
      }
    };
    go(n);
  }
  return phi;
}

Vec make_f(int i, const CCoalgebra& V, const PAlgebra& H) {
  if (i < 1 || i > 3) throw ValidationError("make_f: i must be 1, 2 or 3");
  const int nh = H.dim();
  const int z = H.basis().at("z");
  Vec f{{0 * nh + z, Q(1)}};
  if (i == 1 && V.dim() >= 2) f[1 * nh + z] = 1;
  return f;
}

}  // namespace operadiq
