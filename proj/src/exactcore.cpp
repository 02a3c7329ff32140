#include "operadiq/exactcore.hpp"

#include <algorithm>
#include <numeric>

namespace operadiq {

std::string to_string(const Q& q) {
  Q c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Q parse_rational(const std::string& s) {
  if (s.empty()) throw ValidationError("empty rational");
  Q q;
  if (q.set_str(s, 10) != 0) throw ValidationError("bad rational: " + s);
  if (q.get_den() == 0) throw ValidationError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  if (static_cast<int>(degrees.size()) != n) throw ValidationError("koszul_sign: arity mismatch");
  int e = 0;
  for (int a = 0; a < n; ++a) {
    if (!parity(degrees[order[a]])) continue;
    for (int b = a + 1; b < n; ++b)
      if (order[b] < order[a] && parity(degrees[order[b]])) e ^= 1;
  }
  return e ? -1 : 1;
}

int shuffle_sign(const SignContext& ctx, const std::vector<std::vector<int>>& blocks) {
  const int n = static_cast<int>(ctx.degrees.size());
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (const auto& b : blocks) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      int i = b[k];
      if (i < 1 || i > n || seen[i - 1]) throw ValidationError("shuffle_sign: malformed partition");
      if (k > 0 && b[k - 1] >= i) throw ValidationError("shuffle_sign: block not increasing");
      seen[i - 1] = 1;
      order.push_back(i - 1);
    }
  }
  if (static_cast<int>(order.size()) != n) throw ValidationError("shuffle_sign: partition omits indices");
  return koszul_sign(ctx.degrees, order);
}

int perm_sign(const SignContext& ctx, const std::vector<int>& perm) {
  const int n = static_cast<int>(ctx.degrees.size());
  if (static_cast<int>(perm.size()) != n) throw ValidationError("perm_sign: arity mismatch");
  std::vector<int> order(n, -1);
  for (int i = 0; i < n; ++i) {
    int t = perm[i] - 1;
    if (t < 0 || t >= n || order[t] != -1) throw ValidationError("perm_sign: not a permutation");
    order[t] = i;
  }
  return koszul_sign(ctx.degrees, order);
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

Perm compose_perm(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::vector<Perm> all_permutations(int n) {
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// ---- GradedBasis ----

GradedBasis::GradedBasis(int dmin, int dmax) : dmin_(dmin), dmax_(dmax) {
  if (dmin > dmax) throw ValidationError("empty degree window");
}

int GradedBasis::add(const std::string& label, int degree) {
  if (!in_window(degree))
    throw WindowOverflow("label " + label + " of degree " + std::to_string(degree) + " outside window");
  if (index_.count(label)) throw ValidationError("duplicate label " + label);
  int i = static_cast<int>(labels_.size());
  labels_.push_back(label);
  degrees_.push_back(degree);
  index_.emplace(label, i);
  return i;
}

int GradedBasis::find(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

int GradedBasis::at(const std::string& label) const {
  int i = find(label);
  if (i < 0) throw ValidationError("unknown label " + label);
  return i;
}

std::vector<int> GradedBasis::in_degree(int d) const {
  std::vector<int> r;
  for (std::size_t i = 0; i < degrees_.size(); ++i)
    if (degrees_[i] == d) r.push_back(static_cast<int>(i));
  return r;
}

bool GradedBasis::operator==(const GradedBasis& o) const {
  if (this == &o) return true;
  return dmin_ == o.dmin_ && dmax_ == o.dmax_ && labels_ == o.labels_ && degrees_ == o.degrees_;
}

Basis tensor_basis(const std::vector<Basis>& factors) {
  int lo = 0, hi = 0;
  for (const auto& f : factors) {
    lo += f->dmin();
    hi += f->dmax();
  }
  auto out = std::make_shared<GradedBasis>(lo, hi);
  std::size_t total = 1;
  for (const auto& f : factors) total *= f->size();
  for (std::size_t flat = 0; flat < total; ++flat) {
    auto idx = tensor_split(factors, static_cast<int>(flat));
    std::string label;
    int deg = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) label += kTensorSep;
      label += factors[k]->label(idx[k]);
      deg += factors[k]->degree(idx[k]);
    }
    out->add(label, deg);
  }
  return out;
}

int tensor_index(const std::vector<Basis>& factors, const std::vector<int>& idx) {
  int flat = 0;
  for (std::size_t k = 0; k < factors.size(); ++k)
    flat = flat * static_cast<int>(factors[k]->size()) + idx[k];
  return flat;
}

std::vector<int> tensor_split(const std::vector<Basis>& factors, int flat) {
  std::vector<int> idx(factors.size());
  for (int k = static_cast<int>(factors.size()) - 1; k >= 0; --k) {
    int s = static_cast<int>(factors[k]->size());
    idx[k] = flat % s;
    flat /= s;
  }
  return idx;
}

// ---- LinMap ----

LinMap::LinMap(Basis src, Basis tgt, int degree)
    : src_(std::move(src)), tgt_(std::move(tgt)), degree_(degree), cols_(src_->size()) {}

void LinMap::check_entry(int i, int j) const {
  int want = src_->degree(i) + degree_;
  if (tgt_->degree(j) != want)
    throw ValidationError("LinMap entry " + src_->label(i) + " -> " + tgt_->label(j) + " breaks degree " +
                          std::to_string(degree_));
}

void LinMap::set(int i, Vec image) {
  for (const auto& [j, c] : image) check_entry(i, j);
  for (auto it = image.begin(); it != image.end();)
    it = it->second == 0 ? image.erase(it) : std::next(it);
  if (!image.empty() && !tgt_->in_window(src_->degree(i) + degree_))
    throw WindowOverflow("image of " + src_->label(i) + " leaves the target window");
  cols_.at(i) = std::move(image);
}

void LinMap::add(int i, int j, const Q& c) {
  check_entry(i, j);
  add_to(cols_.at(i), j, c);
}

Vec LinMap::apply(const Vec& v) const {
  Vec r;
  for (const auto& [i, c] : v) axpy(r, c, cols_.at(i));
  return r;
}

bool LinMap::is_zero() const {
  for (const auto& c : cols_)
    if (!c.empty()) return false;
  return true;
}

bool LinMap::operator==(const LinMap& o) const {
  if (!src_ || !o.src_) return !src_ && !o.src_;
  return degree_ == o.degree_ && *src_ == *o.src_ && *tgt_ == *o.tgt_ && cols_ == o.cols_;
}

LinMap identity_map(const Basis& b) {
  LinMap f(b, b, 0);
  for (std::size_t i = 0; i < b->size(); ++i) f.add(static_cast<int>(i), static_cast<int>(i), 1);
  return f;
}

LinMap zero_map(const Basis& src, const Basis& tgt, int degree) { return LinMap(src, tgt, degree); }

LinMap compose(const LinMap& f, const LinMap& g) {
  if (!(*g.target() == *f.source())) throw ValidationError("compose: basis mismatch");
  LinMap r(g.source(), f.target(), f.degree() + g.degree());
  for (std::size_t i = 0; i < g.source()->size(); ++i) r.set(static_cast<int>(i), f.apply(g.col(static_cast<int>(i))));
  return r;
}

LinMap add(const LinMap& f, const LinMap& g) {
  if (!(*f.source() == *g.source()) || !(*f.target() == *g.target()) || f.degree() != g.degree())
    throw ValidationError("add: incompatible maps");
  LinMap r(f.source(), f.target(), f.degree());
  for (std::size_t i = 0; i < f.source()->size(); ++i) {
    Vec v = f.col(static_cast<int>(i));
    axpy(v, Q(1), g.col(static_cast<int>(i)));
    r.set(static_cast<int>(i), v);
  }
  return r;
}

LinMap scale(const LinMap& f, const Q& c) {
  LinMap r(f.source(), f.target(), f.degree());
  for (std::size_t i = 0; i < f.source()->size(); ++i) r.set(static_cast<int>(i), scaled(f.col(static_cast<int>(i)), c));
  return r;
}

LinMap tensor_map(const std::vector<LinMap>& maps) {
  if (maps.empty()) throw ValidationError("tensor_map: no factors");
  std::vector<Basis> srcs, tgts;
  int deg = 0;
  for (const auto& m : maps) {
    srcs.push_back(m.source());
    tgts.push_back(m.target());
    deg += m.degree();
  }
  Basis S = tensor_basis(srcs), T = tensor_basis(tgts);
  LinMap r(S, T, deg);
  const std::size_t k = maps.size();
  for (std::size_t flat = 0; flat < S->size(); ++flat) {
    auto idx = tensor_split(srcs, static_cast<int>(flat));
    // Koszul: f_j passes v_1..v_{j-1}
    long long e = 0, before = 0;
    for (std::size_t j = 0; j < k; ++j) {
      e += static_cast<long long>(maps[j].degree()) * before;
      before += srcs[j]->degree(idx[j]);
    }
    Lin<std::vector<int>> acc;
    acc[{}] = Q(sign_of(e));
    for (std::size_t j = 0; j < k; ++j) {
      Lin<std::vector<int>> next;
      const Vec& img = maps[j].col(idx[j]);
      for (const auto& [t, c] : acc)
        for (const auto& [tj, cj] : img) {
          auto key = t;
          key.push_back(tj);
          add_to(next, key, c * cj);
        }
      acc.swap(next);
    }
    Vec out;
    for (const auto& [t, c] : acc) add_to(out, tensor_index(tgts, t), c);
    r.set(static_cast<int>(flat), out);
  }
  return r;
}

Matrix to_dense(const LinMap& f) {
  Matrix m(f.target()->size(), std::vector<Q>(f.source()->size()));
  for (std::size_t i = 0; i < f.source()->size(); ++i)
    for (const auto& [j, c] : f.col(static_cast<int>(i))) m[j][i] = c;
  return m;
}

Matrix inverse_matrix(Matrix m) {
  const int n = static_cast<int>(m.size());
  Matrix inv(n, std::vector<Q>(n, Q(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw ValidationError("matrix is not invertible");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Q f = m[col][col];
    for (int j = 0; j < n; ++j) {
      m[col][j] /= f;
      inv[col][j] /= f;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Q g = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= g * m[col][j];
        inv[r][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

int rank_of(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      Q f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace operadiq
