#include "operadiq/algcoalg.hpp"

#include <algorithm>
#include <numeric>

namespace operadiq {

int canon_coinv(const Collection& X, int n, int& c, std::vector<int>& items, std::vector<int>& degs) {
  if (X.mode() == Mode::NS || n <= 1) return 1;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return items[a] < items[b]; });
  int sign = koszul_sign(degs, order);
  Perm rho(n);
  for (int p = 0; p < n; ++p) rho[order[p]] = p;
  Signed s = X.act(n, c, rho);
  if (!s.sign) return 0;
  sign *= s.sign;
  c = s.idx;
  std::vector<int> ni(n), nd(n);
  for (int p = 0; p < n; ++p) {
    ni[p] = items[order[p]];
    nd[p] = degs[order[p]];
  }
  items = std::move(ni);
  degs = std::move(nd);

  std::vector<std::pair<int, int>> runs;
  bool trivial = true;
  for (int p = 0; p < n;) {
    int q = p;
    while (q < n && items[q] == items[p]) ++q;
    runs.push_back({p, q});
    if (q - p > 1) trivial = false;
    p = q;
  }
  if (trivial) return sign;

  std::map<int, int> orbit;
  std::vector<Perm> pieces(runs.size());
  std::function<bool(std::size_t)> walk = [&](std::size_t r) -> bool {
    if (r == runs.size()) {
      Perm tau(n);
      for (std::size_t j = 0; j < runs.size(); ++j)
        for (int t = 0; t < static_cast<int>(pieces[j].size()); ++t) tau[runs[j].first + t] = runs[j].first + pieces[j][t];
      Signed a = X.act(n, c, tau);
      if (!a.sign) return false;
      int eps = a.sign * koszul_sign(degs, inverse(tau));
      auto [it, fresh] = orbit.emplace(a.idx, eps);
      return fresh || it->second == eps;
    }
    int len = runs[r].second - runs[r].first;
    pieces[r].resize(len);
    std::iota(pieces[r].begin(), pieces[r].end(), 0);
    do {
      if (!walk(r + 1)) return false;
    } while (std::next_permutation(pieces[r].begin(), pieces[r].end()));
    return true;
  };
  if (!walk(0)) return 0;
  const auto& best = *orbit.begin();
  c = best.first;
  return sign * best.second;
}

SchurSpace::SchurSpace(std::shared_ptr<const Collection> X, ChainComplex V, int wcap, std::vector<int> weights, int vcap)
    : X_(std::move(X)), V_(std::move(V)), wcap_(std::min(wcap, X_->cap())), vcap_(vcap), vweight_(std::move(weights)) {
  if (wcap < 1) throw ValidationError("weight cap must be at least 1");
  const int dimV = static_cast<int>(V_.basis->size());
  if (!vweight_.empty() && static_cast<int>(vweight_.size()) != dimV) throw ValidationError("weight vector size mismatch");
  const bool sym = X_->mode() == Mode::SYM;
  std::vector<int> tup;
  std::function<void(int, int, int)> fill = [&](int n, int from, int wsum) {
    if (static_cast<int>(tup.size()) == n) {
      for (int c = 0; c < X_->size(n); ++c) {
        Key k{n, c};
        k.insert(k.end(), tup.begin(), tup.end());
        if (sym) {
          int cc = c;
          std::vector<int> items = tup, degs;
          for (int y : items) degs.push_back(V_.basis->degree(y));
          if (!canon_coinv(*X_, n, cc, items, degs) || cc != c) continue;
        }
        index_.emplace(k, static_cast<int>(keys_.size()));
        keys_.push_back(std::move(k));
      }
      return;
    }
    for (int y = sym ? from : 0; y < dimV; ++y) {
      int w = wsum + vweight(y);
      if (vcap_ >= 0 && w > vcap_) continue;
      tup.push_back(y);
      fill(n, y, w);
      tup.pop_back();
    }
  };
  for (int n = 1; n <= wcap_; ++n) fill(n, 0, 0);

  int lo = 0, hi = 0;
  bool first = true;
  for (const auto& k : keys_) {
    int d = degree_of(k);
    lo = first ? d : std::min(lo, d);
    hi = first ? d : std::max(hi, d);
    first = false;
  }
  auto b = std::make_shared<GradedBasis>(lo - 1, hi + 1);
  for (const auto& k : keys_) b->add(key_label(k), degree_of(k));
  basis_ = b;
}

bool SchurSpace::in_caps(const Key& k) const {
  const int n = k[0];
  if (n < 1 || n > wcap_) return false;
  if (vcap_ < 0) return true;
  int w = 0;
  for (int j = 0; j < n; ++j) w += vweight(k[2 + j]);
  return w <= vcap_;
}

int SchurSpace::degree_of(const Key& k) const {
  int d = X_->degree(k[0], k[1]);
  for (int j = 0; j < k[0]; ++j) d += V_.basis->degree(k[2 + j]);
  return d;
}

Signed SchurSpace::index(const Key& k) const {
  if (!in_caps(k)) return {0, 0};
  if (X_->mode() == Mode::NS) {
    auto it = index_.find(k);
    if (it == index_.end()) throw ValidationError("schur space: malformed key");
    return {1, it->second};
  }
  const int n = k[0];
  int c = k[1];
  std::vector<int> items(k.begin() + 2, k.end()), degs;
  for (int y : items) degs.push_back(V_.basis->degree(y));
  int s = canon_coinv(*X_, n, c, items, degs);
  if (!s) return {0, 0};
  Key kk{n, c};
  kk.insert(kk.end(), items.begin(), items.end());
  auto it = index_.find(kk);
  if (it == index_.end()) throw ValidationError("schur space: canonical key missing");
  return {s, it->second};
}

std::string SchurSpace::key_label(const Key& k) const {
  std::string s = X_->label(k[0], k[1]);
  for (int j = 0; j < k[0]; ++j) s += std::string(kTensorSep) + V_.basis->label(k[2 + j]);
  return s;
}

Elt SchurSpace::d1(const Key& k) const {
  Elt out;
  const int n = k[0];
  for (const auto& [c2, q] : X_->component(n).d.col(k[1])) {
    Key kk = k;
    kk[1] = c2;
    add_to(out, kk, q);
  }
  long long e = X_->degree(n, k[1]);
  for (int j = 0; j < n; ++j) {
    for (const auto& [y2, q] : V_.d.col(k[2 + j])) {
      Key kk = k;
      kk[2 + j] = y2;
      add_to(out, kk, q * sign_of(e));
    }
    e += V_.basis->degree(k[2 + j]);
  }
  return out;
}

Vec SchurSpace::to_vec(const Elt& e) const {
  Vec v;
  for (const auto& [k, q] : e) {
    Signed s = index(k);
    if (s.sign) add_to(v, s.idx, q * s.sign);
  }
  return v;
}

Elt SchurSpace::from_vec(const Vec& v) const {
  Elt e;
  for (const auto& [i, q] : v) e.emplace(keys_.at(i), q);
  return e;
}

std::vector<int> degrees_of(const GradedBasis& b, const std::vector<int>& xs) {
  std::vector<int> d;
  d.reserve(xs.size());
  for (int x : xs) d.push_back(b.degree(x));
  return d;
}

int sum_degrees(const GradedBasis& b, const std::vector<int>& xs, int from, int to) {
  int s = 0;
  for (int j = from; j < to; ++j) s += b.degree(xs[j]);
  return s;
}

std::string vec_string(const GradedBasis& b, const Vec& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [i, q] : v) {
    std::string c = q.get_str();
    if (!s.empty()) s += c[0] == '-' ? " - " : " + ";
    else if (c[0] == '-') s += "-";
    if (c[0] == '-') c = c.substr(1);
    if (c != "1") s += c + "·";
    s += b.label(i);
  }
  return s;
}

}  // namespace operadiq
