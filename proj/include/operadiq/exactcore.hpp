#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace operadiq {

using Q = mpq_class;

std::string to_string(const Q& q);
Q parse_rational(const std::string& s);

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct WindowOverflow : Error {
  using Error::Error;
};
struct CapOverflow : Error {
  using Error::Error;
};

// Sparse linear combinations keyed by an ordered type. Zero coefficients are never stored.
template <class K>
using Lin = std::map<K, Q>;

template <class K>
void add_to(Lin<K>& v, const K& k, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = v.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) v.erase(it);
  }
}

template <class K>
void axpy(Lin<K>& y, const Q& a, const Lin<K>& x) {
  if (a == 0) return;
  for (const auto& [k, c] : x) add_to(y, k, a * c);
}

template <class K>
Lin<K> scaled(const Lin<K>& x, const Q& a) {
  Lin<K> r;
  if (a == 0) return r;
  for (const auto& [k, c] : x) r.emplace(k, a * c);
  return r;
}

using Vec = Lin<int>;

// ---- signs ----

inline int parity(long long d) { return static_cast<int>(d & 1); }
inline int sign_of(long long e) { return (e & 1) ? -1 : 1; }

// order[k] is the (0-based) old index placed at new position k. Returns the Koszul sign
// relating the reordered tensor to the original one.
int koszul_sign(const std::vector<int>& degrees, const std::vector<int>& order);

struct SignContext {
  std::vector<int> degrees;
};

// blocks: ordered partition of {1..n}, each block increasing.
int shuffle_sign(const SignContext& ctx, const std::vector<std::vector<int>>& blocks);
// perm: images sigma(1..n); factor i moves to position sigma(i).
int perm_sign(const SignContext& ctx, const std::vector<int>& perm);

using Perm = std::vector<int>;  // 0-based images
Perm inverse(const Perm& p);
Perm compose_perm(const Perm& a, const Perm& b);  // (a o b)(i) = a(b(i))
bool is_permutation(const Perm& p);
std::vector<Perm> all_permutations(int n);

// ---- graded bases ----

class GradedBasis {
 public:
  GradedBasis() = default;
  GradedBasis(int dmin, int dmax);

  int add(const std::string& label, int degree);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(int i) const { return labels_.at(i); }
  int degree(int i) const { return degrees_.at(i); }
  int find(const std::string& label) const;
  int at(const std::string& label) const;
  std::vector<int> in_degree(int d) const;
  int dmin() const { return dmin_; }
  int dmax() const { return dmax_; }
  bool in_window(int d) const { return d >= dmin_ && d <= dmax_; }

  bool operator==(const GradedBasis& o) const;

 private:
  int dmin_ = 0, dmax_ = 0;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::unordered_map<std::string, int> index_;
};

using Basis = std::shared_ptr<const GradedBasis>;

inline constexpr const char* kTensorSep = "⊗";

Basis tensor_basis(const std::vector<Basis>& factors);
int tensor_index(const std::vector<Basis>& factors, const std::vector<int>& idx);
std::vector<int> tensor_split(const std::vector<Basis>& factors, int flat);

// ---- linear maps ----

class LinMap {
 public:
  LinMap() = default;
  LinMap(Basis src, Basis tgt, int degree);

  void set(int i, Vec image);
  void add(int i, int j, const Q& c);

  const Vec& col(int i) const { return cols_.at(i); }
  Vec apply(const Vec& v) const;
  bool is_zero() const;

  const Basis& source() const { return src_; }
  const Basis& target() const { return tgt_; }
  int degree() const { return degree_; }

  bool operator==(const LinMap& o) const;

 private:
  void check_entry(int i, int j) const;

  Basis src_, tgt_;
  int degree_ = 0;
  std::vector<Vec> cols_;
};

LinMap identity_map(const Basis& b);
LinMap zero_map(const Basis& src, const Basis& tgt, int degree);
LinMap compose(const LinMap& f, const LinMap& g);  // f o g
LinMap add(const LinMap& f, const LinMap& g);
LinMap scale(const LinMap& f, const Q& c);
LinMap tensor_map(const std::vector<LinMap>& maps);

// Dense helpers used by oracles and homology.
using Matrix = std::vector<std::vector<Q>>;
Matrix to_dense(const LinMap& f);
int rank_of(Matrix m);
// throws ValidationError when m is singular
Matrix inverse_matrix(Matrix m);

}  // namespace operadiq
