#include "operadiq/chaincx.hpp"

namespace operadiq {

ChainComplex::ChainComplex(Basis b, LinMap diff) : basis(std::move(b)), d(std::move(diff)) {
  if (!(*d.source() == *basis) || !(*d.target() == *basis))
    throw ValidationError("differential is not an endomorphism of the basis");
  if (d.degree() != -1) throw ValidationError("differential must have degree -1");
}

ChainComplex ChainComplex::zero(Basis b) {
  LinMap d(b, b, -1);
  return ChainComplex(b, d);
}

LinMap hom_differential(const ChainComplex& src, const ChainComplex& tgt, const LinMap& f) {
  LinMap a = compose(tgt.d, f);
  LinMap b = compose(f, src.d);
  return add(a, scale(b, Q(-sign_of(f.degree()))));
}

Verdict check_d_squared(const ChainComplex& c) {
  const auto& B = *c.basis;
  for (std::size_t i = 0; i < B.size(); ++i) {
    int deg = B.degree(static_cast<int>(i));
    if (deg - 2 < B.dmin()) continue;
    Vec v = c.d.apply(c.d.col(static_cast<int>(i)));
    if (!v.empty()) return {false, B.label(static_cast<int>(i))};
  }
  return {true, ""};
}

std::string dual_label(const std::string& label) {
  static const std::string mark = "∨";
  if (label.size() >= mark.size() && label.compare(label.size() - mark.size(), mark.size(), mark) == 0)
    return label.substr(0, label.size() - mark.size());
  return label + mark;
}

Basis dual_basis(const Basis& b) {
  auto out = std::make_shared<GradedBasis>(-b->dmax(), -b->dmin());
  for (std::size_t i = 0; i < b->size(); ++i) out->add(dual_label(b->label(static_cast<int>(i))), -b->degree(static_cast<int>(i)));
  return out;
}

LinMap dual_map(const LinMap& f) {
  Basis S = dual_basis(f.target()), T = dual_basis(f.source());
  LinMap r(S, T, f.degree());
  for (std::size_t i = 0; i < f.source()->size(); ++i)
    for (const auto& [j, c] : f.col(static_cast<int>(i))) {
      int phi_deg = -f.target()->degree(j);
      r.add(j, static_cast<int>(i), c * sign_of(static_cast<long long>(f.degree()) * phi_deg));
    }
  return r;
}

ChainComplex dual(const ChainComplex& c) {
  Basis D = dual_basis(c.basis);
  LinMap d(D, D, -1);
  // <d∨ φ, v> = -(-1)^{|φ|} <φ, d v>
  for (std::size_t i = 0; i < c.basis->size(); ++i)
    for (const auto& [j, coef] : c.d.col(static_cast<int>(i))) {
      int phi_deg = -c.basis->degree(j);
      d.add(j, static_cast<int>(i), -coef * sign_of(phi_deg));
    }
  return ChainComplex(D, d);
}

LinMap double_dual_iso(const ChainComplex& c) {
  Basis DD = dual_basis(dual_basis(c.basis));
  LinMap r(c.basis, DD, 0);
  for (std::size_t i = 0; i < c.basis->size(); ++i) r.add(static_cast<int>(i), static_cast<int>(i), sign_of(c.basis->degree(static_cast<int>(i))));
  return r;
}

std::string suspend_label(const std::string& label, int s) {
  static const std::string up = "s", down = "s⁻¹";
  if (s == 1) {
    if (label.rfind(down, 0) == 0) return label.substr(down.size());
    return up + label;
  }
  if (label.rfind(down, 0) != 0 && label.rfind(up, 0) == 0) return label.substr(up.size());
  return down + label;
}

ChainComplex suspend(const ChainComplex& c, int s) {
  if (s != 1 && s != -1) throw ValidationError("suspension must be +1 or -1");
  auto B = std::make_shared<GradedBasis>(c.basis->dmin() + s, c.basis->dmax() + s);
  for (std::size_t i = 0; i < c.basis->size(); ++i)
    B->add(suspend_label(c.basis->label(static_cast<int>(i)), s), c.basis->degree(static_cast<int>(i)) + s);
  LinMap d(B, B, -1);
  for (std::size_t i = 0; i < c.basis->size(); ++i) d.set(static_cast<int>(i), scaled(c.d.col(static_cast<int>(i)), Q(-1)));
  return ChainComplex(B, d);
}

ChainComplex unit_complex() {
  auto B = std::make_shared<GradedBasis>(0, 0);
  B->add("1", 0);
  return ChainComplex::zero(B);
}

ChainComplex tensor_complex(const std::vector<ChainComplex>& cs) {
  if (cs.empty()) return unit_complex();
  std::vector<Basis> bs;
  for (const auto& c : cs) bs.push_back(c.basis);
  Basis T = tensor_basis(bs);
  LinMap total(T, T, -1);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    std::vector<LinMap> fs;
    for (std::size_t j = 0; j < cs.size(); ++j) fs.push_back(j == k ? cs[j].d : identity_map(cs[j].basis));
    LinMap piece = tensor_map(fs);
    for (std::size_t i = 0; i < T->size(); ++i)
      for (const auto& [j, c] : piece.col(static_cast<int>(i))) total.add(static_cast<int>(i), j, c);
  }
  return ChainComplex(T, total);
}

int bareiss_rank(Matrix m) {
  if (m.empty() || m[0].empty()) return 0;
  // clear denominators row by row so every pivot step stays integral
  for (auto& row : m) {
    mpz_class l = 1;
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (auto& q : row) q *= l;
  }
  const std::size_t rows = m.size(), cols = m[0].size();
  Q prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) m[i][k] = (m[r][c] * m[i][k] - m[i][c] * m[r][k]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

namespace {

// Nullspace basis of the dense matrix (columns = unknowns).
std::vector<std::vector<Q>> nullspace(Matrix m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<int> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Q inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivcol.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<char> is_piv(cols, 0);
  for (int c : pivcol) is_piv[c] = 1;
  std::vector<std::vector<Q>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Q> v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = -m[i][f];
    out.push_back(v);
  }
  return out;
}

struct DegreeBlock {
  std::vector<int> here;   // basis indices in degree d
  Matrix d_out;            // rows: degree d-1 indices, cols: here
  std::vector<Vec> bounds; // images of degree d+1 elements
};

DegreeBlock block(const ChainComplex& c, int deg) {
  DegreeBlock b;
  b.here = c.basis->in_degree(deg);
  auto below = c.basis->in_degree(deg - 1);
  std::map<int, int> row;
  for (std::size_t k = 0; k < below.size(); ++k) row[below[k]] = static_cast<int>(k);
  b.d_out.assign(below.size(), std::vector<Q>(b.here.size()));
  for (std::size_t k = 0; k < b.here.size(); ++k)
    for (const auto& [j, q] : c.d.col(b.here[k])) b.d_out[row.at(j)][k] = q;
  for (int i : c.basis->in_degree(deg + 1)) b.bounds.push_back(c.d.col(i));
  return b;
}

int span_rank(const std::vector<Vec>& vs, const std::vector<int>& coords) {
  std::map<int, int> pos;
  for (std::size_t k = 0; k < coords.size(); ++k) pos[coords[k]] = static_cast<int>(k);
  Matrix m;
  for (const auto& v : vs) {
    std::vector<Q> row(coords.size());
    for (const auto& [j, q] : v) row[pos.at(j)] = q;
    m.push_back(row);
  }
  return bareiss_rank(m);
}

}  // namespace

std::optional<int> HomologyReport::dim(int d) const {
  auto it = dims.find(d);
  return it == dims.end() ? std::optional<int>(0) : it->second;
}

HomologyReport homology(const ChainComplex& c) {
  HomologyReport rep;
  const auto& B = *c.basis;
  for (int deg = B.dmin(); deg <= B.dmax(); ++deg) {
    if (deg == B.dmin() || deg == B.dmax()) {
      rep.dims[deg] = std::nullopt;
      continue;
    }
    DegreeBlock blk = block(c, deg);
    auto ker = nullspace(blk.d_out, blk.here.size());
    std::vector<Vec> acc = blk.bounds;
    int base = span_rank(acc, blk.here);
    std::vector<Vec> reps;
    for (const auto& kv : ker) {
      Vec v;
      for (std::size_t k = 0; k < kv.size(); ++k) add_to(v, blk.here[k], kv[k]);
      acc.push_back(v);
      int r = span_rank(acc, blk.here);
      if (r > base) {
        base = r;
        reps.push_back(v);
      } else {
        acc.pop_back();
      }
    }
    rep.dims[deg] = static_cast<int>(reps.size());
    rep.reps[deg] = reps;
  }
  return rep;
}

bool is_quasi_iso(const ChainComplex& src, const ChainComplex& tgt, const LinMap& f) {
  if (f.degree() != 0) return false;
  if (!hom_differential(src, tgt, f).is_zero()) return false;
  HomologyReport hs = homology(src), ht = homology(tgt);
  for (const auto& [deg, dim] : hs.dims) {
    if (!dim) continue;
    auto other = ht.dim(deg);
    if (!other) continue;
    if (*other != *dim) return false;
    if (*dim == 0) continue;
    DegreeBlock blk = block(tgt, deg);
    std::vector<Vec> acc = blk.bounds;
    int base = span_rank(acc, blk.here);
    for (const auto& v : hs.reps.at(deg)) acc.push_back(f.apply(v));
    if (span_rank(acc, blk.here) - base != *dim) return false;
  }
  for (const auto& [deg, dim] : ht.dims)
    if (dim && *dim > 0 && !hs.dims.count(deg)) return false;
  return true;
}

}  // namespace operadiq

namespace operadiq {

std::string hom_label(const std::string& v, const std::string& a) { return v + "↦" + a; }

ChainComplex hom_complex(const ChainComplex& D, const ChainComplex& A) {
  const int nd = static_cast<int>(D.basis->size()), na = static_cast<int>(A.basis->size());
  int lo = A.basis->dmin() - D.basis->dmax() - 1, hi = A.basis->dmax() - D.basis->dmin() + 1;
  auto b = std::make_shared<GradedBasis>(lo, hi);
  for (int v = 0; v < nd; ++v)
    for (int a = 0; a < na; ++a) b->add(hom_label(D.basis->label(v), A.basis->label(a)), A.basis->degree(a) - D.basis->degree(v));
  LinMap d(b, b, -1);
  for (int v = 0; v < nd; ++v)
    for (int a = 0; a < na; ++a)
      for (const auto& [a2, q] : A.d.col(a)) d.add(v * na + a, v * na + a2, q);
  for (int w = 0; w < nd; ++w)
    for (const auto& [v, q] : D.d.col(w))
      for (int a = 0; a < na; ++a) {
        const int e = A.basis->degree(a) - D.basis->degree(v);
        d.add(v * na + a, w * na + a, -q * sign_of(e));
      }
  return ChainComplex(b, d);
}

}  // namespace operadiq
