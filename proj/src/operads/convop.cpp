#include "operadiq/operads.hpp"

namespace operadiq {

ConvolutionOperad::ConvolutionOperad(CooperadPtr C, OperadPtr P)
    : Operad(C->mode(), C->cap(), "hom(" + C->name() + "," + P->name() + ")"), C_(std::move(C)), P_(std::move(P)) {
  if (C_->mode() != P_->mode()) throw ValidationError("convolution operad: mode mismatch");
  if (C_->cap() != P_->cap()) throw ValidationError("convolution operad: cap mismatch");
  terms_.resize(cap() + 1);
  for (int n = 1; n <= cap(); ++n) {
    const auto& cb = C_->basis(n);
    const auto& pb = P_->basis(n);
    int lo = pb.dmin() - cb.dmax(), hi = pb.dmax() - cb.dmin();
    auto B = std::make_shared<GradedBasis>(lo, hi);
    for (int c = 0; c < C_->size(n); ++c)
      for (int p = 0; p < P_->size(n); ++p) {
        std::string l = n == 1 ? "id" : cb.label(c) + "↦" + pb.label(p);
        B->add(l, pb.degree(p) - cb.degree(c));
      }
    LinMap d(B, B, -1);
    // ∂E_{c,p} = Σ (dp) E_{c,·} - (-1)^{|E|} Σ_x <d x, c> E_{x,p}
    std::vector<std::vector<std::pair<int, Q>>> into(C_->size(n));
    for (int x = 0; x < C_->size(n); ++x)
      for (const auto& [c, q] : C_->component(n).d.col(x)) into[c].push_back({x, q});
    for (int c = 0; c < C_->size(n); ++c)
      for (int p = 0; p < P_->size(n); ++p) {
        int e = elem(n, c, p);
        Vec v;
        for (const auto& [p2, q] : P_->component(n).d.col(p)) add_to(v, elem(n, c, p2), q);
        Q s = -sign_of(B->degree(e));
        for (const auto& [x, q] : into[c]) add_to(v, elem(n, x, p), s * q);
        d.set(e, v);
      }
    set_component(n, ChainComplex(B, d));
    for (int c = 0; c < C_->size(n); ++c)
      for (const auto& t : C_->decompose(n, c)) terms_[n][Key{t.m, t.a, t.S, t.k, t.b}].push_back({c, t.coef});
  }
}

Vec ConvolutionOperad::compose(int m, int a, const std::vector<int>& S, int k, int b) const {
  const int n = m + k - 1;
  if (n > cap()) throw CapOverflow(name() + ": composition beyond cap");
  if (m == 1) return Vec{{b, Q(1)}};
  if (k == 1) return Vec{{a, Q(1)}};
  auto [c1, p1] = split(m, a);
  auto [c2, p2] = split(k, b);
  auto it = terms_[n].find(Key{m, c1, S, k, c2});
  if (it == terms_[n].end()) return {};
  const int gdeg = degree(k, b);
  Q s = sign_of(static_cast<long long>(gdeg) * C_->degree(m, c1));
  Vec pp = P_->compose(m, p1, S, k, p2);
  Vec out;
  for (const auto& [c, q] : it->second)
    for (const auto& [p, r] : pp) add_to(out, elem(n, c, p), s * q * r);
  return out;
}

Signed ConvolutionOperad::act(int n, int i, const Perm& rho) const {
  if (mode() == Mode::NS) return Operad::act(n, i, rho);
  auto [c, p] = split(n, i);
  Signed sc = C_->act(n, c, rho), sp = P_->act(n, p, rho);
  if (!sc.sign || !sp.sign) return {0, 0};
  return {sc.sign * sp.sign, elem(n, sc.idx, sp.idx)};
}

LinMap ConvolutionOperad::as_map(int n, const Vec& v) const {
  int deg = 0;
  if (!v.empty()) deg = degree(n, v.begin()->first);
  LinMap f(C_->component(n).basis, P_->component(n).basis, deg);
  for (const auto& [e, q] : v) {
    if (degree(n, e) != deg) throw ValidationError("as_map: inhomogeneous element");
    auto [c, p] = split(n, e);
    f.add(c, p, q);
  }
  return f;
}

Vec ConvolutionOperad::from_map(int n, const LinMap& f) const {
  Vec v;
  for (int c = 0; c < C_->size(n); ++c)
    for (const auto& [p, q] : f.col(c)) add_to(v, elem(n, c, p), q);
  return v;
}

std::shared_ptr<const ConvolutionOperad> convolution_operad(CooperadPtr C, OperadPtr P) {
  return std::make_shared<ConvolutionOperad>(std::move(C), std::move(P));
}

}  // namespace operadiq
