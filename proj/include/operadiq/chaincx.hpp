#pragma once

#include "operadiq/exactcore.hpp"

#include <optional>

namespace operadiq {

struct ChainComplex {
  Basis basis;
  LinMap d;

  ChainComplex() = default;
  ChainComplex(Basis b, LinMap diff);
  static ChainComplex zero(Basis b);
};

struct Verdict {
  bool pass = true;
  std::string detail;
};

LinMap hom_differential(const ChainComplex& src, const ChainComplex& tgt, const LinMap& f);
Verdict check_d_squared(const ChainComplex& c);

std::string dual_label(const std::string& label);
Basis dual_basis(const Basis& b);
ChainComplex dual(const ChainComplex& c);
// x -> (-1)^{|x|} x∨∨, a chain isomorphism c -> dual(dual(c))
LinMap double_dual_iso(const ChainComplex& c);
// transpose of f : V -> W as W∨ -> V∨ with <f∨ φ, v> = (-1)^{|f||φ|} <φ, f v>
LinMap dual_map(const LinMap& f);

ChainComplex suspend(const ChainComplex& c, int s);
std::string suspend_label(const std::string& label, int s);

ChainComplex tensor_complex(const std::vector<ChainComplex>& cs);
ChainComplex unit_complex();

struct HomologyReport {
  // degree -> dimension, nullopt when the degree touches the window edge
  std::map<int, std::optional<int>> dims;
  std::map<int, std::vector<Vec>> reps;
  std::optional<int> dim(int d) const;
};

// hom(D, A) on the elementary maps E_{v,a}: v -> a (index v * dim A + a),
// ∂f = d_A f - (-1)^{|f|} f d_D
ChainComplex hom_complex(const ChainComplex& D, const ChainComplex& A);
std::string hom_label(const std::string& v, const std::string& a);

HomologyReport homology(const ChainComplex& c);
int bareiss_rank(Matrix m);

// Does the chain map f induce an isomorphism on all known homology degrees
bool is_quasi_iso(const ChainComplex& src, const ChainComplex& tgt, const LinMap& f);

}  // namespace operadiq
