#pragma once

#include "operadiq/mcspace.hpp"

namespace operadiq::cli {

struct UsageError : Error {
  using Error::Error;
};

struct Caps {
  int arity = 5;
  int weight = 4;
  int poly = 3;
  int dmin = -8, dmax = 8;
  std::string str() const;
};

struct CheckRecord {
  std::string name;
  Tri verdict = Tri::Pass;
  std::string witness;
  std::string caps;
  std::vector<std::pair<std::string, std::string>> values;
};

struct RunReport {
  std::string command;
  std::string digest;
  unsigned long long seed = 1;
  std::vector<CheckRecord> checks;
  std::vector<std::string> payload;  // serialized results, one record per line

  int count(Tri t) const;
  // 0 without FAIL, 1 otherwise; usage errors are reported by the caller as 2
  int exit_code() const;
};

// records sorted by name
std::string format_text(const RunReport& r);
std::string format_structured(const RunReport& r);
// FNV-1a, 16 hex digits
std::string digest_of(const std::string& s);

// ---- manifests ----

struct Object {
  std::string name, kind;
  std::vector<std::string> args;
  std::vector<std::vector<std::string>> body;  // tokenized records; the first token is the tag
  bool operator==(const Object&) const = default;
};

struct Manifest {
  int version = 1;
  Caps caps;
  unsigned long long seed = 1;
  std::vector<Object> objects;

  const Object* find(const std::string& name) const;
  bool operator==(const Manifest& o) const;
};

Manifest parse_manifest(const std::string& text);
std::string print_manifest(const Manifest& m);
Manifest load_manifest(const std::string& path);

// a resolved object
struct Value {
  enum class Kind { Complex, Map, Algebra, Coalgebra, Twisting, AlgMorphism, CoalgMorphism, Contraction, Filtration, Form };
  Kind kind = Kind::Complex;
  ChainComplex complex;
  LinMap map;
  AlgPtr alg;
  CoalgPtr coalg;
  std::vector<int> weight;  // optional additive weight on the basis
  std::shared_ptr<TwMor> tw;
  std::shared_ptr<InftyAlgMorphism> am;
  std::shared_ptr<InftyCoalgMorphism> cm;
  std::shared_ptr<Contraction> contraction;
  AlgPtr contraction_src, contraction_tgt;
  std::shared_ptr<FilteredLinf> filtration;
  std::shared_ptr<SullivanForms> forms;
  GForm form;
};
const char* kind_name(Value::Kind k);

// names: fixture:X, bare fixture names, manifest objects, and bar(tw,A), cobar(tw,D), hom(tw,D,A),
// canonical(g), induce_left(Φ,A), induce_right(Ψ,D)
class Env {
 public:
  Env(Caps caps, const Manifest* m = nullptr);
  const Value& get(const std::string& expr);
  const Caps& caps() const { return caps_; }
  static std::vector<std::string> fixture_names();

 private:
  Value build(const std::string& expr);
  Value fixture(const std::string& name);
  Value object(const Object& o);
  Caps caps_;
  const Manifest* m_;
  std::map<std::string, Value> cache_;
};

// weights E_{v,a} ↦ top + 1 - |v| on hom(D, A) for D concentrated in degrees 1..top
std::vector<int> hom_weights(const CCoalgebra& D, const PAlgebra& A);

// ---- commands ----

struct Options {
  Caps caps;
  unsigned long long seed = 1;
  const Manifest* manifest = nullptr;
  int level = -1;           // mc-simplex: the filtration quotient, default weight cap
  bool corrupt_phi = false;  // counterexample negative control
};

RunReport cmd_counterexample(const Options& o);
RunReport cmd_check(const std::string& kind, const std::vector<std::string>& names, const Options& o);
RunReport cmd_induce(const std::string& side, const std::string& morphism, const std::string& partner, const Options& o);
RunReport cmd_transfer(const std::string& algebra, const std::string& contraction, const Options& o);
RunReport cmd_suite(const std::string& name, const Options& o);

// ---- acceptance criteria ----

struct Criterion {
  int id;
  std::string name;
  CheckRecord (*run)(const Caps&, unsigned long long seed);
};
const std::vector<Criterion>& criteria();
std::vector<int> suite_members(const std::string& name);

}  // namespace operadiq::cli
