#include "operadiq/cli.hpp"

#include <algorithm>
#include <numeric>

namespace operadiq::cli {

const char* kind_name(Value::Kind k) {
  switch (k) {
    case Value::Kind::Complex: return "complex";
    case Value::Kind::Map: return "map";
    case Value::Kind::Algebra: return "algebra";
    case Value::Kind::Coalgebra: return "coalgebra";
    case Value::Kind::Twisting: return "twisting morphism";
    case Value::Kind::AlgMorphism: return "∞-morphism of algebras";
    case Value::Kind::CoalgMorphism: return "∞-morphism of coalgebras";
    case Value::Kind::Contraction: return "contraction";
    case Value::Kind::Filtration: return "filtration";
    case Value::Kind::Form: return "form";
  }
  return "?";
}

std::vector<int> hom_weights(const CCoalgebra& D, const PAlgebra& A) {
  int top = 0;
  for (int v = 0; v < D.dim(); ++v) {
    if (D.degree(v) < 1) return {};
    top = std::max(top, D.degree(v));
  }
  std::vector<int> w;
  for (int v = 0; v < D.dim(); ++v)
    for (int a = 0; a < A.dim(); ++a) w.push_back(top + 1 - D.degree(v));
  return w;
}

namespace {

// f(a, b) -> {"f", {"a", "b"}}; plain names have no arguments
std::pair<std::string, std::vector<std::string>> split_call(const std::string& e) {
  auto open = e.find('(');
  if (open == std::string::npos) return {e, {}};
  if (e.back() != ')') throw UsageError("unbalanced expression '" + e + "'");
  std::vector<std::string> args;
  int depth = 0;
  std::string cur;
  for (std::size_t i = open + 1; i + 1 < e.size(); ++i) {
    char c = e[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw UsageError("unbalanced expression '" + e + "'");
    if (c == ',' && depth == 0) {
      args.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (depth != 0) throw UsageError("unbalanced expression '" + e + "'");
  args.push_back(cur);
  return {e.substr(0, open), args};
}

Value::Kind expect_kind(const Value& v, Value::Kind k, const std::string& what) {
  if (v.kind != k)
    throw UsageError(what + " has kind '" + kind_name(v.kind) + "', expected '" + kind_name(k) + "'");
  return k;
}

int label_index(const GradedBasis& b, const std::string& l, const std::string& where) {
  int i = b.find(l);
  if (i < 0) throw UsageError(where + ": unknown basis element '" + l + "'");
  return i;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Env::Env(Caps caps, const Manifest* m) : caps_(caps), m_(m) {}

std::vector<std::string> Env::fixture_names() {
  return {"A2", "A3", "H2", "H3", "V", "Phi", "i_inf", "contraction2", "contraction3",
          "kappa", "kappa_As", "kappa_dual", "iota_Com", "iota_As", "pi_As", "iota_V"};
}

const Value& Env::get(const std::string& expr) {
  auto it = cache_.find(expr);
  if (it != cache_.end()) return it->second;
  Value v = build(expr);
  return cache_.emplace(expr, std::move(v)).first->second;
}

Value Env::build(const std::string& expr) {
  if (expr.empty()) throw UsageError("empty name");
  if (expr.rfind("fixture:", 0) == 0) return fixture(expr.substr(8));
  auto [fn, args] = split_call(expr);
  if (args.empty()) {
    if (m_)
      if (const Object* o = m_->find(expr)) return object(*o);
    const auto names = fixture_names();
    if (std::find(names.begin(), names.end(), expr) != names.end()) return fixture(expr);
    throw UsageError("unresolved name '" + expr + "'");
  }
  auto tw_for = [this](const std::string& name, const AlgPtr& A) -> std::shared_ptr<TwMor> {
    if (name == "iota") {
      auto om = std::dynamic_pointer_cast<const CobarOperad>(A->op_ptr());
      if (!om) throw UsageError("iota needs an algebra over a cobar operad");
      return std::make_shared<TwMor>(iota_of(om));
    }
    const Value& t = get(name);
    expect_kind(t, Value::Kind::Twisting, name);
    return t.tw;
  };
  Value v;
  if (fn == "bar") {
    if (args.size() != 2) throw UsageError("bar(tw, A)");
    const Value& A = get(args[1]);
    expect_kind(A, Value::Kind::Algebra, args[1]);
    auto tw = tw_for(args[0], A.alg);
    if (tw->P->mode() != A.alg->op().mode()) throw UsageError("bar: operads of " + args[0] + " and " + args[1] + " differ");
    v.kind = Value::Kind::Coalgebra;
    v.coalg = A.weight.empty() ? bar_construction(*tw, A.alg, caps_.arity)
                               : bar_construction(*tw, A.alg, caps_.arity, A.weight, caps_.weight);
    v.complex = v.coalg->complex();
    return v;
  }
  if (fn == "cobar") {
    if (args.size() != 2) throw UsageError("cobar(tw, D)");
    const Value& D = get(args[1]);
    expect_kind(D, Value::Kind::Coalgebra, args[1]);
    const Value& t = get(args[0]);
    expect_kind(t, Value::Kind::Twisting, args[0]);
    if (t.tw->C->mode() != D.coalg->coop().mode()) throw UsageError("cobar: cooperads differ");
    v.kind = Value::Kind::Algebra;
    v.alg = cobar_construction(*t.tw, D.coalg, caps_.arity);
    v.complex = v.alg->complex();
    return v;
  }
  if (fn == "hom") {
    if (args.size() != 3) throw UsageError("hom(tw, D, A)");
    const Value& D = get(args[1]);
    expect_kind(D, Value::Kind::Coalgebra, args[1]);
    const Value& A = get(args[2]);
    expect_kind(A, Value::Kind::Algebra, args[2]);
    auto tw = tw_for(args[0], A.alg);
    if (tw->C->mode() != D.coalg->coop().mode() || tw->P->mode() != A.alg->op().mode())
      throw UsageError("hom: " + args[0] + " does not relate " + args[1] + " and " + args[2]);
    v.kind = Value::Kind::Algebra;
    v.alg = convolution_algebra(*tw, D.coalg, A.alg);
    v.weight = hom_weights(*D.coalg, *A.alg);
    v.complex = v.alg->complex();
    return v;
  }
  if (fn == "canonical") {
    if (args.size() != 1) throw UsageError("canonical(g)");
    const Value& g = get(args[0]);
    expect_kind(g, Value::Kind::Algebra, args[0]);
    v.kind = Value::Kind::Filtration;
    v.filtration = std::make_shared<FilteredLinf>(canonical_filtration(g.alg));
    v.alg = g.alg;
    return v;
  }
  if (fn == "induce_left" || fn == "induce_right") {
    if (args.size() != 2) throw UsageError(fn + "(morphism, partner)");
    const Value& m = get(args[0]);
    const Value& p = get(args[1]);
    v.kind = Value::Kind::AlgMorphism;
    if (fn == "induce_left") {
      expect_kind(m, Value::Kind::CoalgMorphism, args[0]);
      expect_kind(p, Value::Kind::Algebra, args[1]);
      if (m.cm->alpha.P->mode() != p.alg->op().mode()) throw UsageError("induce_left: operads differ");
      v.am = std::make_shared<InftyAlgMorphism>(induce_left(*m.cm, p.alg));
      v.weight = hom_weights(*m.cm->tgt, *p.alg);
    } else {
      expect_kind(m, Value::Kind::AlgMorphism, args[0]);
      expect_kind(p, Value::Kind::Coalgebra, args[1]);
      if (m.am->alpha.C->mode() != p.coalg->coop().mode()) throw UsageError("induce_right: cooperads differ");
      v.am = std::make_shared<InftyAlgMorphism>(induce_right(*m.am, p.coalg));
      v.weight = hom_weights(*p.coalg, *m.am->src);
    }
    return v;
  }
  throw UsageError("unknown function '" + fn + "'");
}

Value Env::fixture(const std::string& name) {
  const int ac = caps_.arity, wc = caps_.weight;
  Value v;
  auto alg = [&](const WeightedAlg& w) {
    v.kind = Value::Kind::Algebra;
    v.alg = w.alg;
    v.weight = w.weight;
    v.complex = w.alg->complex();
    return v;
  };
  auto twv = [&](TwMor t) {
    v.kind = Value::Kind::Twisting;
    v.tw = std::make_shared<TwMor>(std::move(t));
    return v;
  };
  if (name == "A2") return alg(make_An(2, std::max(wc, 2), ac));
  if (name == "A3") return alg(make_An(3, std::max(wc, 3), ac));
  if (name == "H2") return alg(make_Hn(2, ac));
  if (name == "H3") return alg(make_Hn(3, ac));
  if (name == "V") {
    v.kind = Value::Kind::Coalgebra;
    v.coalg = make_V(wc, ac);
    v.complex = v.coalg->complex();
    return v;
  }
  if (name == "Phi" || name == "iota_V") {
    auto tw = kappa_as(ac);
    const Value& V = get("fixture:V");
    auto O = cobar_construction(tw, V.coalg, ac);
    v.kind = Value::Kind::CoalgMorphism;
    v.cm = std::make_shared<InftyCoalgMorphism>(name == "Phi"
                                                    ? InftyCoalgMorphism{tw, V.coalg, V.coalg, O, as_point_map(make_Phi(*V.coalg, *O))}
                                                    : identity_infty(tw, V.coalg, ac));
    return v;
  }
  if (name == "contraction2" || name == "contraction3") {
    const int n = name.back() - '0';
    const Value& A = get(n == 2 ? "fixture:A2" : "fixture:A3");
    const Value& H = get(n == 2 ? "fixture:H2" : "fixture:H3");
    v.kind = Value::Kind::Contraction;
    v.contraction = std::make_shared<Contraction>(make_contraction(n, *A.alg, *H.alg));
    v.contraction_src = A.alg;
    v.contraction_tgt = H.alg;
    v.weight = H.weight;
    return v;
  }
  if (name == "i_inf") {
    const Value& c = get("fixture:contraction2");
    Transfer t = htt_transfer(c.contraction_src, c.contraction_tgt, *c.contraction, ac);
    v.kind = Value::Kind::AlgMorphism;
    v.am = std::make_shared<InftyAlgMorphism>(kappa_morphism(t, c.contraction_tgt, c.contraction_src));
    v.weight = get("fixture:H2").weight;
    return v;
  }
  if (name == "kappa" || name == "kappa_As") return twv(kappa_as(ac));
  if (name == "kappa_dual") return twv(dualize_tw(kappa_as(ac)));
  if (name == "iota_Com") return twv(iota_com(ac));
  if (name == "iota_As") return twv(iota_of(make_as_inf(ac)));
  if (name == "pi_As") return twv(pi_of(bar_operad(make_as(ac))));
  throw UsageError("unknown fixture '" + name + "'");
}

Value Env::object(const Object& o) {
  Value v;
  const std::string where = "object " + o.name;
  auto complex_of = [&](const std::string& n) -> ChainComplex {
    const Value& c = get(n);
    if (c.kind == Value::Kind::Complex || c.kind == Value::Kind::Algebra || c.kind == Value::Kind::Coalgebra)
      return c.complex;
    throw UsageError(where + ": " + n + " has no underlying complex");
  };
  if (o.kind == "complex") {
    auto B = std::make_shared<GradedBasis>(caps_.dmin, caps_.dmax);
    for (const auto& r : o.body)
      if (r[0] == "basis") {
        const int deg = std::stoi(r[2]);
        if (!B->in_window(deg)) throw UsageError(where + ": degree of " + r[1] + " outside the window");
        if (B->find(r[1]) >= 0) throw UsageError(where + ": duplicate basis element " + r[1]);
        B->add(r[1], deg);
      }
    Basis b = B;
    LinMap d(b, b, -1);
    for (const auto& r : o.body)
      if (r[0] == "d") {
        int s = label_index(*b, r[1], where), t = label_index(*b, r[2], where);
        if (b->degree(t) != b->degree(s) - 1) throw UsageError(where + ": d(" + r[1] + ") must lower the degree by one");
        d.add(s, t, parse_rational(r[3]));
      }
    v.complex = ChainComplex(b, d);
    return v;
  }
  if (o.kind == "map") {
    v.kind = Value::Kind::Map;
    ChainComplex s = complex_of(o.args[0]), t = complex_of(o.args[1]);
    const int deg = std::stoi(o.args[2]);
    v.map = LinMap(s.basis, t.basis, deg);
    for (const auto& r : o.body) {
      int i = label_index(*s.basis, r[1], where), j = label_index(*t.basis, r[2], where);
      if (t.basis->degree(j) != s.basis->degree(i) + deg) throw UsageError(where + ": entry of the wrong degree");
      v.map.add(i, j, parse_rational(r[3]));
    }
    return v;
  }
  if (o.kind == "assoc") {
    ChainComplex c = complex_of(o.args[0]);
    const GradedBasis& b = *c.basis;
    auto table = std::make_shared<std::map<std::pair<int, int>, Vec>>();
    std::vector<int> weight;
    for (const auto& r : o.body) {
      if (r[0] == "product") {
        int x = label_index(b, r[1], where), y = label_index(b, r[2], where), z = label_index(b, r[3], where);
        if (b.degree(z) != b.degree(x) + b.degree(y)) throw UsageError(where + ": product of the wrong degree");
        add_to((*table)[{x, y}], z, parse_rational(r[4]));
      } else {
        if (weight.empty()) weight.assign(b.size(), -1);
        weight[label_index(b, r[1], where)] = std::stoi(r[2]);
      }
    }
    if (std::count(weight.begin(), weight.end(), -1)) throw UsageError(where + ": weights must cover the basis");
    auto mul = [table](const Vec& a, const Vec& b2) {
      Vec out;
      for (const auto& [x, p] : a)
        for (const auto& [y, q] : b2) {
          auto it = table->find({x, y});
          if (it != table->end()) axpy(out, p * q, it->second);
        }
      return out;
    };
    v.kind = Value::Kind::Algebra;
    v.alg = std::make_shared<PAlgebra>(make_as(caps_.arity), c, [mul](int, int, const std::vector<int>& xs) {
      Vec acc{{xs[0], Q(1)}};
      for (std::size_t i = 1; i < xs.size(); ++i) acc = mul(acc, Vec{{xs[i], Q(1)}});
      return acc;
    }, o.name);
    v.weight = weight;
    v.complex = c;
    return v;
  }
  if (o.kind == "linf") {
    ChainComplex c = complex_of(o.args[0]);
    const Basis b = c.basis;
    auto table = std::make_shared<std::map<std::vector<int>, Vec>>();
    for (const auto& r : o.body) {
      std::vector<int> xs;
      for (const auto& l : split_commas(r[1])) xs.push_back(label_index(*b, l, where));
      if (xs.size() < 2 || static_cast<int>(xs.size()) > caps_.arity)
        throw UsageError(where + ": bracket arity outside 2.." + std::to_string(caps_.arity));
      int z = label_index(*b, r[2], where);
      if (b->degree(z) != sum_degrees(*b, xs, 0, static_cast<int>(xs.size())) - 1)
        throw UsageError(where + ": brackets have degree -1");
      std::vector<int> order(xs.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return xs[i] < xs[j]; });
      std::vector<int> sorted;
      for (int i : order) sorted.push_back(xs[i]);
      const int s = koszul_sign(degrees_of(*b, xs), order);
      if (s == 0) continue;
      add_to((*table)[sorted], z, parse_rational(r[3]) * s);
    }
    v.kind = Value::Kind::Algebra;
    v.alg = cobar_algebra(homotopy_operad(Mode::SYM, caps_.arity), c, [table, b](int, int, const std::vector<int>& xs) {
      std::vector<int> order(xs.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return xs[i] < xs[j]; });
      std::vector<int> sorted;
      for (int i : order) sorted.push_back(xs[i]);
      auto it = table->find(sorted);
      if (it == table->end()) return Vec{};
      return scaled(it->second, Q(koszul_sign(degrees_of(*b, xs), order)));
    }, o.name);
    v.complex = c;
    return v;
  }
  if (o.kind == "contraction") {
    const Value& A = get(o.args[0]);
    const Value& H = get(o.args[1]);
    expect_kind(A, Value::Kind::Algebra, o.args[0]);
    expect_kind(H, Value::Kind::Algebra, o.args[1]);
    const Basis& ab = A.complex.basis;
    const Basis& hb = H.complex.basis;
    Contraction c{LinMap(hb, ab, 0), LinMap(ab, hb, 0), LinMap(ab, ab, 1)};
    for (const auto& r : o.body) {
      LinMap& f = r[0] == "i" ? c.i : r[0] == "p" ? c.p : c.h;
      int s = label_index(*f.source(), r[1], where), t = label_index(*f.target(), r[2], where);
      if (f.target()->degree(t) != f.source()->degree(s) + f.degree())
        throw UsageError(where + ": entry of " + r[0] + " has the wrong degree");
      f.add(s, t, parse_rational(r[3]));
    }
    v.kind = Value::Kind::Contraction;
    v.contraction = std::make_shared<Contraction>(c);
    v.contraction_src = A.alg;
    v.contraction_tgt = H.alg;
    v.weight = H.weight;
    return v;
  }
  if (o.kind == "filtration") {
    const Value& g = get(o.args[0]);
    expect_kind(g, Value::Kind::Algebra, o.args[0]);
    if (o.args[1] != "terminating" && o.args[1] != "declared")
      throw UsageError(where + ": mode must be terminating or declared");
    int levels = 0;
    for (const auto& r : o.body) levels = std::max(levels, std::stoi(r[1]));
    std::vector<Subspace> F(levels);
    for (const auto& r : o.body) {
      Vec x;
      for (std::size_t p = 2; p + 1 < r.size(); p += 2) add_to(x, label_index(g.alg->basis(), r[p], where), parse_rational(r[p + 1]));
      F[std::stoi(r[1]) - 1].insert(x);
    }
    v.kind = Value::Kind::Filtration;
    v.alg = g.alg;
    v.filtration = std::make_shared<FilteredLinf>(
        FilteredLinf{g.alg, F, o.args[1] == "terminating" ? Completeness::Terminating : Completeness::Declared});
    return v;
  }
  if (o.kind == "form") {
    const Value& f = get(o.args[0]);
    expect_kind(f, Value::Kind::Filtration, o.args[0]);
    const int n = std::stoi(o.args[1]);
    if (n < 0) throw UsageError(where + ": negative simplex dimension");
    v.kind = Value::Kind::Form;
    v.filtration = f.filtration;
    v.alg = f.alg;
    v.forms = std::make_shared<SullivanForms>(n, caps_.poly);
    for (const auto& r : o.body) {
      Monomial m;
      if (r[1] != "-")
        for (const auto& e : split_commas(r[1])) m.t.push_back(std::stoi(e));
      if (static_cast<int>(m.t.size()) != n) throw UsageError(where + ": monomial needs " + std::to_string(n) + " exponents");
      m.dt = static_cast<unsigned>(std::stoi(r[2]));
      if (m.dt >> n) throw UsageError(where + ": dt bits beyond the simplex dimension");
      add_to(v.form[m], label_index(f.alg->basis(), r[3], where), parse_rational(r[4]));
    }
    return v;
  }
  throw UsageError(where + ": unsupported kind " + o.kind);
}

}  // namespace operadiq::cli
