#include "operadiq/cli.hpp"

#include <algorithm>
#include <cstdio>

namespace operadiq::cli {

namespace {

std::string inputs(const std::string& cmd, const Options& o) {
  std::string s = cmd + "\n" + o.caps.str() + "\nseed " + std::to_string(o.seed) + "\n";
  if (o.manifest) s += print_manifest(*o.manifest);
  return digest_of(s);
}

RunReport start(const std::string& cmd, const Options& o) {
  RunReport r;
  r.command = cmd;
  r.digest = inputs(cmd, o);
  r.seed = o.seed;
  return r;
}

CheckRecord from_report(const std::string& name, const Report& rep, const Caps& caps) {
  CheckRecord c{name, rep.pass ? Tri::Pass : Tri::Fail, "", caps.str(), {}};
  if (!rep.pass) c.witness = (rep.arity ? "arity " + std::to_string(rep.arity) + ": " : std::string()) + rep.detail;
  return c;
}

Sampling sampling(const Options& o) {
  Sampling s;
  s.seed = o.seed;
  return s;
}

BarBound bound_of(const InftyAlgMorphism& m, const std::vector<int>& w, const Caps& c) {
  return w.empty() ? BarBound{m.cap, {}, -1} : BarBound{m.cap, w, c.weight};
}

std::string join_labels(const GradedBasis& b, const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ",") + b.label(x);
  return s;
}

// the components of ψ on the cogenerators of B_α src inside the bound, nonzero ones only
void serialize_components(const InftyAlgMorphism& m, const BarBound& b, std::vector<std::string>& out) {
  auto B = bar_construction(m.alpha, m.src, b.arity, b.weight, b.wcap);
  const SchurSpace& S = *B->cofree_space;
  out.push_back("infty-morphism " + m.src->name() + " -> " + m.tgt->name() + " arity " + std::to_string(b.arity) +
                (b.wcap >= 0 ? " weight " + std::to_string(b.wcap) : ""));
  int nonzero = 0;
  for (int i = 0; i < S.size(); ++i) {
    Vec v = m.psi(S.key(i));
    if (v.empty()) continue;
    ++nonzero;
    out.push_back("  psi" + std::to_string(S.arity(i)) + " " + S.key_label(S.key(i)) + " = " + vec_string(m.tgt->basis(), v));
  }
  out.push_back("end " + std::to_string(nonzero) + " nonzero components");
}

}  // namespace

RunReport cmd_counterexample(const Options& o) {
  RunReport r = start(std::string("counterexample") + (o.corrupt_phi ? " --corrupt-phi" : ""), o);
  const Caps& c = o.caps;
  if (c.arity < 3 || c.weight < 3) {
    const std::string why = "μ3∨ ⊗ F sits in arity 3 and weight 3; caps arity=" + std::to_string(c.arity) +
                            " weight=" + std::to_string(c.weight) + " stop below it";
    r.checks.push_back({"counterexample", Tri::Unknown, why, c.str(), {}});
    r.checks.push_back({"phi-infty-morphism", Tri::Unknown, why, c.str(), {}});
    return r;
  }
  std::function<PointMap(PointMap)> modify;
  if (o.corrupt_phi)
    modify = [](PointMap phi) -> PointMap {
      // the μ2⊗v1⊗v3 term of Φ(v4)
      return [phi](int x) {
        Vec v = phi(x);
        if (x == 3 && v.size() > 1) {
          auto it = std::next(v.begin());
          it->second = -it->second;
        }
        return v;
      };
    };
  {
    auto tw = kappa_as(4);
    auto V = make_V(4, 4);
    auto O = cobar_construction(tw, V, 4);
    InftyCoalgMorphism Phi{tw, V, V, O, as_point_map(make_Phi(*V, *O))};
    if (modify) Phi.phi = modify(Phi.phi);
    CheckRecord pr = from_report("phi-infty-morphism", check_infty(Phi), c);
    pr.caps = "arity=4 weight=4";
    r.checks.push_back(pr);
  }
  Counterexample ce = counterexample(modify);
  CheckRecord rec{"counterexample", Tri::Pass, "", "arity=4 weight=4", {}};
  rec.values = {{"hom_l(Phi,1) hom_r(1,i_inf)(mu3v⊗F)(v4)", ce.left_str},
                {"hom_r(1,i_inf) hom_l(Phi,1)(mu3v⊗F)(v4)", ce.right_str},
                {"intermediate", ce.intermediate_str}};
  const bool ok = ce.left_str == "-x^3" && ce.right_then_left.empty() && !ce.equal;
  if (!ok) {
    rec.verdict = Tri::Fail;
    rec.witness = "expected -x^3 and 0 at v4, residual " + ce.left_str + " vs " + ce.right_str;
  }
  r.checks.push_back(rec);
  return r;
}

RunReport cmd_check(const std::string& kind, const std::vector<std::string>& names, const Options& o) {
  static const std::vector<std::string> kinds{"twisting", "rel-twisting", "infty", "dsq", "linf-relations", "filtration",
                                              "mc-simplex"};
  if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) throw UsageError("unknown check kind '" + kind + "'");
  if (names.empty()) throw UsageError("check " + kind + ": no targets");
  std::string cmd = "check " + kind;
  for (const auto& n : names) cmd += " " + n;
  RunReport r = start(cmd, o);
  Env env(o.caps, o.manifest);
  for (const auto& name : names) {
    const Value& v = env.get(name);
    auto wrong = [&](const std::string& want) {
      return UsageError(kind + ": " + name + " has kind '" + kind_name(v.kind) + "', expected " + want);
    };
    const std::string rn = kind + ":" + name;
    try {
      if (kind == "twisting") {
        if (v.kind != Value::Kind::Twisting) throw wrong("a twisting morphism");
        r.checks.push_back(from_report(rn, check_op_twisting(*v.tw), o.caps));
      } else if (kind == "rel-twisting") {
        if (v.kind != Value::Kind::CoalgMorphism) throw wrong("a map D -> Ω_α D' (an ∞-morphism of coalgebras)");
        r.checks.push_back(from_report(rn, check_rel_twisting(v.cm->alpha, *v.cm->src, *v.cm->omega, v.cm->phi), o.caps));
      } else if (kind == "infty") {
        if (v.kind == Value::Kind::CoalgMorphism) {
          r.checks.push_back(from_report(rn, check_infty(*v.cm), o.caps));
        } else if (v.kind == Value::Kind::AlgMorphism) {
          r.checks.push_back(from_report(rn, check_infty(*v.am, bound_of(*v.am, v.weight, o.caps)), o.caps));
        } else {
          throw wrong("an ∞-morphism");
        }
      } else if (kind == "dsq") {
        if (v.kind != Value::Kind::Complex && v.kind != Value::Kind::Algebra && v.kind != Value::Kind::Coalgebra)
          throw wrong("a complex, algebra or coalgebra");
        Verdict d = check_d_squared(v.complex);
        CheckRecord c{rn, d.pass ? Tri::Pass : Tri::Fail, d.detail, o.caps.str(), {}};
        c.values.push_back({"dimension", std::to_string(v.complex.basis->size())});
        r.checks.push_back(c);
      } else if (kind == "linf-relations") {
        if (v.kind != Value::Kind::Algebra) throw wrong("an algebra");
        if (dynamic_cast<const CobarOperad*>(&v.alg->op()))
          r.checks.push_back(from_report(rn, check_homotopy_relations(*v.alg, sampling(o)), o.caps));
        else
          r.checks.push_back(from_report(rn, check_algebra(*v.alg, sampling(o)), o.caps));
      } else if (kind == "filtration") {
        std::shared_ptr<FilteredLinf> f = v.filtration;
        if (v.kind == Value::Kind::Algebra) f = std::make_shared<FilteredLinf>(canonical_filtration(v.alg));
        else if (v.kind != Value::Kind::Filtration) throw wrong("a filtration or an algebra");
        CheckRecord c = from_report(rn, check_filtered(*f, sampling(o)), o.caps);
        std::string dims;
        for (int k = 1; k <= f->length(); ++k) dims += (k > 1 ? "," : "") + std::to_string(f->level(k).dim());
        c.values.push_back({"level dimensions", dims});
        c.values.push_back({"mode", f->mode == Completeness::Terminating ? "terminating" : "declared"});
        r.checks.push_back(c);
      } else {
        if (v.kind != Value::Kind::Form) throw wrong("a form");
        const int level = o.level > 0 ? o.level : o.caps.weight;
        MCSimplexVerdict mv = mc_simplex_check(*v.filtration, *v.forms, v.form, level);
        CheckRecord c{rn, mv.verdict, mv.witness, o.caps.str() + " level=" + std::to_string(level), {}};
        c.values.push_back({"form", gform_string(v.alg->basis(), *v.forms, v.form)});
        r.checks.push_back(c);
      }
    } catch (const UsageError&) {
      throw;
    } catch (const CapOverflow& e) {
      r.checks.push_back({rn, Tri::Unknown, e.what(), o.caps.str(), {}});
    } catch (const ValidationError& e) {
      r.checks.push_back({rn, Tri::Fail, e.what(), o.caps.str(), {}});
    }
  }
  return r;
}

RunReport cmd_induce(const std::string& side, const std::string& morphism, const std::string& partner, const Options& o) {
  if (side != "left" && side != "right") throw UsageError("induce: side must be left or right");
  RunReport r = start("induce " + side + " " + morphism + " " + partner, o);
  Env env(o.caps, o.manifest);
  const std::string expr = "induce_" + side + "(" + morphism + "," + partner + ")";
  const Value& v = env.get(expr);
  BarBound b = bound_of(*v.am, v.weight, o.caps);
  CheckRecord c = from_report("induced " + side, check_infty(*v.am, b), o.caps);
  c.caps = "arity=" + std::to_string(b.arity) + (b.wcap >= 0 ? " weight=" + std::to_string(b.wcap) : "");
  r.checks.push_back(c);
  serialize_components(*v.am, b, r.payload);
  return r;
}

RunReport cmd_transfer(const std::string& algebra, const std::string& contraction, const Options& o) {
  RunReport r = start("transfer " + algebra + " " + contraction, o);
  Env env(o.caps, o.manifest);
  const Value& A = env.get(algebra);
  if (A.kind != Value::Kind::Algebra) throw UsageError("transfer: " + algebra + " is not an algebra");
  if (A.alg->op().name() != "As")
    throw UsageError("transfer: " + algebra + " is not an associative algebra");
  Contraction ctr;
  AlgPtr H;
  std::vector<int> hw;
  if (contraction == "identity") {
    const Basis& b = A.complex.basis;
    ctr = {identity_map(b), identity_map(b), zero_map(b, b, 1)};
    H = A.alg;
    hw = A.weight;
  } else {
    const Value& c = env.get(contraction);
    if (c.kind != Value::Kind::Contraction) throw UsageError("transfer: " + contraction + " is not a contraction");
    if (c.contraction_src != A.alg) throw UsageError("transfer: " + contraction + " does not start at " + algebra);
    ctr = *c.contraction;
    H = c.contraction_tgt;
    hw = c.weight;
  }
  Report cr = check_contraction(ctr, A.alg->complex(), H->complex());
  r.checks.push_back(from_report("contraction", cr, o.caps));
  if (!cr.pass) return r;
  const int cap = o.caps.arity;
  Transfer t = htt_transfer(A.alg, H, ctr, cap);
  const GradedBasis& hb = H->basis();
  r.checks.push_back(from_report("transferred-structure", check_algebra(*t.H, sampling(o)), o.caps));
  BarBound b = hw.empty() ? BarBound{cap, {}, -1} : BarBound{cap, hw, o.caps.weight};
  r.checks.push_back(from_report("i_inf", check_infty(t.i_inf, b), o.caps));

  r.payload.push_back("transfer " + A.alg->name() + " -> " + H->name() + " arity " + std::to_string(cap));
  for (int a = 0; a < H->dim(); ++a)
    for (int c = 0; c < H->dim(); ++c) {
      Vec m = transferred_product(t, a, c);
      r.payload.push_back("  m2(" + hb.label(a) + "," + hb.label(c) + ") = " + vec_string(hb, m));
    }
  for (int n = 3; n <= cap; ++n) {
    if (t.m[n].empty()) {
      r.payload.push_back("  m" + std::to_string(n) + " = 0");
      continue;
    }
    for (const auto& [k, v] : t.m[n])
      r.payload.push_back("  m" + std::to_string(n) + "(" + join_labels(hb, std::vector<int>(k.begin() + 2, k.end())) +
                          ") = " + vec_string(hb, v));
  }
  for (int n = 1; n <= std::min(cap, 3); ++n) {
    long long total = 1;
    for (int j = 0; j < n; ++j) total *= H->dim();
    if (total > 4096) break;
    std::vector<int> xs(n, 0);
    for (long long idx = 0; idx < total; ++idx) {
      long long q = idx;
      for (int j = n - 1; j >= 0; --j) {
        xs[j] = static_cast<int>(q % H->dim());
        q /= H->dim();
      }
      Key k{n, 0};
      k.insert(k.end(), xs.begin(), xs.end());
      Vec v = t.i_inf.psi(k);
      if (n > 1 && v.empty()) continue;
      r.payload.push_back("  i" + std::to_string(n) + "(" + join_labels(hb, xs) + ") = " + vec_string(A.alg->basis(), v));
    }
  }
  return r;
}

RunReport cmd_suite(const std::string& name, const Options& o) {
  const auto ids = suite_members(name);
  RunReport r = start("suite " + name, o);
  for (int id : ids) {
    const Criterion& c = criteria().at(id - 1);
    CheckRecord rec;
    try {
      rec = c.run(o.caps, o.seed);
    } catch (const Error& e) {
      rec = {c.name, Tri::Fail, e.what(), o.caps.str(), {}};
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "%02d", id);
    rec.name = std::string(buf) + "-" + rec.name;
    r.checks.push_back(rec);
  }
  return r;
}

}  // namespace operadiq::cli
