#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "operadiq/cli.hpp"

using namespace operadiq;
using namespace operadiq::cli;

int main(int argc, char** argv) {
  CLI::App app{"operadiq: exact checks for operadic twisting morphisms and ∞-morphisms"};
  app.require_subcommand(1);

  std::string format = "text", manifest_path;
  int arity = -1, weight = -1, poly = -1, level = -1;
  long long seed = -1;
  app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--manifest", manifest_path, "manifest file");
  app.add_option("--arity-cap", arity, "highest arity");
  app.add_option("--weight-cap", weight, "highest weight");
  app.add_option("--poly-cap", poly, "polynomial degree cap for Sullivan forms");
  app.add_option("--seed", seed, "seed for randomized inputs");

  auto* ce = app.add_subcommand("counterexample", "hom_l and hom_r do not commute");
  bool corrupt = false;
  ce->add_flag("--corrupt-phi", corrupt, "flip one sign of Φ (negative control)");

  auto* check = app.add_subcommand("check", "run a checker on named objects");
  std::string kind;
  std::vector<std::string> names;
  check->add_option("kind", kind, "twisting, rel-twisting, infty, dsq, linf-relations, filtration, mc-simplex")->required();
  check->add_option("names", names, "objects or expressions")->required();
  check->add_option("--level", level, "mc-simplex: filtration quotient g/F_r");

  auto* induce = app.add_subcommand("induce", "induced ∞-morphism of convolution algebras");
  std::string side, morphism, partner;
  induce->add_option("side", side, "left or right")->required()->check(CLI::IsMember({"left", "right"}));
  induce->add_option("morphism", morphism)->required();
  induce->add_option("partner", partner)->required();

  auto* transfer = app.add_subcommand("transfer", "homotopy transfer along a contraction");
  std::string algebra, contraction;
  transfer->add_option("algebra", algebra)->required();
  transfer->add_option("contraction", contraction, "contraction object or 'identity'")->required();

  auto* suite = app.add_subcommand("suite", "acceptance suites");
  std::string suite_name;
  suite->add_option("name", suite_name, "paper-core, signs, mc, all")->required();

  for (auto* sub : {ce, check, induce, transfer, suite}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Options o;
    std::optional<Manifest> m;
    if (!manifest_path.empty()) {
      m = load_manifest(manifest_path);
      o.caps = m->caps;
      o.seed = m->seed;
      o.manifest = &*m;
    }
    if (arity > 0) o.caps.arity = arity;
    if (weight > 0) o.caps.weight = weight;
    if (poly > 0) o.caps.poly = poly;
    if (seed >= 0) o.seed = static_cast<unsigned long long>(seed);
    if (arity == 0 || weight == 0 || poly == 0) throw UsageError("caps must be positive");
    o.level = level;
    o.corrupt_phi = corrupt;

    RunReport r;
    if (*ce) r = cmd_counterexample(o);
    else if (*check) r = cmd_check(kind, names, o);
    else if (*induce) r = cmd_induce(side, morphism, partner, o);
    else if (*transfer) r = cmd_transfer(algebra, contraction, o);
    else r = cmd_suite(suite_name, o);
    std::cout << (format == "text" ? format_text(r) : format_structured(r));
    return r.exit_code();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
