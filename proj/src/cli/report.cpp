#include "operadiq/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace operadiq::cli {

std::string Caps::str() const {
  std::ostringstream os;
  os << "arity=" << arity << " weight=" << weight << " poly=" << poly << " window=" << dmin << ".." << dmax;
  return os.str();
}

int RunReport::count(Tri t) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [t](const CheckRecord& c) { return c.verdict == t; }));
}

int RunReport::exit_code() const { return count(Tri::Fail) ? 1 : 0; }

namespace {

std::vector<const CheckRecord*> sorted(const RunReport& r) {
  std::vector<const CheckRecord*> v;
  for (const auto& c : r.checks) v.push_back(&c);
  std::stable_sort(v.begin(), v.end(), [](auto* a, auto* b) { return a->name < b->name; });
  return v;
}

std::string tri_upper(Tri t) {
  switch (t) {
    case Tri::Pass: return "PASS";
    case Tri::Fail: return "FAIL";
    default: return "UNKNOWN";
  }
}

}  // namespace

std::string format_text(const RunReport& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  os << "inputs: " << r.digest << "\n";
  os << "seed: " << r.seed << "\n";
  for (const auto* c : sorted(r)) {
    os << tri_upper(c->verdict) << " " << c->name;
    if (!c->caps.empty()) os << " [" << c->caps << "]";
    os << "\n";
    for (const auto& [k, v] : c->values) os << "  " << k << ": " << v << "\n";
    if (!c->witness.empty()) os << "  witness: " << c->witness << "\n";
  }
  for (const auto& p : r.payload) os << "| " << p << "\n";
  os << "summary: " << r.count(Tri::Pass) << " pass, " << r.count(Tri::Fail) << " fail, " << r.count(Tri::Unknown)
     << " unknown\n";
  os << "exit: " << r.exit_code() << "\n";
  return os.str();
}

std::string format_structured(const RunReport& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["inputs"] = r.digest;
  j["seed"] = r.seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto* c : sorted(r)) {
    nlohmann::ordered_json e;
    e["name"] = c->name;
    e["verdict"] = tri_upper(c->verdict);
    e["witness"] = c->witness;
    e["caps"] = c->caps;
    e["values"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c->values) e["values"][k] = v;
    j["checks"].push_back(e);
  }
  j["payload"] = r.payload;
  j["counts"] = {{"pass", r.count(Tri::Pass)}, {"fail", r.count(Tri::Fail)}, {"unknown", r.count(Tri::Unknown)}};
  j["exit"] = r.exit_code();
  return j.dump(2) + "\n";
}

std::string digest_of(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace operadiq::cli
