#include "operadiq/cli.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace operadiq::cli {

namespace {

// kind -> (header argument count, tag -> token count after the tag, positions holding rationals);
// a token count of -1 means "at least one, rational positions alternate from the given start"
struct TagSpec {
  int tokens;
  std::vector<int> rationals;
};
struct KindSpec {
  int args;
  std::map<std::string, TagSpec> tags;
};

const std::map<std::string, KindSpec>& kinds() {
  static const std::map<std::string, KindSpec> k{
      {"complex", {0, {{"basis", {2, {}}}, {"d", {3, {2}}}}}},
      {"map", {3, {{"entry", {3, {2}}}}}},
      {"assoc", {1, {{"product", {4, {3}}}, {"weight", {2, {}}}}}},
      {"linf", {1, {{"bracket", {3, {2}}}}}},
      {"contraction", {2, {{"i", {3, {2}}}, {"p", {3, {2}}}, {"h", {3, {2}}}}}},
      {"filtration", {2, {{"level", {-1, {}}}}}},
      {"form", {2, {{"term", {4, {3}}}}}},
  };
  return k;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

int to_int(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("manifest line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
  }
}

std::string norm_q(const std::string& s, int line) {
  try {
    return to_string(parse_rational(s));
  } catch (const ValidationError&) {
    throw UsageError("manifest line " + std::to_string(line) + ": bad rational '" + s + "'");
  }
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i];
  return s;
}

}  // namespace

const Object* Manifest::find(const std::string& name) const {
  for (const auto& o : objects)
    if (o.name == name) return &o;
  return nullptr;
}

bool Manifest::operator==(const Manifest& o) const {
  return version == o.version && caps.arity == o.caps.arity && caps.weight == o.caps.weight &&
         caps.poly == o.caps.poly && caps.dmin == o.caps.dmin && caps.dmax == o.caps.dmax && seed == o.seed &&
         objects == o.objects;
}

Manifest parse_manifest(const std::string& text) {
  Manifest m;
  std::istringstream is(text);
  std::string line;
  int ln = 0;
  bool header = false;
  Object* cur = nullptr;
  std::set<std::string> names;
  auto fail = [&ln](const std::string& msg) { return UsageError("manifest line " + std::to_string(ln) + ": " + msg); };
  while (std::getline(is, line)) {
    ++ln;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto t = tokens(line);
    if (t.empty()) continue;
    if (!header) {
      if (t.size() != 2 || t[0] != "operadiq-manifest") throw fail("expected 'operadiq-manifest <version>'");
      m.version = to_int(t[1], ln);
      if (m.version != 1) throw fail("unsupported manifest version " + t[1]);
      header = true;
      continue;
    }
    if (cur) {
      if (t[0] == "end") {
        if (t.size() != 1) throw fail("'end' takes no arguments");
        cur = nullptr;
        continue;
      }
      const KindSpec& ks = kinds().at(cur->kind);
      auto it = ks.tags.find(t[0]);
      if (it == ks.tags.end()) throw fail("tag '" + t[0] + "' not allowed in " + cur->kind);
      const int n = static_cast<int>(t.size()) - 1;
      if (it->second.tokens >= 0 && n != it->second.tokens)
        throw fail("'" + t[0] + "' expects " + std::to_string(it->second.tokens) + " fields");
      for (int p : it->second.rationals) t[p + 1] = norm_q(t[p + 1], ln);
      if (cur->kind == "filtration") {
        // level <k> (<label> <q>)*, a bare 'level k' declares F_k = 0
        if (n < 1 || n % 2 == 0) throw fail("'level' expects k followed by label/coefficient pairs");
        if (to_int(t[1], ln) < 1) throw fail("levels start at 1");
        for (int p = 3; p <= n; p += 2) t[p] = norm_q(t[p], ln);
      }
      if (cur->kind == "complex" && t[0] == "basis") to_int(t[2], ln);
      if (cur->kind == "assoc" && t[0] == "weight") to_int(t[2], ln);
      if (cur->kind == "form" && t[0] == "term") to_int(t[2], ln);
      cur->body.push_back(t);
      continue;
    }
    if (t[0] == "caps") {
      for (std::size_t i = 1; i < t.size();) {
        if (t[i] == "window" && i + 2 < t.size()) {
          m.caps.dmin = to_int(t[i + 1], ln);
          m.caps.dmax = to_int(t[i + 2], ln);
          i += 3;
          continue;
        }
        if (i + 1 >= t.size()) throw fail("caps entry '" + t[i] + "' lacks a value");
        int v = to_int(t[i + 1], ln);
        if (v <= 0) throw fail("caps must be positive");
        if (t[i] == "arity") m.caps.arity = v;
        else if (t[i] == "weight") m.caps.weight = v;
        else if (t[i] == "poly") m.caps.poly = v;
        else throw fail("unknown cap '" + t[i] + "'");
        i += 2;
      }
      if (m.caps.dmin > m.caps.dmax) throw fail("empty degree window");
    } else if (t[0] == "seed") {
      if (t.size() != 2) throw fail("'seed' takes one value");
      try {
        m.seed = std::stoull(t[1]);
      } catch (const std::exception&) {
        throw fail("bad seed");
      }
    } else if (t[0] == "object") {
      if (t.size() < 3) throw fail("'object <name> <kind> ...'");
      auto k = kinds().find(t[2]);
      if (k == kinds().end()) throw fail("unknown kind '" + t[2] + "'");
      if (static_cast<int>(t.size()) - 3 != k->second.args)
        throw fail(t[2] + " takes " + std::to_string(k->second.args) + " header arguments");
      if (t[1].find(':') != std::string::npos || t[1].find('(') != std::string::npos)
        throw fail("object names may not contain ':' or '('");
      if (!names.insert(t[1]).second) throw fail("duplicate object '" + t[1] + "'");
      m.objects.push_back({t[1], t[2], std::vector<std::string>(t.begin() + 3, t.end()), {}});
      cur = &m.objects.back();
    } else {
      throw fail("unexpected '" + t[0] + "'");
    }
  }
  if (!header) throw UsageError("manifest: missing header");
  if (cur) throw UsageError("manifest: object '" + cur->name + "' lacks 'end'");
  return m;
}

std::string print_manifest(const Manifest& m) {
  std::ostringstream os;
  os << "operadiq-manifest " << m.version << "\n";
  os << "caps arity " << m.caps.arity << " weight " << m.caps.weight << " poly " << m.caps.poly << " window "
     << m.caps.dmin << " " << m.caps.dmax << "\n";
  os << "seed " << m.seed << "\n";
  for (const auto& o : m.objects) {
    os << "object " << o.name << " " << o.kind;
    for (const auto& a : o.args) os << " " << a;
    os << "\n";
    for (const auto& r : o.body) os << "  " << join(r) << "\n";
    os << "end\n";
  }
  return os.str();
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read manifest " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str());
}

}  // namespace operadiq::cli
