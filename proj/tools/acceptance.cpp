#include <chrono>
#include <cstdio>

#include "operadiq/cli.hpp"

using namespace operadiq;
using namespace operadiq::cli;

// runtime limits in seconds, where a criterion names one
static double limit_of(int id) {
  switch (id) {
    case 1: return 5.0;
    case 3: return 10.0;
    case 11: return 1.0;
    default: return 0.0;
  }
}

int main() {
  Caps caps;
  int failed = 0;
  for (const auto& c : criteria()) {
    auto t0 = std::chrono::steady_clock::now();
    CheckRecord r;
    try {
      r = c.run(caps, 1);
    } catch (const Error& e) {
      r = {c.name, Tri::Fail, e.what(), caps.str(), {}};
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = r.verdict == Tri::Pass;
    std::string note = r.witness;
    if (ok && limit_of(c.id) > 0 && dt >= limit_of(c.id)) {
      ok = false;
      note = "runtime above the limit";
    }
    failed += !ok;
    std::printf("%s %2d %-24s %.2fs%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), dt, note.empty() ? "" : "  ",
                note.c_str());
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria().size()) - failed, criteria().size());
  return failed ? 1 : 0;
}
