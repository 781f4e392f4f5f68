// Acceptance table: one line per criterion; exit status 3 if any fails.
#include <cstdio>
#include <string>
#include <vector>

#include "reproduce.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> filters(argv + 1, argv + argc);
  auto rows = hsg::repro::run_all(filters);
  if (rows.empty()) {
    std::fprintf(stderr, "no criterion matches\n");
    return 1;
  }
  bool ok = true;
  for (const auto& r : rows) {
    ok = ok && r.pass;
    std::printf("%s %-3s %-50s expected: %s | computed: %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                r.title.c_str(), r.expected.c_str(), r.computed.c_str(), r.seconds);
  }
  return ok ? 0 : 3;
}
