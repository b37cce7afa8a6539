// Acceptance suite: runs every verification case and prints one line each.
#include "monalg/verify.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
  uint64_t seed = 20240817;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  auto results = monalg::verify::run_all(seed);
  int failures = 0;
  for (const auto& r : results) {
    std::printf("[%s] %2d %-75s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.seconds, r.detail.c_str());
    if (!r.pass) ++failures;
  }
  std::printf("%zu/%zu criteria passed\n", results.size() - failures, results.size());
  return failures == 0 ? 0 : 1;
}
