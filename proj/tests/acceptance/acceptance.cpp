// One line per criterion; exit status 1 if any fails.
#include <cstdio>
#include <cstdlib>

#include "qpf/verify/acceptance.hpp"

int main(int argc, char** argv) {
  qpf::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i) opt.only.push_back(std::atoi(argv[i]));
  bool all = true;
  for (const auto& r : qpf::run_acceptance(opt)) {
    std::printf("[%s] %2d %-30s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
