#include <cstdio>

#include "coxlink/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& r : coxlink::acceptance::run(coxlink::acceptance::Level::Full)) {
    std::printf("%s\n", coxlink::acceptance::format(r).c_str());
    std::fflush(stdout);
    failed += !r.pass;
  }
  std::printf("%d criteria failed\n", failed);
  return failed ? 1 : 0;
}
