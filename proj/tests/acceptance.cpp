#include <cstdio>
#include <map>

#include "superstft/verify.hpp"

using namespace superstft;
using namespace superstft::verify;

int main() {
  Context ctx;
  ctx.q1d = default_quadrature();
  ctx.q2d = default_quadrature_2d();
  const auto base = run_suite("all", ctx);
  const auto doubled = run_suite("all", ctx.doubled());

  std::map<int, std::vector<const Record*>> by;
  for (const auto& r : base)
    if (r.criterion.size() > 1 && r.criterion[0] == 'A') by[std::stoi(r.criterion.substr(1))].push_back(&r);
  const Record gate = quadrature_gate(base, doubled);
  by[14].push_back(&gate);

  bool all = true;
  for (int i = 1; i <= 14; ++i) {
    bool ok = !by[i].empty();
    std::string failed;
    for (const Record* r : by[i])
      if (!r->pass) {
        ok = false;
        failed += (failed.empty() ? "" : ",") + r->id;
      }
    all = all && ok;
    std::printf("A%d %s", i, ok ? "PASS" : "FAIL");
    for (const Record* r : by[i]) std::printf("  %s=%.3g/%.3g", r->id.c_str(), r->max_error, r->tolerance);
    if (!failed.empty()) std::printf("  failed: %s", failed.c_str());
    std::printf("\n");
  }
  return all ? 0 : 1;
}
