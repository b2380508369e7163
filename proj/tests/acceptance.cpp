// Acceptance gate: runs the full reproduction battery plus the randomized
// property battery and reports one line per criterion group.
#include <chrono>
#include <cstdio>
#include <map>
#include <vector>

#include "koszul/selfcheck.hpp"

using namespace koszul;

namespace {

const char* kDescriptions[11] = {
    nullptr,
    "closed-form Hilbert data for Veronese and Segre rings",
    "h(-1) evaluations including the (4, c) family identity",
    "obstruction series for the (6, 7) Veronese ring",
    "obstruction partition of the Veronese grid scan",
    "monomial split certificates and quadratic-ring recognition",
    "Groebner verification of the Veronese kernel presentations",
    "resolution cell battery over quotient rings",
    "Golod surjections and series comparisons",
    "linearity defect battery",
    "randomized property cross-checks",
};

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  std::vector<CheckRow> rows = golden_battery();
  auto t1 = clock::now();
  std::vector<CheckRow> prop = property_battery(20260815u);
  auto t2 = clock::now();
  rows.insert(rows.end(), prop.begin(), prop.end());

  std::map<int, std::vector<const CheckRow*>> by_group;
  for (const auto& r : rows) by_group[r.group].push_back(&r);

  int failures = 0;
  for (int g = 1; g <= 10; ++g) {
    const auto& list = by_group[g];
    int bad = 0;
    for (const CheckRow* r : list)
      if (!r->passed) ++bad;
    bool ok = !list.empty() && bad == 0;
    if (!ok) ++failures;
    std::printf("%s criterion %2d: %s (%zu checks)\n", ok ? "PASS" : "FAIL", g,
                kDescriptions[g], list.size());
    for (const CheckRow* r : list)
      if (!r->passed)
        std::printf("      failing: %s%s%s\n", r->name.c_str(),
                    r->detail.empty() ? "" : " -- ", r->detail.c_str());
  }

  double golden_s = std::chrono::duration<double>(t1 - t0).count();
  double prop_s = std::chrono::duration<double>(t2 - t1).count();
  std::printf("timing: deterministic battery %.1fs, randomized battery %.1fs\n",
              golden_s, prop_s);
  if (golden_s > 398.0) {
    std::printf("FAIL deterministic battery exceeded its combined time budget\n");
    ++failures;
  }
  if (prop_s > 600.0) {
    std::printf("FAIL randomized battery exceeded its time budget\n");
    ++failures;
  }
  if (failures == 0) std::printf("all 10 acceptance criteria pass\n");
  return failures == 0 ? 0 : 1;
}
