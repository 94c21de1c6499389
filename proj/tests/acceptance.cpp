// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail N]...
//
// Without --expect-fail the exit code is 0 only when every criterion passes.
// With it, the exit code is 0 only when the failing set equals the listed set,
// so a known-false identity stays visible without masking regressions.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "inchyp/verify.hpp"

using namespace inchyp;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> suites;
  double time_limit_s = 0.0;  // 0: no limit
};

struct Outcome {
  bool pass = true;
  std::string detail;
  double seconds = 0.0;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome run_suites(const Criterion& c) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& name : c.suites) {
    const auto r = verify::run_suite(name, {});
    out.pass = out.pass && r.pass;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += name + " max=" + fmt(r.max_residual) + " tol=" + fmt(r.tolerance);
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.time_limit_s > 0.0) {
    out.detail += "; time=" + fmt(out.seconds) + "s limit=" + fmt(c.time_limit_s) + "s";
    out.pass = out.pass && out.seconds < c.time_limit_s;
  }
  return out;
}

bool same_report(const verify::Report& a, const verify::Report& b) {
  return a.suite == b.suite && a.cases == b.cases && a.max_residual == b.max_residual && a.pass == b.pass &&
         a.seed == b.seed && a.worst_case == b.worst_case && a.extras == b.extras;
}

// The difference relation only has to be reported, deterministically.
Outcome difference_report() {
  const auto a = verify::run_suite("difference-relation", {});
  verify::Config threaded;
  threaded.threads = 4;
  const auto b = verify::run_suite("difference-relation", threaded);
  Outcome out;
  out.pass = a.cases > 0 && a.report_only && same_report(a, b);
  out.detail = "difference-relation cases=" + std::to_string(a.cases) + " max=" + fmt(a.max_residual) +
               (same_report(a, b) ? " reproducible" : " NOT reproducible");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      expected.insert(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--expect-fail N]...\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "incomplete beta decomposition", {"beta-decomposition"}, 5.0},
      {2, "pochhammer ratio decomposition and dual path", {"ratio-decomposition", "ratio-paths"}},
      {3, "2F1/1F1 decompositions and dual path", {"decomposition-2f1", "decomposition-1f1", "dual-path"}},
      {4, "closed-form spot values", {"closed-forms"}},
      {5, "values at x = 1", {"gauss-value"}},
      {6, "transformation formulas", {"transformations"}},
      {7, "derivative formulas", {"ratio-derivative", "derivative-shift"}},
      {8, "y-moment relations", {"y-moment"}},
      {9, "Appell dual path and reductions",
       {"appell-f1-paths", "appell-f2-paths", "appell-reductions", "appell-decomposition"}},
      {10, "fractional operator", {"fracderiv-power", "fracderiv-closed-forms", "fracderiv-decomposition"}},
      {11, "generating relations", {"genrel-linear", "genrel-bilinear"}, 60.0},
      {12, "difference relation report", {}},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.id == 12 ? difference_report() : run_suites(c);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) failed.insert(c.id);
    std::printf("%s criterion %2d: %s (%s)%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), o.detail.c_str(),
                !o.pass && expected.count(c.id) ? " [expected]" : "");
  }

  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  if (failed == expected) return 0;
  for (int id : failed)
    if (!expected.count(id)) std::printf("unexpected failure: criterion %d\n", id);
  for (int id : expected)
    if (!failed.count(id)) std::printf("expected failure now passes: criterion %d\n", id);
  return 1;
}
