#include <set>

#include "inchyp/verify.hpp"
#include "support.hpp"

using namespace inchyp;

namespace {

void expect_same(const verify::Report& a, const verify::Report& b) {
  EXPECT_EQ(a.suite, b.suite);
  EXPECT_EQ(a.cases, b.cases);
  EXPECT_EQ(a.max_residual, b.max_residual);
  EXPECT_EQ(a.pass, b.pass);
  EXPECT_EQ(a.worst_case, b.worst_case);
  EXPECT_EQ(a.extras, b.extras);
}

}  // namespace

TEST(Verify, RegistryNamesAreUnique) {
  std::set<std::string> names;
  for (const auto& s : verify::suites()) EXPECT_TRUE(names.insert(s.name).second) << s.name;
  EXPECT_NE(verify::find_suite("gauss-value"), nullptr);
  EXPECT_EQ(verify::find_suite("nope"), nullptr);
  EXPECT_THROW(verify::run_suite("nope", {}), std::invalid_argument);
  EXPECT_TRUE(verify::find_suite("difference-relation")->report_only);
}

TEST(Verify, DeterministicAcrossRunsAndThreadCounts) {
  verify::Config serial;
  verify::Config threaded;
  threaded.threads = 4;
  for (const char* name : {"decomposition-2f1", "difference-relation", "genrel-linear"}) {
    const auto a = verify::run_suite(name, serial);
    expect_same(a, verify::run_suite(name, serial));
    expect_same(a, verify::run_suite(name, threaded));
  }
}

TEST(Verify, SeedChangesTheGrid) {
  verify::Config a, b;
  b.seed = a.seed + 1;
  EXPECT_NE(verify::run_suite("decomposition-1f1", a).worst_case, verify::run_suite("decomposition-1f1", b).worst_case);
}

TEST(Verify, PassMeansResidualWithinTolerance) {
  verify::Config cfg;
  cfg.tolerance = 1e-30;
  const auto r = verify::run_suite("closed-forms", cfg);
  EXPECT_EQ(r.tolerance, 1e-30);
  EXPECT_EQ(r.pass, r.max_residual <= r.tolerance);
  cfg.tolerance.reset();
  const auto d = verify::run_suite("closed-forms", cfg);
  EXPECT_TRUE(d.pass);
  EXPECT_LE(d.max_residual, d.tolerance);
  EXPECT_EQ(d.cases, 20u);
}

TEST(Verify, ParallelMapKeepsOrderAndRethrows) {
  const auto out = parallel_map<int>(100, [](std::size_t i) { return static_cast<int>(i * i); }, 3);
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], static_cast<int>(i * i));
  EXPECT_THROW(parallel_map<int>(
                   10,
                   [](std::size_t i) -> int {
                     if (i == 7) throw std::runtime_error("boom");
                     return 0;
                   },
                   2),
               std::runtime_error);
}
