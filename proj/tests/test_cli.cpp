#include <json.hpp>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "support.hpp"

#ifndef INCHYP_CLI_PATH
#error "INCHYP_CLI_PATH must name the CLI binary"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(INCHYP_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

nlohmann::json first_json(const Run& r) { return nlohmann::json::parse(lines(r.out).at(0)); }

}  // namespace

TEST(Cli, EvalExamples) {
  auto r = run("eval 2f1 --a 1 --b 1 --c 2 --y 0.5 --x 0.5");
  ASSERT_EQ(r.code, 0);
  auto j = first_json(r);
  EXPECT_NEAR(j["value"].get<double>(), 0.5753641449, 1e-10);
  EXPECT_TRUE(j["converged"].get<bool>());

  r = run("eval ratio --b 1 --c 2 --n 2 --y 0.5");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(first_json(r)["value"].get<double>(), 1.0 / 24.0, 1e-15);

  r = run("eval 1f1 --a 1 --b 2 --y 0.5 --x 1 --variant upper");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(first_json(r)["value"].get<double>(), std::exp(1.0) - std::exp(0.5), 1e-12);

  r = run("eval fracderiv-power --lambda 1 --mu -1 --y 0.5 --z 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(first_json(r)["value"].get<double>(), 0.5, 1e-14);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("eval 2f1 --a 1 --b 1 --c 0.5 --y 0.5 --x 0.5").code, 2);
  EXPECT_EQ(run("eval 2f1 --a 1 --b 1 --c 2 --y 0.5").code, 2);
  EXPECT_EQ(run("eval nosuch").code, 2);
  EXPECT_EQ(run("verify nosuch").code, 2);
  EXPECT_EQ(run("--max-terms 3 eval 2f1 --a 1 --b 1 --c 2 --y 0.9 --x 0.9 --method series").code, 3);
  EXPECT_EQ(run("verify closed-forms").code, 0);
  EXPECT_EQ(run("--tol 1e-300 verify closed-forms").code, 1);
  // report-only suites never fail the run
  const auto d = run("verify difference-relation");
  EXPECT_EQ(d.code, 0);
  const auto j = first_json(d);
  EXPECT_FALSE(j["pass"].get<bool>());
  EXPECT_TRUE(j["report_only"].get<bool>());
}

TEST(Cli, CsvHeaderAndRowOrder) {
  const auto r = run("--format csv table ratio --b 1 --c 2 --n 2 --sweep y:0:0.5:3");
  ASSERT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l[0], "y,value,abs_err_est,effort,converged,error");
  EXPECT_EQ(l[1].substr(0, 2), "0,");
  EXPECT_EQ(l[2].substr(0, 5), "0.25,");
  EXPECT_EQ(l[3].substr(0, 4), "0.5,");
}

TEST(Cli, TwoAxisSweepVariesFirstAxisSlowest) {
  const auto r = run("table 2f1 --a 1 --b 1 --c 2 --sweep y:0.2:0.4:2 --sweep x:0.1:0.3:3");
  ASSERT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 6u);
  for (std::size_t i = 0; i < l.size(); ++i) {
    const auto j = nlohmann::json::parse(l[i]);
    EXPECT_DOUBLE_EQ(j["y"].get<double>(), i < 3 ? 0.2 : 0.4);
    EXPECT_NEAR(j["x"].get<double>(), 0.1 + 0.1 * static_cast<double>(i % 3), 1e-15);
  }
}

TEST(Cli, TableRowsMatchPointEvaluationBitForBit) {
  const auto t = lines(run("table 2f1 --a 0.7 --b 1.3 --c 3.1 --x 0.6 --sweep y:0.1:0.9:5").out);
  ASSERT_EQ(t.size(), 5u);
  for (const auto& row : t) {
    const auto j = nlohmann::json::parse(row);
    std::ostringstream args;
    args.precision(17);
    args << "eval 2f1 --a 0.7 --b 1.3 --c 3.1 --x 0.6 --y " << j["y"].get<double>();
    const auto e = first_json(run(args.str()));
    EXPECT_EQ(e["value"].get<double>(), j["value"].get<double>());
  }
}

TEST(Cli, TableCapturesPerRowErrors) {
  // the second row sits outside the domain; the first still evaluates
  const auto r = run("table 2f1 --a 1 --b 1 --c 2 --y 0.5 --sweep x:0.5:2.5:2");
  EXPECT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 2u);
  EXPECT_TRUE(nlohmann::json::parse(l[0])["error"].is_null());
  const auto bad = nlohmann::json::parse(l[1]);
  EXPECT_TRUE(bad["value"].is_null());
  EXPECT_TRUE(bad["error"].is_string());
}

TEST(Cli, JsonNumbersRoundTrip) {
  const auto j = first_json(run("eval incomplete-beta --y 0.3 --x 1.7 --z 2.4"));
  const double v = j["value"].get<double>();
  EXPECT_EQ(nlohmann::json::parse(nlohmann::json(v).dump()).get<double>(), v);
}

TEST(Cli, VerifyOutputIsDeterministic) {
  const auto a = run("verify decomposition-2f1");
  const auto b = run("verify decomposition-2f1");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(first_json(a)["seed"].get<std::uint64_t>(), 20240517u);
  const auto timed = first_json(run("--timing verify decomposition-2f1"));
  EXPECT_TRUE(timed.contains("wall_time_s"));
  EXPECT_FALSE(first_json(a).contains("wall_time_s"));
}

TEST(Cli, FracderivClosedForm) {
  const auto r = run("fracderiv --closed-form appell_f2 --variant upper --lambda 1 --mu 2 --alpha 0.5 --beta 1 "
                     "--gamma 2 --tau 0.2 --y 0.5 --z 0.5");
  ASSERT_EQ(r.code, 0);
  const auto j = first_json(r);
  EXPECT_LE(std::abs(j["residual"].get<double>()), 1e-7);
  EXPECT_TRUE(j.contains("lower_inner_residual"));
}
