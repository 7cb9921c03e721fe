#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace polyvol;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::dispatch(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& text)
      : path_(std::filesystem::temp_directory_path() / ("polyvol_" + std::to_string(::getpid()) + "_" + name)) {
    std::ofstream(path_) << text;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~ScopedEnv() { ::unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST(CliVolume, Examples) {
  EXPECT_EQ(run({"volume", "path:4"}).out, "5/24 (≈ 0.208333)\n");
  EXPECT_EQ(run({"volume", "kbip:3,3", "--method", "perm"}).out, "1/20 (≈ 0.050000)\n");
  EXPECT_EQ(run({"volume", "null:4"}).out, "1 (≈ 1.000000)\n");
  EXPECT_EQ(run({"volume", "njoin(2,null:2)", "--method", "join"}).out, "1/6 (≈ 0.166667)\n");
}

TEST(CliVolume, MonteCarlo) {
  const Outcome r = run({"volume", "complete:2", "--method", "mc", "--samples", "10000", "--seed", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find(" ± "), std::string::npos);
  EXPECT_EQ(r.out, run({"volume", "complete:2", "--method", "mc", "--samples", "10000", "--seed", "3"}).out);
}

TEST(CliVolume, Json) {
  const Outcome r = run({"volume", "path:4", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["numerator"], "5");
  EXPECT_EQ(j["denominator"], "24");
  EXPECT_EQ(j["method"], "closed");
  EXPECT_EQ(run({"--json", "volume", "path:4"}).out, r.out);
}

TEST(CliExitCodes, UsageErrors) {
  const Outcome bad_dsl = run({"volume", "join(null:1,, null:2)"});
  EXPECT_EQ(bad_dsl.code, 1);
  EXPECT_NE(bad_dsl.err.find("column 13"), std::string::npos) << bad_dsl.err;
  EXPECT_EQ(run({"volume"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"volume", "path:3", "--method", "magic"}).code, 1);
  EXPECT_EQ(run({"families", "path", "a..b"}).code, 1);
  EXPECT_EQ(run({"series", "1"}).code, 1);
}

TEST(CliExitCodes, NotApplicable) {
  EXPECT_EQ(run({"volume", "cycle:5", "--method", "perm"}).code, 2);
  EXPECT_EQ(run({"volume", "path:4", "--method", "symmetric"}).code, 2);
  EXPECT_EQ(run({"volume", "path:30"}).code, 0);
  EXPECT_EQ(run({"volume", "path:30", "--method", "rvf"}).code, 2);
  EXPECT_EQ(run({"sliced", "path:3"}).code, 2);
  EXPECT_EQ(run({"ehrhart", "path:9"}).code, 2);
}

TEST(CliCount, Examples) {
  EXPECT_EQ(run({"count", "complete:2", "2"}).out, "6\n");
  EXPECT_EQ(run({"count", "cycle:3", "2"}).out, "11\n");
}

TEST(CliSliced, Examples) {
  const auto out = lines(run({"sliced", "join(null:1,null:1)"}).out);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0], "low (0 <= c <= 1/2): c^2");
  EXPECT_EQ(out[1], "high (1/2 <= c <= 1): -1/2 + 2*c - c^2");
  EXPECT_EQ(out[2], "volume: 1/2 (≈ 0.500000)");
}

TEST(CliEhrhart, Examples) {
  const auto k2 = lines(run({"ehrhart", "complete:2"}).out);
  ASSERT_EQ(k2.size(), 4u);
  EXPECT_EQ(k2[0], "parity: integral");
  EXPECT_EQ(k2[2], "h*: [1, 0, 0]");
  EXPECT_EQ(k2[3], "volume: 1/2 (≈ 0.500000)");
  const auto c5 = lines(run({"ehrhart", "cycle:5"}).out);
  ASSERT_EQ(c5.size(), 4u);
  EXPECT_EQ(c5[0], "parity: even-only");
  EXPECT_EQ(c5[2], "h*: n/a (non-bipartite)");
  EXPECT_EQ(c5[3], "volume: 5/48 (≈ 0.104167)");
}

TEST(CliSeries, Examples) {
  const Outcome r = run({"series", "3", "--terms", "10000"});
  ASSERT_EQ(r.code, 0);
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[1].rfind("target: 0.968946146259", 0), 0u) << out[1];
  EXPECT_LT(std::stod(out[2].substr(std::string("difference: ").size())), 1e-6);
}

TEST(CliCrosscheck, CycleFive) {
  const Outcome r = run({"crosscheck", "cycle:5", "--methods", "rvf,ehrhart,mc"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_NE(out[0].find("5/48"), std::string::npos);
  EXPECT_NE(out[0].find("reference"), std::string::npos);
  EXPECT_NE(out[1].find("agree"), std::string::npos);
  EXPECT_NE(out[2].find("within 4 sigma"), std::string::npos);
}

TEST(CliCrosscheck, InapplicableMethodsAreReported) {
  const Outcome r = run({"crosscheck", "bn:3"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
  EXPECT_NE(r.out.find("n/a"), std::string::npos);
}

TEST(CliFamilies, PathSequence) {
  const auto out = lines(run({"families", "path", "1..5"}).out);
  ASSERT_EQ(out.size(), 5u);
  EXPECT_EQ(out[0], "path:1 1 (≈ 1.000000)");
  EXPECT_EQ(out[3], "path:4 5/24 (≈ 0.208333)");
  EXPECT_EQ(out[4], "path:5 2/15 (≈ 0.133333)");
  EXPECT_EQ(run({"families", "cycle", "3..6", "--method", "rvf"}).out, run({"families", "cycle", "3..6"}).out);
}

TEST(CliInput, EdgeListFile) {
  const TempFile f("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
  EXPECT_EQ(run({"volume", f.path()}).out, "1/6 (≈ 0.166667)\n");
  const TempFile bad("bad.txt", "3 2\n0 1\n1 1\n");
  const Outcome r = run({"volume", bad.path()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(CliInput, DslFile) {
  const TempFile f("join.txt", "njoin(2, null:2)\n");
  EXPECT_EQ(run({"volume", f.path()}).out, "1/6 (≈ 0.166667)\n");
}

TEST(CliLimits, EnvironmentCanLowerTheRvfGuard) {
  {
    const ScopedEnv env("POLYVOL_MAX_N", "5");
    EXPECT_EQ(run({"volume", "path:6", "--method", "rvf"}).code, 2);
    EXPECT_EQ(run({"volume", "path:5", "--method", "rvf"}).code, 0);
  }
  {
    const ScopedEnv env("POLYVOL_MAX_N", "100");
    EXPECT_EQ(run({"volume", "path:27", "--method", "rvf"}).code, 2);
  }
  {
    const ScopedEnv env("POLYVOL_MAX_N", "abc");
    EXPECT_EQ(run({"volume", "path:3"}).code, 1);
  }
}

TEST(CliProperty, AutoMatchesEveryApplicableMethod) {
  for (const char* s : {"path:6", "cycle:7", "complete:5", "kbip:3,4", "bn:4", "njoin(3,null:2)", "join(null:2,path:3)",
                        "edges:5:0-1,1-2,2-0,3-4", "join(cycle:3,null:1)", "null:3"}) {
    const GraphInput in = GraphInput::from_spec(parse_family(s));
    const Rational automatic = exact_volume(in, Method::automatic);
    int applicable = 0;
    for (Method m : exact_methods()) {
      try {
        EXPECT_EQ(exact_volume(in, m), automatic) << s << " via " << method_name(m);
        ++applicable;
      } catch (const MethodNotApplicable&) {
      } catch (const SizeError&) {
      }
    }
    EXPECT_GE(applicable, 2) << s;
    EXPECT_EQ(run({"volume", s}).out, render(automatic) + "\n") << s;
  }
}
