#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "realgas/config.hpp"
#include "realgas/error.hpp"

namespace realgas {
namespace {

int error_line(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return -1;
}

TEST(Config, ParsesTopLevelKeys) {
  const RunConfig c = parse_config(
      "# Shyue at 200 cells\n"
      "problem = \"shyue\"\n"
      "scheme = \"godunov\"\n"
      "backend = \"exact-eos\"\n"
      "cells = 200   # fine\n"
      "cfl = 0.4\n"
      "limiter = 1.5\n"
      "sweep = \"yxy\"\n"
      "bc_x_hi = \"reflective\"\n"
      "out_dir = \"results\"\n"
      "times = [3.0, 6.5]\n"
      "t_final = 9\n");
  EXPECT_EQ(c.problem, "shyue");
  EXPECT_EQ(c.scheme, Scheme::Godunov);
  EXPECT_EQ(c.backend, RiemannBackend::ExactEos);
  EXPECT_EQ(c.cells, 200);
  EXPECT_EQ(c.cfl, 0.4);
  EXPECT_EQ(c.limiter, 1.5);
  EXPECT_EQ(c.sweep, SweepOrder::YXY);
  EXPECT_FALSE(c.bc[0].has_value());
  EXPECT_EQ(c.bc[1], BoundaryKind::Reflective);
  EXPECT_EQ(c.out_dir, "results");
  EXPECT_EQ(c.times, (std::vector<double>{3.0, 6.5}));
  EXPECT_EQ(c.t_final, 9.0);
}

TEST(Config, InlineProblem) {
  const RunConfig c = parse_config(
      "cells = 50\n"
      "[problem]\n"
      "name = \"sod\"\n"
      "x_lo = 0\n"
      "x_hi = 1\n"
      "interface = 0.5\n"
      "t_final = 0.2\n"
      "left = [1.0, 0.0, 1.0]\n"
      "right = [0.125, 0.0, 0.1]\n"
      "[eos]\n"
      "kind = \"stiffened\"\n"
      "gamma = 1.4\n"
      "p_inf = 0.0\n");
  ASSERT_TRUE(c.inline_problem.has_value());
  EXPECT_EQ(c.inline_problem->eos, EosModel::stiffened(1.4, 0.0));
  const ProblemSpec p = build_problem(c);
  EXPECT_EQ(p.name, "sod");
  EXPECT_EQ(p.initial_state(0.25).p, 1.0);
  EXPECT_EQ(p.initial_state(0.75).rho, 0.125);
  EXPECT_EQ(p.t_final, 0.2);
  const RunOptions o = build_run_options(c, p);
  EXPECT_EQ(o.cells_x, 50);
}

TEST(Config, RoundTrip) {
  const char* texts[] = {
      "problem = \"lee\"\ncells = 120\ntimes = [1, 2.5, 1e-3]\nbc_y_lo = \"periodic\"\n",
      "problem = \"rp2d\"\ncells = 64\ncells_y = 32\nsweep = \"yxy\"\nt_final = 0.1\n",
      "[problem]\nleft = [1.7, 0, 10]\nright = [1, 0, 0.5]\n"
      "[eos]\nkind = \"jwl\"\nrho0 = 1.84\nGamma = 0.25\nA = 8.545\nB = 0.205\nR1 = 4.6\nR2 = 1.35\n",
      "[problem]\nleft = [1.134, 0.1, 2e4]\nright = [0.5, 0.1, 2e4]\n"
      "[eos]\nkind = \"cochran-chan\"\nrho0 = 1.134\nGamma = 1.19\nA = 8192\nB = 1508\n"
      "eps1 = 4.53\neps2 = 1.42\n",
  };
  for (const char* t : texts) {
    const RunConfig a = parse_config(t);
    const RunConfig b = parse_config(serialize_config(a));
    EXPECT_EQ(a, b) << t;
  }
}

TEST(Config, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("problem = \"shyue\"\nbogus = 1\n"), 2);
  EXPECT_EQ(error_line("cells = 10\ncells = 20\n"), 2);
  EXPECT_EQ(error_line("problem = \"shyue\"\n\ncfl = \"high\"\n"), 3);
  EXPECT_EQ(error_line("scheme = \"muscl\"\n"), 1);
  EXPECT_EQ(error_line("times = [1, 2\n"), 1);
  EXPECT_EQ(error_line("cells = 1.5\n"), 1);
  EXPECT_EQ(error_line("[eos]\nkind = \"jwl\"\n[eos]\n"), 3);
  EXPECT_EQ(error_line("[problem]\nleft = [1, 2]\n"), 2);
  EXPECT_EQ(error_line("[eos]\nkind = \"jwl\"\neps1 = 2\n"), 3);
  EXPECT_EQ(error_line("name = \"x\n"), 1);
  EXPECT_EQ(error_line("just text\n"), 1);
}

TEST(Config, Validation) {
  RunConfig c;
  c.problem = "shyue";
  EXPECT_NO_THROW(validate_config(c));
  c.cells = 3;
  EXPECT_THROW(validate_config(c), ConfigError);
  c.cells = 100;
  c.cfl = 1.5;
  EXPECT_THROW(validate_config(c), ConfigError);
  c.cfl = 0.5;
  c.limiter = 2.0;
  EXPECT_THROW(validate_config(c), ConfigError);
  c.limiter = 1.9;
  c.problem = "nowhere";
  EXPECT_THROW(build_problem(c), RegistryError);
  c.problem.clear();
  EXPECT_THROW(validate_config(c), ConfigError);
}

TEST(Config, OverridesApplyToProblem) {
  RunConfig c = parse_config("problem = \"shock-bubble\"\ncells = 60\nt_final = 5\n"
                             "bc_y_lo = \"transmissive\"\n");
  const ProblemSpec p = build_problem(c);
  EXPECT_EQ(p.t_final, 5.0);
  EXPECT_EQ(p.bc[2], BoundaryKind::Transmissive);
  EXPECT_EQ(p.bc[3], BoundaryKind::Reflective);
  const RunOptions o = build_run_options(c, p);
  EXPECT_EQ(o.cells_x, 60);
  EXPECT_EQ(o.cells_y, 20);  // keeps the 3:1 aspect ratio
}

TEST(Config, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "realgas_config_test.toml";
  {
    std::ofstream f(path);
    f << "problem = \"lee\"\ncells = 40\n";
  }
  EXPECT_EQ(load_config(path.string()).cells, 40);
  std::filesystem::remove(path);
  EXPECT_THROW(load_config(path.string()), Error);
}

TEST(Config, EnumNames) {
  EXPECT_EQ(to_string(Scheme::Grp), "grp");
  EXPECT_EQ(to_string(RiemannBackend::ExactEos), "exact-eos");
  EXPECT_EQ(to_string(BoundaryKind::Periodic), "periodic");
  EXPECT_EQ(to_string(SweepOrder::XYX), "xyx");
}

}  // namespace
}  // namespace realgas
