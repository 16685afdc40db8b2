#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "taudiff_cli/cli.hpp"

using namespace taudiff;
using namespace taudiff::test;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(TAUDIFF_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = std::string(TAUDIFF_TEST_TMP_DIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("documented examples") {
  const Run tau = run({"tau", corpus("circle_t"), "--poly", "x^2+y^2-t"});
  CHECK(tau.code == 0);
  CHECK(tau.out == "-1*tau_e + 2*x*tau_x + 2*y*tau_y\n");
  const Run rank = run({"rank", corpus("circle_t")});
  CHECK(rank.code == 0);
  CHECK(rank.out == "omega_tau: 2, omega_rel: 1\n");
  const Run all = run({"check", "all", corpus("affine_line")});
  CHECK(all.code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);
}

TEST_CASE("golden outputs") {
  struct Case {
    std::vector<std::string> args;
    const char* file;
  };
  const std::vector<Case> cases{
      {{"--canonical", "cone", corpus("circle_t")}, "circle_t.cone.txt"},
      {{"--canonical", "prolong", corpus("circle_t")}, "circle_t.prolong.txt"},
      {{"--canonical", "tangent", corpus("circle_t")}, "circle_t.tangent.txt"},
      {{"--canonical", "presentation", corpus("circle_t")}, "circle_t.presentation.txt"},
      {{"--canonical", "prolong", corpus("hyperbola_t")}, "hyperbola_t.prolong.txt"},
      {{"--canonical", "cone", corpus("cubic_surface")}, "cubic_surface.cone.txt"},
      {{"--canonical", "cone", corpus("circle_1")}, "circle_1.cone.txt"},
      {{"--canonical", "tangent", corpus("point")}, "point.tangent.txt"},
      {{"--canonical", "lift", corpus("affine_line")}, "affine_line.lift.txt"},
      {{"--canonical", "lift", corpus("ci_curve")}, "ci_curve.lift.txt"},
      {{"--canonical", "gb", corpus("ci_curve")}, "ci_curve.gb.txt"},
      {{"--canonical", "rank", corpus("cubic_surface")}, "cubic_surface.rank.txt"},
      {{"check", "all", corpus("affine_line")}, "affine_line.check.txt"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.file);
    const Run r = run(c.args);
    CHECK(r.code == 0);
    CHECK(r.out == golden(c.file));
  }
}

TEST_CASE("golden varieties parse back to themselves") {
  const auto k = parse_problem("[field]\nsymbols = t\nd(t) = 1\n[ring]\nvars = x\n").field;
  for (const auto* name : {"circle_t.cone.txt", "circle_t.prolong.txt", "circle_t.tangent.txt",
                           "hyperbola_t.prolong.txt", "cubic_surface.cone.txt", "point.tangent.txt"}) {
    CAPTURE(name);
    std::string text = golden(name);
    text.pop_back();
    const ParsedVariety v = parse_variety(text, k);
    CHECK(print_variety(v.label, v.algebra, true) == text);
  }
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"check", "all", corpus("hyperbola_t")};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("torsor action from the command line") {
  const Run r = run({"act", corpus("hyperbola_t"), "--base", "1, t", "--v", "1, -t", "--w", "0, 1"});
  CHECK(r.code == 0);
  CHECK(r.out == "base: (1, t); fiber: (1, -t + 1)\n");
  const Run off = run({"act", corpus("hyperbola_t"), "--base", "1, t", "--v", "1, 1", "--w", "0, 1"});
  CHECK(off.code == 1);
  CHECK(off.err.find("NotOnVariety") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"rank", "/nonexistent/file.prob"}).code == 2);
  CHECK(run({"check", "nonsense", corpus("circle_t")}).code == 2);
  CHECK(run({"--order", "elim", "rank", corpus("circle_t")}).code == 2);
  CHECK(run({"tau", corpus("circle_t"), "--poly", "x^-1"}).code == 2);
  CHECK(run({"tau", corpus("circle_t"), "--poly", "q"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const Run limited = run({"--max-pairs", "1", "--canonical", "cone", corpus("cubic_surface")});
  CHECK(limited.code == 3);
  CHECK(limited.err.find("ResourceLimit") != std::string::npos);

  const std::string bad = temp_file("bad_morphism.prob",
                                    "[field]\nsymbols = t\nd(t) = 1\n[ring]\nvars = x\n[ideal]\nx^2 - t\n"
                                    "[morphism m]\nsource = X\ntarget = u\ntarget_ideal = u - 1\nimage u = x\n");
  const Run lift = run({"lift", bad});
  CHECK(lift.code == 1);
  CHECK(lift.err.find("NotAMorphism") != std::string::npos);
}

TEST_CASE("failed checks print a witness") {
  // a curve declared zero-dimensional cannot pass the Jacobian check
  const std::string wrong = temp_file("wrong_dim.prob",
                                      "[field]\nsymbols = t\nd(t) = 1\n[ring]\nvars = x, y\n[ideal]\nx*y - t\n"
                                      "[assert]\ndim = 0\nsmooth = true\n");
  const Run r = run({"check", "split", wrong});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL split") != std::string::npos);
  CHECK(r.out.find("  witness: ") != std::string::npos);
}

TEST_CASE("non-domain inputs are skipped, not failed") {
  const Run r = run({"check", "all", corpus("double_point")});
  CHECK(r.code == 0);
  CHECK(r.out.find("SKIP sequences: not a domain") != std::string::npos);
}

TEST_CASE("order override") {
  const Run lex = run({"--order", "lex", "--canonical", "gb", corpus("ci_curve")});
  CHECK(lex.code == 0);
  CHECK(lex.out == "gb: x - t*z, y*z - 1\n");
}

}  // TEST_SUITE
