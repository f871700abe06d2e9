// One line per acceptance criterion; exit status is the number of failed criteria.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "kit/corpus.hpp"
#include "kit/functions.hpp"
#include "setopt/builtins.hpp"
#include "setopt/calculus.hpp"
#include "setopt/vectoropt.hpp"
#include "setopt/vi.hpp"

using namespace setopt;
namespace fs = std::filesystem;

namespace {

Vec v1(Q a) { return Vec{a}; }
Vec v2(Q a, Q b) { return Vec{a, b}; }

std::vector<Vec> box_grid(Q lo, Q hi, Q step) {
  std::vector<Vec> g;
  for (Q a = lo; a <= hi; a += step)
    for (Q b = lo; b <= hi; b += step) g.push_back(v2(a, b));
  return g;
}

std::vector<Vec> line_grid(Q lo, Q hi, Q step) {
  std::vector<Vec> g;
  for (Q a = lo; a <= hi; a += step) g.push_back(v1(a));
  return g;
}

// Collects named checks for one criterion.
struct Criterion {
  std::vector<std::string> notes;
  bool ok = true;
  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void suite(const kit::SuiteResult& s, long min_instances) {
    check(s.passed(), s.summary());
    check(s.instances >= min_instances, s.name + ": only " + std::to_string(s.instances) + " instances");
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failed = 0;

void run(int id, const std::string& title, const std::function<void(Criterion&)>& body) {
  Criterion c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.check(false, std::string("exception: ") + e.what());
  }
  std::printf("%s criterion %d: %s (%.1f s)\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), seconds_since(t0));
  for (const auto& n : c.notes) std::printf("    %s\n", n.c_str());
  std::fflush(stdout);
  failed += !c.ok;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int exit_code(const std::string& cmd) {
  int st = std::system(cmd.c_str());
  if (st == -1) return -1;
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::fprintf(stderr, "usage: acceptance <cli> <scenario-dir> <broken-scenario> [work-dir]\n");
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path scenarios = argv[2], broken = argv[3];
  const fs::path work = argc > 4 ? fs::path(argv[4]) : fs::temp_directory_path() / "setopt_acceptance";

  run(1, "lattice laws on 1000 random instances in R^2 under 60 s", [](Criterion& c) {
    auto t0 = std::chrono::steady_clock::now();
    c.suite(kit::lattice_suite(1000, 11), 1000);
    double s = seconds_since(t0);
    c.check(s < 60, "took " + std::to_string(s) + " s");
  });

  run(2, "scalarization on the corpus and the residual example", [](Criterion& c) {
    c.suite(kit::scalarization_suite(1000, 12), 1000);
    auto e = builtins::example23();
    const Workspace& ws = *e.ws;
    c.check(residual_diff(ws, e.A, e.B).empty, "A ÷ B is not Empty");
    for (const Vec& z : {v2(1, 0), v2(-1, 0)})
      c.check(residual(neg_support(z, e.A), neg_support(z, e.B)) == ExtReal(1),
              "per-direction residual at " + to_string(z) + " is not 1");
  });

  run(3, "recession cones on the corpus", [](Criterion& c) { c.suite(kit::recession_suite(1000, 13), 1000); });

  run(4, "derivatives of 500 parametric polyhedra and the circle", [](Criterion& c) {
    c.suite(kit::derivative_suite(500, 14), 500);
    SetFunction f = builtins::circle();
    const Workspace& ws = f.ws();
    for (long u : {1L, -1L}) {
      c.check(set_derivative(f, v1(0), v1(u)).value.empty, "circle f' is not Empty");
      UpperSet inter = scalarized_derivative_intersection(f, v1(0), v1(u), ws.directions());
      c.check(set_equal(inter, point_plus_cone(ws, v1(0))), "scalarized intersection is not {0} + C");
      c.check(!regularity_check(f, v1(0), v1(u), ws.directions()).WR, "weak regularity should fail");
    }
  });

  run(5, "implication audit on 200 random exact instances under 5 min", [](Criterion& c) {
    auto t0 = std::chrono::steady_clock::now();
    kit::AuditStats st;
    kit::SuiteResult r = kit::vi_audit_suite(240, 15, &st);
    c.suite(r, 200);
    c.check(st.violations == 0, std::to_string(st.violations) + " audit violations");
    double s = seconds_since(t0);
    c.check(s < 300, "took " + std::to_string(s) + " s");
  });

  run(6, "golden minimality and infimizer examples", [](Criterion& c) {
    SetFunction a = builtins::heyde_a();
    auto grid = box_grid(0, 1, Q(1, 4));
    for (const auto& x0 : grid)
      c.check(minimal_check(a, x0, grid, a.ws().directions()).a, "first example: " + to_string(x0) + " not minimal");
    Translation box{Translation::Kind::Polyhedron, {v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)}, {}};
    c.check(solution_check(a, box, CandidateSpace{grid, box}, a.ws().directions()).solution,
            "first example: the box is not a solution");

    SetFunction b = builtins::heyde_b();
    auto line = line_grid(0, 1, Q(1, 8));
    for (const auto& x0 : line)
      c.check(minimal_check(b, x0, line, b.ws().directions()).a == (x0[0] == 1),
              "second example: wrong verdict at " + to_string(x0));

    SetFunction n = builtins::no_solution_line();
    Translation all{Translation::Kind::Polyhedron, {v1(0)}, {v1(1), v1(-1)}};
    Translation naturals{Translation::Kind::Polyhedron, {v1(0)}, {v1(1)}};
    auto g = line_grid(0, 10, Q(1, 2));
    CandidateSpace space{g, all};
    c.check(infimizer_check(n, naturals, space, n.ws().directions()).infimizer, "line: naturals not an infimizer");
    MinimalOptions esc{true};
    for (const auto& x0 : g)
      c.check(!minimal_check(n, x0, g, n.ws().directions(), esc).a, "line: " + to_string(x0) + " reported minimal");
    c.check(!solution_check(n, naturals, space, n.ws().directions(), esc).solution, "line: solution reported");
  });

  run(7, "vector functions: regularity, efficiency, infinite limits, Minty", [](Criterion& c) {
    kit::VectorStats st;
    c.suite(kit::vector_suite(120, 17, &st), 100);
    c.check(st.sr_samples > 0, "no strong-regularity samples");

    auto ws = builtins::quadrant();
    c.check(set_equal(infdir_plus_cone(*ws, v2(0, -1)), canonicalize(*ws, {{v2(-1, 0), Q(0)}})),
            "(0,-1) + C is not the halfplane z1 >= 0");
    c.check(infdir_plus_cone(*ws, v2(1, 1)).empty, "(1,1) + C is not Empty");
    c.check(set_equal(infdir_plus_cone(*ws, v2(0, 0)), cone_set(*ws)), "0 + C is not C");

    VectorFunction psi = builtins::abs_pair();
    auto grid = line_grid(-1, 2, Q(1, 2));
    const auto& normals = psi.ws().cone().facet_normals();
    MintyReport in = vector_minty_check(psi, v1(Q(1, 2)), grid, normals);
    c.check(in.efficient && in.scalar_form && in.inner_form && in.set_form && in.finite_form,
            "Minty forms at an efficient point");
    MintyReport out = vector_minty_check(psi, v1(Q(-1, 2)), grid, normals);
    c.check(!out.efficient && !out.scalar_form && !out.inner_form && !out.set_form && !out.finite_form,
            "Minty forms at an inefficient point");

    TrailLimits l = trail_limits(*ws, builtins::infdir_example_trail());
    c.check(l.lattice_converges && l.lattice_liminf.is_all(), "trail lattice limit is not Z");
    c.check(l.limsup.infinite && l.limsup.z == v2(0, -1), "trail limsup is not the infinite element (0,-1)");
    c.check(!l.commutes, "limit and cone addition commute");
  });

  run(8, "scenario reports are reproducible and broken input exits 1", [&](Criterion& c) {
    fs::create_directories(work);
    long count = 0;
    for (const auto& entry : fs::directory_iterator(scenarios)) {
      if (entry.path().extension() != ".json") continue;
      ++count;
      const std::string stem = entry.path().stem().string();
      std::string runs[2];
      for (int k = 0; k < 2; ++k) {
        fs::path out = work / (stem + "." + std::to_string(k) + ".json");
        std::ostringstream cmd;
        cmd << '"' << cli << "\" check-vi --scenario \"" << entry.path().string() << "\" --report \"" << out.string()
            << "\" --jobs " << k + 1 << " > /dev/null 2>&1";
        int code = exit_code(cmd.str());
        c.check(code == 0, stem + ": exit " + std::to_string(code));
        runs[k] = slurp(out);
      }
      c.check(!runs[0].empty() && runs[0] == runs[1], stem + ": reports differ");
    }
    c.check(count > 0, "no builtin scenarios found");
    std::string cmd = "\"" + cli + "\" check-vi --scenario \"" + broken.string() + "\" > /dev/null 2>&1";
    c.check(exit_code(cmd) == 1, "broken scenario does not exit 1");
  });

  std::printf("%d of 8 criteria failed\n", failed);
  return failed;
}
