// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "genfrob/cli.hpp"
#include "properties.hpp"

using namespace genfrob;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

LatticeBasis full(std::vector<Int> a) { return kernel_basis(WeightVector(std::move(a))); }
LaurentMonomial mono(std::initializer_list<Int> e) { return {LatticePoint(e)}; }

std::vector<Binomial> binomials(std::initializer_list<LatticePoint> vs) {
  std::vector<Binomial> out;
  for (const auto& v : vs) out.push_back(Binomial{v});
  return out;
}

bool same_orbits(const Workspace& ws, const ModuleGens& gens, const std::vector<LaurentMonomial>& expected) {
  if (gens.generators.size() != expected.size()) return false;
  for (const auto& e : expected) {
    int matches = 0;
    for (const auto& g : gens.generators)
      if (divides_mod_L(ws, g.monomial, e) && divides_mod_L(ws, e, g.monomial)) ++matches;
    if (matches != 1) return false;
  }
  return true;
}

Check lattice_ideals() {
  Check c;
  auto a = lattice_ideal(full({3, 5, 8}));
  c.expect(ideal_equal(a.elements, binomials({{-1, -1, 1}, {-5, 3, 0}}), a.order_used), "I(3,5,8)");
  auto b = lattice_ideal(full({3, 4, 11}));
  c.expect(ideal_equal(b.elements, binomials({{1, 2, -1}, {4, -3, 0}}), b.order_used), "I(3,4,11)");
  return c;
}

Check ball_3_4_11() {
  Check c;
  const std::set<LatticePoint> listed{{0, 0, 0},  {1, 2, -1},  {4, -3, 0},  {-1, -2, 1}, {-4, 3, 0},
                                     {8, -6, 0}, {3, -5, 1},  {5, -1, -1}, {-2, -4, 2}, {2, 4, -2},
                                     {-5, 1, 1}, {-3, 5, -1}, {-8, 6, 0}};
  auto b = ball(moves(lattice_ideal(full({3, 4, 11}))), 2);
  c.expect(std::set<LatticePoint>(b.points.begin(), b.points.end()) == listed, "N2 differs");
  c.expect(b.points.size() == 13, "N2 size");
  return c;
}

Check generators() {
  Check c;
  Workspace w358(full({3, 5, 8})), w(full({3, 4, 11})), w2(full({2, 5, 10}));
  c.expect(same_orbits(w358, minimal_generators(w358, 2), {mono({0, 0, 1}), mono({0, 3, 0})}), "M2(3,5,8)");
  auto m3 = minimal_generators(w, 3);
  c.expect(same_orbits(w, m3, {mono({5, 0, 0}), mono({4, 2, 0})}), "M3(3,4,11)");
  std::vector<Int> degs;
  for (const auto& g : m3.generators) degs.push_back(g.degree());
  c.expect(degs == std::vector<Int>{15, 20}, "M3(3,4,11) degrees");
  c.expect(same_orbits(w, minimal_generators(w, 4), {mono({0, 0, 2}), mono({-1, 1, 2}), mono({3, 1, 1})}),
           "M4(3,4,11)");
  c.expect(same_orbits(w2, minimal_generators(w2, 2), {mono({0, 0, 1})}), "M2(2,5,10)");
  return c;
}

Check classification() {
  Check c;
  Workspace w2(full({2, 5, 10})), w(full({3, 4, 11}));
  const auto x3 = mono({0, 0, 1});
  // x3 is a minimal generator of M^(2) with three support points; it enters
  // M^(3) through the exceptional case, every pairwise lcm being x3 itself.
  c.expect(is_exceptional(w2.basis(), x3, 2), "x3 exceptional in M2(2,5,10)");
  auto e = classify(w2, x3, 3);
  c.expect(e.kind == GeneratorCase::Exceptional, "x3 case");
  c.expect(e.support == std::vector<LatticePoint>{{-5, 0, 1}, {0, -2, 1}, {0, 0, 0}}, "x3 support");

  auto two = classify(w, mono({-1, 1, 2}), 4);
  c.expect(two.kind == GeneratorCase::SyzygyOfTwoGenerators, "x1^-1*x2*x3^2 case");
  std::set<LaurentMonomial> got(two.witnesses.begin(), two.witnesses.end());
  c.expect(got == std::set<LaurentMonomial>{mono({-1, -1, 2}), mono({-2, 1, 2})}, "x1^-1*x2*x3^2 witnesses");

  auto unit = classify(w, mono({0, 0, 2}), 4);
  c.expect(unit.kind == GeneratorCase::SyzygyWithUnit, "x3^2 case");
  c.expect(unit.witnesses == std::vector<LaurentMonomial>{mono({-1, -1, 2})}, "x3^2 witness");
  return c;
}

Check frobenius_values() {
  Check c;
  c.expect(frobenius(full({3, 5, 8}), 1) == 7, "F1(3,5,8)");
  c.expect(frobenius(full({3, 4, 11}), 3) == 17, "F3(3,4,11)");
  for (Int k = 1; k <= 10; ++k) {
    c.expect(frobenius(full({3, 5}), k) == 15 * k - 8, "F_k(3,5) k=" + std::to_string(k));
    c.expect(frobenius(full({2, 7}), k) == 14 * k - 9, "F_k(2,7) k=" + std::to_string(k));
  }
  return c;
}

Check posets() {
  Check c;
  auto b = full({3, 5, 8});
  std::vector<Int> m;
  for (Int k = 1; k <= 6; ++k) m.push_back(m_value(b, k));
  c.expect(m == std::vector<Int>{0, 8, 16, 21, 24, 29}, "m_k");
  const std::vector<std::vector<Int>> labels{{0, 3, 5, 6},          {0, 3, 5, 6, 7},       {0, 2, 3, 4, 5, 6, 7},
                                             {0, 2, 3, 4, 5, 6, 7}, {0, 2, 3, 4, 5, 6, 7}, {0, 1, 2, 3, 4, 5, 6, 7}};
  for (Int k = 1; k <= 6; ++k) {
    std::vector<Int> got;
    for (const auto& l : module_poset(b, k).labels) got.push_back(l.degree);
    c.expect(got == labels[static_cast<std::size_t>(k - 1)], "labels k=" + std::to_string(k));
  }
  auto sp = structure_poset(b);
  std::set<std::pair<Int, Int>> edges;
  for (auto [lo, hi] : sp.hasse) edges.insert({sp.elements[lo].degree, sp.elements[hi].degree});
  c.expect(edges == std::set<std::pair<Int, Int>>{{0, 3}, {3, 6}, {0, 5}, {1, 4}, {4, 7}, {1, 6}, {2, 5}, {2, 7}},
           "Hasse edges");
  return c;
}

Check sequence_3_5_8() {
  Check c;
  auto r = sequence_report(full({3, 5, 8}), 6);
  c.expect(r.f_values == std::vector<Int>{7, 12, 17, 22, 25, 28}, "F_k");
  c.expect(r.b_values == std::vector<Int>{7, 4, 1, 1, 1, -1}, "b values");
  c.expect(r.dimension == 2, "dimension");
  c.expect(std::all_of(r.m_diffs.begin(), r.m_diffs.end(), [](Int d) { return d <= 8; }) && r.m_values[1] == 8,
           "m diffs");
  for (Int k = 1; k <= 6; ++k)
    c.expect(brute_force_frobenius(full({3, 5, 8}), k) == r.f_values[static_cast<std::size_t>(k - 1)],
             "oracle k=" + std::to_string(k));
  return c;
}

Check property_suites() {
  Check c;
  const std::vector<std::pair<std::string, std::function<props::Result()>>> suites{
      {"(a) fiber graph", [] { return props::fiber_graph_components(0xa11ce); }},
      {"(b) support identity", [] { return props::support_identity(0xb0b); }},
      {"(c) filtration", [] { return props::filtration(0xc0de); }},
      {"(d) pipeline/oracle", [] { return props::pipeline_oracle(0xd00d); }},
      {"(e) reconstruction", [] { return props::neighbourhood_reconstruction(0xe1e); }},
      {"(f) F bounds", [] { return props::frobenius_bounds(0xf00); }},
  };
  for (const auto& [name, suite] : suites) {
    auto r = suite();
    c.expect(r.cases >= 100, name + ": only " + std::to_string(r.cases) + " cases");
    c.expect(r.ok(), name + ": " + std::to_string(r.failures) + " failures, first " + r.first);
  }
  return c;
}

std::string lower_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  auto s = ss.str();
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return s;
}

Check frobenius_path_is_direct() {
  Check c;
  cli::JobSpec job;
  job.command = "frobenius";
  job.weights = {3, 4, 11};
  job.k = 3;
  auto r = cli::run(job);
  c.expect(r.exit_code == 0 && r.out == "17\n", "library CLI path");

  FILE* pipe = popen((std::string(GENFROB_EXE) + " frobenius -a 3,5,8 -k 6").c_str(), "r");
  std::string out;
  if (pipe) {
    char buf[256];
    while (auto n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    c.expect(pclose(pipe) == 0, "executable exit status");
  }
  c.expect(out == "28\n", "executable output");

  const std::filesystem::path root(GENFROB_SOURCE_DIR);
  int scanned = 0;
  for (const auto& dir : {root / "include", root / "tools"})
    for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
      if (!entry.is_regular_file()) continue;
      ++scanned;
      const auto text = lower_file(entry.path());
      for (const char* word : {"regularity", "betti", "resolution", "castelnuovo"})
        c.expect(text.find(word) == std::string::npos, entry.path().filename().string() + " mentions " + word);
    }
  c.expect(scanned >= 8, "source scan found too few files");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"1 lattice ideals of (3,5,8) and (3,4,11)", lattice_ideals},
      {"2 ball N2(0) of L(3,4,11)", ball_3_4_11},
      {"3 minimal generators up to orbit", generators},
      {"4 generator classification", classification},
      {"5 Frobenius values and two-variable formula", frobenius_values},
      {"6 m_k, module posets and Hasse diagram of (3,5,8)", posets},
      {"7 F_k, b-values and dimension for (3,5,8)", sequence_3_5_8},
      {"8 property suites (a)-(f)", property_suites},
      {"9 frobenius path uses the direct definition only", frobenius_path_is_direct},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (c.ok ? "PASS " : "FAIL ") << name;
    for (const auto& n : c.notes) std::cout << " | " << n;
    std::cout << "\n";
    if (!c.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
