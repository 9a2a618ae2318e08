#pragma once

// Command orchestration behind the genfrob executable. run() never touches
// the process environment or the filesystem except to read --basis files,
// so it is directly testable.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "genfrob/module.hpp"
#include "genfrob/poset.hpp"

namespace genfrob::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Dot };

struct JobSpec {
  std::string command;
  std::vector<Int> weights;               // empty: derive from basis
  std::vector<LatticePoint> basis;        // empty: full kernel
  Int k = 1;
  bool k_given = false;
  Int k_max = 6;
  Format format = Format::Text;
  unsigned threads = 1;
  std::optional<Int> degree_cap;
};

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline constexpr int kExitInvalid = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitOverflow = 4;

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"basis", "ideal", "ball", "module", "poset", "frobenius", "sequence", "verify"};
  return c;
}

/// One integer vector per line; blank lines and lines starting with '#' skipped.
inline std::vector<LatticePoint> parse_basis(std::istream& in) {
  std::vector<LatticePoint> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<Int> v;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long x = 0;
      try {
        x = std::stoll(tok, &used);
      } catch (const std::exception&) {
        throw InvalidInput("bad basis entry: " + tok);
      }
      if (used != tok.size()) throw InvalidInput("bad basis entry: " + tok);
      v.push_back(static_cast<Int>(x));
    }
    out.emplace_back(std::move(v));
  }
  if (out.empty()) throw InvalidInput("basis file has no vectors");
  return out;
}

inline std::vector<LatticePoint> read_basis_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read basis file: " + path);
  return parse_basis(in);
}

inline std::optional<Int> parse_degree_cap(const char* value) {
  if (!value || !*value) return std::nullopt;
  std::string s(value);
  std::size_t used = 0;
  long long x = 0;
  try {
    x = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw InvalidInput("GENFROB_DEGREE_CAP is not an integer: " + s);
  }
  if (used != s.size() || x < 0) throw InvalidInput("GENFROB_DEGREE_CAP must be a nonnegative integer: " + s);
  return static_cast<Int>(x);
}

inline LatticeBasis resolve_basis(const JobSpec& job) {
  if (job.basis.empty()) {
    if (job.weights.empty()) throw InvalidInput("need -a weights or --basis file");
    return kernel_basis(WeightVector(job.weights));
  }
  if (job.weights.empty()) return LatticeBasis(weight_from_basis(job.basis), job.basis);
  return LatticeBasis(WeightVector(job.weights), job.basis);
}

namespace detail {

inline Json point_json(const LatticePoint& p) { return Json(p.coords); }

// Full-kernel classes are plain degrees; with torsion use "d[t1,...]".
inline Json class_json(const QuotientClass& c) {
  if (c.torsion.empty()) return c.degree;
  return to_string(c);
}

inline std::string class_text(const QuotientClass& c) { return c.torsion.empty() ? std::to_string(c.degree) : to_string(c); }

inline std::string join(const std::vector<Int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Cover relations of the subposet induced on `subset` (sorted classes).
inline std::vector<std::pair<std::size_t, std::size_t>> induced_hasse(const StructurePoset& p,
                                                                       const std::vector<QuotientClass>& subset) {
  std::vector<std::size_t> ids;
  for (const auto& c : subset) ids.push_back(*p.index_of(c));
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t lo = 0; lo < ids.size(); ++lo)
    for (std::size_t hi = 0; hi < ids.size(); ++hi) {
      if (lo == hi || !p.geq[ids[hi]][ids[lo]]) continue;
      bool cover = true;
      for (std::size_t mid = 0; mid < ids.size() && cover; ++mid)
        if (mid != lo && mid != hi && p.geq[ids[hi]][ids[mid]] && p.geq[ids[mid]][ids[lo]]) cover = false;
      if (cover) out.emplace_back(lo, hi);
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline RunResult cmd_basis(const JobSpec& job, const LatticeBasis& b) {
  RunResult r;
  if (job.format == Format::Json) {
    Json j;
    j["a"] = b.weight().values();
    j["index"] = b.index();
    j["torsion"] = b.torsion_moduli();
    j["basis"] = Json::array();
    for (const auto& v : b.vectors()) j["basis"].push_back(point_json(v));
    r.out = dump(j);
  } else {
    std::ostringstream os;
    os << "a = (" << join(b.weight().values()) << ")\n";
    os << "index = " << b.index() << "\n";
    if (!b.torsion_moduli().empty()) os << "torsion = (" << join(b.torsion_moduli()) << ")\n";
    for (const auto& v : b.vectors()) os << to_string(v) << "\n";
    r.out = os.str();
  }
  return r;
}

inline RunResult cmd_ideal(const JobSpec& job, const LatticeBasis& b) {
  RunResult r;
  const auto mb = lattice_ideal(b);
  if (job.format == Format::Json) {
    Json j;
    j["a"] = b.weight().values();
    j["markov"] = Json::array();
    j["vectors"] = Json::array();
    for (const auto& e : mb.elements) {
      j["markov"].push_back(render(e));
      j["vectors"].push_back(point_json(e.vector));
    }
    r.out = dump(j);
  } else {
    for (const auto& e : mb.elements) r.out += render(e) + "\n";
  }
  return r;
}

inline RunResult cmd_ball(const JobSpec& job, const LatticeBasis& b) {
  RunResult r;
  if (job.k < 0) throw InvalidInput("radius must be nonnegative");
  const auto nb = ball(moves(lattice_ideal(b)), static_cast<int>(job.k));
  if (job.format == Format::Json) {
    Json j;
    j["a"] = b.weight().values();
    j["k"] = job.k;
    j["points"] = Json::array();
    for (const auto& p : nb.points) j["points"].push_back(point_json(p));
    j["distances"] = nb.distances;
    r.out = dump(j);
  } else {
    for (std::size_t i = 0; i < nb.points.size(); ++i)
      r.out += to_string(nb.points[i]) + " " + std::to_string(nb.distances[i]) + "\n";
  }
  return r;
}

inline RunResult cmd_module(const JobSpec& job, const LatticeBasis& b) {
  RunResult r;
  Workspace ws(b, FrobeniusOptions{job.degree_cap});
  const auto gens = minimal_generators(ws, job.k, job.threads);
  std::vector<std::optional<Classification>> cls;
  for (const auto& g : gens.generators)
    cls.push_back(job.k >= 2 ? std::optional(classify(ws, g.monomial, job.k)) : std::nullopt);

  if (job.format == Format::Json) {
    Json j;
    j["a"] = b.weight().values();
    j["k"] = job.k;
    j["generators"] = Json::array();
    j["supports"] = Json::array();
    j["degrees"] = Json::array();
    for (const auto& g : gens.generators) {
      j["generators"].push_back(render(g.monomial));
      Json s = Json::array();
      for (const auto& p : g.support) s.push_back(point_json(p));
      j["supports"].push_back(std::move(s));
      j["degrees"].push_back(g.degree());
    }
    j["m_k"] = gens.m_k;
    j["classification"] = Json::array();
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (!cls[i]) continue;
      Json c;
      c["generator"] = render(gens.generators[i].monomial);
      c["case"] = to_string(cls[i]->kind);
      c["witnesses"] = Json::array();
      for (const auto& w : cls[i]->witnesses) c["witnesses"].push_back(render(w));
      j["classification"].push_back(std::move(c));
    }
    r.out = dump(j);
  } else {
    std::ostringstream os;
    os << "m_k = " << gens.m_k << "\n";
    for (std::size_t i = 0; i < gens.generators.size(); ++i) {
      const auto& g = gens.generators[i];
      os << render(g.monomial) << "  degree " << g.degree() << "  support " << g.support.size();
      if (cls[i]) {
        os << "  " << to_string(cls[i]->kind);
        for (const auto& w : cls[i]->witnesses) os << " " << render(w);
      }
      os << "\n";
    }
    r.out = os.str();
  }
  return r;
}

inline RunResult cmd_poset(const JobSpec& job, const LatticeBasis& b) {
  RunResult r;
  const Int f1 = first_frobenius(b, FrobeniusOptions{job.degree_cap});
  const auto sp = structure_poset(b, f1);
  std::vector<QuotientClass> labels = sp.elements;
  std::optional<ModulePoset> mp;
  if (job.k_given) {
    mp = module_poset(b, f1, job.k);
    labels = mp->labels;
  }
  const auto hasse = mp ? induced_hasse(sp, labels) : sp.hasse;

  if (job.format == Format::Dot) {
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=BT;\n";
    for (const auto& c : labels) os << "  \"" << class_text(c) << "\";\n";
    for (auto [lo, hi] : hasse) os << "  \"" << class_text(labels[lo]) << "\" -> \"" << class_text(labels[hi]) << "\";\n";
    os << "}\n";
    r.out = os.str();
  } else if (job.format == Format::Json) {
    Json j;
    j["a"] = b.weight().values();
    if (mp) {
      j["k"] = job.k;
      j["m_k"] = mp->m_k;
    }
    Json p;
    p["labels"] = Json::array();
    for (const auto& c : labels) p["labels"].push_back(class_json(c));
    p["hasse"] = Json::array();
    for (auto [lo, hi] : hasse) p["hasse"].push_back(Json::array({class_json(labels[lo]), class_json(labels[hi])}));
    if (mp) {
      p["minimal"] = Json::array();
      for (const auto& c : mp->minimal) p["minimal"].push_back(class_json(c));
    }
    j["poset"] = std::move(p);
    r.out = dump(j);
  } else {
    std::ostringstream os;
    os << "labels:";
    for (const auto& c : labels) os << " " << class_text(c);
    os << "\nhasse:";
    for (auto [lo, hi] : hasse) os << " " << class_text(labels[lo]) << "-" << class_text(labels[hi]);
    os << "\n";
    if (mp) {
      os << "minimal:";
      for (const auto& c : mp->minimal) os << " " << class_text(c);
      os << "\n";
    }
    r.out = os.str();
  }
  return r;
}

inline RunResult cmd_frobenius(const JobSpec& job, const LatticeBasis& b) {
  RunResult r;
  const FrobeniusOptions opts{job.degree_cap};
  const Int f = frobenius(b, job.k, opts);
  if (job.format == Format::Json) {
    const Int mk = m_value(b, job.k);
    Json j;
    j["a"] = b.weight().values();
    j["k"] = job.k;
    j["m_k"] = mk;
    j["F_k"] = f;
    j["b"] = f - mk;
    r.out = dump(j);
  } else {
    r.out = std::to_string(f) + "\n";
  }
  return r;
}

inline RunResult cmd_sequence(const JobSpec& job, const LatticeBasis& b) {
  RunResult r;
  const auto rep = sequence_report(b, job.k_max, FrobeniusOptions{job.degree_cap});
  const auto& c = rep.bound_checks;
  if (job.format == Format::Json) {
    Json j;
    j["a"] = b.weight().values();
    j["k_max"] = rep.k_max;
    j["F"] = rep.f_values;
    j["m"] = rep.m_values;
    j["b"] = rep.b_values;
    j["f_diffs"] = rep.f_diffs;
    j["m_diffs"] = rep.m_diffs;
    j["dimension"] = rep.dimension;
    j["b_set_observed"] = rep.observed_b_set;
    Json bc;
    bc["m_nondecreasing"] = c.m_nondecreasing;
    bc["m_diffs_within_m2"] = c.m_diffs_within_m2;
    bc["f_within_window"] = c.f_within_window;
    bc["dimension_le_t_m2"] = c.dimension_le_t_m2;
    bc["dimension_le_span"] = c.dimension_le_span;
    bc["differences_bounded"] = c.differences_bounded;
    j["bound_checks"] = std::move(bc);
    r.out = dump(j);
  } else {
    std::ostringstream os;
    os << "F = " << join(rep.f_values, " ") << "\n";
    os << "m = " << join(rep.m_values, " ") << "\n";
    os << "b = " << join(rep.b_values, " ") << "\n";
    os << "F diffs = " << join(rep.f_diffs, " ") << "\n";
    os << "dimension = " << rep.dimension << "\n";
    os << "b set (observed up to k=" << rep.k_max << ") = " << join(rep.observed_b_set, " ") << "\n";
    os << "bounds " << (c.all() ? "ok" : "VIOLATED") << "\n";
    r.out = os.str();
  }
  return r;
}

}  // namespace detail

struct VerifyLine {
  Int k = 0;
  Int f_pipeline = 0;
  Int f_oracle = 0;
  bool generators_in_window = true;
  bool ok() const { return f_pipeline == f_oracle && generators_in_window; }
};

/// Pipeline F_k against the brute-force oracle, plus the generator degree
/// window, for k = 1..k_max.
inline std::vector<VerifyLine> verify(const LatticeBasis& b, Int k_max, const FrobeniusOptions& opts = {}) {
  if (k_max < 1) throw InvalidInput("k_max must be at least 1");
  Workspace ws(b, opts);
  std::vector<VerifyLine> out;
  for (Int k = 1; k <= k_max; ++k) {
    VerifyLine v;
    v.k = k;
    v.f_pipeline = frobenius(b, k, opts);
    v.f_oracle = brute_force_frobenius(b, k);
    const auto gens = minimal_generators(ws, k);
    for (const auto& g : gens.generators)
      if (g.degree() < gens.m_k || g.degree() > gens.m_k + std::max<Int>(ws.f1(), 0)) v.generators_in_window = false;
    out.push_back(v);
  }
  return out;
}

inline RunResult cmd_verify(const JobSpec& job, const LatticeBasis& b) {
  RunResult r;
  const auto lines = verify(b, job.k_max, FrobeniusOptions{job.degree_cap});
  bool all = true;
  if (job.format == Format::Json) {
    Json j;
    j["a"] = b.weight().values();
    j["checks"] = Json::array();
    for (const auto& v : lines) {
      Json e;
      e["k"] = v.k;
      e["F_k"] = v.f_pipeline;
      e["oracle"] = v.f_oracle;
      e["generators_in_window"] = v.generators_in_window;
      e["ok"] = v.ok();
      j["checks"].push_back(std::move(e));
      all = all && v.ok();
    }
    j["ok"] = all;
    r.out = detail::dump(j);
  } else {
    for (const auto& v : lines) {
      r.out += "k=" + std::to_string(v.k) + " F=" + std::to_string(v.f_pipeline) + " oracle=" +
               std::to_string(v.f_oracle) + (v.ok() ? " ok" : " MISMATCH") + "\n";
      all = all && v.ok();
    }
  }
  if (!all) {
    r.exit_code = kExitMismatch;
    r.err = "verification mismatch\n";
  }
  return r;
}

inline RunResult run(const JobSpec& job) {
  try {
    const auto& cmds = commands();
    if (std::find(cmds.begin(), cmds.end(), job.command) == cmds.end())
      throw InvalidInput("unknown command: " + job.command);
    if (job.command != "ball" && job.k < 1) throw InvalidInput("k must be at least 1");
    if (job.format == Format::Dot && job.command != "poset") throw InvalidInput("dot output is only available for poset");
    const auto b = resolve_basis(job);
    if (job.command == "basis") return detail::cmd_basis(job, b);
    if (job.command == "ideal") return detail::cmd_ideal(job, b);
    if (job.command == "ball") return detail::cmd_ball(job, b);
    if (job.command == "module") return detail::cmd_module(job, b);
    if (job.command == "poset") return detail::cmd_poset(job, b);
    if (job.command == "frobenius") return detail::cmd_frobenius(job, b);
    if (job.command == "sequence") return detail::cmd_sequence(job, b);
    return cmd_verify(job, b);
  } catch (const InvalidInput& e) {
    return {kExitInvalid, "", std::string("error: ") + e.what() + "\n"};
  } catch (const OverflowError& e) {
    return {kExitOverflow, "", std::string("error: ") + e.what() + "\n"};
  } catch (const LimitExceeded& e) {
    return {kExitOverflow, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace genfrob::cli
