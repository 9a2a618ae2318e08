#include <fstream>
#include <iostream>
#include <map>
#include <thread>

#include <CLI11.hpp>

#include "genfrob/cli.hpp"

namespace gc = genfrob::cli;

int main(int argc, char** argv) {
  CLI::App app{"generalised Frobenius numbers and lattice modules"};
  app.require_subcommand(1);
  std::vector<genfrob::Int> weights;
  std::string basis_file, output, format = "text";
  genfrob::Int k = 1, k_max = 6;
  unsigned threads = 1;

  const std::map<std::string, std::string> about{
      {"basis", "lattice basis, index and torsion of the quotient"},
      {"ideal", "minimal Markov basis of the lattice ideal"},
      {"ball", "points within move distance k of the origin"},
      {"module", "minimal generators of M^(k) with their classification"},
      {"poset", "structure poset, or the module poset of M^(k) with -k"},
      {"frobenius", "F_k"},
      {"sequence", "F_k, m_k and b-values for k = 1..k-max"},
      {"verify", "check F_k against the brute-force scan for k = 1..k-max"}};
  for (const auto& name : gc::commands()) {
    auto* sub = app.add_subcommand(name, about.count(name) ? about.at(name) : "");
    sub->add_option("-a,--weights", weights, "comma separated weights")->delimiter(',');
    sub->add_option("--basis", basis_file, "file with one lattice vector per line");
    sub->add_option("-k", k, "k (radius for ball)");
    sub->add_option("--k-max", k_max, "largest k for sequence and verify");
    sub->add_option("--format", format, "text, json or dot (dot: poset only)")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("-o,--output", output, "write output to this file");
    sub->add_option("--threads", threads, "worker threads for candidate enumeration")->check(CLI::Range(1u, 256u));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : gc::kExitInvalid;
  }

  gc::JobSpec job;
  job.command = app.get_subcommands().front()->get_name();
  job.weights = weights;
  job.k = k;
  job.k_given = app.get_subcommands().front()->count("-k") > 0;
  job.k_max = k_max;
  job.format = format == "json" ? gc::Format::Json : format == "dot" ? gc::Format::Dot : gc::Format::Text;
  job.threads = threads;
  try {
    job.degree_cap = gc::parse_degree_cap(std::getenv("GENFROB_DEGREE_CAP"));
    if (!basis_file.empty()) job.basis = gc::read_basis_file(basis_file);
  } catch (const genfrob::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gc::kExitInvalid;
  }

  const auto result = gc::run(job);
  std::cerr << result.err;
  if (output.empty()) {
    std::cout << result.out;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << output << "\n";
      return gc::kExitInvalid;
    }
    out << result.out;
  }
  return result.exit_code;
}
