#include "strongmatch/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <optional>
#include <sstream>

#include "strongmatch/engine.hpp"
#include "strongmatch/exact.hpp"
#include "strongmatch/harness.hpp"
#include "strongmatch/instances.hpp"
#include "strongmatch/io.hpp"

namespace strongmatch::cli {

namespace {

struct GenArgs {
  std::string family;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::optional<std::size_t> extra_attempts;
  std::string out;
};

struct SolveArgs {
  std::string graph;
  std::string certificate;
  std::string out;
  std::size_t threshold = 18;
};

struct ExactArgs {
  std::string graph;
  std::uint64_t budget = 10'000'000;
  std::string out;
};

struct VerifyArgs {
  std::string graph;
  std::string matching;
  std::string certificate;
};

struct FuzzArgs {
  std::size_t trials = 100;
  std::size_t n_min = 2;
  std::size_t n_max = 300;
  std::uint64_t seed = 0;
  std::size_t cross_check_max_n = 20;
  std::size_t threshold = 18;
  unsigned threads = 1;
  std::string dump_dir = "fuzz-failures";
};

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

Graph load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

int do_gen(const GenArgs& a, std::ostream& out) {
  Graph g;
  if (a.family == "c25") {
    g = gen_c25();
  } else if (a.family == "k33plus") {
    g = gen_k33plus();
  } else if (a.family == "tight9") {
    g = gen_tight9();
  } else if (a.family == "path") {
    g = gen_path(a.n);
  } else if (a.family == "cycle") {
    g = gen_cycle(a.n);
  } else {
    RandomGraphConfig rc;
    rc.n = a.n;
    rc.seed = a.seed;
    rc.extra_edge_attempts = a.extra_attempts.value_or(2 * a.n);
    g = gen_random_maxdeg4(rc);
  }
  emit(out, a.out, format_graph(g));
  return kOk;
}

int do_solve(const SolveArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  EngineOptions opt;
  opt.exact_threshold = a.threshold;
  const SolveResult r = solve(g, opt);
  const std::string cert = format_certificate(r);
  std::string text = format_matching(r.matching);
  if (a.certificate.empty()) {
    // Commented so that stdout stays a valid matching file.
    std::istringstream lines(cert);
    for (std::string line; std::getline(lines, line);) text += "# " + line + "\n";
  } else {
    write_text_file(a.certificate, cert);
  }
  emit(out, a.out, text);
  return kOk;
}

int do_exact(const ExactArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  const Matching m = max_induced_matching(g, {a.budget});
  emit(out, a.out, format_matching(m));
  return kOk;
}

int do_verify(const VerifyArgs& a, std::ostream& out) {
  const Graph g = load_graph(a.graph);
  const Matching m = parse_matching(read_text_file(a.matching));
  VerifyReport rep;
  if (a.certificate.empty()) {
    rep = verify_solution(g, m);
  } else {
    const ParsedCertificate pc = parse_certificate(read_text_file(a.certificate));
    SolveResult r;
    r.matching = pc.matching;
    r.certificate = pc.certificate;
    r.n = g.n();
    r.isolated = g.isolated_count();
    rep = verify_certificate(g, r);
    if (r.matching != m) {
      rep.certificate_ok = false;
      rep.details.push_back("matching file differs from the certificate's matching");
    }
  }
  out << "induced " << (rep.induced_ok ? "ok" : "FAIL") << "\n";
  out << "bound " << (rep.bound_ok ? "ok" : "FAIL") << "\n";
  if (!a.certificate.empty()) {
    out << "certificate " << (rep.certificate_ok ? "ok" : "FAIL") << "\n";
  }
  for (const auto& d : rep.details) out << "detail " << d << "\n";
  return rep.ok() ? kOk : kRejected;
}

int do_fuzz(const FuzzArgs& a, std::ostream& out, std::ostream& err) {
  FuzzConfig cfg;
  cfg.trials = a.trials;
  cfg.n_min = a.n_min;
  cfg.n_max = a.n_max;
  cfg.seed = a.seed;
  cfg.cross_check_max_n = a.cross_check_max_n;
  cfg.exact_threshold = a.threshold;
  cfg.threads = a.threads;
  const auto start = std::chrono::steady_clock::now();
  const FuzzReport rep = fuzz(cfg);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << format_fuzz_summary(rep);
  err << "fuzz: " << secs << " s total, slowest instance " << rep.max_runtime_seconds
      << " s\n";
  if (rep.failures.empty()) return kOk;
  std::filesystem::create_directories(a.dump_dir);
  std::size_t k = 0;
  for (const auto& f : rep.failures) {
    std::string text = "# trial " + std::to_string(f.trial) + " seed " +
                       std::to_string(f.seed) + " kind " + f.kind + "\n# " + f.detail + "\n";
    text += f.graph;
    const auto base = std::filesystem::path(a.dump_dir) /
                      ("failure-" + std::to_string(k++) + "-trial-" + std::to_string(f.trial));
    write_text_file(base.string() + ".graph.txt", text);
    if (!f.certificate.empty()) write_text_file(base.string() + ".cert.txt", f.certificate);
    err << "fuzz: wrote " << base.string() << ".graph.txt\n";
  }
  return kFuzzFailures;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Induced matchings in graphs of maximum degree 4", "strongmatch"};
  app.require_subcommand(1, 1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Write a generated graph");
  g->add_option("--family", gen.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"c25", "k33plus", "tight9", "random", "path", "cycle"}));
  g->add_option("--n", gen.n, "Vertex count (random, path, cycle)");
  g->add_option("--seed", gen.seed, "PRNG seed (random)");
  g->add_option("--extra-attempts", gen.extra_attempts, "Extra edge attempts (random), default 2n");
  g->add_option("--out", gen.out, "Output file, default stdout");

  SolveArgs sol;
  auto* s = app.add_subcommand("solve", "Construct an induced matching with 9|M| >= n - i");
  s->add_option("graph", sol.graph, "Graph file")->required();
  s->add_option("--certificate", sol.certificate, "Write the certificate to this file");
  s->add_option("--threshold", sol.threshold, "Solve components up to this size exactly")
      ->check(CLI::Range(std::size_t{0}, std::size_t{24}));
  s->add_option("--out", sol.out, "Output file, default stdout");

  ExactArgs ex;
  auto* e = app.add_subcommand("exact", "Maximum induced matching by branch and bound");
  e->add_option("graph", ex.graph, "Graph file")->required();
  e->add_option("--budget", ex.budget, "Search node budget");
  e->add_option("--out", ex.out, "Output file, default stdout");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check a matching and optionally a certificate");
  v->add_option("graph", ver.graph, "Graph file")->required();
  v->add_option("matching", ver.matching, "Matching file")->required();
  v->add_option("--certificate", ver.certificate, "Certificate file");

  FuzzArgs fz;
  auto* f = app.add_subcommand("fuzz", "Run solve and the checkers on random graphs");
  f->add_option("--trials", fz.trials, "Number of random graphs")->check(CLI::PositiveNumber);
  f->add_option("--nmin", fz.n_min, "Smallest vertex count")->check(CLI::PositiveNumber);
  f->add_option("--nmax", fz.n_max, "Largest vertex count")->check(CLI::PositiveNumber);
  f->add_option("--seed", fz.seed, "Master seed");
  f->add_option("--cross-check-max-n", fz.cross_check_max_n,
                "Compare with the exact optimum up to this size")
      ->check(CLI::Range(std::size_t{0}, std::size_t{24}));
  f->add_option("--threshold", fz.threshold, "Exact component threshold")
      ->check(CLI::Range(std::size_t{0}, std::size_t{24}));
  f->add_option("--threads", fz.threads, "Worker threads")->check(CLI::PositiveNumber);
  f->add_option("--dump-dir", fz.dump_dir, "Directory for failing instances");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (gen.family == "path" || gen.family == "cycle" || gen.family == "random") {
      if (g->parsed() && gen.n == 0) throw CLI::ValidationError("--n", "must be positive");
    }
    if (f->parsed() && fz.n_min > fz.n_max) {
      throw CLI::ValidationError("--nmin", "must not exceed --nmax");
    }
  } catch (const CLI::ParseError& pe) {
    const int code = app.exit(pe, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (g->parsed()) return do_gen(gen, out);
    if (s->parsed()) return do_solve(sol, out);
    if (e->parsed()) return do_exact(ex, out);
    if (v->parsed()) return do_verify(ver, out);
    return do_fuzz(fz, out, err);
  } catch (const MaxDegreeExceeded& x) {
    err << "error: " << x.what() << "\n";
    return kMaxDegree;
  } catch (const IsC25Component& x) {
    err << "error: " << x.what() << "\n";
    return kC25;
  } catch (const InternalInvariantViolation& x) {
    err << "internal error: " << x.what() << "\n";
    return kInvariant;
  } catch (const BudgetExceeded& x) {
    err << "error: " << x.what() << "\n";
    return kBudget;
  } catch (const ParseError& x) {
    err << "error: " << x.what() << "\n";
    return kUsage;
  } catch (const GraphError& x) {
    err << "error: " << x.what() << "\n";
    return kUsage;
  } catch (const std::filesystem::filesystem_error& x) {
    err << "error: " << x.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& x) {
    err << "error: " << x.what() << "\n";
    return kUsage;
  }
}

}  // namespace strongmatch::cli
