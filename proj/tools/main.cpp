#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "circanon/canon.hpp"
#include "circanon/io.hpp"
#include "circanon/refinement.hpp"
#include "circanon/sampling.hpp"
#include "circanon/spectral.hpp"
#include "circanon/walk.hpp"
#include "circanon/wl2.hpp"
#include "experiment.hpp"

namespace {

using namespace circanon;

constexpr int kExitSuccess = 0;
constexpr int kExitGiveUp = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitAssertionFailure = 3;

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string first_nonempty_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  return {};
}

// Accepts either a graph file or a connection-set line.
Digraph load_graph(const std::string& text) {
  const std::string head = first_nonempty_line(text);
  if (head.rfind("n ", 0) == 0) return parse_graph(text);
  return cayley(parse_connection_set(head));
}

ConnectionSet load_connection_set(const std::string& text) {
  return parse_connection_set(first_nonempty_line(text));
}

std::vector<int> parse_n_range(const std::string& text) {
  // Either comma-separated values or "lo..hi".
  std::vector<int> ns;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    for (int n = lo; n <= hi; ++n) ns.push_back(n);
    return ns;
  }
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) ns.push_back(std::stoi(item));
  return ns;
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> vs;
  if (text.empty()) return vs;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) vs.push_back(std::stoi(item));
  return vs;
}

std::ostream& open_out(std::ofstream& file, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") return std::cout;
  file.open(out_path);
  if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"circanon: canonization and spectral machinery for circulant (di)graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::string out_path;
  int jobs = 1;
  int oracle_bound = kDefaultAutomorphismBound;
  app.add_option("--seed", seed, "random seed");
  app.add_option("--out", out_path, "output file ('-' = stdout)");
  app.add_option("--jobs", jobs, "worker threads for experiments");
  app.add_option("--oracle-bound", oracle_bound, "order bound for the brute-force oracles");

  // gen
  auto* gen = app.add_subcommand("gen", "sample random circulants");
  std::string gen_model = "cayley";
  int gen_n = 8;
  int gen_count = 1;
  bool gen_directed = false, gen_undirected = false;
  gen->add_option("--model", gen_model, "cayley|unlabeled|labeled")->capture_default_str();
  gen->add_option("--n", gen_n, "order")->required();
  gen->add_option("--count", gen_count, "number of samples")->capture_default_str();
  gen->add_flag("--directed", gen_directed, "sample digraphs (default)");
  gen->add_flag("--undirected", gen_undirected, "sample graphs");

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "exact spectrum of a connection set");
  std::string spectrum_input = "-";
  bool spectrum_numeric = false;
  spectrum_cmd->add_option("input", spectrum_input, "connection-set file or '-'");
  spectrum_cmd->add_flag("--numeric", spectrum_numeric, "also print numeric eigenvalues as CSV");

  // walk
  auto* walk_cmd = app.add_subcommand("walk", "walk-matrix invariants of a connection set");
  std::string walk_input = "-";
  walk_cmd->add_option("input", walk_input, "connection-set file or '-'");

  // cr
  auto* cr_cmd = app.add_subcommand("cr", "color refinement rounds");
  std::string cr_input = "-";
  std::string cr_individualize;
  cr_cmd->add_option("input", cr_input, "graph/connection-set file or '-'");
  cr_cmd->add_option("--individualize", cr_individualize, "comma-separated vertices");

  // canon
  auto* canon_cmd = app.add_subcommand("canon", "canonical labeling");
  std::string canon_input = "-";
  std::string canon_mode = "auto";
  canon_cmd->add_option("input", canon_input, "graph/connection-set file or '-'");
  canon_cmd->add_option("--mode", canon_mode, "digraph|graph|full|naive (default: by symmetry)");

  // wl2
  auto* wl2_cmd = app.add_subcommand("wl2", "2-dimensional Weisfeiler-Leman refinement");
  std::string wl2_input = "-";
  wl2_cmd->add_option("input", wl2_input, "graph/connection-set file or '-'");

  // wl2-rep
  auto* rep_cmd = app.add_subcommand("wl2-rep", "canonical Cayley representation via 2-WL");
  std::string rep_input = "-";
  rep_cmd->add_option("input", rep_input, "graph/connection-set file or '-'");

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "Monte Carlo experiment harness");
  std::string exp_name;
  std::string exp_range;
  long long exp_trials = 1000;
  std::string exp_model = "cayley";
  bool exp_directed = false, exp_undirected = false;
  double exp_bound_c = 3.0;
  double exp_rel_tol = 0.10;
  int exp_stride = 32;
  exp_cmd->add_option("--name", exp_name,
                      "simple-spectrum|saturated|3p-collision|canon-pipeline")
      ->required();
  exp_cmd->add_option("--n-range", exp_range, "e.g. 16,32,64 or 9..40")->required();
  exp_cmd->add_option("--trials", exp_trials, "trials per n")->capture_default_str();
  exp_cmd->add_option("--model", exp_model, "cayley|unlabeled|labeled")->capture_default_str();
  exp_cmd->add_flag("--directed", exp_directed, "canon-pipeline on digraphs (default)");
  exp_cmd->add_flag("--undirected", exp_undirected, "canon-pipeline on graphs");
  exp_cmd->add_option("--bound-constant", exp_bound_c, "C in the f(n) <= C/sqrt(n) assertion")
      ->capture_default_str();
  exp_cmd->add_option("--relative-tolerance", exp_rel_tol, "3p-collision agreement tolerance")
      ->capture_default_str();
  exp_cmd->add_option("--cross-check-stride", exp_stride,
                      "walk/spectral cross-verification stride")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  std::ofstream out_file;
  try {
    std::ostream& out = open_out(out_file, out_path);

    if (*gen) {
      const bool directed = !gen_undirected;
      if (gen_directed && gen_undirected) {
        throw std::invalid_argument("gen: choose one of --directed/--undirected");
      }
      Rng rng = Rng::derive(seed, {0x67656eull, static_cast<std::uint64_t>(gen_n)});
      if (gen_model == "cayley") {
        for (int i = 0; i < gen_count; ++i) {
          out << sample_cayley(gen_n, directed, rng).to_string() << '\n';
        }
      } else if (gen_model == "unlabeled") {
        ExactSampler sampler(gen_n, directed);
        for (int i = 0; i < gen_count; ++i) {
          out << sampler.sample_unlabeled(rng).to_string() << '\n';
        }
      } else if (gen_model == "labeled") {
        ExactSampler sampler(gen_n, directed);
        for (int i = 0; i < gen_count; ++i) {
          out << format_graph(sampler.sample_labeled(rng));
        }
      } else {
        throw std::invalid_argument("gen: unknown model " + gen_model);
      }
      return kExitSuccess;
    }

    if (*spectrum_cmd) {
      const ConnectionSet s = load_connection_set(read_all(spectrum_input));
      const int n = s.modulus();
      const int distinct = distinct_eigenvalue_count(s);
      out << "n " << n << "\nsize " << s.size() << "\ndistinct_eigenvalues " << distinct
          << "\nsimple_spectrum " << (distinct == n ? 1 : 0) << "\nsaturated_spectrum ";
      if (s.inverse_closed()) {
        out << (distinct == saturated_bound(n) ? 1 : 0) << '\n';
      } else {
        out << "n/a\n";
      }
      if (spectrum_numeric) {
        out << "index,re,im\n";
        const auto numeric = numeric_spectrum(s);
        for (int a = 0; a < n; ++a) {
          out << a << ',' << numeric[a].real() << ',' << numeric[a].imag() << '\n';
        }
      }
      return kExitSuccess;
    }

    if (*walk_cmd) {
      const ConnectionSet s = load_connection_set(read_all(walk_input));
      const Digraph g = cayley(s);
      const int terminal[1] = {0};
      const WalkMatrix w0 = walk_matrix(g, terminal);
      const int distinct_rows = distinct_row_count(w0);
      out << "n " << s.modulus() << "\nrank " << walk_rank(w0) << "\ndistinct_rows "
          << distinct_rows << "\nwalk_discrete " << (distinct_rows == s.modulus() ? 1 : 0)
          << "\nwalk_saturated ";
      if (s.inverse_closed()) {
        out << (distinct_rows == saturated_bound(s.modulus()) ? 1 : 0) << '\n';
      } else {
        out << "n/a\n";
      }
      return kExitSuccess;
    }

    if (*cr_cmd) {
      const Digraph g = load_graph(read_all(cr_input));
      const std::vector<int> ind = parse_vertex_list(cr_individualize);
      const auto rounds = round_colorings(g, ind);
      for (const Coloring& c : rounds) {
        out << "round " << c.round << " classes " << c.num_classes << '\n';
      }
      const Coloring& final = rounds.back();
      out << "partition";
      for (const auto& cls : final.classes()) {
        out << " |";
        for (std::size_t i = 0; i < cls.size(); ++i) out << (i ? "," : "") << cls[i];
      }
      out << '\n';
      return kExitSuccess;
    }

    if (*canon_cmd) {
      const Digraph g = load_graph(read_all(canon_input));
      std::string mode = canon_mode;
      if (mode == "auto") mode = g.is_symmetric() ? "graph" : "digraph";
      CanonResult r;
      if (mode == "digraph") {
        r = canonize_digraph(g);
      } else if (mode == "graph") {
        r = canonize_graph(g);
      } else if (mode == "full") {
        r = canonize_full(g);
      } else if (mode == "naive") {
        r = naive_canonize(g, seed);
      } else {
        throw std::invalid_argument("canon: unknown mode " + mode);
      }
      if (!r.ok()) {
        out << "outcome give-up\nreason " << r.reason << '\n';
        return kExitGiveUp;
      }
      out << "outcome success\nlabeling";
      for (int v : r.labeling->images()) out << ' ' << v;
      out << "\ndigest " << r.canonical_form->digest() << '\n';
      return kExitSuccess;
    }

    if (*wl2_cmd) {
      const Digraph g = load_graph(read_all(wl2_input));
      const PairColoring pc = wl2_stable(g);
      for (std::size_t i = 0; i < pc.round_class_counts.size(); ++i) {
        out << "round " << i << " classes " << pc.round_class_counts[i] << '\n';
      }
      out << "stable_classes " << pc.num_classes << '\n';
      return kExitSuccess;
    }

    if (*rep_cmd) {
      const Digraph g = load_graph(read_all(rep_input));
      const CanonResult r = canonical_cayley_representation(g);
      if (!r.ok()) {
        out << "outcome give-up\nreason " << r.reason << '\n';
        return kExitGiveUp;
      }
      out << "outcome success\nconnection_set "
          << connection_set_of(*r.canonical_form).to_string() << "\ndigest "
          << r.canonical_form->digest() << '\n';
      return kExitSuccess;
    }

    if (*exp_cmd) {
      exp::ExperimentSpec spec;
      const auto kind = exp::parse_experiment_name(exp_name);
      if (!kind) throw std::invalid_argument("experiment: unknown name " + exp_name);
      spec.kind = *kind;
      spec.ns = parse_n_range(exp_range);
      spec.trials = exp_trials;
      if (exp_model == "cayley") {
        spec.model = ModelKind::cayley;
      } else if (exp_model == "unlabeled") {
        spec.model = ModelKind::unlabeled;
      } else if (exp_model == "labeled") {
        spec.model = ModelKind::labeled;
      } else {
        throw std::invalid_argument("experiment: unknown model " + exp_model);
      }
      if (exp_directed && exp_undirected) {
        throw std::invalid_argument("experiment: choose one of --directed/--undirected");
      }
      spec.directed = !exp_undirected;
      spec.seed = seed;
      spec.jobs = jobs;
      spec.cross_check_stride = exp_stride;
      spec.bound_constant = exp_bound_c;
      spec.relative_tolerance = exp_rel_tol;
      const exp::ExperimentResult result = exp::run_experiment(spec);
      out << result.csv;
      if (!result.assertions_passed) {
        for (const std::string& f : result.assertion_failures) {
          std::cerr << "assertion failed: " << f << '\n';
        }
        return kExitAssertionFailure;
      }
      return kExitSuccess;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitSuccess;
}
