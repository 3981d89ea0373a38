#include "domw/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "domw/errors.hpp"
#include "domw/instances.hpp"
#include "domw/interval.hpp"
#include "domw/io.hpp"
#include "domw/oracles.hpp"
#include "domw/split.hpp"
#include "domw/tree_edge.hpp"

namespace domw::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

InstanceFile load_instance(const std::string& path) { return parse_instance(read_file(path)); }

void write_function(std::ostream& out, const DominationFunction& f) {
  for (Vertex v = 0; v < f.domain_size(); ++v) {
    if (f[v] != 0) out << "f " << v << ' ' << f[v] << '\n';
  }
}

void write_set(std::ostream& out, const char* tag, std::span<const Vertex> s) {
  out << tag;
  for (Vertex v : s) out << ' ' << v;
  out << '\n';
}

int solve(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto inst = load_instance(path);
  switch (inst.kind()) {
    case InstanceKind::Interval:
      out << write_certificate(solve_interval(std::get<IntervalFamily>(inst.payload)));
      return kSuccess;
    case InstanceKind::TreeEdges:
      out << write_certificate(solve_tree(std::get<TreeEdgeInstance>(inst.payload)));
      return kSuccess;
    case InstanceKind::Split:
      out << write_split_result(solve_split(std::get<SplitInstance>(inst.payload)));
      return kSuccess;
    default:
      err << "error: no exact solver for kind '" << to_string(inst.kind())
          << "'; use 'oracle' for these instances\n";
      return kInvalidInput;
  }
}

int oracle(const std::string& which, const std::string& path, std::size_t cap,
           std::ostream& out) {
  const auto graph = to_graph(load_instance(path));
  const OracleLimits limits{cap};
  if (which == "gamma") {
    const auto r = brute_gamma(graph, limits);
    out << r.value << '\n';
    write_function(out, r.dominating);
  } else if (which == "rho") {
    const auto r = brute_rho(graph, limits);
    out << r.value << '\n';
    write_set(out, "I", r.dispersed);
  } else if (which == "gammai") {
    const auto r = brute_gamma_i(graph, limits);
    out << r.value << '\n';
    write_set(out, "W", r.witness);
    write_function(out, r.dominating);
  } else {
    const auto r = solve_fractional(graph, limits);
    out << r.gamma_star.str() << '\n';
    for (std::size_t v = 0; v < r.dual.size(); ++v) {
      if (r.dual[v] != 0) out << "dual " << v << ' ' << r.dual[v].str() << '\n';
    }
    for (std::size_t v = 0; v < r.primal.size(); ++v) {
      if (r.primal[v] != 0) out << "primal " << v << ' ' << r.primal[v].str() << '\n';
    }
  }
  return kSuccess;
}

class CheckReport {
 public:
  explicit CheckReport(std::ostream& out) : out_(out) {}

  void expect(const std::string& name, bool ok, const std::string& detail = {}) {
    out_ << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !detail.empty()) out_ << " (" << detail << ')';
    out_ << '\n';
    failed_ = failed_ || !ok;
  }
  void skip(const std::string& name, const std::string& why) {
    out_ << "SKIP " << name << " (" << why << ")\n";
  }
  bool failed() const { return failed_; }

 private:
  std::ostream& out_;
  bool failed_ = false;
};

std::string pair_detail(Weight a, Weight b) {
  return std::to_string(a) + " vs " + std::to_string(b);
}

int check(const std::string& path, std::size_t cap, std::ostream& out) {
  const auto inst = load_instance(path);
  const auto graph = to_graph(inst);
  const OracleLimits limits{cap};
  CheckReport report(out);

  std::optional<Certificate> cert;
  std::optional<SplitResult> split;
  try {
    if (inst.kind() == InstanceKind::Interval) {
      cert = solve_interval(std::get<IntervalFamily>(inst.payload));
    } else if (inst.kind() == InstanceKind::TreeEdges) {
      cert = solve_tree(std::get<TreeEdgeInstance>(inst.payload));
    } else if (inst.kind() == InstanceKind::Split) {
      split = solve_split(std::get<SplitInstance>(inst.payload));
    }
  } catch (const TheoremViolation& e) {
    report.expect("solver", false, e.what());
  }
  if (cert) {
    const auto verdict = verify_certificate(graph, *cert);
    report.expect("certificate", static_cast<bool>(verdict), to_string(verdict.defect));
  }
  if (split) {
    report.expect("split-dominating",
                  is_w_dominating(graph, split->dominating) &&
                      split->dominating.total() == split->value);
  }

  if (graph.size() > cap) {
    report.skip("oracles", std::to_string(graph.size()) + " vertices exceed cap " +
                               std::to_string(cap));
    return report.failed() ? kTheoremViolation : kSuccess;
  }

  const auto gamma = brute_gamma(graph, limits);
  const auto rho = brute_rho(graph, limits);
  const auto gamma_i = brute_gamma_i(graph, limits);
  report.expect("oracle-witnesses", is_w_dominating(graph, gamma.dominating) &&
                                        gamma.dominating.total() == gamma.value &&
                                        is_dispersed(graph, rho.dispersed) &&
                                        weight_sum(graph, rho.dispersed) == rho.value);
  report.expect("sandwich", rho.value <= gamma_i.value && gamma_i.value <= gamma.value,
                std::to_string(rho.value) + " <= " + std::to_string(gamma_i.value) + " <= " +
                    std::to_string(gamma.value));
  try {
    const auto frac = solve_fractional(graph, limits);
    report.expect("lp-duality", frac.gamma_star == frac.rho_star);
    report.expect("lp-relaxation",
                  frac.gamma_star <= Rational(gamma.value) && frac.rho_star >= Rational(rho.value));
  } catch (const LPInternalError& e) {
    report.expect("lp-duality", false, e.what());
  }

  if (cert) {
    report.expect("solver=gamma", cert->value == gamma.value, pair_detail(cert->value, gamma.value));
    report.expect("solver=rho", cert->value == rho.value, pair_detail(cert->value, rho.value));
  }
  if (split) {
    report.expect("solver=gamma", split->value == gamma.value, pair_detail(split->value, gamma.value));
    report.expect("solver=gammai", split->value == gamma_i.value,
                  pair_detail(split->value, gamma_i.value));
    const auto witness = min_cost_to_dominate(graph, split->witness_independent, limits);
    report.expect("split-witness", witness.value == split->witness_cost &&
                                       is_independent(graph, split->witness_independent),
                  pair_detail(witness.value, split->witness_cost));
  }
  if (inst.kind() == InstanceKind::SubtreeIntersection) {
    const auto& w = graph.weights();
    if (std::all_of(w.begin(), w.end(), [](Weight x) { return x == 1; })) {
      report.expect("chordal-unit", gamma_i.value == gamma.value,
                    pair_detail(gamma_i.value, gamma.value));
    }
  }
  return report.failed() ? kTheoremViolation : kSuccess;
}

int example(const std::string& name, std::ostream& out) {
  InstanceFile inst;
  if (name == "forked-star") {
    inst.payload = example_forked_star();
  } else if (name == "split-triangle") {
    inst.payload = example_split_triangle();
  } else if (name == "non-tu-intervals") {
    inst.payload = example_nontu_intervals();
  } else if (name == "non-tu-star") {
    inst.payload = example_nontu_star();
  } else {
    inst.payload = example_three_intervals();
  }
  out << write_instance(inst);
  return kSuccess;
}

struct GenOptions {
  std::string kind;
  std::uint64_t seed = 0;
  std::size_t n = 8;
  std::int64_t max_coord = 12;
  Weight max_w = 5;
  std::size_t edges = 9;
  std::size_t n_a = 4;
  std::size_t n_b = 5;
  int edge_prob = 50;
  std::size_t tree_n = 8;
  std::size_t subtrees = 9;
};

int generate(const GenOptions& o, std::ostream& out) {
  InstanceFile inst;
  if (o.kind == "interval") {
    inst.payload = gen_interval(o.seed, o.n, o.max_coord, o.max_w);
  } else if (o.kind == "tree-edges") {
    inst.payload = gen_tree(o.seed, o.edges, o.max_w);
  } else if (o.kind == "split") {
    inst.payload = gen_split(o.seed, o.n_a, o.n_b, o.edge_prob, o.max_w);
  } else {
    inst.payload = gen_subtrees(o.seed, o.tree_n, o.subtrees, o.max_w);
  }
  out << write_instance(inst);
  return kSuccess;
}

int verify(const std::string& instance_path, const std::string& cert_path, std::ostream& out) {
  const auto graph = to_graph(load_instance(instance_path));
  const auto cert = parse_certificate(read_file(cert_path), graph.size());
  const auto verdict = verify_certificate(graph, cert);
  if (verdict) {
    out << "valid value " << cert.value << '\n';
    return kSuccess;
  }
  out << "invalid " << to_string(verdict.defect) << '\n';
  return kInvalidInput;
}

int matrix(const std::string& path, const std::string& order_name, bool want_det, bool want_c1p,
           std::ostream& out) {
  const auto inst = load_instance(path);
  const auto graph = to_graph(inst);
  NeighborhoodMatrix m;
  if (order_name == "id") {
    m = neighborhood_matrix(graph);
  } else if (inst.kind() != InstanceKind::Interval) {
    throw InvalidInput("--order " + order_name + " needs an interval instance");
  } else if (order_name == "right") {
    m = neighborhood_matrix(graph, order_by_right_endpoint(std::get<IntervalFamily>(inst.payload)));
  } else {
    m = neighborhood_matrix(
        graph, order_by_left_endpoint_descending(std::get<IntervalFamily>(inst.payload)));
  }
  out << "order";
  for (Vertex v : m.order) out << ' ' << v;
  out << '\n';
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.entries.cols(); ++j) {
      out << (j ? " " : "") << m.entries(i, j);
    }
    out << '\n';
  }
  if (want_det) out << "det " << det(m) << '\n';
  if (want_c1p) out << "c1p " << (has_consecutive_ones(m) ? "true" : "false") << '\n';
  return kSuccess;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact weighted domination and dispersion on interval, tree-edge and split graphs",
               "domw"};
  app.require_subcommand(1);

  std::string file, second, which, name, order_name = "id";
  std::size_t cap = 16;
  bool want_det = false, want_c1p = false;
  GenOptions gen;

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and print its certificate");
  solve_cmd->add_option("file", file, "Instance file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Run an exhaustive or LP oracle");
  oracle_cmd->add_option("which", which, "gamma | rho | gammai | frac")
      ->required()
      ->check(CLI::IsMember({"gamma", "rho", "gammai", "frac"}));
  oracle_cmd->add_option("file", file, "Instance file")->required();
  oracle_cmd->add_option("--cap", cap, "Largest vertex count the oracles accept");

  auto* check_cmd = app.add_subcommand("check", "Cross-check the solver against every oracle");
  check_cmd->add_option("file", file, "Instance file")->required();
  check_cmd->add_option("--cap", cap, "Largest vertex count the oracles accept");

  auto* example_cmd = app.add_subcommand("example", "Print a fixed instance");
  example_cmd->add_option("name", name)
      ->required()
      ->check(CLI::IsMember(
          {"forked-star", "split-triangle", "non-tu-intervals", "non-tu-star", "three-intervals"}));

  auto* gen_cmd = app.add_subcommand("gen", "Print a seeded random instance");
  gen_cmd->add_option("kind", gen.kind)
      ->required()
      ->check(CLI::IsMember({"interval", "tree-edges", "split", "subtree-intersection"}));
  gen_cmd->add_option("--seed", gen.seed)->required();
  gen_cmd->add_option("--n", gen.n, "interval: number of intervals");
  gen_cmd->add_option("--max-coord", gen.max_coord, "interval: largest coordinate");
  gen_cmd->add_option("--max-w", gen.max_w, "largest weight");
  gen_cmd->add_option("--edges", gen.edges, "tree-edges: number of host edges");
  gen_cmd->add_option("--na", gen.n_a, "split: clique size");
  gen_cmd->add_option("--nb", gen.n_b, "split: independent side size");
  gen_cmd->add_option("--p", gen.edge_prob, "split: edge probability in percent");
  gen_cmd->add_option("--tree-n", gen.tree_n, "subtree-intersection: host tree size");
  gen_cmd->add_option("--subtrees", gen.subtrees, "subtree-intersection: number of subtrees");

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against an instance");
  verify_cmd->add_option("instance", file)->required();
  verify_cmd->add_option("certificate", second)->required();

  auto* matrix_cmd = app.add_subcommand("matrix", "Print the closed-neighborhood matrix");
  matrix_cmd->add_option("file", file)->required();
  matrix_cmd->add_option("--order", order_name, "id | right | left (intervals only)")
      ->check(CLI::IsMember({"id", "right", "left"}));
  matrix_cmd->add_flag("--det", want_det, "Print the exact determinant");
  matrix_cmd->add_flag("--c1p", want_c1p, "Report the consecutive-ones property");

  std::vector<std::string> storage{"domw"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (solve_cmd->parsed()) return solve(file, out, err);
    if (oracle_cmd->parsed()) return oracle(which, file, cap, out);
    if (check_cmd->parsed()) return check(file, cap, out);
    if (example_cmd->parsed()) return example(name, out);
    if (gen_cmd->parsed()) return generate(gen, out);
    if (verify_cmd->parsed()) return verify(file, second, out);
    if (matrix_cmd->parsed()) return matrix(file, order_name, want_det, want_c1p, out);
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kTooLarge;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const TheoremViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kTheoremViolation;
  } catch (const LPInternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kTheoremViolation;
  }
  return kInvalidInput;
}

}  // namespace domw::cli
