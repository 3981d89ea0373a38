#include "domw/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "domw/errors.hpp"

namespace domw {

namespace {

struct Record {
  std::size_t line = 0;
  std::vector<std::string_view> tokens;
};

class Records {
 public:
  explicit Records(std::string_view text) {
    std::size_t line = 0;
    while (!text.empty()) {
      ++line;
      auto end = text.find('\n');
      auto raw = text.substr(0, end);
      text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
      last_line_ = line;
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      Record r{line, {}};
      std::size_t i = 0;
      while (i < raw.size()) {
        while (i < raw.size() && is_space(raw[i])) ++i;
        std::size_t j = i;
        while (j < raw.size() && !is_space(raw[j])) ++j;
        if (j > i) r.tokens.push_back(raw.substr(i, j - i));
        i = j;
      }
      if (!r.tokens.empty()) records_.push_back(std::move(r));
    }
  }

  const Record& next(const char* expecting) {
    if (pos_ == records_.size()) {
      throw SyntaxError(last_line_ + 1, std::string("unexpected end of input, expected ") + expecting);
    }
    return records_[pos_++];
  }

  const Record* peek() const { return pos_ < records_.size() ? &records_[pos_] : nullptr; }

  void expect_end() const {
    if (pos_ < records_.size()) {
      throw SyntaxError(records_[pos_].line, "unexpected trailing record");
    }
  }

 private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

  std::vector<Record> records_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 0;
};

void expect_arity(const Record& r, std::size_t n, const char* what) {
  if (r.tokens.size() != n) {
    throw SyntaxError(r.line, std::string("expected ") + std::to_string(n) + " fields for " + what +
                                  ", got " + std::to_string(r.tokens.size()));
  }
}

std::int64_t integer(const Record& r, std::size_t index, const char* what) {
  const auto tok = r.tokens.at(index);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw SyntaxError(r.line, std::string("expected integer ") + what + ", got '" +
                                  std::string(tok) + "'");
  }
  return value;
}

std::size_t count(const Record& r, std::size_t index, const char* what) {
  const auto v = integer(r, index, what);
  if (v < 0) throw SyntaxError(r.line, std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

std::size_t single_count(Records& in, const char* what) {
  const auto& r = in.next(what);
  expect_arity(r, 1, what);
  return count(r, 0, what);
}

void expect_id(const Record& r, std::size_t expected) {
  if (count(r, 0, "id") != expected) {
    throw SyntaxError(r.line, "expected id " + std::to_string(expected));
  }
}

void header(Records& in, std::string_view magic) {
  const auto& r = in.next("header");
  if (r.tokens.size() != 2 || r.tokens[0] != magic || r.tokens[1] != "1") {
    throw SyntaxError(r.line, "expected header '" + std::string(magic) + " 1'");
  }
}

std::vector<Edge> edge_list(Records& in) {
  const auto m = single_count(in, "edge count");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& r = in.next("edge");
    expect_arity(r, 2, "edge");
    edges.emplace_back(count(r, 0, "u"), count(r, 1, "v"));
  }
  return edges;
}

// Host-tree records "u v in_F [w]". Returns the weights of F-edges.
std::pair<HostTree, std::vector<std::optional<Weight>>> tree_records(Records& in,
                                                                     bool host_only) {
  const auto& nr = in.next("vertex count");
  expect_arity(nr, 1, "vertex count");
  const auto nv = count(nr, 0, "vertex count");
  if (nv == 0) throw SyntaxError(nr.line, "tree needs at least one vertex");
  std::vector<Edge> edges;
  std::vector<std::optional<Weight>> weights;
  for (std::size_t i = 0; i + 1 < nv; ++i) {
    const auto& r = in.next("tree edge");
    if (r.tokens.size() < 3) expect_arity(r, 4, "tree edge");
    const auto in_f = integer(r, 2, "in_F");
    if (in_f == 0) {
      expect_arity(r, 3, "tree edge outside F");
      if (host_only) throw SyntaxError(r.line, "host tree edges must be written '1 0'");
      weights.push_back(std::nullopt);
    } else if (in_f == 1) {
      expect_arity(r, 4, "tree edge in F");
      const auto w = integer(r, 3, "weight");
      if (host_only && w != 0) throw SyntaxError(r.line, "host tree edges must be written '1 0'");
      weights.push_back(w);
    } else {
      throw SyntaxError(r.line, "in_F must be 0 or 1");
    }
    edges.emplace_back(count(r, 0, "u"), count(r, 1, "v"));
  }
  return {HostTree(nv, std::move(edges)), std::move(weights)};
}

InstancePayload parse_payload(Records& in, std::string_view kind, std::size_t kind_line) {
  if (kind == "interval") {
    const auto n = single_count(in, "interval count");
    std::vector<Interval> intervals;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& r = in.next("interval");
      expect_arity(r, 4, "interval");
      expect_id(r, i);
      intervals.push_back({integer(r, 1, "x"), integer(r, 2, "y"), integer(r, 3, "w")});
    }
    return IntervalFamily(std::move(intervals));
  }
  if (kind == "tree-edges") {
    auto [tree, weights] = tree_records(in, false);
    return TreeEdgeInstance{std::move(tree), std::move(weights)};
  }
  if (kind == "split") {
    const auto nv = single_count(in, "vertex count");
    std::vector<Weight> weights;
    VertexSet clique, independent;
    for (std::size_t i = 0; i < nv; ++i) {
      const auto& r = in.next("vertex");
      expect_arity(r, 3, "split vertex");
      expect_id(r, i);
      if (r.tokens[1] == "A") {
        clique.push_back(i);
      } else if (r.tokens[1] == "B") {
        independent.push_back(i);
      } else {
        throw SyntaxError(r.line, "side must be A or B");
      }
      weights.push_back(integer(r, 2, "w"));
    }
    const auto edges = edge_list(in);
    return validate_split(WeightedGraph(std::move(weights), edges), std::move(clique),
                          std::move(independent));
  }
  if (kind == "subtree-intersection") {
    auto host = tree_records(in, true).first;
    const auto k = single_count(in, "subtree count");
    SubtreeInstance out{std::move(host), {}, {}};
    for (std::size_t i = 0; i < k; ++i) {
      const auto& r = in.next("subtree");
      if (r.tokens.size() < 2) expect_arity(r, 2, "subtree");
      const auto size = count(r, 1, "size");
      expect_arity(r, 2 + size, "subtree");
      std::vector<Vertex> members;
      for (std::size_t j = 0; j < size; ++j) members.push_back(count(r, 2 + j, "vertex"));
      out.weights.push_back(integer(r, 0, "w"));
      out.subtrees.push_back(std::move(members));
    }
    to_graph(out);  // throws on malformed subtrees
    return out;
  }
  if (kind == "explicit") {
    const auto nv = single_count(in, "vertex count");
    std::vector<Weight> weights;
    for (std::size_t i = 0; i < nv; ++i) {
      const auto& r = in.next("vertex");
      expect_arity(r, 2, "vertex");
      expect_id(r, i);
      weights.push_back(integer(r, 1, "w"));
    }
    const auto edges = edge_list(in);
    return WeightedGraph(std::move(weights), edges);
  }
  throw SyntaxError(kind_line, "unknown kind '" + std::string(kind) + "'");
}

void write_tree_records(std::ostringstream& out, const HostTree& tree,
                        const std::vector<std::optional<Weight>>& weights, bool host_only) {
  out << tree.size() << '\n';
  for (std::size_t i = 0; i < tree.edges().size(); ++i) {
    const auto [u, v] = tree.edges()[i];
    out << u << ' ' << v;
    if (host_only) {
      out << " 1 0\n";
    } else if (weights[i]) {
      out << " 1 " << *weights[i] << '\n';
    } else {
      out << " 0\n";
    }
  }
}

void write_edges(std::ostringstream& out, const WeightedGraph& g) {
  const auto edges = g.edges();
  out << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

void write_function(std::ostringstream& out, const DominationFunction& f) {
  for (Vertex v = 0; v < f.domain_size(); ++v) {
    if (f[v] != 0) out << "f " << v << ' ' << f[v] << '\n';
  }
}

void write_set(std::ostringstream& out, const char* tag, std::span<const Vertex> s) {
  out << tag;
  for (Vertex v : s) out << ' ' << v;
  out << '\n';
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  Records in(text);
  header(in, "domw");
  const auto& kr = in.next("kind");
  if (kr.tokens.size() != 2 || kr.tokens[0] != "kind") {
    throw SyntaxError(kr.line, "expected 'kind <name>'");
  }
  InstanceFile out;
  try {
    out.payload = parse_payload(in, kr.tokens[1], kr.line);
  } catch (const SyntaxError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw SemanticError(e.what());
  }
  in.expect_end();
  return out;
}

std::string write_instance(const InstanceFile& inst) {
  std::ostringstream out;
  out << "domw 1\nkind " << to_string(inst.kind()) << '\n';
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, IntervalFamily>) {
          out << x.size() << '\n';
          for (Vertex i = 0; i < x.size(); ++i) {
            out << i << ' ' << x[i].left << ' ' << x[i].right << ' ' << x[i].weight << '\n';
          }
        } else if constexpr (std::is_same_v<T, TreeEdgeInstance>) {
          write_tree_records(out, x.tree, x.edge_weights, false);
        } else if constexpr (std::is_same_v<T, SplitInstance>) {
          out << x.graph.size() << '\n';
          for (Vertex v = 0; v < x.graph.size(); ++v) {
            const bool a = std::binary_search(x.clique.begin(), x.clique.end(), v);
            out << v << ' ' << (a ? 'A' : 'B') << ' ' << x.graph.weight(v) << '\n';
          }
          write_edges(out, x.graph);
        } else if constexpr (std::is_same_v<T, SubtreeInstance>) {
          write_tree_records(out, x.host, {}, true);
          out << x.subtrees.size() << '\n';
          for (std::size_t i = 0; i < x.subtrees.size(); ++i) {
            out << x.weights[i] << ' ' << x.subtrees[i].size();
            for (Vertex v : x.subtrees[i]) out << ' ' << v;
            out << '\n';
          }
        } else {
          out << x.size() << '\n';
          for (Vertex v = 0; v < x.size(); ++v) out << v << ' ' << x.weight(v) << '\n';
          write_edges(out, x);
        }
      },
      inst.payload);
  return out.str();
}

std::string write_certificate(const Certificate& cert) {
  std::ostringstream out;
  out << "domw-cert 1\n";
  write_function(out, cert.dominating);
  write_set(out, "I", cert.dispersed);
  out << "value " << cert.value << '\n';
  return out.str();
}

Certificate parse_certificate(std::string_view text, std::size_t vertex_count) {
  Records in(text);
  header(in, "domw-cert");
  Certificate cert{DominationFunction(vertex_count), {}, 0};
  std::vector<char> seen(vertex_count, 0);
  auto vertex = [&](const Record& r, std::size_t index) {
    const auto v = count(r, index, "vertex id");
    if (v >= vertex_count) {
      throw SemanticError("line " + std::to_string(r.line) + ": vertex " + std::to_string(v) +
                          " out of range");
    }
    return v;
  };
  while (in.peek() && in.peek()->tokens[0] == "f") {
    const auto& r = in.next("f record");
    expect_arity(r, 3, "f record");
    const auto v = vertex(r, 1);
    const auto value = integer(r, 2, "value");
    if (value < 0) throw SyntaxError(r.line, "values must be nonnegative");
    if (seen[v]) throw SemanticError("line " + std::to_string(r.line) + ": repeated vertex");
    seen[v] = 1;
    cert.dominating.set(v, value);
  }
  const auto& ir = in.next("I record");
  if (ir.tokens[0] != "I") throw SyntaxError(ir.line, "expected 'I' record");
  for (std::size_t i = 1; i < ir.tokens.size(); ++i) cert.dispersed.push_back(vertex(ir, i));
  const auto listed = cert.dispersed.size();
  cert.dispersed = make_vertex_set(std::move(cert.dispersed));
  if (cert.dispersed.size() != listed) throw SemanticError("repeated vertex in I record");
  const auto& vr = in.next("value record");
  if (vr.tokens[0] != "value") throw SyntaxError(vr.line, "expected 'value' record");
  expect_arity(vr, 2, "value record");
  cert.value = integer(vr, 1, "value");
  in.expect_end();
  return cert;
}

std::string write_split_result(const SplitResult& result) {
  std::ostringstream out;
  out << "domw-split 1\n";
  write_function(out, result.dominating);
  write_set(out, "W", result.witness_independent);
  out << "value " << result.value << '\n';
  return out.str();
}

}  // namespace domw
