#include "strongmatch/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace strongmatch {

namespace {

// Non-comment, non-blank lines, each split on whitespace.
std::vector<std::vector<std::string_view>> data_lines(std::string_view text) {
  std::vector<std::vector<std::string_view>> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!tokens.empty()) out.push_back(std::move(tokens));
    if (end == text.size()) break;
  }
  return out;
}

template <class T>
T parse_number(std::string_view tok, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(tok) + "'");
  }
  return value;
}

Edge parse_dash_edge(std::string_view tok) {
  const std::size_t dash = tok.find('-');
  if (dash == std::string_view::npos) {
    throw ParseError("expected <u>-<v>, got '" + std::string(tok) + "'");
  }
  const auto u = parse_number<VertexId>(tok.substr(0, dash), "vertex id");
  const auto v = parse_number<VertexId>(tok.substr(dash + 1), "vertex id");
  return make_edge(u, v);
}

std::vector<std::string_view> split_commas(std::string_view tok) {
  std::vector<std::string_view> out;
  if (tok == "-") return out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t c = tok.find(',', pos);
    out.push_back(tok.substr(pos, c == std::string_view::npos ? c : c - pos));
    if (c == std::string_view::npos) break;
    pos = c + 1;
  }
  return out;
}

std::vector<Edge> parse_edge_list(std::string_view tok) {
  std::vector<Edge> out;
  for (auto part : split_commas(tok)) out.push_back(parse_dash_edge(part));
  return out;
}

std::string edge_list_text(const std::vector<Edge>& edges) {
  if (edges.empty()) return "-";
  std::string s;
  for (const Edge& e : edges) {
    if (!s.empty()) s += ',';
    s += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return s;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = data_lines(text);
  if (lines.empty()) throw ParseError("missing header line '<n> <m>'");
  if (lines[0].size() != 2) throw ParseError("header must be '<n> <m>'");
  const auto n = parse_number<std::size_t>(lines[0][0], "vertex count");
  const auto m = parse_number<std::size_t>(lines[0][1], "edge count");
  if (lines.size() - 1 != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    if (lines[k].size() != 2) {
      throw ParseError("edge line " + std::to_string(k) + " must be '<u> <v>'");
    }
    edges.push_back({parse_number<VertexId>(lines[k][0], "vertex id"),
                     parse_number<VertexId>(lines[k][1], "vertex id")});
  }
  try {
    return Graph::from_edges(n, edges);
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

std::string format_graph(const Graph& g) {
  const auto edges = g.edges();
  std::string s = std::to_string(g.id_bound()) + " " + std::to_string(edges.size()) + "\n";
  for (const Edge& e : edges) s += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return s;
}

Matching parse_matching(std::string_view text) {
  std::vector<Edge> edges;
  for (const auto& line : data_lines(text)) {
    if (line.size() != 2) throw ParseError("matching lines must be '<u> <v>'");
    edges.push_back(make_edge(parse_number<VertexId>(line[0], "vertex id"),
                              parse_number<VertexId>(line[1], "vertex id")));
  }
  return make_matching(std::move(edges));
}

std::string format_matching(const Matching& m) {
  std::string s;
  for (const Edge& e : m.edges) s += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return s;
}

std::string format_certificate(const SolveResult& r) {
  std::string s;
  std::size_t k = 0;
  for (const auto& step : r.certificate.steps) {
    s += "step " + std::to_string(++k) + " rule " + std::string(rule_name(step.rule)) +
         " match " + edge_list_text(step.matched) + " remove ";
    if (step.removed.empty()) s += "-";
    for (std::size_t i = 0; i < step.removed.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(step.removed[i]);
    }
    s += '\n';
  }
  s += "matching " + edge_list_text(r.matching.edges) + "\n";
  return s;
}

ParsedCertificate parse_certificate(std::string_view text) {
  ParsedCertificate out;
  bool have_matching = false;
  for (const auto& line : data_lines(text)) {
    if (have_matching) throw ParseError("content after the final 'matching' line");
    if (line[0] == "matching") {
      if (line.size() > 2) throw ParseError("malformed 'matching' line");
      out.matching = make_matching(line.size() == 2 ? parse_edge_list(line[1])
                                                    : std::vector<Edge>{});
      have_matching = true;
      continue;
    }
    if (line.size() != 8 || line[0] != "step" || line[2] != "rule" ||
        line[4] != "match" || line[6] != "remove") {
      throw ParseError("malformed certificate step line");
    }
    const auto k = parse_number<std::size_t>(line[1], "step number");
    if (k != out.certificate.steps.size() + 1) {
      throw ParseError("step numbers must count up from 1");
    }
    ReductionStep step;
    const auto rule = parse_rule(line[3]);
    if (!rule) throw ParseError("unknown rule '" + std::string(line[3]) + "'");
    step.rule = *rule;
    step.matched = parse_edge_list(line[5]);
    std::sort(step.matched.begin(), step.matched.end());
    for (auto id : split_commas(line[7])) {
      step.removed.push_back(parse_number<VertexId>(id, "vertex id"));
    }
    if (!std::is_sorted(step.removed.begin(), step.removed.end())) {
      throw ParseError("removed ids must be sorted");
    }
    out.certificate.steps.push_back(std::move(step));
  }
  if (!have_matching) throw ParseError("certificate lacks the final 'matching' line");
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
  if (!out) throw ParseError("failed writing " + path.string());
}

}  // namespace strongmatch
