#include "spectre/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace spectre {

namespace {

bool skip_line(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '#' || c == '%';
  }
  return true;  // blank
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

// Shared walk over `<label><ws><label>` lines.
template <typename F>
void parse_pair_lines(std::istream& in, F&& on_pair) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    auto tok = tokens(line);
    if (tok.size() != 2)
      throw ParseError("expected two whitespace-separated labels, got " +
                           std::to_string(tok.size()),
                       line_no);
    on_pair(tok[0], tok[1], line_no);
  }
}

}  // namespace

ParsedGraph parse_edge_list(std::istream& in) {
  ParsedGraph out;
  std::vector<std::pair<NodeId, NodeId>> edges;
  parse_pair_lines(in, [&](const std::string& a, const std::string& b, std::size_t) {
    const NodeId ia = out.labels.add_or_get(a);
    const NodeId ib = out.labels.add_or_get(b);
    if (ia == ib) {
      ++out.dropped_self_loops;
      return;
    }
    edges.emplace_back(ia, ib);
  });
  out.graph = Graph::from_edges(out.labels.size(), edges);
  return out;
}

ParsedGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

ParsedGraph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list: " + path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const NodeLabelMap& labels) {
  g.for_each_edge([&](NodeId i, NodeId j) {
    out << labels.label_of(i) << ' ' << labels.label_of(j) << '\n';
  });
}

std::vector<std::string> parse_node_set(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    auto tok = tokens(line);
    if (tok.size() != 1)
      throw ParseError("expected one label, got " + std::to_string(tok.size()), line_no);
    out.push_back(tok[0]);
  }
  return out;
}

void write_matching_tsv(std::ostream& out, const Matching& m,
                        const NodeLabelMap& left, const NodeLabelMap& right) {
  std::vector<std::pair<NodeId, NodeId>> sorted(m.pairs().begin(), m.pairs().end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [i, j] : sorted)
    out << left.label_of(i) << '\t' << right.label_of(j) << '\n';
}

Matching read_matching_tsv(std::istream& in, NodeId left_count, NodeId right_count,
                           const NodeLabelMap& left, const NodeLabelMap& right) {
  Matching m(left_count, right_count);
  parse_pair_lines(in, [&](const std::string& a, const std::string& b, std::size_t line_no) {
    const auto ia = left.id_of(a);
    const auto ib = right.id_of(b);
    if (!ia) throw ParseError("unknown G1 label '" + a + "' in matching", line_no);
    if (!ib) throw ParseError("unknown G2 label '" + b + "' in matching", line_no);
    if (!m.try_add(*ia, *ib))
      throw ParseError("matching is not injective at '" + a + "'\t'" + b + "'", line_no);
  });
  return m;
}

void write_ground_truth_tsv(std::ostream& out, const GroundTruth& gt,
                            const NodeLabelMap& left, const NodeLabelMap& right) {
  std::vector<std::pair<NodeId, NodeId>> sorted(gt.pairs().begin(), gt.pairs().end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [i, j] : sorted)
    out << left.label_of(i) << '\t' << right.label_of(j) << '\n';
}

GroundTruth read_ground_truth_tsv(std::istream& in, NodeId left_count,
                                  NodeId right_count, const NodeLabelMap& left,
                                  const NodeLabelMap& right, std::size_t* skipped) {
  GroundTruth gt(left_count, right_count);
  std::size_t miss = 0;
  parse_pair_lines(in, [&](const std::string& a, const std::string& b, std::size_t line_no) {
    const auto ia = left.id_of(a);
    const auto ib = right.id_of(b);
    if (!ia || !ib) {
      ++miss;
      return;
    }
    try {
      gt.add(*ia, *ib);
    } catch (const InvalidParam&) {
      throw ParseError("ground truth is not injective at '" + a + "'\t'" + b + "'", line_no);
    }
  });
  if (skipped) *skipped = miss;
  return gt;
}

}  // namespace spectre
