#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spectre/graph.hpp"
#include "spectre/matching.hpp"
#include "spectre/metrics.hpp"

namespace spectre {

struct ParsedGraph {
  Graph graph;
  NodeLabelMap labels;
  std::size_t dropped_self_loops = 0;
};

// Edge-list text: one edge per line as `<label><ws><label>`; lines starting
// with '#' or '%' and blank lines are ignored. Labels map to dense ids in
// first-seen order. Self-loop lines are dropped (counted), duplicate edges
// collapse. Throws ParseError on a line without exactly two tokens.
ParsedGraph parse_edge_list(std::istream& in);
ParsedGraph parse_edge_list(const std::string& text);
ParsedGraph load_edge_list(const std::string& path);

// Edges ascending by internal ids, `label label` per line. Parsing the output
// reproduces an identical graph and label map.
void write_edge_list(std::ostream& out, const Graph& g, const NodeLabelMap& labels);

// Node-set file: one label per line, same comment rules.
std::vector<std::string> parse_node_set(std::istream& in);

// Matching TSV: `<label_G1>\t<label_G2>` per pair, sorted by G1 id on output.
// Reading validates labels and injectivity (Error on violation).
void write_matching_tsv(std::ostream& out, const Matching& m,
                        const NodeLabelMap& left, const NodeLabelMap& right);
Matching read_matching_tsv(std::istream& in, NodeId left_count, NodeId right_count,
                           const NodeLabelMap& left, const NodeLabelMap& right);

// Ground-truth TSV, same shape. Unknown labels are skipped (counted via
// `skipped` when given) so a full ground truth can be applied to graphs that
// were reduced to their largest connected components.
void write_ground_truth_tsv(std::ostream& out, const GroundTruth& gt,
                            const NodeLabelMap& left, const NodeLabelMap& right);
GroundTruth read_ground_truth_tsv(std::istream& in, NodeId left_count,
                                  NodeId right_count, const NodeLabelMap& left,
                                  const NodeLabelMap& right,
                                  std::size_t* skipped = nullptr);

}  // namespace spectre
