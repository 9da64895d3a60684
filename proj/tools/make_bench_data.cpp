// Regenerates the bundled benchmark ladder under data/ : four deterministic
// preferential-attachment graphs whose node/edge counts mirror classic
// alignment benchmarks of increasing size.

#include <fstream>
#include <iostream>

#include "spectre/datagen.hpp"
#include "spectre/graph_io.hpp"

int main(int argc, char** argv) {
  const std::string out_dir = argc > 1 ? argv[1] : "data";

  struct Spec {
    const char* name;
    spectre::NodeId nodes;
    std::size_t edges;
    std::uint64_t seed;
  };
  const Spec specs[] = {
      {"adjnoun_like", 112, 425, 11},
      {"usair_like", 332, 2126, 12},
      {"yeast_like", 2284, 6646, 13},
      {"polblogs_like", 1224, 19087, 14},
  };

  for (const auto& s : specs) {
    spectre::Rng rng(s.seed);
    spectre::Graph g = spectre::preferential_attachment(s.nodes, s.edges, rng);
    g.check_invariants();

    spectre::NodeLabelMap labels;
    for (spectre::NodeId i = 0; i < g.node_count(); ++i)
      labels.add_or_get(std::to_string(i));

    const std::string path = out_dir + "/" + s.name + ".edges";
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    out << "# " << s.name << ": synthetic preferential-attachment benchmark ("
        << g.node_count() << " nodes, " << g.edge_count() << " edges, seed "
        << s.seed << ")\n";
    spectre::write_edge_list(out, g, labels);
    std::cout << path << ": " << g.node_count() << " nodes, " << g.edge_count()
              << " edges, connected=" << (g.connected() ? "yes" : "no") << "\n";
  }
  return 0;
}
