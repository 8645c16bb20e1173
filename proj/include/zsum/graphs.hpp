#ifndef ZSUM_GRAPHS_HPP
#define ZSUM_GRAPHS_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zsum/errors.hpp"

namespace zsum {

// Undirected multigraph on vertices 1..n, no self-loops.
struct Multigraph {
    int n = 0;
    std::map<std::pair<int, int>, long> edges; // key (u, v) with u < v -> multiplicity >= 1

    void add_edge(int u, int v, long multiplicity = 1);
    long multiplicity(int u, int v) const;
    long edge_occurrences() const; // sum of multiplicities

    // Format: first line "n", then one line "u v mult" per edge.
    static Multigraph parse(std::istream& in);
    std::string to_text() const;
};

// r-uniform hypergraph with ordered edges (entries may repeat), vertices 1..n.
struct Hypergraph {
    int r = 0;
    int n = 0;
    std::vector<std::vector<int>> edges;

    void add_edge(std::vector<int> edge);

    // Format: first line "r n", then one line of r vertex indices per edge.
    static Hypergraph parse(std::istream& in);
    std::string to_text() const;
};

} // namespace zsum

#endif
