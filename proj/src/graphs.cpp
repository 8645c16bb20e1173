#include "zsum/graphs.hpp"

#include <istream>
#include <sstream>

namespace zsum {

void Multigraph::add_edge(int u, int v, long multiplicity) {
    if (u == v)
        throw InvalidInput("multigraph: self-loops are not allowed");
    if (u < 1 || u > n || v < 1 || v > n)
        throw InvalidInput("multigraph: vertex index out of range");
    if (multiplicity < 1)
        throw InvalidInput("multigraph: multiplicity must be >= 1");
    if (u > v)
        std::swap(u, v);
    edges[{u, v}] += multiplicity;
}

long Multigraph::multiplicity(int u, int v) const {
    if (u > v)
        std::swap(u, v);
    auto it = edges.find({u, v});
    return it == edges.end() ? 0 : it->second;
}

long Multigraph::edge_occurrences() const {
    long total = 0;
    for (const auto& [e, mult] : edges)
        total += mult;
    return total;
}

Multigraph Multigraph::parse(std::istream& in) {
    Multigraph g;
    if (!(in >> g.n) || g.n < 0)
        throw ParseError("multigraph: expected vertex count on first line");
    int u, v;
    long mult;
    while (in >> u) {
        if (!(in >> v >> mult))
            throw ParseError("multigraph: expected 'u v mult' edge line");
        g.add_edge(u, v, mult);
    }
    return g;
}

std::string Multigraph::to_text() const {
    std::ostringstream os;
    os << n << "\n";
    for (const auto& [e, mult] : edges)
        os << e.first << " " << e.second << " " << mult << "\n";
    return os.str();
}

void Hypergraph::add_edge(std::vector<int> edge) {
    if (static_cast<int>(edge.size()) != r)
        throw InvalidInput("hypergraph: edge arity mismatch");
    for (int v : edge)
        if (v < 1 || v > n)
            throw InvalidInput("hypergraph: vertex index out of range");
    edges.push_back(std::move(edge));
}

Hypergraph Hypergraph::parse(std::istream& in) {
    Hypergraph g;
    if (!(in >> g.r >> g.n) || g.r < 1 || g.n < 0)
        throw ParseError("hypergraph: expected 'r n' on first line");
    int v;
    while (in >> v) {
        std::vector<int> edge;
        edge.push_back(v);
        for (int k = 1; k < g.r; ++k) {
            if (!(in >> v))
                throw ParseError("hypergraph: truncated edge line");
            edge.push_back(v);
        }
        g.add_edge(std::move(edge));
    }
    return g;
}

std::string Hypergraph::to_text() const {
    std::ostringstream os;
    os << r << " " << n << "\n";
    for (const auto& e : edges) {
        for (std::size_t k = 0; k < e.size(); ++k)
            os << (k ? " " : "") << e[k];
        os << "\n";
    }
    return os.str();
}

} // namespace zsum
