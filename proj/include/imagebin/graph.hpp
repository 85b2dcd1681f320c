#pragma once

#include <cstddef>
#include <vector>

namespace imagebin {

/// Adjacency lists; node ids are 0..size()-1.
using Graph = std::vector<std::vector<std::size_t>>;

struct SccDecomposition {
    /// component[v] is the SCC id of node v.
    std::vector<std::size_t> component;
    /// Members of each SCC. Ids are in reverse topological order: every edge
    /// leaving an SCC goes to an SCC with a smaller id.
    std::vector<std::vector<std::size_t>> members;

    std::size_t count() const { return members.size(); }
};

/// Tarjan's algorithm, iterative so deep graphs do not exhaust the stack.
SccDecomposition strongly_connected_components(const Graph& g);

/// True if the SCC has a cycle: more than one node, or a self-loop.
bool is_nontrivial(const Graph& g, const SccDecomposition& scc, std::size_t c);

std::vector<bool> reachable_from(const Graph& g, const std::vector<std::size_t>& sources);
Graph reversed(const Graph& g);

}  // namespace imagebin
