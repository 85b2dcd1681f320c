#include "imagebin/graph.hpp"

#include <algorithm>
#include <limits>

namespace imagebin {

SccDecomposition strongly_connected_components(const Graph& g) {
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    const std::size_t n = g.size();
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    SccDecomposition out;
    out.component.assign(n, unvisited);
    std::size_t counter = 0;

    struct Frame {
        std::size_t node;
        std::size_t next_edge;
    };
    std::vector<Frame> call;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& fr = call.back();
            const std::size_t v = fr.node;
            if (fr.next_edge < g[v].size()) {
                std::size_t w = g[v][fr.next_edge++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<std::size_t> members;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    out.component[w] = out.members.size();
                    members.push_back(w);
                } while (w != v);
                std::sort(members.begin(), members.end());
                out.members.push_back(std::move(members));
            }
            call.pop_back();
            if (!call.empty()) {
                std::size_t parent = call.back().node;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return out;
}

bool is_nontrivial(const Graph& g, const SccDecomposition& scc, std::size_t c) {
    const auto& m = scc.members[c];
    if (m.size() > 1) return true;
    const std::size_t v = m.front();
    return std::find(g[v].begin(), g[v].end(), v) != g[v].end();
}

std::vector<bool> reachable_from(const Graph& g, const std::vector<std::size_t>& sources) {
    std::vector<bool> seen(g.size(), false);
    std::vector<std::size_t> work;
    for (std::size_t s : sources)
        if (!seen[s]) {
            seen[s] = true;
            work.push_back(s);
        }
    while (!work.empty()) {
        std::size_t v = work.back();
        work.pop_back();
        for (std::size_t w : g[v])
            if (!seen[w]) {
                seen[w] = true;
                work.push_back(w);
            }
    }
    return seen;
}

Graph reversed(const Graph& g) {
    Graph r(g.size());
    for (std::size_t v = 0; v < g.size(); ++v)
        for (std::size_t w : g[v]) r[w].push_back(v);
    return r;
}

}  // namespace imagebin
