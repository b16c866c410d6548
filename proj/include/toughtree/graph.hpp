#ifndef TOUGHTREE_GRAPH_HPP
#define TOUGHTREE_GRAPH_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace toughtree {

/// Undirected simple graph over dense vertex ids 0..n-1.
/// Adjacency lists are kept sorted; optional per-vertex string tags
/// (e.g. "white") live in `labels`.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const {
        int twice = 0;
        for (auto& a : adj_) twice += static_cast<int>(a.size());
        return twice / 2;
    }

    int add_vertex() {
        adj_.emplace_back();
        return num_vertices() - 1;
    }

    void add_edge(int u, int v) {
        assert(u != v && u >= 0 && v >= 0 && u < num_vertices() && v < num_vertices());
        if (has_edge(u, v)) return;
        adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
        adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return false;
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    void set_label(int v, const std::string& tag) { labels_[v] = tag; }
    std::string label(int v) const {
        auto it = labels_.find(v);
        return it == labels_.end() ? std::string() : it->second;
    }
    const std::map<int, std::string>& labels() const { return labels_; }

    std::vector<int> vertices_with_label(const std::string& tag) const {
        std::vector<int> out;
        for (auto& [v, t] : labels_)
            if (t == tag) out.push_back(v);
        return out;
    }

    /// True iff `vs` induces a complete graph.
    bool is_clique(const std::vector<int>& vs) const {
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                if (!has_edge(vs[i], vs[j])) return false;
        return true;
    }

    /// Induced subgraph on `keep`; old id keep[i] becomes i.
    /// Labels move along. `old_to_new` (optional) receives the id map, -1 for dropped.
    Graph induced(const std::vector<int>& keep, std::vector<int>* old_to_new = nullptr) const {
        std::vector<int> map(num_vertices(), -1);
        for (size_t i = 0; i < keep.size(); ++i) map[keep[i]] = static_cast<int>(i);
        Graph h(static_cast<int>(keep.size()));
        for (size_t i = 0; i < keep.size(); ++i) {
            for (int w : adj_[keep[i]])
                if (map[w] > static_cast<int>(i)) h.add_edge(static_cast<int>(i), map[w]);
            auto it = labels_.find(keep[i]);
            if (it != labels_.end()) h.set_label(static_cast<int>(i), it->second);
        }
        if (old_to_new) *old_to_new = std::move(map);
        return h;
    }

    /// Copy with the vertices of `drop` removed (ids compacted).
    Graph removed(const std::vector<int>& drop, std::vector<int>* old_to_new = nullptr) const {
        std::vector<char> gone(num_vertices(), 0);
        for (int v : drop) gone[v] = 1;
        std::vector<int> keep;
        for (int v = 0; v < num_vertices(); ++v)
            if (!gone[v]) keep.push_back(v);
        return induced(keep, old_to_new);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < num_vertices(); ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

    /// Connected components of the graph minus `removed` (flags); returns count.
    int component_count(const std::vector<char>& removed) const {
        int n = num_vertices();
        std::vector<char> seen(n, 0);
        int comps = 0;
        std::vector<int> stack;
        for (int s = 0; s < n; ++s) {
            if (seen[s] || removed[s]) continue;
            ++comps;
            seen[s] = 1;
            stack.push_back(s);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : adj_[v])
                    if (!seen[w] && !removed[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
        }
        return comps;
    }

    int component_count() const { return component_count(std::vector<char>(num_vertices(), 0)); }
    bool is_connected() const { return num_vertices() == 0 || component_count() == 1; }

private:
    std::vector<std::vector<int>> adj_;
    std::map<int, std::string> labels_;
};

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

}  // namespace toughtree

#endif
