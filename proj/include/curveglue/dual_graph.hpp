#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permutation.hpp"

namespace curveglue {

// Genus-labeled graph with labeled legs: vertices carry nonnegative genera,
// edges are an unordered multiset over vertices (self-loops allowed), and leg
// label ell (1-based) sits at vertex leg_vertex[ell-1] (0-based).
class DualGraph {
public:
    DualGraph(std::vector<int> genus, std::vector<std::pair<int, int>> edges,
              std::vector<int> leg_vertex)
        : genus_(std::move(genus)), edges_(std::move(edges)), legs_(std::move(leg_vertex)) {
        validate();
    }

    int n_vertices() const { return static_cast<int>(genus_.size()); }
    int n_edges() const { return static_cast<int>(edges_.size()); }
    int n_legs() const { return static_cast<int>(legs_.size()); }
    int genus_of(int v) const { return genus_.at(v); }
    int leg_vertex(int label) const { return legs_.at(label - 1); }
    const std::vector<int>& genera() const { return genus_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& legs() const { return legs_; }

    // total genus: sum of vertex genera plus the first Betti number
    int total_genus() const { return std::accumulate(genus_.begin(), genus_.end(), 0) + n_edges() - n_vertices() + 1; }

    bool operator==(const DualGraph& o) const {
        auto norm = [](std::vector<std::pair<int, int>> es) {
            for (auto& [u, v] : es)
                if (u > v) std::swap(u, v);
            std::sort(es.begin(), es.end());
            return es;
        };
        return genus_ == o.genus_ && norm(edges_) == norm(o.edges_) && legs_ == o.legs_;
    }

private:
    void validate() const {
        if (genus_.empty()) throw std::invalid_argument("graph: no vertices");
        for (int g : genus_)
            if (g < 0) throw std::invalid_argument("graph: negative genus");
        for (auto [u, v] : edges_)
            if (u < 0 || v < 0 || u >= n_vertices() || v >= n_vertices())
                throw std::invalid_argument("graph: edge endpoint out of range");
        for (int w : legs_)
            if (w < 0 || w >= n_vertices()) throw std::invalid_argument("graph: leg vertex out of range");
        // connectivity
        std::vector<int> comp(genus_.size(), -1);
        std::vector<int> stack{0};
        comp[0] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [a, b] : edges_) {
                int w = -1;
                if (a == v && comp[b] < 0) w = b;
                if (b == v && comp[a] < 0) w = a;
                if (w >= 0) {
                    comp[w] = 0;
                    stack.push_back(w);
                }
            }
        }
        for (int c : comp)
            if (c < 0) throw std::invalid_argument("graph: not connected");
        // stability at each vertex: legs + edge-ends >= 3 - 2*genus
        for (int v = 0; v < n_vertices(); ++v) {
            int ends = 0;
            for (auto [a, b] : edges_) ends += (a == v) + (b == v);
            for (int w : legs_) ends += (w == v);
            if (ends < 3 - 2 * genus_[v]) throw std::invalid_argument("graph: unstable vertex");
        }
    }

    std::vector<int> genus_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> legs_;
};

struct GradedSignature {
    int g = 0;
    int n = 0;
    bool operator==(const GradedSignature&) const = default;
};

inline GradedSignature signature(const DualGraph& G) { return {G.total_genus(), G.n_legs()}; }

inline bool stable_signature(const GradedSignature& s) {
    return s.g >= 0 && s.n >= 0 && s.n >= 3 - 2 * s.g;
}

// Glue leg i of G1 to leg 1 of G2. Labels close up: G1's {1..i-1} keep, G2's
// {2..n} become {i..i+n-2}, G1's {i+1..m} become {i+n-1..m+n-2}.
inline DualGraph graft(const DualGraph& G1, int i, const DualGraph& G2) {
    const int m = G1.n_legs(), n = G2.n_legs();
    if (m < 1 || n < 1) throw std::invalid_argument("graft: operand without legs");
    if (i < 1 || i > m) throw std::invalid_argument("graft: leg index out of range");
    const int off = G1.n_vertices();
    std::vector<int> genus = G1.genera();
    genus.insert(genus.end(), G2.genera().begin(), G2.genera().end());
    auto edges = G1.edges();
    for (auto [u, v] : G2.edges()) edges.emplace_back(u + off, v + off);
    edges.emplace_back(G1.leg_vertex(i), G2.leg_vertex(1) + off);
    std::vector<int> legs(m + n - 2);
    for (int a = 1; a < i; ++a) legs[a - 1] = G1.leg_vertex(a);
    for (int b = 2; b <= n; ++b) legs[i + b - 3] = G2.leg_vertex(b) + off;
    for (int a = i + 1; a <= m; ++a) legs[a + n - 3] = G1.leg_vertex(a);
    return DualGraph(std::move(genus), std::move(edges), std::move(legs));
}

// Join legs i and j into an edge; remaining labels close up order-preservingly.
inline DualGraph contract(const DualGraph& G, int i, int j) {
    const int n = G.n_legs();
    if (i == j) throw std::invalid_argument("contract: equal legs");
    if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("contract: leg out of range");
    auto edges = G.edges();
    edges.emplace_back(G.leg_vertex(i), G.leg_vertex(j));
    std::vector<int> legs(n - 2);
    for (int ell = 1; ell <= n; ++ell)
        if (ell != i && ell != j) legs[close_up(ell, i, j) - 1] = G.leg_vertex(ell);
    return DualGraph(G.genera(), std::move(edges), std::move(legs));
}

// leg labeled ell becomes labeled rho(ell); shape unchanged
inline DualGraph relabel(const DualGraph& G, const Permutation& rho) {
    if (rho.size() != G.n_legs()) throw std::invalid_argument("relabel: size mismatch");
    std::vector<int> legs(G.n_legs());
    for (int ell = 1; ell <= G.n_legs(); ++ell) legs[rho(ell) - 1] = G.leg_vertex(ell);
    return DualGraph(G.genera(), G.edges(), std::move(legs));
}

// Operadic composition: glue the LAST leg of y to leg i of x, keeping y's
// remaining legs in order at slot i. graft consumes y's first leg instead, so
// rotate y's labels before grafting.
inline DualGraph compose(const DualGraph& x, int i, const DualGraph& y) {
    return graft(x, i, relabel(y, Permutation::cycle(y.n_legs())));
}

// Minimal encoding over all vertex orderings; equal encodings iff the graphs
// are isomorphic respecting genera and leg labels. Brute force, capped.
inline std::string canonical_form(const DualGraph& G, int vertex_cap = 8) {
    const int V = G.n_vertices();
    if (V > vertex_cap) throw std::invalid_argument("canonical_form: vertex cap exceeded");
    std::vector<int> order(V);  // order[old] = new index
    std::iota(order.begin(), order.end(), 0);
    std::string best;
    std::vector<int> perm(order);  // iterate over perm[new] = old
    do {
        for (int pos = 0; pos < V; ++pos) order[perm[pos]] = pos;
        std::string enc = "V:";
        for (int pos = 0; pos < V; ++pos) enc += std::to_string(G.genus_of(perm[pos])) + ",";
        std::vector<std::pair<int, int>> es;
        es.reserve(G.n_edges());
        for (auto [u, v] : G.edges()) es.emplace_back(std::min(order[u], order[v]), std::max(order[u], order[v]));
        std::sort(es.begin(), es.end());
        enc += "E:";
        for (auto [u, v] : es) enc += std::to_string(u) + "-" + std::to_string(v) + ",";
        enc += "L:";
        for (int ell = 1; ell <= G.n_legs(); ++ell) enc += std::to_string(order[G.leg_vertex(ell)]) + ",";
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool isomorphic(const DualGraph& A, const DualGraph& B) {
    if (A.n_vertices() != B.n_vertices() || A.n_edges() != B.n_edges() || A.n_legs() != B.n_legs())
        return false;
    return canonical_form(A) == canonical_form(B);
}

}  // namespace curveglue
