#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "dual_graph.hpp"
#include "permutation.hpp"
#include "rational.hpp"

namespace curveglue {

// A special point on a curve with rational components: component index plus
// the parameter value in that component's affine chart. Parametrizations
// never place special points at infinity.
struct PointRef {
    int comp = 0;
    Rational param;

    friend bool operator==(const PointRef& a, const PointRef& b) {
        return a.comp == b.comp && a.param == b.param;
    }
    friend bool operator!=(const PointRef& a, const PointRef& b) { return !(a == b); }
    friend bool operator<(const PointRef& a, const PointRef& b) {
        if (a.comp != b.comp) return a.comp < b.comp;
        return a.param < b.param;
    }
};

// Unordered pair of identified points; stored with first < second.
using Node = std::pair<PointRef, PointRef>;

inline Node make_node(PointRef a, PointRef b) {
    if (b < a) std::swap(a, b);
    return {a, b};
}

namespace detail {

// Sort key for one component, computed from the raw curve data: marked
// components first (by their sorted mark labels), then by the sorted special
// parameters, then by the node attachments (own parameter, partner's mark
// set, partner's parameter). Mark sets of distinct components are disjoint,
// so ties require two unmarked components with identical attachment data.
using CompKey = std::tuple<bool, std::vector<int>, std::vector<Rational>,
                           std::vector<std::tuple<Rational, bool, std::vector<int>, Rational>>>;

inline std::vector<CompKey> component_keys(int n_components, const std::vector<Node>& nodes,
                                           const std::vector<PointRef>& marks) {
    std::vector<std::vector<int>> labels(static_cast<std::size_t>(n_components));
    for (std::size_t ell = 0; ell < marks.size(); ++ell)
        labels[static_cast<std::size_t>(marks[ell].comp)].push_back(static_cast<int>(ell) + 1);
    std::vector<std::vector<Rational>> params(static_cast<std::size_t>(n_components));
    for (const PointRef& m : marks) params[static_cast<std::size_t>(m.comp)].push_back(m.param);
    std::vector<std::vector<std::tuple<Rational, bool, std::vector<int>, Rational>>> attach(
        static_cast<std::size_t>(n_components));
    for (const Node& e : nodes) {
        const PointRef ends[2] = {e.first, e.second};
        for (int s = 0; s < 2; ++s) {
            const PointRef& own = ends[s];
            const PointRef& other = ends[1 - s];
            const std::vector<int>& lo = labels[static_cast<std::size_t>(other.comp)];
            params[static_cast<std::size_t>(own.comp)].push_back(own.param);
            attach[static_cast<std::size_t>(own.comp)].emplace_back(own.param, lo.empty(), lo,
                                                                    other.param);
        }
    }
    std::vector<CompKey> keys;
    keys.reserve(static_cast<std::size_t>(n_components));
    for (std::size_t c = 0; c < static_cast<std::size_t>(n_components); ++c) {
        std::sort(params[c].begin(), params[c].end());
        std::sort(attach[c].begin(), attach[c].end());
        keys.emplace_back(labels[c].empty(), std::move(labels[c]), std::move(params[c]),
                          std::move(attach[c]));
    }
    return keys;
}

}  // namespace detail

// Nodal curve with rational components, marked points labeled 1..n by
// position. Nodes are kept sorted, and components must arrive in the
// canonical order produced by canonicalize_curve; with both in force, equal
// curves have equal representations.
class MarkedCurve {
public:
    MarkedCurve(int n_components, std::vector<Node> nodes, std::vector<PointRef> marks)
        : n_comps_(n_components), nodes_(std::move(nodes)), marks_(std::move(marks)) {
        validate();
    }

    int n_components() const { return n_comps_; }
    int n_marks() const { return static_cast<int>(marks_.size()); }
    int n_nodes() const { return static_cast<int>(nodes_.size()); }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<PointRef>& marks() const { return marks_; }

    const PointRef& mark(int label) const {
        if (label < 1 || label > n_marks()) throw std::invalid_argument("mark label out of range");
        return marks_[static_cast<std::size_t>(label - 1)];
    }

    // Sorted parameters of all special points (marks and node branches) on
    // one component; a self-node contributes both of its branches.
    std::vector<Rational> special_points(int comp) const {
        std::vector<Rational> pts;
        for (const PointRef& m : marks_)
            if (m.comp == comp) pts.push_back(m.param);
        for (const Node& e : nodes_) {
            if (e.first.comp == comp) pts.push_back(e.first.param);
            if (e.second.comp == comp) pts.push_back(e.second.param);
        }
        std::sort(pts.begin(), pts.end());
        return pts;
    }

    // Connected piece index per component, numbered by first occurrence.
    std::vector<int> piece_of_comp() const {
        std::vector<int> parent(static_cast<std::size_t>(n_comps_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        for (const Node& e : nodes_) {
            int a = find(e.first.comp), b = find(e.second.comp);
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
        std::vector<int> label(static_cast<std::size_t>(n_comps_), -1);
        std::vector<int> out(static_cast<std::size_t>(n_comps_));
        int next = 0;
        for (int c = 0; c < n_comps_; ++c) {
            int r = find(c);
            if (label[static_cast<std::size_t>(r)] < 0) label[static_cast<std::size_t>(r)] = next++;
            out[static_cast<std::size_t>(c)] = label[static_cast<std::size_t>(r)];
        }
        return out;
    }

    int n_connected_pieces() const {
        std::vector<int> p = piece_of_comp();
        return p.empty() ? 0 : 1 + *std::max_element(p.begin(), p.end());
    }

    bool is_connected() const { return n_connected_pieces() == 1; }

    // Arithmetic genus #nodes - #components + 1. For several connected
    // pieces this keeps g - 1 additive over pieces, which is the form the
    // section-count bookkeeping needs.
    int total_genus() const { return n_nodes() - n_components() + 1; }

    // Genus of each connected piece (edges - vertices + 1 within the piece).
    std::vector<int> piece_genera() const {
        std::vector<int> piece = piece_of_comp();
        int np = piece.empty() ? 0 : 1 + *std::max_element(piece.begin(), piece.end());
        std::vector<int> verts(static_cast<std::size_t>(np), 0);
        std::vector<int> edges(static_cast<std::size_t>(np), 0);
        for (int c = 0; c < n_comps_; ++c) ++verts[static_cast<std::size_t>(piece[static_cast<std::size_t>(c)])];
        for (const Node& e : nodes_)
            ++edges[static_cast<std::size_t>(piece[static_cast<std::size_t>(e.first.comp)])];
        std::vector<int> g(static_cast<std::size_t>(np));
        for (int p = 0; p < np; ++p)
            g[static_cast<std::size_t>(p)] =
                edges[static_cast<std::size_t>(p)] - verts[static_cast<std::size_t>(p)] + 1;
        return g;
    }

    // Dual graph: one genus-0 vertex per component, one edge per node, one
    // leg per mark. Requires a connected curve (the graph type validates).
    DualGraph dual_graph() const {
        std::vector<int> genus(static_cast<std::size_t>(n_comps_), 0);
        std::vector<std::pair<int, int>> edges;
        edges.reserve(nodes_.size());
        for (const Node& e : nodes_) edges.emplace_back(e.first.comp, e.second.comp);
        std::vector<int> legs;
        legs.reserve(marks_.size());
        for (const PointRef& m : marks_) legs.push_back(m.comp);
        return DualGraph(std::move(genus), std::move(edges), std::move(legs));
    }

    friend bool operator==(const MarkedCurve& a, const MarkedCurve& b) {
        return a.n_comps_ == b.n_comps_ && a.nodes_ == b.nodes_ && a.marks_ == b.marks_;
    }
    friend bool operator!=(const MarkedCurve& a, const MarkedCurve& b) { return !(a == b); }

private:
    void validate() {
        if (n_comps_ < 1) throw std::invalid_argument("curve: needs at least one component");
        auto check_comp = [&](const PointRef& p) {
            if (p.comp < 0 || p.comp >= n_comps_)
                throw std::invalid_argument("curve: component index out of range");
        };
        for (const PointRef& m : marks_) check_comp(m);
        for (Node& e : nodes_) {
            check_comp(e.first);
            check_comp(e.second);
            if (e.first == e.second)
                throw std::invalid_argument("curve: node must join two distinct points");
            if (e.second < e.first) std::swap(e.first, e.second);
        }
        std::sort(nodes_.begin(), nodes_.end());
        for (int c = 0; c < n_comps_; ++c) {
            std::vector<Rational> pts = special_points(c);
            if (pts.size() < 3)
                throw std::invalid_argument("curve: component with fewer than 3 special points");
            for (std::size_t i = 0; i + 1 < pts.size(); ++i)
                if (pts[i] == pts[i + 1])
                    throw std::invalid_argument("curve: repeated special point on a component");
        }
        std::vector<detail::CompKey> keys = detail::component_keys(n_comps_, nodes_, marks_);
        for (std::size_t i = 0; i + 1 < keys.size(); ++i)
            if (keys[i + 1] < keys[i])
                throw std::invalid_argument(
                    "curve: components not in canonical order; build via canonicalize_curve");
    }

    int n_comps_;
    std::vector<Node> nodes_;
    std::vector<PointRef> marks_;
};

struct CanonicalizedCurve {
    MarkedCurve curve;
    std::vector<int> comp_map;  // comp_map[input component] = component in curve
};

// Reorder components into canonical order and report where each input
// component went. Equal keys keep their input order.
inline CanonicalizedCurve canonicalize_curve(int n_components, std::vector<Node> nodes,
                                             std::vector<PointRef> marks) {
    if (n_components < 1) throw std::invalid_argument("curve: needs at least one component");
    for (const PointRef& m : marks)
        if (m.comp < 0 || m.comp >= n_components)
            throw std::invalid_argument("curve: component index out of range");
    for (const Node& e : nodes)
        if (e.first.comp < 0 || e.first.comp >= n_components || e.second.comp < 0 ||
            e.second.comp >= n_components)
            throw std::invalid_argument("curve: component index out of range");
    std::vector<detail::CompKey> keys = detail::component_keys(n_components, nodes, marks);
    std::vector<int> order(static_cast<std::size_t>(n_components));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
    });
    std::vector<int> comp_map(static_cast<std::size_t>(n_components));
    for (int pos = 0; pos < n_components; ++pos)
        comp_map[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
    for (Node& e : nodes) {
        e.first.comp = comp_map[static_cast<std::size_t>(e.first.comp)];
        e.second.comp = comp_map[static_cast<std::size_t>(e.second.comp)];
    }
    for (PointRef& m : marks) m.comp = comp_map[static_cast<std::size_t>(m.comp)];
    return {MarkedCurve(n_components, std::move(nodes), std::move(marks)), std::move(comp_map)};
}

// Replace marks i and j by a node joining their points; the remaining marks
// keep their relative order and take labels 1..n-2.
inline CanonicalizedCurve glue_marks(const MarkedCurve& c, int i, int j) {
    if (i == j) throw std::invalid_argument("glue_marks: marks must differ");
    PointRef a = c.mark(i), b = c.mark(j);
    std::vector<PointRef> marks = c.marks();
    marks.erase(marks.begin() + (std::max(i, j) - 1));
    marks.erase(marks.begin() + (std::min(i, j) - 1));
    std::vector<Node> nodes = c.nodes();
    nodes.push_back(make_node(a, b));
    return canonicalize_curve(c.n_components(), std::move(nodes), std::move(marks));
}

// Disjoint union with c2's marks spliced in after the first insert_pos marks
// of c1. In the returned comp_map, c2's input components are indexed with an
// offset of c1.n_components().
inline CanonicalizedCurve disjoint_union_marked(const MarkedCurve& c1, const MarkedCurve& c2,
                                                int insert_pos) {
    if (insert_pos < 0 || insert_pos > c1.n_marks())
        throw std::invalid_argument("disjoint_union: insert position out of range");
    int off = c1.n_components();
    std::vector<Node> nodes = c1.nodes();
    for (Node e : c2.nodes()) {
        e.first.comp += off;
        e.second.comp += off;
        nodes.push_back(e);
    }
    std::vector<PointRef> marks;
    marks.reserve(static_cast<std::size_t>(c1.n_marks() + c2.n_marks()));
    for (int l = 1; l <= insert_pos; ++l) marks.push_back(c1.mark(l));
    for (int l = 1; l <= c2.n_marks(); ++l) {
        PointRef m = c2.mark(l);
        m.comp += off;
        marks.push_back(m);
    }
    for (int l = insert_pos + 1; l <= c1.n_marks(); ++l) marks.push_back(c1.mark(l));
    return canonicalize_curve(c1.n_components() + c2.n_components(), std::move(nodes),
                              std::move(marks));
}

// The mark labeled l gets label rho(l).
inline CanonicalizedCurve relabel_marks(const MarkedCurve& c, const Permutation& rho) {
    if (rho.size() != c.n_marks()) throw std::invalid_argument("relabel_marks: size mismatch");
    std::vector<PointRef> marks(static_cast<std::size_t>(c.n_marks()));
    for (int l = 1; l <= c.n_marks(); ++l) marks[static_cast<std::size_t>(rho(l) - 1)] = c.mark(l);
    return canonicalize_curve(c.n_components(), c.nodes(), std::move(marks));
}

}  // namespace curveglue
