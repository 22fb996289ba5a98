#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "checks.hpp"

namespace curveglue {

using ojson = nlohmann::ordered_json;

// rationals travel as "p" or "p/q" strings so no precision is lost
inline ojson rational_json(const Rational& r) { return to_string(r); }

inline Rational rational_from(const ojson& j) {
    if (j.is_number_integer()) return Rational(Int(j.get<long long>()));
    if (!j.is_string()) throw std::invalid_argument("expected a rational string");
    return parse_rational(j.get<std::string>());
}

inline ojson point_json(const PointRef& p) { return ojson::array({p.comp, rational_json(p.param)}); }

inline PointRef point_from(const ojson& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer())
        throw std::invalid_argument("expected a point [component, \"param\"]");
    return {j[0].get<int>(), rational_from(j[1])};
}

// ---- marked curves ---------------------------------------------------------

inline ojson curve_json(const MarkedCurve& c) {
    ojson j;
    j["components"] = c.n_components();
    ojson nodes = ojson::array();
    for (const Node& n : c.nodes())
        nodes.push_back(ojson::array({point_json(n.first), point_json(n.second)}));
    j["nodes"] = std::move(nodes);
    ojson marks = ojson::array();
    for (int l = 1; l <= c.n_marks(); ++l)
        marks.push_back(ojson::array({l, point_json(c.mark(l))}));
    j["marks"] = std::move(marks);
    return j;
}

// accepts any component numbering and renumbers into canonical order
inline MarkedCurve curve_from(const ojson& j) {
    if (!j.is_object() || !j.contains("components"))
        throw std::invalid_argument("curve: expected {components, nodes, marks}");
    int n = j.at("components").get<int>();
    std::vector<Node> nodes;
    for (const ojson& e : j.value("nodes", ojson::array()))
        nodes.push_back(make_node(point_from(e.at(0)), point_from(e.at(1))));
    std::vector<PointRef> marks;
    const ojson& ms = j.value("marks", ojson::array());
    marks.resize(ms.size(), PointRef{0, Rational(0)});
    std::vector<char> seen(ms.size(), 0);
    for (const ojson& e : ms) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("curve: bad mark entry");
        int label = e.at(0).get<int>();
        if (label < 1 || label > static_cast<int>(ms.size()) || seen[static_cast<std::size_t>(label - 1)])
            throw std::invalid_argument("curve: mark labels must be 1..n without repeats");
        seen[static_cast<std::size_t>(label - 1)] = 1;
        marks[static_cast<std::size_t>(label - 1)] = point_from(e.at(1));
    }
    return canonicalize_curve(n, std::move(nodes), std::move(marks)).curve;
}

// ---- dual graphs -----------------------------------------------------------

inline ojson graph_json(const DualGraph& g) {
    ojson j;
    ojson vs = ojson::array();
    for (int gv : g.genera()) vs.push_back(ojson{{"genus", gv}});
    j["vertices"] = std::move(vs);
    ojson es = ojson::array();
    for (const auto& [u, v] : g.edges()) es.push_back(ojson::array({u, v}));
    j["edges"] = std::move(es);
    ojson ls = ojson::array();
    for (int l = 1; l <= g.n_legs(); ++l) ls.push_back(ojson::array({l, g.leg_vertex(l)}));
    j["legs"] = std::move(ls);
    return j;
}

inline DualGraph graph_from(const ojson& j) {
    if (!j.is_object() || !j.contains("vertices"))
        throw std::invalid_argument("graph: expected {vertices, edges, legs}");
    std::vector<int> genus;
    for (const ojson& v : j.at("vertices")) genus.push_back(v.at("genus").get<int>());
    std::vector<std::pair<int, int>> edges;
    for (const ojson& e : j.value("edges", ojson::array()))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    const ojson& ls = j.value("legs", ojson::array());
    std::vector<int> legs(ls.size(), 0);
    std::vector<char> seen(ls.size(), 0);
    for (const ojson& e : ls) {
        int label = e.at(0).get<int>();
        if (label < 1 || label > static_cast<int>(ls.size()) || seen[static_cast<std::size_t>(label - 1)])
            throw std::invalid_argument("graph: leg labels must be 1..n without repeats");
        seen[static_cast<std::size_t>(label - 1)] = 1;
        legs[static_cast<std::size_t>(label - 1)] = e.at(1).get<int>();
    }
    return DualGraph(std::move(genus), std::move(edges), std::move(legs));
}

// ---- permutations ----------------------------------------------------------

inline ojson perm_json(const Permutation& p) {
    ojson j = ojson::array();
    for (int i = 1; i <= p.size(); ++i) j.push_back(p(i));
    return j;
}

inline Permutation perm_from(const ojson& j) {
    if (!j.is_array()) throw std::invalid_argument("permutation: expected an integer array");
    std::vector<int> v;
    for (const ojson& e : j) v.push_back(e.get<int>());
    return Permutation(std::move(v));
}

inline ojson plus_perm_json(const PlusPermutation& p) {
    ojson arr = ojson::array();
    for (int i = 0; i <= p.n(); ++i) arr.push_back(p(i));
    return ojson{{"plus", true}, {"one_line", std::move(arr)}};
}

// ---- embeddings ------------------------------------------------------------

inline ojson embedding_json(const EmbeddedCurve& e) {
    ojson j;
    j["curve"] = curve_json(e.marked);
    j["k"] = e.k;
    j["ambient_dim"] = static_cast<int>(e.n_coords()) - 1;
    ojson comps = ojson::array();
    for (int c = 0; c < e.marked.n_components(); ++c) {
        ojson rows = ojson::array();
        for (std::size_t r = 0; r < e.coeffs.rows(); ++r) {
            ojson coeffs = ojson::array();
            for (std::size_t w = 0; w < e.layout.width[static_cast<std::size_t>(c)]; ++w)
                coeffs.push_back(
                    rational_json(e.coeffs.at(r, e.layout.offset[static_cast<std::size_t>(c)] + w)));
            rows.push_back(std::move(coeffs));
        }
        comps.push_back(std::move(rows));
    }
    j["parametrizations"] = std::move(comps);
    ojson imgs = ojson::array();
    for (const auto& img : e.mark_images) {
        ojson pt = ojson::array();
        for (const Rational& x : img) pt.push_back(rational_json(x));
        imgs.push_back(std::move(pt));
    }
    j["mark_images"] = std::move(imgs);
    ojson nimgs = ojson::array();
    for (const Node& nd : e.marked.nodes()) {
        ojson pt = ojson::array();
        for (const Rational& x : special_point_image(e.layout, e.coeffs, nd.first))
            pt.push_back(rational_json(x));
        nimgs.push_back(std::move(pt));
    }
    j["node_images"] = std::move(nimgs);
    return j;
}

inline EmbeddedCurve embedding_from(const ojson& j) {
    if (!j.is_object() || !j.contains("curve") || !j.contains("k") || !j.contains("parametrizations"))
        throw std::invalid_argument("embedding: expected {curve, k, parametrizations, ...}");
    MarkedCurve c = curve_from(j.at("curve"));
    int k = j.at("k").get<int>();
    if (k < 1) throw std::invalid_argument("embedding: k must be positive");
    SectionLayout L = make_layout(c, k);
    const ojson& comps = j.at("parametrizations");
    if (static_cast<int>(comps.size()) != c.n_components())
        throw std::invalid_argument("embedding: one parametrization block per component");
    std::size_t rows = comps.empty() ? 0 : comps.at(0).size();
    if (rows == 0) throw std::invalid_argument("embedding: no coordinate rows");
    if (j.contains("ambient_dim") &&
        j.at("ambient_dim").get<long long>() + 1 != static_cast<long long>(rows))
        throw std::invalid_argument("embedding: ambient_dim disagrees with coordinate rows");
    Matrix m(rows, L.total);
    for (std::size_t cc = 0; cc < comps.size(); ++cc) {
        const ojson& block = comps.at(cc);
        if (block.size() != rows) throw std::invalid_argument("embedding: ragged coordinate rows");
        for (std::size_t r = 0; r < rows; ++r) {
            const ojson& coeffs = block.at(r);
            if (coeffs.size() != L.width[cc])
                throw std::invalid_argument("embedding: coefficient width mismatch");
            for (std::size_t w = 0; w < L.width[cc]; ++w)
                m.at(r, L.offset[cc] + w) = rational_from(coeffs.at(w));
        }
    }
    std::vector<std::vector<Rational>> imgs = compute_mark_images(c, L, m);
    return {std::move(c), k, std::move(L), std::move(m), std::move(imgs)};
}

// ---- reports ---------------------------------------------------------------

inline ojson gluing_report_json(const GluingReport& r) {
    ojson j;
    j["passed"] = r.passed();
    j["outside_theorem_range"] = r.outside_theorem_range;
    j["gamma_on_secant"] = r.gamma_on_secant;
    j["gamma_distinct"] = r.gamma_distinct;
    j["dimension_drop"] = r.dimension_drop;
    j["node_identified"] = r.node_identified;
    j["injectivity_certificate"] = r.injectivity_certificate;
    j["immersion_certificate"] = r.immersion_certificate;
    j["completeness"] = r.completeness;
    j["injectivity_method"] = r.injectivity_method;
    j["witnesses"] = r.witnesses;
    return j;
}

inline ojson rr_json(const RrReport& r) {
    ojson j;
    j["in_vanishing_range"] = r.in_vanishing_range;
    j["genus"] = r.genus;
    j["degree"] = r.degree;
    j["expected"] = r.expected;
    j["h0"] = r.h0;
    j["ok"] = r.ok;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline ojson axiom_report_json(const AxiomReport& r) {
    ojson j;
    j["instance"] = r.instance;
    j["seed"] = r.seed;
    j["passed"] = r.passed();
    ojson rs = ojson::array();
    for (const AxiomResult& res : r.results) {
        ojson e;
        e["axiom"] = res.axiom;
        e["cases"] = res.cases;
        e["failures"] = res.failures;
        if (!res.witness.empty()) e["witness"] = res.witness;
        rs.push_back(std::move(e));
    }
    j["results"] = std::move(rs);
    return j;
}

inline AxiomRunConfig axiom_config_from(const ojson& j) {
    AxiomRunConfig cfg;
    std::string inst = j.value("instance", std::string("dualgraph"));
    if (inst == "permutation")
        cfg.instance = AxiomInstance::permutation;
    else if (inst == "dualgraph")
        cfg.instance = AxiomInstance::dualgraph;
    else if (inst == "geometric")
        cfg.instance = AxiomInstance::geometric;
    else
        throw std::invalid_argument("axioms: unknown instance " + inst);
    cfg.cap = j.value("cap", cfg.cap);
    cfg.cases = j.value("cases", cfg.cases);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.k = j.value("k", cfg.k);
    return cfg;
}

inline std::vector<ComponentType> types_from(const ojson& j) {
    if (!j.is_array()) throw std::invalid_argument("types: expected an array");
    std::vector<ComponentType> out;
    for (const ojson& e : j)
        out.push_back({e.at("g").get<int>(), e.at("n").get<int>(), e.at("p").get<int>()});
    return out;
}

inline ojson mink_json(const std::vector<MinKEntry>& entries) {
    ojson j = ojson::array();
    for (const MinKEntry& e : entries) {
        ojson row;
        row["type"] = ojson{{"g", e.type.g}, {"n", e.type.n}, {"p", e.type.p}};
        row["min_k"] = e.min_k;
        row["flagged"] = e.flagged;
        j.push_back(std::move(row));
    }
    return j;
}

}  // namespace curveglue
