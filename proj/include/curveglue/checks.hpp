#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dual_graph.hpp"
#include "gluing.hpp"

namespace curveglue {

// ---- degree criteria -------------------------------------------------------

// normalized component of a nodal curve: genus, marks, and node branch
// preimages
struct ComponentType {
    int g = 0;
    int n = 0;
    int p = 0;
};

inline bool stable_type(const ComponentType& t) { return 2 * t.g - 2 + t.n + t.p >= 1; }

inline bool stability_check(int g, int n) { return n >= 3 - 2 * g; }

struct SecantConditions {
    bool trisecant_ok = false;
    bool quadrisecant_ok = false;
};

// degree bounds under which no trisecant line / quadrisecant plane exists:
// d >= 2g+2+p and d >= 2g+3+p with d = k(2g-2+n+p)
inline SecantConditions secant_conditions(const ComponentType& t, int k) {
    if (t.g < 0 || t.n < 0 || t.p < 0)
        throw std::invalid_argument("secant_conditions: negative component data");
    if (!stable_type(t)) throw std::invalid_argument("secant_conditions: unstable component type");
    if (k < 1) throw std::invalid_argument("secant_conditions: k must be positive");
    long long d = static_cast<long long>(k) * (2 * t.g - 2 + t.n + t.p);
    return {d >= 2 * t.g + 2 + t.p, d >= 2 * t.g + 3 + t.p};
}

struct MinKEntry {
    ComponentType type;
    int min_k = 0;
    bool flagged = false;  // minimum exceeds 5
};

inline MinKEntry min_k_entry(const ComponentType& t) {
    // stability makes the degree strictly increasing in k, so this terminates
    for (int k = 1;; ++k) {
        SecantConditions s = secant_conditions(t, k);
        if (s.trisecant_ok && s.quadrisecant_ok) return {t, k, k > 5};
    }
}

inline std::vector<MinKEntry> min_k_report(const std::vector<ComponentType>& types) {
    std::vector<MinKEntry> out;
    out.reserve(types.size());
    for (const ComponentType& t : types) out.push_back(min_k_entry(t));
    return out;
}

// ---- Riemann-Roch ----------------------------------------------------------

struct RrReport {
    bool in_vanishing_range = false;
    int genus = 0;
    int degree = 0;
    int expected = 0;  // degree - genus + 1
    int h0 = -1;
    bool ok = false;
    std::string note;
};

// h0 - h1 = d - g + 1; in the range where h1 = 0 (k >= 2, or k = 1 with a
// mark on every connected piece) the section-space dimension must hit d-g+1
// on the nose.
inline RrReport rr_check(const MarkedCurve& c, int k) {
    if (k < 1) throw std::invalid_argument("rr_check: k must be positive");
    RrReport r;
    r.genus = c.total_genus();
    r.degree = degree_total(r.genus, c.n_marks(), k);
    r.expected = r.degree - r.genus + 1;
    bool marked_everywhere = true;
    if (k == 1) {
        std::vector<int> piece = c.piece_of_comp();
        int pieces = c.n_connected_pieces();
        std::vector<char> has_mark(static_cast<std::size_t>(pieces), 0);
        for (const PointRef& m : c.marks())
            has_mark[static_cast<std::size_t>(piece[static_cast<std::size_t>(m.comp)])] = 1;
        for (char h : has_mark) marked_everywhere = marked_everywhere && h;
    }
    r.in_vanishing_range = k >= 2 || marked_everywhere;
    if (!r.in_vanishing_range) {
        r.note = "not in vanishing range";
        return r;
    }
    r.h0 = static_cast<int>(section_space(c, k).basis.rows());
    r.ok = r.h0 == r.expected;
    if (!r.ok) r.note = "dimension off by " + std::to_string(r.h0 - r.expected);
    return r;
}

// ---- axiom harness ---------------------------------------------------------

enum class AxiomInstance { permutation, dualgraph, geometric };

struct AxiomRunConfig {
    AxiomInstance instance = AxiomInstance::dualgraph;
    int cap = 4;        // permutation sizes / graph legs / curve marks per operand
    int cases = 1000;   // random cases per identity (exhaustive instances ignore this)
    unsigned int seed = 1;
    int k = 1;          // twist level for the geometric instance
};

struct AxiomResult {
    std::string axiom;
    long long cases = 0;
    long long failures = 0;
    std::string witness;  // smallest failing case: operand sizes, then text order
};

struct AxiomReport {
    std::string instance;
    unsigned int seed = 0;
    std::vector<AxiomResult> results;

    bool passed() const {
        for (const AxiomResult& r : results)
            if (r.failures != 0) return false;
        return true;
    }
    long long total_cases() const {
        long long t = 0;
        for (const AxiomResult& r : results) t += r.cases;
        return t;
    }
};

namespace detail {

struct WitnessTracker {
    long long size = -1;
    std::string text;
    void offer(long long sz, const std::string& t) {
        if (size < 0 || sz < size || (sz == size && t < text)) {
            size = sz;
            text = t;
        }
    }
};

inline Permutation random_perm(std::mt19937& rng, int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(std::move(v));
}

inline int draw(std::mt19937& rng, int lo, int hi) {
    if (hi < lo) hi = lo;
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
}

inline std::string show_perm(const Permutation& p) {
    std::string s = "[";
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string(p(i));
    }
    return s + "]";
}

inline std::vector<Permutation> all_perms(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.push_back(Permutation(v));
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// graph instance: raw equality is vertex-order sensitive, so the axioms that
// permute the factor order compare up to isomorphism
struct GraphInstance {
    using Obj = DualGraph;
    static constexpr int min_legs = 1;
    bool modular = true;

    Obj rand_obj(std::mt19937& rng, int n_legs) const { return rand_capped(rng, n_legs, 3); }
    // isomorphism checks enumerate vertex orders, so keep those operands small
    Obj rand_obj_iso(std::mt19937& rng, int n_legs) const { return rand_capped(rng, n_legs, 2); }

    Obj rand_capped(std::mt19937& rng, int n_legs, int max_v) const {
        for (int attempt = 0; attempt < 300; ++attempt) {
            int V = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_v));
            std::vector<int> genus(static_cast<std::size_t>(V));
            for (int& g : genus) g = static_cast<int>(rng() % 3);
            std::vector<std::pair<int, int>> edges;
            for (int v = 1; v < V; ++v) edges.emplace_back(static_cast<int>(rng() % v), v);
            int extra = static_cast<int>(rng() % 3);
            for (int e = 0; e < extra; ++e) {
                int u = static_cast<int>(rng() % V), w = static_cast<int>(rng() % V);
                edges.emplace_back(std::min(u, w), std::max(u, w));
            }
            std::vector<int> legs(static_cast<std::size_t>(n_legs));
            for (int& w : legs) w = static_cast<int>(rng() % V);
            try {
                return DualGraph(std::move(genus), std::move(edges), std::move(legs));
            } catch (const std::invalid_argument&) {
            }
        }
        return DualGraph({2}, {}, std::vector<int>(static_cast<std::size_t>(n_legs), 0));
    }
    Obj comp(const Obj& x, int i, const Obj& y) const { return compose(x, i, y); }
    Obj con(const Obj& x, int i, int j) const { return contract(x, i, j); }
    Obj rel(const Obj& x, const Permutation& rho) const { return relabel(x, rho); }
    bool eq(const Obj& a, const Obj& b) const { return a == b; }
    bool eq_iso(const Obj& a, const Obj& b) const { return isomorphic(a, b); }
    int legs(const Obj& x) const { return x.n_legs(); }
    std::string show(const Obj& x) const {
        std::string s = "g[";
        for (std::size_t v = 0; v < x.genera().size(); ++v)
            s += (v ? "," : "") + std::to_string(x.genera()[v]);
        s += "] e[";
        for (std::size_t e = 0; e < x.edges().size(); ++e)
            s += (e ? " " : "") + std::to_string(x.edges()[e].first) + "-" +
                 std::to_string(x.edges()[e].second);
        s += "] l[";
        for (std::size_t l = 0; l < x.legs().size(); ++l)
            s += (l ? "," : "") + std::to_string(x.legs()[l]);
        return s + "]";
    }
};

// embedded-curve instance: canonical component order and echelon coordinates
// make every identity a literal equality
struct CurveInstance {
    using Obj = EmbeddedCurve;
    static constexpr int min_legs = 3;
    int k = 1;
    bool modular = false;  // set when k supports self-gluing

    Obj rand_obj(std::mt19937& rng, int n_marks) const {
        std::vector<Rational> palette;
        for (int v = 0; palette.size() < static_cast<std::size_t>(n_marks) + 3; ++v) {
            palette.push_back(Rational(v));
            if (v > 0) palette.push_back(Rational(-v));
        }
        std::shuffle(palette.begin(), palette.end(), rng);
        std::vector<PointRef> marks;
        for (int m = 0; m < n_marks; ++m) marks.push_back({0, palette[static_cast<std::size_t>(m)]});
        return embed(MarkedCurve(1, {}, marks), k);
    }
    Obj rand_obj_iso(std::mt19937& rng, int n_marks) const { return rand_obj(rng, n_marks); }
    // last-mark grafting, matching the graph instance's composition
    Obj comp(const Obj& x, int i, const Obj& y) const {
        return compose(x, i, relabel(y, Permutation::cycle(y.n_marks())));
    }
    Obj con(const Obj& x, int i, int j) const { return self_glue(x, i, j); }
    Obj rel(const Obj& x, const Permutation& rho) const { return relabel(x, rho); }
    bool eq(const Obj& a, const Obj& b) const { return a == b; }
    bool eq_iso(const Obj& a, const Obj& b) const { return a == b; }
    int legs(const Obj& x) const { return x.n_marks(); }
    std::string show(const Obj& x) const {
        std::string s = "k=" + std::to_string(x.k) + " comps=" +
                        std::to_string(x.marked.n_components()) + " marks[";
        for (int l = 1; l <= x.n_marks(); ++l) {
            const PointRef& p = x.marked.mark(l);
            s += (l > 1 ? " " : "") + std::to_string(p.comp) + ":" + to_string(p.param);
        }
        return s + "]";
    }
};

template <class Inst>
void run_shared_axioms(const Inst& I, const AxiomRunConfig& cfg, std::vector<AxiomResult>& out) {
    std::mt19937 rng(cfg.seed);
    const int lo = Inst::min_legs;
    const int hi = std::max(cfg.cap, lo);
    auto run = [&](const char* name, int min_sz, auto&& body) {
        AxiomResult res;
        res.axiom = name;
        WitnessTracker wit;
        for (int c = 0; c < cfg.cases; ++c) {
            ++res.cases;
            if (!body(std::max(min_sz, lo), wit)) ++res.failures;
        }
        res.witness = wit.text;
        out.push_back(std::move(res));
    };

    run("opeq", 2, [&](int mn, WitnessTracker& wit) {
        int m = draw(rng, mn, hi), n = draw(rng, mn, hi);
        auto x = I.rand_obj(rng, m), y = I.rand_obj(rng, n);
        int i = draw(rng, 1, m);
        Permutation pi = random_perm(rng, m), rho = random_perm(rng, n - 1);
        auto lhs = I.rel(I.comp(x, i, y), compose_block(pi, i, rho));
        auto rhs = I.comp(I.rel(x, pi), pi(i), I.rel(y, extend_one(rho)));
        if (I.eq(lhs, rhs)) return true;
        wit.offer(m + n, "x=" + I.show(x) + " y=" + I.show(y) + " i=" + std::to_string(i) +
                             " pi=" + show_perm(pi) + " rho=" + show_perm(rho));
        return false;
    });

    run("opass1", 2, [&](int mn, WitnessTracker& wit) {
        int lx = draw(rng, mn, hi), my = draw(rng, std::max(1, lo), hi), nz = draw(rng, std::max(1, lo), hi);
        auto x = I.rand_obj_iso(rng, lx), y = I.rand_obj_iso(rng, my), z = I.rand_obj_iso(rng, nz);
        int i = draw(rng, 1, lx - 1);
        int j = draw(rng, i + 1, lx);
        auto lhs = I.comp(I.comp(x, i, y), j + my - 2, z);
        auto rhs = I.comp(I.comp(x, j, z), i, y);
        if (I.eq_iso(lhs, rhs)) return true;
        wit.offer(lx + my + nz, "x=" + I.show(x) + " y=" + I.show(y) + " z=" + I.show(z) +
                                    " i=" + std::to_string(i) + " j=" + std::to_string(j));
        return false;
    });

    run("opass2", 2, [&](int mn, WitnessTracker& wit) {
        int lx = draw(rng, std::max(1, lo), hi), my = draw(rng, mn, hi), nz = draw(rng, std::max(1, lo), hi);
        auto x = I.rand_obj(rng, lx), y = I.rand_obj(rng, my), z = I.rand_obj(rng, nz);
        int i = draw(rng, 1, lx);
        int jj = draw(rng, 1, my - 1);
        auto lhs = I.comp(I.comp(x, i, y), i + jj - 1, z);
        auto rhs = I.comp(x, i, I.comp(y, jj, z));
        if (I.eq(lhs, rhs)) return true;
        wit.offer(lx + my + nz, "x=" + I.show(x) + " y=" + I.show(y) + " z=" + I.show(z) +
                                    " i=" + std::to_string(i) + " j=" + std::to_string(jj));
        return false;
    });

    run("cyceq", 2, [&](int mn, WitnessTracker& wit) {
        int M = draw(rng, mn, hi), N = draw(rng, std::max(1, lo), hi);
        auto x = I.rand_obj_iso(rng, M), y = I.rand_obj_iso(rng, N);
        auto lhs = I.rel(I.comp(x, M - 1, y), Permutation::cycle(M + N - 2));
        auto rhs = I.comp(I.rel(y, Permutation::cycle(N)), 1, I.rel(x, Permutation::cycle(M)));
        if (I.eq_iso(lhs, rhs)) return true;
        wit.offer(M + N, "x=" + I.show(x) + " y=" + I.show(y));
        return false;
    });

    if (!I.modular) return;

    run("modeq", 2, [&](int mn, WitnessTracker& wit) {
        int n = draw(rng, mn, hi);
        auto x = I.rand_obj(rng, n);
        Permutation rho = random_perm(rng, n);
        int i = draw(rng, 1, n), j;
        do j = draw(rng, 1, n);
        while (j == i);
        auto lhs = I.rel(I.con(x, i, j), restrict_excluding(rho, i, j));
        auto rhs = I.con(I.rel(x, rho), rho(i), rho(j));
        if (I.eq(lhs, rhs)) return true;
        wit.offer(n, "x=" + I.show(x) + " rho=" + show_perm(rho) + " i=" + std::to_string(i) +
                         " j=" + std::to_string(j));
        return false;
    });

    run("modass1", 4, [&](int mn, WitnessTracker& wit) {
        int n = draw(rng, mn, hi);
        auto x = I.rand_obj(rng, n);
        std::vector<int> lab(static_cast<std::size_t>(n));
        std::iota(lab.begin(), lab.end(), 1);
        std::shuffle(lab.begin(), lab.end(), rng);
        int i = lab[0], j = lab[1], k2 = lab[2], l = lab[3];
        auto lhs = I.con(I.con(x, k2, l), close_up(i, k2, l), close_up(j, k2, l));
        auto rhs = I.con(I.con(x, i, j), close_up(k2, i, j), close_up(l, i, j));
        if (I.eq(lhs, rhs)) return true;
        wit.offer(n, "x=" + I.show(x) + " ij=" + std::to_string(i) + "," + std::to_string(j) +
                         " kl=" + std::to_string(k2) + "," + std::to_string(l));
        return false;
    });

    run("modass2", 3, [&](int mn, WitnessTracker& wit) {
        int m = draw(rng, mn, hi), n = draw(rng, std::max(2, lo), hi);
        auto x = I.rand_obj(rng, m), y = I.rand_obj(rng, n);
        auto lhs = I.con(I.comp(x, m, y), 1, 2);
        auto rhs = I.comp(I.con(x, 1, 2), m - 2, y);
        if (I.eq(lhs, rhs)) return true;
        wit.offer(m + n, "x=" + I.show(x) + " y=" + I.show(y));
        return false;
    });

    run("modass3", 2, [&](int mn, WitnessTracker& wit) {
        int m = draw(rng, mn, hi), n = draw(rng, std::max(3, lo), hi);
        auto x = I.rand_obj(rng, m), y = I.rand_obj(rng, n);
        auto lhs = I.con(I.comp(x, m, y), m, m + 1);
        auto rhs = I.comp(x, m, I.con(y, 1, 2));
        if (I.eq(lhs, rhs)) return true;
        wit.offer(m + n, "x=" + I.show(x) + " y=" + I.show(y));
        return false;
    });

    run("modass4", 2, [&](int mn, WitnessTracker& wit) {
        int m = draw(rng, mn, hi), n = draw(rng, std::max(2, lo), hi);
        auto x = I.rand_obj(rng, m), y = I.rand_obj(rng, n);
        auto lhs = I.con(I.comp(x, m, y), m - 1, m);
        auto rhs = I.con(I.comp(x, m - 1, I.rel(y, Permutation::cycle(n).inverse())),
                         m + n - 3, m + n - 2);
        if (I.eq(lhs, rhs)) return true;
        wit.offer(m + n, "x=" + I.show(x) + " y=" + I.show(y));
        return false;
    });
}

inline void run_permutation_axioms(const AxiomRunConfig& cfg, std::vector<AxiomResult>& out) {
    const int cap = cfg.cap;
    auto act = [](const Permutation& sigma, const Permutation& a) { return a * sigma.inverse(); };
    std::vector<std::vector<Permutation>> S(static_cast<std::size_t>(cap) + 1);
    for (int n = 1; n <= cap; ++n) S[static_cast<std::size_t>(n)] = all_perms(n);

    AxiomResult opeq{"opeq", 0, 0, ""};
    WitnessTracker weq;
    for (int m = 1; m <= cap; ++m)
        for (int n = 1; n <= cap; ++n)
            for (const auto& pi : S[static_cast<std::size_t>(m)])
                for (const auto& rho : S[static_cast<std::size_t>(n)])
                    for (const auto& x : S[static_cast<std::size_t>(m)])
                        for (const auto& y : S[static_cast<std::size_t>(n)])
                            for (int i = 1; i <= m; ++i) {
                                ++opeq.cases;
                                bool ok = act(compose_block(pi, i, rho), compose_block(x, i, y)) ==
                                          compose_block(act(pi, x), pi(i), act(rho, y));
                                if (!ok) {
                                    ++opeq.failures;
                                    weq.offer(m + n, "pi=" + show_perm(pi) + " rho=" + show_perm(rho) +
                                                         " x=" + show_perm(x) + " y=" + show_perm(y) +
                                                         " i=" + std::to_string(i));
                                }
                            }
    opeq.witness = weq.text;
    out.push_back(std::move(opeq));

    AxiomResult a1{"opass1", 0, 0, ""}, a2{"opass2", 0, 0, ""};
    WitnessTracker w1, w2;
    for (int l = 1; l <= cap; ++l)
        for (int m = 1; m <= cap; ++m)
            for (int n = 1; n <= cap; ++n)
                for (const auto& x : S[static_cast<std::size_t>(l)])
                    for (const auto& y : S[static_cast<std::size_t>(m)])
                        for (const auto& z : S[static_cast<std::size_t>(n)]) {
                            for (int i = 1; i <= l; ++i)
                                for (int j = i + 1; j <= l; ++j) {
                                    ++a1.cases;
                                    bool ok = compose_block(compose_block(x, i, y), j + m - 1, z) ==
                                              compose_block(compose_block(x, j, z), i, y);
                                    if (!ok) {
                                        ++a1.failures;
                                        w1.offer(l + m + n, "x=" + show_perm(x) + " y=" + show_perm(y) +
                                                                " z=" + show_perm(z) + " i=" +
                                                                std::to_string(i) + " j=" + std::to_string(j));
                                    }
                                }
                            for (int i = 1; i <= l; ++i)
                                for (int j = 1; j <= m; ++j) {
                                    ++a2.cases;
                                    bool ok = compose_block(compose_block(x, i, y), i + j - 1, z) ==
                                              compose_block(x, i, compose_block(y, j, z));
                                    if (!ok) {
                                        ++a2.failures;
                                        w2.offer(l + m + n, "x=" + show_perm(x) + " y=" + show_perm(y) +
                                                                " z=" + show_perm(z) + " i=" +
                                                                std::to_string(i) + " j=" + std::to_string(j));
                                    }
                                }
                        }
    a1.witness = w1.text;
    a2.witness = w2.text;
    out.push_back(std::move(a1));
    out.push_back(std::move(a2));
}

}  // namespace detail

inline AxiomReport run_axioms(const AxiomRunConfig& cfg) {
    if (cfg.cap < 1) throw std::invalid_argument("run_axioms: cap must be positive");
    if (cfg.cases < 1) throw std::invalid_argument("run_axioms: case count must be positive");
    AxiomReport rep;
    rep.seed = cfg.seed;
    switch (cfg.instance) {
        case AxiomInstance::permutation:
            rep.instance = "permutation";
            detail::run_permutation_axioms(cfg, rep.results);
            break;
        case AxiomInstance::dualgraph: {
            rep.instance = "dualgraph";
            detail::GraphInstance I;
            detail::run_shared_axioms(I, cfg, rep.results);
            break;
        }
        case AxiomInstance::geometric: {
            rep.instance = "geometric";
            if (cfg.k < 1) throw std::invalid_argument("run_axioms: k must be positive");
            detail::CurveInstance I;
            I.k = cfg.k;
            I.modular = cfg.k >= 5;  // contractions are self-gluings
            detail::run_shared_axioms(I, cfg, rep.results);
            break;
        }
    }
    return rep;
}

}  // namespace curveglue
