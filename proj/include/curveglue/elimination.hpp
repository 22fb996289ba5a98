#pragma once

#include <atomic>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bipoly.hpp"

namespace curveglue {

// Cooperative cancellation for long-running certificates.
struct CancelToken {
    std::atomic<bool> stop{false};
};

struct OperationCancelled : std::runtime_error {
    OperationCancelled() : std::runtime_error("operation cancelled") {}
};

struct ElimBudget {
    int max_pair_reductions = 4000;
    int max_degree = 120;
};

namespace detail {

struct LeadTerm {
    int du, dt;
    Rational c;
};

inline LeadTerm lead_term(const BiPoly& f) {
    int a = f.degree_u();
    const Poly& p = f.coeff_u(a);
    return {a, p.degree(), p.lead()};
}

inline BiPoly mono_mul(const BiPoly& f, int du, int dt, const Rational& c) {
    std::vector<Poly> out(f.coeffs_u().size() + static_cast<std::size_t>(du));
    for (std::size_t k = 0; k < f.coeffs_u().size(); ++k)
        out[k + du] = (f.coeffs_u()[k] * c).shifted(dt);
    return BiPoly(std::move(out));
}

inline BiPoly monomial(int du, int dt, const Rational& c) {
    std::vector<Rational> p(static_cast<std::size_t>(dt) + 1);
    p[dt] = c;
    std::vector<Poly> v(static_cast<std::size_t>(du) + 1);
    v[du] = Poly(std::move(p));
    return BiPoly(std::move(v));
}

// full normal form of f modulo G under lex order with u > t
inline BiPoly reduce(BiPoly f, const std::vector<BiPoly>& G) {
    BiPoly rem;
    while (!f.is_zero()) {
        LeadTerm lt = lead_term(f);
        bool hit = false;
        for (const BiPoly& g : G) {
            LeadTerm lg = lead_term(g);
            if (lg.du <= lt.du && lg.dt <= lt.dt) {
                f = f - mono_mul(g, lt.du - lg.du, lt.dt - lg.dt, lt.c / lg.c);
                hit = true;
                break;
            }
        }
        if (!hit) {
            BiPoly m = monomial(lt.du, lt.dt, lt.c);
            rem = rem + m;
            f = f - m;
        }
    }
    return rem;
}

inline BiPoly scalar_normalize(const BiPoly& f) {
    if (f.is_zero()) return f;
    return f * (Rational(1) / lead_term(f).c);
}

}  // namespace detail

// Buchberger in two variables, lex u > t. Returns the reduced basis, or
// nullopt when the budget is exhausted (callers fall back to sampling).
inline std::optional<std::vector<BiPoly>> groebner_lex(const std::vector<BiPoly>& gens,
                                                       const ElimBudget& budget = {},
                                                       const CancelToken* cancel = nullptr) {
    using detail::lead_term;
    std::vector<BiPoly> G;
    for (const BiPoly& f : gens) {
        BiPoly r = detail::reduce(f, G);
        if (!r.is_zero()) G.push_back(detail::scalar_normalize(r));
    }
    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j) pairs.emplace_back(i, j);

    int spent = 0;
    while (!pairs.empty()) {
        if (cancel && cancel->stop.load()) throw OperationCancelled();
        auto [i, j] = pairs.front();
        pairs.pop_front();
        auto li = lead_term(G[i]), lj = lead_term(G[j]);
        if (std::min(li.du, lj.du) == 0 && std::min(li.dt, lj.dt) == 0)
            continue;  // coprime leading monomials
        int A = std::max(li.du, lj.du), B = std::max(li.dt, lj.dt);
        BiPoly s = detail::mono_mul(G[i], A - li.du, B - li.dt, Rational(1) / li.c) -
                   detail::mono_mul(G[j], A - lj.du, B - lj.dt, Rational(1) / lj.c);
        BiPoly r = detail::reduce(std::move(s), G);
        if (++spent > budget.max_pair_reductions) return std::nullopt;
        if (r.is_zero()) continue;
        if (r.degree_t() > budget.max_degree || r.degree_u() > budget.max_degree)
            return std::nullopt;
        G.push_back(detail::scalar_normalize(r));
        for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
    }
    // inter-reduce
    for (std::size_t i = 0; i < G.size();) {
        BiPoly g = G[i];
        std::vector<BiPoly> rest;
        for (std::size_t k = 0; k < G.size(); ++k)
            if (k != i) rest.push_back(G[k]);
        BiPoly r = detail::reduce(g, rest);
        if (r.is_zero()) {
            G.erase(G.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            G[i] = detail::scalar_normalize(r);
            ++i;
        }
    }
    return G;
}

// generator of I cap Q[t] read off a lex basis (zero poly if none present)
inline Poly elimination_generator(const std::vector<BiPoly>& gb) {
    Poly g;
    for (const BiPoly& f : gb)
        if (!f.is_zero() && f.degree_u() == 0) g = poly_gcd(g, f.coeff_u(0));
    return g;
}

struct ContainmentResult {
    bool contained = false;
    std::string witness;  // offending factor or failure note when not contained
};

// Exact check that every common zero of `system` over the algebraic closure
// lies in `allowed` (a finite set of rational points). Soundness rests on two
/// facts: roots of the lex elimination generator are exactly the t-coordinates
// of the (finite) variety, and each fiber is cut out by the gcd of the
// specialized system. Returns nullopt when the Groebner budget runs out.
inline std::optional<ContainmentResult> zero_set_contained_in(
    const std::vector<BiPoly>& system,
    const std::vector<std::pair<Rational, Rational>>& allowed, const ElimBudget& budget = {},
    const CancelToken* cancel = nullptr) {
    std::vector<BiPoly> nonzero;
    for (const BiPoly& f : system)
        if (!f.is_zero()) nonzero.push_back(f);
    if (nonzero.empty())
        return ContainmentResult{false, "identically zero system (whole plane identified)"};

    BiPoly g;
    for (const BiPoly& f : nonzero) {
        g = bipoly_gcd(g, f);
        if (g.is_constant()) break;
    }
    if (!g.is_constant())
        return ContainmentResult{false, "positive-dimensional locus: " + to_string(g)};

    auto gb = groebner_lex(nonzero, budget, cancel);
    if (!gb) return std::nullopt;
    for (const BiPoly& f : *gb)
        if (f.is_constant() && !f.is_zero()) return ContainmentResult{true, ""};

    Poly p = elimination_generator(*gb);
    if (p.is_zero())
        return ContainmentResult{false, "no elimination generator (unexpected)"};

    std::vector<Rational> tcoords;
    for (const auto& [t0, u0] : allowed)
        if (std::find(tcoords.begin(), tcoords.end(), t0) == tcoords.end())
            tcoords.push_back(t0);

    Poly ps = squarefree_part(p);
    Poly w = Poly::from_roots(tcoords);
    if (!divides(ps, w)) {
        Poly extra = divmod(ps, poly_gcd(ps, w)).first;
        return ContainmentResult{false, "unaccounted t-locus factor: " + to_string(extra)};
    }

    for (const Rational& t0 : tcoords) {
        if (!divides(Poly({-t0, Rational(1)}), p)) continue;  // empty fiber
        Poly d;
        for (const BiPoly& f : nonzero) d = poly_gcd(d, f.eval_t(t0));
        if (d.is_zero())
            return ContainmentResult{false, "entire fiber t = " + to_string(t0) + " identified"};
        std::vector<Rational> ucoords;
        for (const auto& [ta, ua] : allowed)
            if (ta == t0 && std::find(ucoords.begin(), ucoords.end(), ua) == ucoords.end())
                ucoords.push_back(ua);
        Poly ds = squarefree_part(d);
        Poly wu = Poly::from_roots(ucoords);
        if (!divides(ds, wu)) {
            Poly extra = divmod(ds, poly_gcd(ds, wu)).first;
            return ContainmentResult{
                false, "fiber t = " + to_string(t0) + " has factor " + to_string(extra, "u")};
        }
    }
    return ContainmentResult{true, ""};
}

}  // namespace curveglue
