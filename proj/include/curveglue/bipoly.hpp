#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace curveglue {

// Bivariate polynomial in Q[t,u], stored recursively: coefficient of u^k is a
// Poly in t. Used for the pairwise-identification systems of the embedding
// certificates; sizes stay at desk scale.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::vector<Poly> by_u) : c_(std::move(by_u)) { trim(); }
    explicit BiPoly(const Poly& in_t) : c_{in_t} { trim(); }

    static BiPoly var_t() { return BiPoly(Poly::var()); }
    static BiPoly var_u() { return BiPoly({Poly(), Poly({Rational(1)})}); }
    static BiPoly constant(const Rational& c) { return BiPoly(Poly({c})); }

    int degree_u() const { return static_cast<int>(c_.size()) - 1; }
    int degree_t() const {
        int d = -1;
        for (const auto& p : c_) d = std::max(d, p.degree());
        return d;
    }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return is_zero() || (degree_u() == 0 && c_[0].degree() <= 0); }
    const Poly& coeff_u(int k) const {
        static const Poly zero{};
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : zero;
    }
    const std::vector<Poly>& coeffs_u() const { return c_; }
    const Poly& lead_u() const {
        if (is_zero()) throw std::invalid_argument("lead of zero bipoly");
        return c_.back();
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        std::vector<Poly> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k < a.c_.size()) c[k] = c[k] + a.c_[k];
            if (k < b.c_.size()) c[k] = c[k] + b.c_[k];
        }
        return BiPoly(std::move(c));
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + b * Rational(-1); }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Poly> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return BiPoly(std::move(c));
    }
    friend BiPoly operator*(const BiPoly& a, const Rational& s) {
        std::vector<Poly> c = a.c_;
        for (auto& p : c) p = p * s;
        return BiPoly(std::move(c));
    }
    friend BiPoly operator*(const BiPoly& a, const Poly& s) {
        std::vector<Poly> c = a.c_;
        for (auto& p : c) p = p * s;
        return BiPoly(std::move(c));
    }

    Poly eval_t(const Rational& t0) const {  // specialize t, result in u
        std::vector<Rational> v;
        v.reserve(c_.size());
        for (const auto& p : c_) v.push_back(p(t0));
        return Poly(std::move(v));
    }
    Poly eval_u(const Rational& u0) const {  // specialize u, result in t
        Poly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * Rational(u0) + *it;
        return acc;
    }
    Rational operator()(const Rational& t0, const Rational& u0) const {
        return eval_t(t0)(u0);
    }

    // swap the roles of t and u
    BiPoly transposed() const {
        std::vector<Poly> out(static_cast<std::size_t>(std::max(degree_t(), -1)) + 1);
        for (int a = 0; a <= degree_u(); ++a)
            for (int b = 0; b <= c_[a].degree(); ++b) {
                if (c_[a].coeff(b) == 0) continue;
                std::vector<Rational> v(static_cast<std::size_t>(a) + 1);
                v[a] = c_[a].coeff(b);
                out[b] = out[b] + Poly(std::move(v));
            }
        while (!out.empty() && out.back().is_zero()) out.pop_back();
        return BiPoly(std::move(out));
    }

    bool operator==(const BiPoly& o) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Poly> c_;
};

// exact division when the divisor is monic in u (remainder must vanish)
inline BiPoly divide_exact_monic_u(const BiPoly& a, const BiPoly& d) {
    if (d.is_zero() || d.lead_u().degree() != 0 || d.lead_u().coeff(0) != 1)
        throw std::invalid_argument("divisor not monic in u");
    std::vector<Poly> rem(a.coeffs_u());
    BiPoly r(std::move(rem)), q;
    while (!r.is_zero() && r.degree_u() >= d.degree_u()) {
        int k = r.degree_u() - d.degree_u();
        Poly f = r.lead_u();
        std::vector<Poly> qk(static_cast<std::size_t>(k) + 1);
        qk[k] = f;
        BiPoly m(std::move(qk));
        q = q + m;
        r = r - m * d;
    }
    if (!r.is_zero()) throw std::invalid_argument("inexact bivariate division");
    return q;
}

inline Poly content_t(const BiPoly& f) {
    Poly g;
    for (const auto& p : f.coeffs_u()) g = poly_gcd(g, p);
    return g;  // monic, or zero for f == 0
}

inline BiPoly primitive_part(const BiPoly& f) {
    if (f.is_zero()) return f;
    Poly c = content_t(f);
    std::vector<Poly> out;
    out.reserve(f.coeffs_u().size());
    for (const auto& p : f.coeffs_u()) out.push_back(divmod(p, c).first);
    return BiPoly(std::move(out));
}

// gcd in Q[t][u] via primitive-part Euclid with pseudo-division; result has
// monic content and monic-lead leading coefficient so it is canonical.
inline BiPoly bipoly_gcd(BiPoly a, BiPoly b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Poly cont = poly_gcd(content_t(a), content_t(b));
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree_u() < b.degree_u()) std::swap(a, b);
    while (!b.is_zero() && b.degree_u() > 0) {
        // pseudo remainder of a by b in u
        BiPoly r = a;
        const Poly& lb = b.lead_u();
        while (!r.is_zero() && r.degree_u() >= b.degree_u()) {
            int k = r.degree_u() - b.degree_u();
            Poly f = r.lead_u();
            std::vector<Poly> mk(static_cast<std::size_t>(k) + 1);
            mk[k] = f;
            r = r * lb - BiPoly(std::move(mk)) * b;
        }
        a = std::move(b);
        b = r.is_zero() ? BiPoly{} : primitive_part(r);
    }
    if (!b.is_zero()) return BiPoly(cont);  // b is a nonzero poly in t, primitive => unit
    BiPoly g = primitive_part(a);
    // normalize: leading coefficient in u made monic in t
    Poly norm = g.lead_u();
    std::vector<Poly> out;
    for (const auto& p : g.coeffs_u()) out.push_back(p * (Rational(1) / norm.lead()));
    return BiPoly(std::move(out)) * BiPoly(cont);
}

inline std::string to_string(const BiPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int k = f.degree_u(); k >= 0; --k) {
        const Poly& p = f.coeff_u(k);
        if (p.is_zero()) continue;
        if (!s.empty()) s += " + ";
        if (k == 0) {
            s += to_string(p);
            continue;
        }
        std::string us = k == 1 ? "u" : "u^" + std::to_string(k);
        if (p == Poly({Rational(1)}))
            s += us;
        else
            s += "(" + to_string(p) + ")*" + us;
    }
    return s;
}

}  // namespace curveglue
