#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace curveglue {

// Univariate polynomial over Q, coefficients ascending, no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> c) : c_(c) { trim(); }
    explicit Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
    explicit Poly(const Rational& c) : c_{c} { trim(); }

    static Poly var() { return Poly({Rational(0), Rational(1)}); }

    static Poly from_roots(const std::vector<Rational>& roots) {
        Poly p({Rational(1)});
        for (const auto& r : roots) p = p * Poly({-r, Rational(1)});
        return p;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rational& lead() const {
        if (is_zero()) throw std::invalid_argument("lead of zero polynomial");
        return c_.back();
    }
    Rational coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const {
        std::vector<Rational> d;
        for (int k = 1; k <= degree(); ++k) d.push_back(Rational(k) * c_[k]);
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (k < a.c_.size()) c[k] += a.c_[k];
            if (k < b.c_.size()) c[k] += b.c_[k];
        }
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (b * Rational(-1)); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Rational& s) {
        std::vector<Rational> c = a.c_;
        for (auto& x : c) x *= s;
        return Poly(std::move(c));
    }
    friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }

    Poly shifted(int k) const {  // multiply by t^k
        if (is_zero()) return {};
        std::vector<Rational> c(c_.size() + static_cast<std::size_t>(k));
        std::copy(c_.begin(), c_.end(), c.begin() + k);
        return Poly(std::move(c));
    }

    bool operator==(const Poly& o) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Poly r = a, q;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rational f = r.lead() / b.lead();
        q = q + (Poly({f})).shifted(k);
        r = r - (b * f).shifted(k);
    }
    return {q, r};
}

inline bool divides(const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return divmod(a, d).second.is_zero();
}

inline Poly monic(const Poly& p) {
    return p.is_zero() ? p : p * (Rational(1) / p.lead());
}

// monic gcd over Q
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline Poly squarefree_part(const Poly& p) {
    if (p.is_zero() || p.degree() == 0) return monic(p);
    return monic(divmod(p, poly_gcd(p, p.derivative())).first);
}

inline Poly poly_pow(const Poly& p, int e) {
    Poly acc({Rational(1)});
    for (int i = 0; i < e; ++i) acc = acc * p;
    return acc;
}

inline std::string to_string(const Poly& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        if (s.empty()) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c > 0 ? " + " : " - ";
            if (c < 0) c = -c;
        }
        bool unit = (c == 1 && k > 0);
        if (!unit) s += to_string(c);
        if (k > 0) {
            if (!unit) s += "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

}  // namespace curveglue
