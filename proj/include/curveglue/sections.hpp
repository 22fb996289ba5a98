#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curve.hpp"
#include "matrix.hpp"
#include "rational.hpp"

namespace curveglue {

// Coefficient layout for sections at twist level k. On a component with m
// special points s_1..s_m, a section is num(t) / prod (t - s_i)^k with
// deg num <= k(m-2); its k(m-2)+1 numerator coefficients (low degree first)
// occupy one contiguous block of the global coefficient vector.
struct SectionLayout {
    int k = 0;
    std::vector<std::vector<Rational>> special;  // per component, sorted
    std::vector<std::size_t> offset;             // block start per component
    std::vector<std::size_t> width;              // block length k(m-2)+1
    std::size_t total = 0;

    int n_components() const { return static_cast<int>(special.size()); }

    bool operator==(const SectionLayout& o) const = default;
};

inline SectionLayout make_layout(const MarkedCurve& c, int k) {
    if (k < 1) throw std::invalid_argument("twist level k must be >= 1");
    SectionLayout L;
    L.k = k;
    L.special.resize(static_cast<std::size_t>(c.n_components()));
    L.offset.resize(static_cast<std::size_t>(c.n_components()));
    L.width.resize(static_cast<std::size_t>(c.n_components()));
    for (int i = 0; i < c.n_components(); ++i) {
        auto ci = static_cast<std::size_t>(i);
        L.special[ci] = c.special_points(i);
        L.offset[ci] = L.total;
        L.width[ci] = static_cast<std::size_t>(k) * (L.special[ci].size() - 2) + 1;
        L.total += L.width[ci];
    }
    return L;
}

// Functional sending a coefficient vector to the leading coefficient of
// (t - p)^k f at the special point p, i.e. num(p) / prod_{q != p} (p - q)^k,
// returned as a row over the global coefficient space.
inline std::vector<Rational> lambda_row(const SectionLayout& L, int comp, const Rational& p) {
    auto c = static_cast<std::size_t>(comp);
    Rational denom = 1;
    bool found = false;
    for (const Rational& q : L.special[c]) {
        if (q == p)
            found = true;
        else
            denom *= rat_pow(p - q, L.k);
    }
    if (!found) throw std::invalid_argument("lambda_row: not a special point of the component");
    std::vector<Rational> row(L.total);
    Rational pd = 1;
    for (std::size_t w = 0; w < L.width[c]; ++w) {
        row[L.offset[c] + w] = pd / denom;
        pd *= p;
    }
    return row;
}

inline Rational lambda_value(const SectionLayout& L, int comp, const Rational& p,
                             const std::vector<Rational>& coeffs) {
    std::vector<Rational> row = lambda_row(L, comp, p);
    if (coeffs.size() != L.total) throw std::invalid_argument("lambda_value: length mismatch");
    Rational v = 0;
    for (std::size_t t = 0; t < L.total; ++t) v += row[t] * coeffs[t];
    return v;
}

// Expected dimension (2k-1)(g-1) + kn for a stable type in the range where
// the count is valid.
inline int h0_expected(int g, int n, int k) {
    if (g < 0 || n < 0) throw std::invalid_argument("h0_expected: bad type");
    if (n < 3 - 2 * g) throw std::invalid_argument("h0_expected: unstable type");
    if (k < 1 || (k == 1 && g > 0))
        throw std::invalid_argument("h0_expected: need k >= 2 (k >= 1 in genus 0)");
    return (2 * k - 1) * (g - 1) + k * n;
}

// Degree of the embedding line bundle, k(2g - 2 + n).
inline int degree_total(int g, int n, int k) { return k * (2 * g - 2 + n); }

struct SectionBasis {
    SectionLayout layout;
    Matrix basis;  // dim x layout.total, reduced echelon rows
};

// Section space at twist level k: sections with pole order <= k at every
// special point of every component, subject to the matching condition
// lambda_+ = (-1)^k lambda_- across each node. Basis rows are the reduced
// echelon form of the constraint kernel.
inline SectionBasis section_space(const MarkedCurve& c, int k) {
    SectionLayout L = make_layout(c, k);
    Matrix constraints(0, L.total);
    Rational sgn = (k % 2 == 0) ? 1 : -1;
    for (const Node& e : c.nodes()) {
        std::vector<Rational> r1 = lambda_row(L, e.first.comp, e.first.param);
        std::vector<Rational> r2 = lambda_row(L, e.second.comp, e.second.param);
        for (std::size_t t = 0; t < L.total; ++t) r1[t] -= sgn * r2[t];
        constraints.append_row(r1);
    }
    Subspace ker = kernel(constraints);
    // The node conditions are independent whenever k >= 2, or k = 1 with a
    // mark on every connected piece; there the dimension must match the
    // (2k-1)(g-1) + kn count with g - 1 additive over pieces.
    bool exact = k >= 2;
    if (k == 1) {
        std::vector<bool> marked_piece(static_cast<std::size_t>(c.n_connected_pieces()), false);
        std::vector<int> piece = c.piece_of_comp();
        for (const PointRef& m : c.marks())
            marked_piece[static_cast<std::size_t>(piece[static_cast<std::size_t>(m.comp)])] = true;
        exact = true;
        for (bool b : marked_piece) exact = exact && b;
    }
    if (exact) {
        long expected = static_cast<long>(2 * k - 1) * (c.total_genus() - 1) +
                        static_cast<long>(k) * c.n_marks();
        if (static_cast<long>(ker.dim()) != expected)
            throw std::logic_error("section space dimension mismatch");
    }
    return {std::move(L), std::move(ker.basis)};
}

}  // namespace curveglue
