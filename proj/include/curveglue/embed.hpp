#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curve.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "sections.hpp"

namespace curveglue {

// Scale so the first nonzero entry is 1.
inline std::vector<Rational> normalize_projective(std::vector<Rational> v) {
    std::size_t lead = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) {
            lead = i;
            break;
        }
    if (lead == v.size()) throw std::invalid_argument("normalize_projective: zero vector");
    Rational s = v[lead];
    for (Rational& x : v) x /= s;
    return v;
}

inline bool projectively_equal(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) return false;
    return normalize_projective(a) == normalize_projective(b);
}

// Image of a special point under the coordinate rows: the vector of leading
// coefficients at that point, normalized.
inline std::vector<Rational> special_point_image(const SectionLayout& L, const Matrix& coeffs,
                                                 const PointRef& p) {
    std::vector<Rational> row = lambda_row(L, p.comp, p.param);
    std::vector<Rational> img(coeffs.rows());
    for (std::size_t r = 0; r < coeffs.rows(); ++r) {
        Rational v = 0;
        for (std::size_t t = 0; t < L.total; ++t) v += coeffs.at(r, t) * row[t];
        img[r] = v;
    }
    return normalize_projective(std::move(img));
}

// A curve together with the projective coordinates of its pluricanonical
// model: row r of coeffs holds the numerator coefficients of coordinate x_r
// over every component, in the layout's blocks. Equality is literal equality
// of the underlying data; mark images are derived.
struct EmbeddedCurve {
    MarkedCurve marked;
    int k = 0;
    SectionLayout layout;
    Matrix coeffs;
    std::vector<std::vector<Rational>> mark_images;  // by label, normalized

    int n_marks() const { return marked.n_marks(); }
    int n_coords() const { return static_cast<int>(coeffs.rows()); }

    Poly numerator(std::size_t r, int comp) const {
        auto c = static_cast<std::size_t>(comp);
        std::vector<Rational> v(layout.width[c]);
        for (std::size_t w = 0; w < layout.width[c]; ++w) v[w] = coeffs.at(r, layout.offset[c] + w);
        return Poly(std::move(v));
    }

    friend bool operator==(const EmbeddedCurve& a, const EmbeddedCurve& b) {
        return a.marked == b.marked && a.k == b.k && a.coeffs == b.coeffs;
    }
    friend bool operator!=(const EmbeddedCurve& a, const EmbeddedCurve& b) { return !(a == b); }
};

inline std::vector<std::vector<Rational>> compute_mark_images(const MarkedCurve& c,
                                                              const SectionLayout& L,
                                                              const Matrix& coeffs) {
    std::vector<std::vector<Rational>> imgs;
    imgs.reserve(static_cast<std::size_t>(c.n_marks()));
    for (int l = 1; l <= c.n_marks(); ++l) imgs.push_back(special_point_image(L, coeffs, c.mark(l)));
    return imgs;
}

// Embed by the complete system of sections at twist level k. The coordinate
// rows are exactly the reduced echelon basis of the section space, so the
// output is determined by the curve and k alone.
inline EmbeddedCurve embed(const MarkedCurve& c, int k) {
    if (k < 1) throw std::invalid_argument("embed: twist level k must be >= 1");
    if (k == 1)
        for (int g : c.piece_genera())
            if (g != 0)
                throw std::invalid_argument("embed: k = 1 needs genus 0 on every connected piece");
    SectionBasis B = section_space(c, k);
    // no common zero of the coordinates on any component (so every point,
    // including the node branches and infinity, has an image)
    for (int comp = 0; comp < c.n_components(); ++comp) {
        Poly g;
        for (std::size_t r = 0; r < B.basis.rows(); ++r) {
            std::vector<Rational> v(B.layout.width[static_cast<std::size_t>(comp)]);
            for (std::size_t w = 0; w < v.size(); ++w)
                v[w] = B.basis.at(r, B.layout.offset[static_cast<std::size_t>(comp)] + w);
            g = poly_gcd(g, Poly(std::move(v)));
        }
        if (g.degree() != 0) throw std::logic_error("embed: base point on a component");
    }
    for (const Node& e : c.nodes()) {
        if (special_point_image(B.layout, B.basis, e.first) !=
            special_point_image(B.layout, B.basis, e.second))
            throw std::logic_error("embed: node branches map to different points");
    }
    std::vector<std::vector<Rational>> imgs = compute_mark_images(c, B.layout, B.basis);
    return {c, k, std::move(B.layout), std::move(B.basis), std::move(imgs)};
}

// Projective image of the parameter t on one component (limit value at
// special points).
inline std::vector<Rational> point_at(const EmbeddedCurve& e, int comp, const Rational& t) {
    const std::vector<Rational>& s = e.layout.special[static_cast<std::size_t>(comp)];
    if (std::binary_search(s.begin(), s.end(), t))
        return special_point_image(e.layout, e.coeffs, {comp, t});
    std::vector<Rational> v(e.coeffs.rows());
    for (std::size_t r = 0; r < e.coeffs.rows(); ++r) v[r] = e.numerator(r, comp)(t);
    return normalize_projective(std::move(v));
}

// Image of the point at infinity: top coefficients at the largest numerator
// degree appearing on the component.
inline std::vector<Rational> point_at_infinity(const EmbeddedCurve& e, int comp) {
    int dmax = -1;
    for (std::size_t r = 0; r < e.coeffs.rows(); ++r)
        dmax = std::max(dmax, e.numerator(r, comp).degree());
    if (dmax < 0) throw std::logic_error("point_at_infinity: zero coordinates on component");
    std::vector<Rational> v(e.coeffs.rows());
    for (std::size_t r = 0; r < e.coeffs.rows(); ++r) v[r] = e.numerator(r, comp).coeff(dmax);
    return normalize_projective(std::move(v));
}

inline const MarkedCurve& forget(const EmbeddedCurve& e) { return e.marked; }

// Relabel marks. While the component order is unchanged this leaves the
// coordinates untouched; when relabeling reorders components, the coordinate
// blocks move with their components and the rows are rewritten in the
// reversed-column echelon form used by the gluing pipeline.
inline EmbeddedCurve relabel(const EmbeddedCurve& e, const Permutation& rho) {
    CanonicalizedCurve cc = relabel_marks(e.marked, rho);
    SectionLayout L = make_layout(cc.curve, e.k);
    bool id = true;
    for (int c = 0; c < e.marked.n_components(); ++c)
        id = id && cc.comp_map[static_cast<std::size_t>(c)] == c;
    Matrix coeffs;
    if (id) {
        coeffs = e.coeffs;
    } else {
        Matrix m(e.coeffs.rows(), L.total);
        for (int c = 0; c < e.marked.n_components(); ++c) {
            auto oc = static_cast<std::size_t>(c);
            auto nc = static_cast<std::size_t>(cc.comp_map[oc]);
            for (std::size_t r = 0; r < e.coeffs.rows(); ++r)
                for (std::size_t w = 0; w < e.layout.width[oc]; ++w)
                    m.at(r, L.offset[nc] + w) = e.coeffs.at(r, e.layout.offset[oc] + w);
        }
        coeffs = mirrored_row_basis(m);
    }
    std::vector<std::vector<Rational>> imgs = compute_mark_images(cc.curve, L, coeffs);
    return {std::move(cc.curve), e.k, std::move(L), std::move(coeffs), std::move(imgs)};
}

}  // namespace curveglue
