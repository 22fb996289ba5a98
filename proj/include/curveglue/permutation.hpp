#pragma once

#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace curveglue {

// Permutation of {1,...,n} in one-line notation: img_[j-1] = pi(j).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line) : img_(std::move(one_line)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1])
                throw std::invalid_argument("not a permutation");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        for (int j = 1; j <= n; ++j) v[j - 1] = j;
        return Permutation(std::move(v));
    }

    // the n-cycle (1 2 ... n)
    static Permutation cycle(int n) {
        std::vector<int> v(n);
        for (int j = 1; j < n; ++j) v[j - 1] = j + 1;
        if (n > 0) v[n - 1] = 1;
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int j) const { return img_.at(j - 1); }
    const std::vector<int>& one_line() const { return img_; }

    Permutation inverse() const {
        std::vector<int> v(img_.size());
        for (int j = 1; j <= size(); ++j) v[img_[j - 1] - 1] = j;
        return Permutation(std::move(v));
    }

    bool operator==(const Permutation& o) const = default;

private:
    std::vector<int> img_;
};

// group law: (a*b)(j) = a(b(j))
inline Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> v(a.size());
    for (int j = 1; j <= a.size(); ++j) v[j - 1] = a(b(j));
    return Permutation(std::move(v));
}

// Operadic block substitution S_m x S_n -> S_{m+n-1}: slot i of pi expands to
// an n-block reordered by rho, the remaining slots keep their pi-order.
inline Permutation compose_block(const Permutation& pi, int i, const Permutation& rho) {
    const int m = pi.size(), n = rho.size();
    if (i < 1 || i > m) throw std::invalid_argument("compose_block: slot out of range");
    std::vector<int> v(m + n - 1);
    for (int j = 1; j <= m + n - 1; ++j) {
        int r;
        if (j < i)
            r = pi(j) < pi(i) ? pi(j) : pi(j) + n - 1;
        else if (j < i + n)
            r = pi(i) + rho(j - i + 1) - 1;
        else
            r = pi(j - n + 1) < pi(i) ? pi(j - n + 1) : pi(j - n + 1) + n - 1;
        v[j - 1] = r;
    }
    return Permutation(std::move(v));
}

// Permutation of {0,1,...,n}: img_[j] = pi(j).
class PlusPermutation {
public:
    PlusPermutation() = default;
    explicit PlusPermutation(std::vector<int> images0) : img_(std::move(images0)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("not a permutation of {0..n}");
            seen[v] = true;
        }
    }

    int n() const { return static_cast<int>(img_.size()) - 1; }
    int operator()(int j) const { return img_.at(j); }
    const std::vector<int>& images() const { return img_; }

    bool operator==(const PlusPermutation& o) const = default;

private:
    std::vector<int> img_;
};

// tau_n = (0 1 2 ... n)
inline PlusPermutation tau(int n) {
    std::vector<int> v(n + 1);
    for (int j = 0; j <= n; ++j) v[j] = (j + 1) % (n + 1);
    return PlusPermutation(std::move(v));
}

// order-preserving close-up {1..n} \ {i,j} -> {1..n-2}
// extend to one more symbol, fixed: sigma+ in S_{n+1} with sigma+(n+1) = n+1
inline Permutation extend_one(const Permutation& s) {
    std::vector<int> v = s.one_line();
    v.push_back(s.size() + 1);
    return Permutation(std::move(v));
}

inline int close_up(int ell, int i, int j) {
    if (ell == i || ell == j) throw std::invalid_argument("close_up: excluded label");
    return ell - (ell > i ? 1 : 0) - (ell > j ? 1 : 0);
}

// inverse of close_up: the a-th element of {1..n} \ {i,j}
inline int close_up_inv(int a, int i, int j, int n) {
    if (i > j) std::swap(i, j);
    int ell = a;
    if (ell >= i) ++ell;
    if (ell >= j) ++ell;
    if (ell > n) throw std::invalid_argument("close_up_inv: out of range");
    return ell;
}

// rho \ {i,j}: conjugate rho by the order-preserving bijections that delete
// {i,j} from the domain and {rho(i),rho(j)} from the codomain.
inline Permutation restrict_excluding(const Permutation& rho, int i, int j) {
    const int n = rho.size();
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw std::invalid_argument("restrict_excluding: bad labels");
    std::vector<int> v(n - 2);
    for (int a = 1; a <= n - 2; ++a)
        v[a - 1] = close_up(rho(close_up_inv(a, i, j, n)), rho(i), rho(j));
    return Permutation(std::move(v));
}

}  // namespace curveglue
