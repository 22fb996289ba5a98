#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "curveglue/permutation.hpp"

using namespace curveglue;

namespace {

std::vector<Permutation> all_perms(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// Block-substitution oracle, built from the picture rather than the closed
// formula: lay out m blocks (slot i widened to n), order them by pi, and
// shuffle the wide block internally by rho.
Permutation oracle_compose_block(const Permutation& pi, int i, const Permutation& rho) {
    const int m = pi.size(), n = rho.size();
    std::vector<int> start(m + 1, 0);  // codomain start per block, 1-based
    {
        std::vector<int> by_target(m + 1, 0);
        for (int b = 1; b <= m; ++b) by_target[pi(b)] = b;
        int next = 1;
        for (int t = 1; t <= m; ++t) {
            int b = by_target[t];
            start[b] = next;
            next += (b == i ? n : 1);
        }
    }
    std::vector<int> v(m + n - 1);
    for (int j = 1; j <= m + n - 1; ++j) {
        int b, off;
        if (j < i) {
            b = j;
            off = 0;
        } else if (j < i + n) {
            b = i;
            off = rho(j - i + 1) - 1;
        } else {
            b = j - n + 1;
            off = 0;
        }
        v[j - 1] = start[b] + off;
    }
    return Permutation(std::move(v));
}

Permutation act(const Permutation& sigma, const Permutation& a) { return a * sigma.inverse(); }

Permutation random_perm(std::mt19937_64& g, int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), g);
    return Permutation(std::move(v));
}

}  // namespace

TEST_CASE("compose_block worked examples") {
    CHECK(compose_block(Permutation({2, 1}), 1, Permutation::identity(2)) ==
          Permutation({2, 3, 1}));
    CHECK(compose_block(Permutation::identity(2), 2, Permutation({2, 1})) ==
          Permutation({1, 3, 2}));
}

TEST_CASE("compose_block matches block-layout oracle exhaustively (m,n <= 4)") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (const auto& pi : all_perms(m))
                for (const auto& rho : all_perms(n))
                    for (int i = 1; i <= m; ++i)
                        CHECK(compose_block(pi, i, rho) == oracle_compose_block(pi, i, rho));
}

TEST_CASE("compose_block units") {
    for (int m = 1; m <= 4; ++m)
        for (const auto& pi : all_perms(m)) {
            for (int i = 1; i <= m; ++i)
                CHECK(compose_block(pi, i, Permutation::identity(1)) == pi);
            CHECK(compose_block(Permutation::identity(1), 1, pi) == pi);
        }
}

TEST_CASE("operad equivariance on permutations, exhaustive (m,n <= 3)") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) {
            auto sm = all_perms(m), sn = all_perms(n);
            for (const auto& pi : sm)
                for (const auto& rho : sn)
                    for (const auto& x : sm)
                        for (const auto& y : sn)
                            for (int i = 1; i <= m; ++i)
                                CHECK(act(compose_block(pi, i, rho), compose_block(x, i, y)) ==
                                      compose_block(act(pi, x), pi(i), act(rho, y)));
        }
}

TEST_CASE("operad associativity on permutations, exhaustive (sizes <= 3)") {
    for (int l = 1; l <= 3; ++l)
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n)
                for (const auto& x : all_perms(l))
                    for (const auto& y : all_perms(m))
                        for (const auto& z : all_perms(n)) {
                            // nested: (x o_i y) o_{i+j-1} z = x o_i (y o_j z)
                            for (int i = 1; i <= l; ++i)
                                for (int j = 1; j <= m; ++j)
                                    CHECK(compose_block(compose_block(x, i, y), i + j - 1, z) ==
                                          compose_block(x, i, compose_block(y, j, z)));
                            // disjoint: (x o_i y) o_{j+m-1} z = (x o_j z) o_i y, i < j
                            for (int i = 1; i <= l; ++i)
                                for (int j = i + 1; j <= l; ++j)
                                    CHECK(compose_block(compose_block(x, i, y), j + m - 1, z) ==
                                          compose_block(compose_block(x, j, z), i, y));
                        }
}

TEST_CASE("tau is the full cycle on {0..n}") {
    PlusPermutation t = tau(3);
    CHECK(t(0) == 1);
    CHECK(t(1) == 2);
    CHECK(t(2) == 3);
    CHECK(t(3) == 0);
    CHECK(Permutation::cycle(4) == Permutation({2, 3, 4, 1}));
}

TEST_CASE("restrict_excluding worked examples") {
    CHECK(restrict_excluding(Permutation({3, 4, 2, 1}), 1, 2) == Permutation({2, 1}));
    CHECK(restrict_excluding(Permutation({2, 3, 1}), 1, 3) == Permutation({1}));
}

TEST_CASE("restrict_excluding is functorial in composition") {
    std::mt19937_64 g(23);
    for (int it = 0; it < 400; ++it) {
        std::uniform_int_distribution<int> size(3, 8);
        int n = size(g);
        Permutation rho = random_perm(g, n), sigma = random_perm(g, n);
        std::uniform_int_distribution<int> lab(1, n);
        int i = lab(g), j = lab(g);
        if (i == j) continue;
        CHECK(restrict_excluding(rho * sigma, i, j) ==
              restrict_excluding(rho, sigma(i), sigma(j)) * restrict_excluding(sigma, i, j));
    }
}

TEST_CASE("identity restricts to identity") {
    for (int n = 3; n <= 6; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                CHECK(restrict_excluding(Permutation::identity(n), i, j) ==
                      Permutation::identity(n - 2));
            }
}
