#include "verma/exactla.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <initializer_list>
#include <random>

using namespace verma;

namespace {

RatVector vec(std::initializer_list<int> xs) {
    RatVector v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

std::vector<RatVector> random_rows(std::mt19937& rng, std::size_t count, std::size_t width) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::vector<RatVector> rows(count, RatVector(width));
    for (auto& r : rows)
        for (auto& x : r) x = coef(rng);
    return rows;
}

bool in_canonical_form(const TruncatedSubspace& s) {
    const auto& rows = s.basis();
    const auto& piv = s.pivots();
    if (rows.size() != piv.size()) return false;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (k && piv[k] <= piv[k - 1]) return false;
        for (std::size_t j = 0; j < piv[k]; ++j)
            if (!is_zero(rows[k][j])) return false;
        if (rows[k][piv[k]] != 1) return false;
        for (std::size_t other = 0; other < rows.size(); ++other)
            if (other != k && !is_zero(rows[other][piv[k]])) return false;
    }
    return true;
}

} // namespace

TEST_CASE("span reduces to the canonical echelon basis") {
    TruncatedSubspace s = TruncatedSubspace::span(3, {vec({2, 4, 0}), vec({1, 2, 1}), vec({3, 6, 1})});
    REQUIRE(s.dim() == 2);
    REQUIRE(s.pivots() == std::vector<std::size_t>{0, 2});
    REQUIRE(s.basis()[0] == vec({1, 2, 0}));
    REQUIRE(s.basis()[1] == vec({0, 0, 1}));
    REQUIRE(in_canonical_form(s));
}

TEST_CASE("insert reports whether the span grew") {
    TruncatedSubspace s(3);
    REQUIRE(s.insert(vec({1, 1, 0})));
    REQUIRE_FALSE(s.insert(vec({2, 2, 0})));
    REQUIRE(s.insert(vec({0, 1, 1})));
    REQUIRE_FALSE(s.insert(vec({1, 0, -1})));
    REQUIRE(s.dim() == 2);
    REQUIRE_THROWS_AS(s.insert(vec({1, 0})), std::invalid_argument);
}

TEST_CASE("membership and residue") {
    TruncatedSubspace s = TruncatedSubspace::span(4, {vec({1, 0, 1, 0}), vec({0, 1, 1, 0})});
    REQUIRE(s.contains(vec({2, -3, -1, 0})));
    REQUIRE_FALSE(s.contains(vec({0, 0, 0, 1})));
    // Residues vanish on pivot columns, so membership shows up as zero.
    RatVector r = s.reduce(vec({5, 7, 1, 2}));
    REQUIRE(is_zero(r[0]));
    REQUIRE(is_zero(r[1]));
    REQUIRE(r[2] == -11);
    REQUIRE(r[3] == 2);
}

TEST_CASE("equal spans compare equal regardless of presentation") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        auto rows = random_rows(rng, 6, 5);
        TruncatedSubspace a = TruncatedSubspace::span(5, rows);
        std::shuffle(rows.begin(), rows.end(), rng);
        rows.push_back(rows[0]); // duplicates must not matter
        TruncatedSubspace b = TruncatedSubspace::span(5, rows);
        REQUIRE(a == b);
        REQUIRE(in_canonical_form(a));
    }
    REQUIRE(TruncatedSubspace(3) != TruncatedSubspace(4));
}

TEST_CASE("kernel of an explicit map") {
    // rows = images of e_0..e_2 under (x,y,z) -> (x+z, y+z): kernel is (1,1,-1).
    TruncatedSubspace k = kernel({vec({1, 0}), vec({0, 1}), vec({1, 1})});
    REQUIRE(k.dim() == 1);
    REQUIRE(k.basis()[0] == vec({1, 1, -1}));

    REQUIRE(kernel({}).dim() == 0);
    REQUIRE(kernel({vec({0, 0}), vec({0, 0})}).dim() == 2);
    REQUIRE_THROWS_AS(kernel({vec({1, 0}), vec({1})}), std::invalid_argument);
}

TEST_CASE("kernel satisfies rank-nullity and annihilates the map") {
    std::mt19937 rng(202);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t r = 7, c = 5;
        auto rows = random_rows(rng, r, c);
        TruncatedSubspace image = TruncatedSubspace::span(c, rows);
        TruncatedSubspace k = kernel(rows);
        REQUIRE(k.dim() + image.dim() == r);
        REQUIRE(in_canonical_form(k));
        for (const RatVector& u : k.basis()) {
            RatVector img(c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) img[j] += u[i] * rows[i][j];
            for (const Rational& x : img) REQUIRE(is_zero(x));
        }
    }
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
    std::mt19937 rng(303);
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedSubspace a = TruncatedSubspace::span(6, random_rows(rng, 3, 6));
        TruncatedSubspace b = TruncatedSubspace::span(6, random_rows(rng, 3, 6));
        TruncatedSubspace s = sum(a, b);
        TruncatedSubspace i = intersect(a, b);
        REQUIRE(s.dim() + i.dim() == a.dim() + b.dim());
        for (const RatVector& v : i.basis()) {
            REQUIRE(a.contains(v));
            REQUIRE(b.contains(v));
        }
        for (const RatVector& v : a.basis()) REQUIRE(s.contains(v));
        REQUIRE(intersect(a, a) == a);
        REQUIRE(sum(a, a) == a);
    }
    REQUIRE_THROWS_AS(sum(TruncatedSubspace(2), TruncatedSubspace(3)), std::invalid_argument);
    REQUIRE_THROWS_AS(intersect(TruncatedSubspace(2), TruncatedSubspace(3)), std::invalid_argument);
}

TEST_CASE("intersection of transverse planes in Q^3 is a line") {
    TruncatedSubspace a = TruncatedSubspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})});
    TruncatedSubspace b = TruncatedSubspace::span(3, {vec({0, 1, 0}), vec({0, 0, 1})});
    TruncatedSubspace i = intersect(a, b);
    REQUIRE(i.dim() == 1);
    REQUIRE(i.basis()[0] == vec({0, 1, 0}));
}
