#include "gkm/linalg.hpp"
#include "gkm/poly.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace gkm;

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-7/2") == Rational(-7, 2));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(format_rational(Rational(-7, 2)) == "-7/2");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("rref rank agrees with the Bareiss oracle on random matrices") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + rng() % 6;
        const std::size_t cols = 1 + rng() % 6;
        QMatrix m(rows, QVector(cols));
        for (auto& row : m)
            for (auto& x : row) x = Rational(num(rng), den(rng));
        CHECK(matrix_rank(m, cols) == oracles::bareiss_rank(m, cols));
    }
}

TEST_CASE("nullspace vectors solve the system and count the corank") {
    std::mt19937 rng(991);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng() % 5;
        const std::size_t cols = 1 + rng() % 6;
        QMatrix m(rows, QVector(cols));
        for (auto& row : m)
            for (auto& x : row) x = Rational(num(rng));
        const RankNullspace sol = rank_and_nullspace(m, cols);
        CHECK(sol.rank + sol.nullspace.size() == cols);
        for (const auto& v : sol.nullspace)
            for (const auto& row : m) CHECK(dot(row, v) == 0);
        CHECK(span_rank(sol.nullspace, cols) == sol.nullspace.size());
    }
}

TEST_CASE("monomial bases are deterministic and have the right size") {
    const auto& b = MonomialBasis::get(3, 2);
    CHECK(b.size() == 6);
    CHECK(b.monomials.front() == std::vector<int>{2, 0, 0});
    CHECK(b.monomials.back() == std::vector<int>{0, 0, 2});
    for (int r = 1; r <= 4; ++r)
        for (int d = 0; d <= 5; ++d)
            CHECK(static_cast<long long>(MonomialBasis::get(r, d).size()) ==
                  dim_homogeneous(r, d));
}

TEST_CASE("polynomial arithmetic") {
    const HomogeneousPoly x = HomogeneousPoly::linear_form({Rational(1), Rational(0)});
    const HomogeneousPoly y = HomogeneousPoly::linear_form({Rational(0), Rational(1)});
    const HomogeneousPoly xy = poly_multiply(x, y);
    CHECK(xy.degree == 2);
    CHECK(poly_multiply(x, y).coeffs == poly_multiply(y, x).coeffs);
    const HomogeneousPoly sum = poly_add(poly_multiply(x, x), poly_scale(xy, Rational(2)));
    // (x + y)^2 = x^2 + 2xy + y^2
    const HomogeneousPoly xpy = poly_add(x, y);
    CHECK(poly_multiply(xpy, xpy).coeffs ==
          poly_add(sum, poly_multiply(y, y)).coeffs);
    CHECK_THROWS_AS(poly_add(x, xy), std::invalid_argument);
}

TEST_CASE("substitute_linear evaluates a coordinate change") {
    // p = x^2 - y^2 under x -> u + v, y -> u - v gives 4uv.
    HomogeneousPoly p = HomogeneousPoly::zero(2, 2);
    const auto& basis = MonomialBasis::get(2, 2);
    p.coeffs[basis.index.at({2, 0})] = 1;
    p.coeffs[basis.index.at({0, 2})] = -1;
    const HomogeneousPoly q = substitute_linear(
        p, {{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}}, 2);
    CHECK(q.coeffs[basis.index.at({1, 1})] == 4);
    CHECK(q.coeffs[basis.index.at({2, 0})] == 0);
    CHECK(q.coeffs[basis.index.at({0, 2})] == 0);
}

TEST_CASE("divisibility constraints cut out exactly the multiples") {
    // The solution space of the constraints has the dimension of the degree
    // (d-1) part, since multiplication by a linear form is injective.
    const std::vector<QVector> alphas = {
        {Rational(1), Rational(0)},
        {Rational(1), Rational(-1)},
        {Rational(2), Rational(3)},
        {Rational(0), Rational(1)},
    };
    for (const auto& alpha : alphas) {
        for (int d = 1; d <= 5; ++d) {
            const QMatrix c = divisibility_constraints(2, d, alpha);
            const std::size_t vars = MonomialBasis::get(2, d).size();
            const long long nullity =
                static_cast<long long>(vars) - static_cast<long long>(matrix_rank(c, vars));
            CHECK(nullity == dim_homogeneous(2, d - 1));
        }
    }
    for (int d = 1; d <= 4; ++d) {
        const QVector alpha = {Rational(1), Rational(-2), Rational(1, 3)};
        const QMatrix c = divisibility_constraints(3, d, alpha);
        const std::size_t vars = MonomialBasis::get(3, d).size();
        const long long nullity =
            static_cast<long long>(vars) - static_cast<long long>(matrix_rank(c, vars));
        CHECK(nullity == dim_homogeneous(3, d - 1));
    }
}

TEST_CASE("an explicit multiple passes, a non-multiple fails") {
    // alpha = x - y; p = (x - y) * x satisfies, x^2 does not.
    const QVector alpha = {Rational(1), Rational(-1)};
    const QMatrix c = divisibility_constraints(2, 2, alpha);
    const auto& basis = MonomialBasis::get(2, 2);
    QVector multiple(basis.size(), Rational(0));
    multiple[basis.index.at({2, 0})] = 1;
    multiple[basis.index.at({1, 1})] = -1;
    QVector nonmultiple(basis.size(), Rational(0));
    nonmultiple[basis.index.at({2, 0})] = 1;
    bool multiple_ok = true, nonmultiple_ok = true;
    for (const auto& row : c) {
        if (dot(row, multiple) != 0) multiple_ok = false;
        if (dot(row, nonmultiple) != 0) nonmultiple_ok = false;
    }
    CHECK(multiple_ok);
    CHECK_FALSE(nonmultiple_ok);
}

TEST_CASE("hyperplane restriction matches division after coordinate change") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int rank = 2; rank <= 3; ++rank) {
        for (int trial = 0; trial < 8; ++trial) {
            QVector alpha(static_cast<std::size_t>(rank));
            do {
                for (auto& x : alpha) x = Rational(coeff(rng));
            } while (is_zero(alpha));
            for (int d = 0; d <= 4; ++d) {
                const QMatrix a = divisibility_constraints(rank, d, alpha);
                const QMatrix b = oracles::division_constraints(rank, d, alpha);
                const std::size_t vars = MonomialBasis::get(rank, d).size();
                // Same solution set: equal ranks of each and of the union.
                QMatrix both = a;
                both.insert(both.end(), b.begin(), b.end());
                const std::size_t ra = matrix_rank(a, vars);
                CHECK(ra == matrix_rank(b, vars));
                CHECK(ra == matrix_rank(both, vars));
            }
        }
    }
}
