#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "schub/diagram.hpp"
#include "schub/schubert.hpp"
#include "test_util.hpp"

using namespace schub;

TEST_CASE("sparse polynomial arithmetic") {
    SparsePoly p = SparsePoly::monomial({1, 0}, 2);
    p += SparsePoly::monomial({0, 1}, 3);
    SparsePoly q = SparsePoly::monomial({1, 1}, 1);
    SparsePoly prod = p * q;
    CHECK(prod.coefficient({2, 1}) == 2);
    CHECK(prod.coefficient({1, 2}) == 3);
    CHECK(prod.terms().size() == 2);
    p -= p;
    CHECK(p.is_zero());
    CHECK(SparsePoly::monomial({1}, 0).is_zero());
}

TEST_CASE("divided difference basics") {
    // x1^2 x2 -> x1 x2 under the first difference, x1^2 under the second
    SparsePoly staircase = SparsePoly::monomial({2, 1, 0}, 1);
    SparsePoly d1 = staircase.divided_difference(1);
    CHECK(d1.coefficient({1, 1, 0}) == 1);
    CHECK(d1.terms().size() == 1);
    SparsePoly d2 = staircase.divided_difference(2);
    CHECK(d2.coefficient({2, 0, 0}) == 1);
    CHECK(d2.terms().size() == 1);
    // symmetric in x_i, x_{i+1} kills the difference
    SparsePoly sym = SparsePoly::monomial({1, 1, 0}, 5);
    CHECK(sym.divided_difference(1).is_zero());
}

TEST_CASE("base cases of the recursion") {
    SchubertOracle oracle;
    SparsePoly top = oracle.polynomial({3, 2, 1});
    CHECK(top.terms().size() == 1);
    CHECK(top.coefficient({2, 1, 0}) == 1);
    SparsePoly one = oracle.polynomial({1, 2, 3});
    CHECK(one.coefficient({0, 0, 0}) == 1);
    CHECK(one.terms().size() == 1);
    CHECK(oracle.polynomial({1, 3, 2}).to_string() == "1*x2^1 + 1*x1^1");
}

TEST_CASE("support of the running example") {
    SchubertOracle oracle;
    SparsePoly s = oracle.polynomial({3, 1, 5, 2, 4});
    CHECK(s.coefficient_padded({2, 1, 1}) > 0);
    CHECK(s.coefficient_padded({4, 0, 0}) == 0);
    // six column-strict fillings but five distinct contents, each coefficient 1
    CHECK(s.sum_of_coefficients() == 5);
    CHECK(s.terms().size() == 5);
    CHECK(s.coefficient_padded({2, 1, 1}) == 1);
}

TEST_CASE("large single coefficient from the worked expansion") {
    SchubertOracle oracle;
    CHECK(oracle.coefficient({5, 3, 8, 6, 1, 2, 4, 7}, {4, 2, 5, 3}) == 1);
}

TEST_CASE("coefficient lookups") {
    SchubertOracle oracle;
    CHECK(oracle.coefficient({1, 2}, {}) == 1);
    CHECK(oracle.coefficient({3, 1, 5, 2, 4}, {2, 2, 0}) ==
          oracle.polynomial({3, 1, 5, 2, 4}).coefficient({2, 2, 0, 0, 0}));
    CHECK(oracle.coefficient({1, 3, 2}, {0, 0, 0, 5}) == 0);
    CHECK(oracle.coefficient({1, 3, 2}, {-1}) == 0);
}

TEST_CASE("principal specialization") {
    SchubertOracle oracle;
    CHECK(oracle.principal_specialization({4, 3, 2, 1}) == 1);
    CHECK(oracle.principal_specialization({1, 3, 2}) == 2);
    for (const OneLine& w : testutil::all_permutations(5))
        CHECK(oracle.principal_specialization(w) >= count_132(w) + 1);
}

TEST_CASE("path independence of the recursion") {
    SchubertOracle smallest(DescentStrategy::SmallestAscent);
    SchubertOracle largest(DescentStrategy::LargestAscent);
    for (const OneLine& w : testutil::all_permutations(5))
        CHECK(smallest.polynomial(w) == largest.polynomial(w));
}

TEST_CASE("stability under appending a fixed point") {
    SchubertOracle oracle;
    for (const OneLine& w : testutil::all_permutations(4)) {
        OneLine extended = w;
        extended.push_back(5);
        CHECK(oracle.polynomial(w).embedded(5) == oracle.polynomial(extended));
    }
}

TEST_CASE("coefficients are nonnegative with the right degree") {
    SchubertOracle oracle;
    std::mt19937 rng(59);
    for (const OneLine& w : testutil::all_permutations(6)) {
        const SparsePoly s = oracle.polynomial(w);
        const long boxes = oneline_to_code(w).box_count();
        for (const auto& [exps, coeff] : s.terms()) {
            CHECK(coeff > 0);
            long degree = 0;
            for (int e : exps) degree += e;
            CHECK(degree == boxes);
        }
    }
    std::vector<OneLine> sample = testutil::all_permutations(7);
    std::shuffle(sample.begin(), sample.end(), rng);
    sample.resize(60);
    for (const OneLine& w : sample) {
        const SparsePoly s = oracle.polynomial(w);
        for (const auto& [exps, coeff] : s.terms()) CHECK(coeff > 0);
    }
}

TEST_CASE("budget and validation") {
    SchubertOracle oracle;
    CHECK_THROWS_AS(oracle.polynomial(OneLine{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}),
                    std::runtime_error);
    CHECK_THROWS_AS(oracle.polynomial(OneLine{1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(oracle.polynomial(OneLine{2, 3}), std::invalid_argument);
}
