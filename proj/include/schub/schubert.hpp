#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "schub/code.hpp"

namespace schub {

/// Multivariate polynomial with arbitrary-precision integer coefficients,
/// stored sparsely by exponent vector. No zero coefficients are kept.
class SparsePoly {
public:
    explicit SparsePoly(int nvars = 0) : nvars_(nvars) {}
    static SparsePoly constant(int nvars, const mpz_class& c);
    static SparsePoly monomial(std::vector<int> exponents, const mpz_class& coeff);

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& exponents, const mpz_class& coeff);
    mpz_class coefficient(const std::vector<int>& exponents) const;
    mpz_class coefficient_padded(const ContentVec& alpha) const;  // zero-pads/screens
    mpz_class sum_of_coefficients() const;                        // value at all ones

    SparsePoly& operator+=(const SparsePoly& other);
    SparsePoly& operator-=(const SparsePoly& other);
    SparsePoly operator*(const SparsePoly& other) const;
    bool operator==(const SparsePoly&) const = default;

    /// Divided difference: (f - swap_i(f)) / (x_i - x_{i+1}), expanded
    /// monomial by monomial as a geometric sum. 1-indexed, i < nvars.
    SparsePoly divided_difference(int i) const;

    /// Same polynomial over a larger variable set.
    SparsePoly embedded(int nvars) const;

    std::string to_string() const;

private:
    int nvars_ = 0;
    std::map<std::vector<int>, mpz_class> terms_;
};

enum class DescentStrategy { SmallestAscent, LargestAscent };

/// Ground-truth Schubert polynomials from the divided-difference recursion,
/// starting with the staircase monomial of the longest element. Memoized;
/// safe for concurrent use.
class SchubertOracle {
public:
    explicit SchubertOracle(DescentStrategy strategy = DescentStrategy::SmallestAscent,
                            int max_size = 9)
        : strategy_(strategy), max_size_(max_size) {}

    /// w must be a full permutation of [n], n <= max_size.
    SparsePoly polynomial(const OneLine& w);
    mpz_class coefficient(const OneLine& w, const ContentVec& alpha);
    mpz_class principal_specialization(const OneLine& w);

private:
    SparsePoly compute(const OneLine& w);

    DescentStrategy strategy_;
    int max_size_;
    std::mutex mutex_;
    std::map<OneLine, SparsePoly> memo_;
};

}  // namespace schub
