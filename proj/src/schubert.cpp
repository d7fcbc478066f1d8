#include "schub/schubert.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace schub {

SparsePoly SparsePoly::constant(int nvars, const mpz_class& c) {
    SparsePoly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

SparsePoly SparsePoly::monomial(std::vector<int> exponents, const mpz_class& coeff) {
    SparsePoly p(static_cast<int>(exponents.size()));
    p.add_term(exponents, coeff);
    return p;
}

void SparsePoly::add_term(const std::vector<int>& exponents, const mpz_class& coeff) {
    if (static_cast<int>(exponents.size()) != nvars_)
        throw std::invalid_argument("exponent vector length mismatch");
    if (coeff == 0) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

mpz_class SparsePoly::coefficient(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class SparsePoly::coefficient_padded(const ContentVec& alpha) const {
    std::vector<int> e(nvars_, 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) return 0;
        if (static_cast<int>(i) < nvars_)
            e[i] = alpha[i];
        else if (alpha[i] != 0)
            return 0;
    }
    return coefficient(e);
}

mpz_class SparsePoly::sum_of_coefficients() const {
    mpz_class total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
    if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    if (&other == this) {
        for (auto& [e, c] : terms_) c *= 2;
        return *this;
    }
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
    if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    if (&other == this) {
        terms_.clear();
        return *this;
    }
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

SparsePoly SparsePoly::operator*(const SparsePoly& other) const {
    if (other.nvars_ != nvars_) throw std::invalid_argument("variable count mismatch");
    SparsePoly out(nvars_);
    std::vector<int> e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

SparsePoly SparsePoly::divided_difference(int i) const {
    if (i < 1 || i >= nvars_) throw std::invalid_argument("divided difference index out of range");
    SparsePoly out(nvars_);
    std::vector<int> e(nvars_);
    for (const auto& [exps, coeff] : terms_) {
        const int p = exps[i - 1], q = exps[i];
        if (p == q) continue;
        e = exps;
        if (p > q) {
            for (int t = 0; t < p - q; ++t) {
                e[i - 1] = q + t;
                e[i] = p - 1 - t;
                out.add_term(e, coeff);
            }
        } else {
            for (int t = 0; t < q - p; ++t) {
                e[i - 1] = p + t;
                e[i] = q - 1 - t;
                out.add_term(e, -coeff);
            }
        }
    }
    return out;
}

SparsePoly SparsePoly::embedded(int nvars) const {
    if (nvars < nvars_) throw std::invalid_argument("cannot shrink the variable set");
    SparsePoly out(nvars);
    std::vector<int> e(nvars, 0);
    for (const auto& [exps, coeff] : terms_) {
        std::copy(exps.begin(), exps.end(), e.begin());
        out.add_term(e, coeff);
    }
    return out;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i]) os << "*x" << (i + 1) << "^" << e[i];
    }
    return os.str();
}

SparsePoly SchubertOracle::polynomial(const OneLine& w) {
    const int n = static_cast<int>(w.size());
    if (n > max_size_)
        throw std::runtime_error("permutation size beyond the expansion budget");
    {
        std::vector<char> used(n + 1, 0);
        for (int v : w) {
            if (v < 1 || v > n || used[v])
                throw std::invalid_argument("full permutation required");
            used[v] = 1;
        }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return compute(w);
}

SparsePoly SchubertOracle::compute(const OneLine& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    const int n = static_cast<int>(w.size());
    int ascent = -1;
    if (strategy_ == DescentStrategy::SmallestAscent) {
        for (int i = 1; i < n; ++i)
            if (w[i - 1] < w[i]) { ascent = i; break; }
    } else {
        for (int i = n - 1; i >= 1; --i)
            if (w[i - 1] < w[i]) { ascent = i; break; }
    }
    SparsePoly result(n);
    if (ascent < 0) {  // longest element: staircase monomial
        std::vector<int> e(n);
        for (int i = 0; i < n; ++i) e[i] = n - 1 - i;
        result = SparsePoly::monomial(e, 1);
    } else {
        OneLine longer = w;
        std::swap(longer[ascent - 1], longer[ascent]);
        result = compute(longer).divided_difference(ascent);
    }
    memo_.emplace(w, result);
    return result;
}

mpz_class SchubertOracle::coefficient(const OneLine& w, const ContentVec& alpha) {
    return polynomial(w).coefficient_padded(alpha);
}

mpz_class SchubertOracle::principal_specialization(const OneLine& w) {
    return polynomial(w).sum_of_coefficients();
}

}  // namespace schub
