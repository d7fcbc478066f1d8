#pragma once

// Brute-force reference computations for the test suites. Everything here
// works straight from definitions and stays independent of the library's
// algorithmic paths.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "schub/code.hpp"
#include "schub/diagram.hpp"
#include "schub/tableau.hpp"

namespace testutil {

inline std::vector<schub::OneLine> all_permutations(int n) {
    schub::OneLine w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<schub::OneLine> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// Rothe diagram straight from the definition, on an n x n grid.
inline schub::Diagram rothe_by_definition(const schub::OneLine& w) {
    const int n = static_cast<int>(w.size());
    std::vector<int> inverse(n + 1, 0);
    for (int i = 1; i <= n; ++i) inverse[w[i - 1]] = i;
    std::vector<schub::Box> boxes;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (j < w[i - 1] && i < inverse[j]) boxes.push_back({i, j});
    return schub::Diagram(n, std::move(boxes));
}

inline bool avoids_2143(const schub::OneLine& w) {
    const int n = static_cast<int>(w.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l)
                    if (w[j] < w[i] && w[i] < w[l] && w[l] < w[k]) return false;
    return true;
}

// Flagged column-injective fillings (blanks allowed) with content alpha.
inline long count_fci_with_content(const schub::Diagram& d, const schub::ContentVec& alpha) {
    const auto& boxes = d.boxes();
    const int n = d.ambient();
    std::vector<int> remaining(n + 1, 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (static_cast<int>(i) >= n && alpha[i] != 0) return 0;
        if (static_cast<int>(i) < n) remaining[i + 1] = alpha[i];
    }
    std::vector<std::vector<char>> used(n + 1, std::vector<char>(n + 1, 0));
    long found = 0;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == boxes.size()) {
            bool all_placed = true;
            for (int v = 1; v <= n; ++v)
                if (remaining[v] != 0) all_placed = false;
            if (all_placed) ++found;
            return;
        }
        const schub::Box b = boxes[idx];
        self(self, idx + 1);  // leave the box blank
        for (int v = 1; v <= b.row; ++v) {
            if (remaining[v] == 0 || used[b.col][v]) continue;
            used[b.col][v] = 1;
            --remaining[v];
            self(self, idx + 1);
            ++remaining[v];
            used[b.col][v] = 0;
        }
    };
    rec(rec, 0);
    return found;
}

// Existence of a fully-labelled flagged column-injective filling of content
// alpha. Searches column label sets in the column-strict normal form, which
// is equivalent for existence; scales to [5]^2 diagrams.
inline bool perfect_filling_exists(const schub::Diagram& d, const schub::ContentVec& alpha) {
    const int n = d.ambient();
    std::vector<int> remaining(n + 1, 0);
    long total = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) return false;
        if (static_cast<int>(i) >= n) {
            if (alpha[i] != 0) return false;
            continue;
        }
        remaining[i + 1] = alpha[i];
        total += alpha[i];
    }
    if (total != d.box_count()) return false;

    // per column: strictly increasing label tuples with label_t <= row_t
    std::vector<std::vector<std::vector<int>>> column_options;
    for (int c = 1; c <= n; ++c) {
        const std::vector<int> rows = d.column_rows(c);
        if (rows.empty()) continue;
        std::vector<std::vector<int>> options;
        std::vector<int> chosen;
        auto gen = [&](auto&& self, std::size_t t, int minimum) -> void {
            if (t == rows.size()) {
                options.push_back(chosen);
                return;
            }
            for (int v = minimum; v <= rows[t]; ++v) {
                chosen.push_back(v);
                self(self, t + 1, v + 1);
                chosen.pop_back();
            }
        };
        gen(gen, 0, 1);
        if (options.empty()) return false;
        column_options.push_back(std::move(options));
    }
    auto rec = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == column_options.size()) return true;
        for (const auto& option : column_options[idx]) {
            bool ok = true;
            for (int v : option)
                if (remaining[v] == 0) { ok = false; break; }
            if (!ok) continue;
            for (int v : option) --remaining[v];
            if (self(self, idx + 1)) return true;
            for (int v : option) ++remaining[v];
        }
        return false;
    };
    return rec(rec, 0);
}

// Semistandard tableaux of shape lambda, row-i entries <= phi_i, content alpha.
inline long count_ssyt_bruteforce(const schub::Partition& lambda, const schub::Flag& phi,
                                  const schub::ContentVec& alpha) {
    std::vector<int> parts;
    for (int p : lambda)
        if (p > 0) parts.push_back(p);
    const int m = static_cast<int>(parts.size());
    int maxval = 0;
    for (int f : phi) maxval = std::max(maxval, f);
    std::vector<int> remaining(maxval + 1, 0);
    long total = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (static_cast<int>(i) >= maxval) {
            if (alpha[i] != 0) return 0;
            continue;
        }
        remaining[i + 1] = alpha[i];
        total += alpha[i];
    }
    if (total != std::accumulate(parts.begin(), parts.end(), 0L)) return 0;
    if (m == 0) return 1;

    std::vector<std::vector<int>> rows(m);
    for (int i = 0; i < m; ++i) rows[i].assign(parts[i], 0);
    long found = 0;
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == m) {
            ++found;
            return;
        }
        const int next_i = (j + 1 < parts[i]) ? i : i + 1;
        const int next_j = (j + 1 < parts[i]) ? j + 1 : 0;
        int lo = (j > 0) ? rows[i][j - 1] : 1;                         // weakly increasing rows
        if (i > 0 && j < parts[i - 1]) lo = std::max(lo, rows[i - 1][j] + 1);  // strict columns
        for (int v = lo; v <= phi[i]; ++v) {
            if (remaining[v] == 0) continue;
            --remaining[v];
            rows[i][j] = v;
            self(self, next_i, next_j);
            ++remaining[v];
        }
    };
    rec(rec, 0, 0);
    return found;
}

// Row-count encodings R(T) (entry [i][j] = number of j+1's in row i+1,
// padded to size x size) of every semistandard tableau of shape lambda,
// flag phi, content alpha.
inline std::vector<std::vector<std::vector<int>>> enumerate_ssyt_rowcounts(
    const schub::Partition& lambda, const schub::Flag& phi, const schub::ContentVec& alpha,
    int size) {
    std::vector<int> parts;
    for (int p : lambda)
        if (p > 0) parts.push_back(p);
    const int m = static_cast<int>(parts.size());
    int maxval = 0;
    for (int f : phi) maxval = std::max(maxval, f);
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> remaining(maxval + 1, 0);
    long total = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (static_cast<int>(i) >= maxval) {
            if (alpha[i] != 0) return out;
            continue;
        }
        remaining[i + 1] = alpha[i];
        total += alpha[i];
    }
    if (total != std::accumulate(parts.begin(), parts.end(), 0L)) return out;
    if (m == 0) {
        out.push_back(std::vector<std::vector<int>>(size, std::vector<int>(size, 0)));
        return out;
    }
    std::vector<std::vector<int>> rows(m);
    for (int i = 0; i < m; ++i) rows[i].assign(parts[i], 0);
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == m) {
            std::vector<std::vector<int>> r(size, std::vector<int>(size, 0));
            for (int a = 0; a < m; ++a)
                for (int v : rows[a]) ++r[a][v - 1];
            out.push_back(std::move(r));
            return;
        }
        const int next_i = (j + 1 < parts[i]) ? i : i + 1;
        const int next_j = (j + 1 < parts[i]) ? j + 1 : 0;
        int lo = (j > 0) ? rows[i][j - 1] : 1;
        if (i > 0 && j < parts[i - 1]) lo = std::max(lo, rows[i - 1][j] + 1);
        for (int v = lo; v <= phi[i]; ++v) {
            if (remaining[v] == 0) continue;
            --remaining[v];
            rows[i][j] = v;
            self(self, next_i, next_j);
            ++remaining[v];
        }
    };
    rec(rec, 0, 0);
    return out;
}

// All subsets of [n] as sorted vectors.
inline std::vector<std::vector<int>> all_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

// All length-n compositions of total.
inline std::vector<schub::ContentVec> compositions(int total, int n) {
    std::vector<schub::ContentVec> out;
    schub::ContentVec cur(n, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    if (n == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, total);
    return out;
}

inline schub::Diagram random_diagram(std::mt19937& rng, int n, double density = 0.4) {
    std::bernoulli_distribution keep(density);
    std::vector<schub::Box> boxes;
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            if (keep(rng)) boxes.push_back({r, c});
    return schub::Diagram(n, std::move(boxes));
}

inline schub::ContentVec random_composition(std::mt19937& rng, int total, int n) {
    schub::ContentVec alpha(n, 0);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < total; ++t) ++alpha[pick(rng)];
    return alpha;
}

}  // namespace testutil
