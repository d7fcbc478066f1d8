#include "schub/schubitope.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace schub {

namespace {

std::string var_name(int i, int j) {
    return "a_" + std::to_string(i) + "_" + std::to_string(j);
}

// alpha padded/validated against n rows; entries beyond n must be zero
std::vector<int> pad_alpha(const ContentVec& alpha, int n) {
    std::vector<int> out(n, 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) throw std::invalid_argument("content entries must be nonnegative");
        if (static_cast<int>(i) < n)
            out[i] = alpha[i];
        else if (alpha[i] != 0)
            throw std::invalid_argument("content entry beyond the grid must be zero");
    }
    return out;
}

ContentVec normalized(const ContentVec& alpha) {
    ContentVec a = alpha;
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

}  // namespace

ThetaTable::ThetaTable(const Diagram& d) : ambient_(d.ambient()), box_count_(d.box_count()) {
    if (ambient_ > 18)
        throw std::runtime_error("subset enumeration rejected beyond grid side 18");
    const unsigned total = 1u << ambient_;
    thetas_.assign(total, 0);
    for (unsigned mask = 0; mask < total; ++mask) {
        long theta = 0;
        for (int c = 1; c <= ambient_; ++c) {
            int stars = 0, paired = 0, open = 0;
            for (int r = 1; r <= ambient_; ++r) {
                const bool in_s = (mask >> (r - 1)) & 1u;
                if (d.contains(r, c)) {
                    if (in_s)
                        ++stars;
                    else if (open > 0) {
                        --open;
                        ++paired;
                    }
                } else if (in_s) {
                    ++open;
                }
            }
            theta += stars + paired;
        }
        thetas_[mask] = theta;
    }
}

bool ThetaTable::contains(const ContentVec& alpha) const {
    std::vector<int> a;
    try {
        a = pad_alpha(alpha, ambient_);
    } catch (const std::invalid_argument&) {
        return false;
    }
    long total = std::accumulate(a.begin(), a.end(), 0L);
    if (total != box_count_) return false;
    const unsigned masks = 1u << ambient_;
    for (unsigned mask = 0; mask < masks; ++mask) {
        long lhs = 0;
        for (int i = 0; i < ambient_; ++i)
            if ((mask >> i) & 1u) lhs += a[i];
        if (lhs > thetas_[mask]) return false;
    }
    return true;
}

bool schubitope_contains_direct(const Diagram& d, const ContentVec& alpha) {
    return ThetaTable(d).contains(alpha);
}

LPInstance build_polytope(const Diagram& d, const ContentVec& alpha) {
    const int n = d.ambient();
    const std::vector<int> a = pad_alpha(alpha, n);
    LPInstance inst;
    inst.variables.reserve(static_cast<std::size_t>(n) * n);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i) inst.variables.push_back(var_name(i, j));
    auto var = [&](int i, int j) { return (j - 1) * n + (i - 1); };

    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            inst.rows.push_back({{{var(i, j), Rational(1)}}, Sense::GE, Rational(0)});
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            inst.rows.push_back({{{var(i, j), Rational(1)}}, Sense::LE, Rational(1)});
    for (int i = 1; i <= n; ++i) {
        LinearRow row;
        for (int j = 1; j <= n; ++j) row.terms.push_back({var(i, j), Rational(1)});
        row.sense = Sense::EQ;
        row.rhs = a[i - 1];
        inst.rows.push_back(std::move(row));
    }
    for (int j = 1; j <= n; ++j) {
        for (int s = 1; s <= n; ++s) {
            LinearRow row;
            for (int i = 1; i <= s; ++i) row.terms.push_back({var(i, j), Rational(1)});
            row.sense = Sense::GE;
            int count = 0;
            for (int i = 1; i <= s; ++i)
                if (d.contains(i, j)) ++count;
            row.rhs = count;
            inst.rows.push_back(std::move(row));
        }
    }
    return inst;
}

Compression compression_from_code(const Code& code) {
    const int L = code.length();
    const OneLine w = code_to_oneline(code);
    Compression comp;
    comp.row_bound = L;
    if (L == 0) return comp;

    std::vector<int> sorted_w = w;
    std::sort(sorted_w.begin(), sorted_w.end());

    std::vector<std::pair<int, int>> intervals;  // [lo, hi]
    int prev = 0;
    for (int k = 0; k < L; ++k) {
        if (sorted_w[k] - 1 >= prev + 1) intervals.push_back({prev + 1, sorted_w[k] - 1});
        intervals.push_back({sorted_w[k], sorted_w[k]});
        prev = sorted_w[k];
    }

    for (const auto& [lo, hi] : intervals) {
        const int p = lo;
        std::vector<int> rows;
        for (int r = 1; r <= L; ++r) {
            if (w[r - 1] <= p) continue;
            bool seen = false;
            for (int t = 0; t < r - 1; ++t)
                if (w[t] == p) { seen = true; break; }
            if (!seen) rows.push_back(r);
        }
        if (rows.empty()) continue;  // no boxes in these columns
        std::vector<int> cols;
        for (int c = lo; c <= hi; ++c) cols.push_back(c);
        comp.representatives.push_back(p);
        comp.multiplicities.push_back(hi - lo + 1);
        comp.column_classes.push_back(std::move(cols));
        comp.row_sets.push_back(std::move(rows));
    }
    return comp;
}

Compression trivial_compression(const Diagram& d) {
    Compression comp;
    comp.row_bound = d.ambient();
    for (int c = 1; c <= d.ambient(); ++c) {
        comp.column_classes.push_back({c});
        comp.representatives.push_back(c);
        comp.multiplicities.push_back(1);
        comp.row_sets.push_back(d.column_rows(c));
    }
    return comp;
}

LPInstance build_compressed(const Compression& c, const ContentVec& alpha_tilde) {
    const int m = c.row_bound;
    const int ell = c.class_count();
    if (static_cast<int>(alpha_tilde.size()) > m)
        throw std::invalid_argument("compressed content longer than the row bound");
    std::vector<int> a(alpha_tilde);
    a.resize(m, 0);

    LPInstance inst;
    inst.variables.reserve(static_cast<std::size_t>(m) * ell);
    for (int k = 1; k <= ell; ++k)
        for (int i = 1; i <= m; ++i) inst.variables.push_back(var_name(i, k));
    auto var = [&](int i, int k) { return (k - 1) * m + (i - 1); };

    for (int k = 1; k <= ell; ++k)
        for (int i = 1; i <= m; ++i)
            inst.rows.push_back({{{var(i, k), Rational(1)}}, Sense::GE, Rational(0)});
    for (int k = 1; k <= ell; ++k)
        for (int i = 1; i <= m; ++i)
            inst.rows.push_back({{{var(i, k), Rational(1)}}, Sense::LE, Rational(1)});
    for (int i = 1; i <= m; ++i) {
        LinearRow row;
        for (int k = 1; k <= ell; ++k)
            row.terms.push_back({var(i, k), Rational(c.multiplicities[k - 1])});
        row.sense = Sense::EQ;
        row.rhs = a[i - 1];
        inst.rows.push_back(std::move(row));
    }
    for (int k = 1; k <= ell; ++k) {
        const auto& rows_k = c.row_sets[k - 1];
        for (int s = 1; s <= m; ++s) {
            LinearRow row;
            for (int i = 1; i <= s; ++i) row.terms.push_back({var(i, k), Rational(1)});
            row.sense = Sense::GE;
            row.rhs = static_cast<int>(
                std::count_if(rows_k.begin(), rows_k.end(), [&](int r) { return r <= s; }));
            inst.rows.push_back(std::move(row));
        }
    }
    return inst;
}

WitnessPoint expand_compressed_point(const Compression& c, const WitnessPoint& compressed,
                                     int ambient) {
    const int m = c.row_bound;
    WitnessPoint full;
    full.values.assign(static_cast<std::size_t>(ambient) * ambient, Rational(0));
    for (int k = 0; k < c.class_count(); ++k)
        for (int col : c.column_classes[k])
            for (int i = 1; i <= m; ++i)
                full.values[(col - 1) * ambient + (i - 1)] =
                    compressed.values[static_cast<std::size_t>(k) * m + (i - 1)];
    return full;
}

namespace {

// Screens the totals, then hands the padded content to `kernel`.
template <typename Kernel>
bool decide_screened(const Code& code, const ContentVec& alpha, Kernel&& kernel) {
    for (int v : alpha)
        if (v < 0) return false;
    const ContentVec a = normalized(alpha);
    const int L = code.length();
    if (static_cast<int>(a.size()) > L) return false;
    long total = std::accumulate(a.begin(), a.end(), 0L);
    if (total != code.box_count()) return false;
    if (L == 0) return true;
    return kernel(a);
}

}  // namespace

bool decide_nonvanishing(const Code& code, const ContentVec& alpha, const DecideOptions& opts) {
    return decide_screened(code, alpha, [&](const ContentVec& a) {
        Compression comp = opts.trivial_compression
                               ? trivial_compression(rothe_diagram(code))
                               : compression_from_code(code);
        std::vector<int> at(a);
        at.resize(comp.row_bound, 0);
        DecideEngine engine = opts.engine;
        if (engine == DecideEngine::Auto)
            engine = (static_cast<long>(comp.row_bound) * comp.class_count() <= 512)
                         ? DecideEngine::Simplex
                         : DecideEngine::Flow;
        if (engine == DecideEngine::Simplex) {
            return solve_feasibility(build_compressed(comp, at)).status ==
                   FeasStatus::Feasible;
        }
        return prefix_transport_feasible(comp.row_sets, comp.multiplicities, comp.row_bound,
                                         at);
    });
}

std::optional<Tableau> witness_perfect_tableau(const Code& code, const ContentVec& alpha,
                                               const DecideOptions& opts) {
    std::optional<Tableau> result;
    bool feasible = decide_screened(code, alpha, [&](const ContentVec& a) {
        const Diagram d = rothe_diagram(code);
        Compression comp = opts.trivial_compression ? trivial_compression(d)
                                                    : compression_from_code(code);
        std::vector<int> at(a);
        at.resize(comp.row_bound, 0);
        FeasibilityResult compressed = solve_feasibility(build_compressed(comp, at));
        if (compressed.status != FeasStatus::Feasible) return false;

        const int n = d.ambient();
        const LPInstance full = build_polytope(d, a);
        WitnessPoint point = expand_compressed_point(comp, compressed.point, n);
        if (!satisfies(full, point))
            throw std::logic_error("expanded compressed point left the full polytope");
        point = drive_to_vertex(full, std::move(point));
        WitnessPoint vertex =
            assert_integral_vertex({FeasStatus::Feasible, std::move(point), true});

        std::vector<int> labels(d.boxes().size(), kUnlabelled);
        for (int j = 1; j <= n; ++j) {
            std::vector<int> chosen;
            for (int i = 1; i <= n; ++i)
                if (vertex.values[(j - 1) * n + (i - 1)] == 1) chosen.push_back(i);
            const std::vector<int> rows = d.column_rows(j);
            if (chosen.size() != rows.size())
                throw std::logic_error("vertex column sum differs from the column box count");
            for (std::size_t t = 0; t < rows.size(); ++t) {
                Box b{rows[t], j};
                auto it = std::lower_bound(d.boxes().begin(), d.boxes().end(), b);
                labels[it - d.boxes().begin()] = chosen[t];
            }
        }
        result = Tableau(d, std::move(labels));
        return true;
    });
    if (!feasible) return std::nullopt;
    if (!result && code.length() == 0) result = Tableau(Diagram(0, {}), {});
    return result;
}

}  // namespace schub
