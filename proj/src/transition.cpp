#include "schub/transition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "schub/diagram.hpp"

namespace schub {

namespace {

ContentVec normalized(const ContentVec& alpha) {
    ContentVec a = alpha;
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int march_offset(const OneLine& w, int accessible_row, int pivot_row, int c_r) {
    int smaller = 0;  // dots northwest of the accessible row, west of the pivot value
    for (int h = 1; h < accessible_row; ++h)
        if (w[h - 1] < w[pivot_row - 1]) ++smaller;
    return c_r - ((w[pivot_row - 1] - 1) - smaller);
}

}  // namespace

TransitionChildren transition_children(const Code& code) {
    if (is_vexillary(code))
        throw std::invalid_argument("transition applies to non-vexillary codes only");
    const auto z = accessible_box(code);
    if (!z) throw std::logic_error("non-vexillary code without an accessible box");
    const int r = z->row;
    const OneLine w = code_to_oneline(code);

    TransitionChildren out;
    out.deletion_row = r;
    {
        std::vector<int> entries = code.entries();
        entries[r - 1] -= 1;
        out.deletion_child = Code(std::move(entries));
    }
    for (const Box& pivot : pivots(code, *z)) {
        const int i = pivot.row;
        const int b = march_offset(w, r, i, code.at(r));
        if (b < 1 || b > code.at(r))
            throw std::logic_error("march offset outside the accessible row size");
        std::vector<int> entries = code.entries();
        entries[i - 1] += b;
        entries[r - 1] -= b;
        out.march_children.push_back({i, Code(std::move(entries))});
    }
    return out;
}

// --- flagged Kostka numbers -------------------------------------------------

namespace {

struct KostkaInput {
    Partition lambda;  // positive parts only
    Flag phi;
    long size = 0;
};

KostkaInput prepare(const Partition& lambda, const Flag& phi) {
    KostkaInput in;
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
        if (lambda[i] < lambda[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    for (int part : lambda) {
        if (part < 0) throw std::invalid_argument("partition parts must be nonnegative");
        if (part > 0) in.lambda.push_back(part);
    }
    if (phi.size() != in.lambda.size())
        throw std::invalid_argument("flag length must match the positive part count");
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (phi[i] < 1) throw std::invalid_argument("flag entries must be positive");
        if (i && phi[i] < phi[i - 1])
            throw std::invalid_argument("flag entries must be weakly increasing");
    }
    in.phi = phi;
    in.size = std::accumulate(in.lambda.begin(), in.lambda.end(), 0L);
    return in;
}

}  // namespace

mpz_class flagged_kostka(const Partition& lambda, const Flag& phi, const ContentVec& alpha) {
    const KostkaInput in = prepare(lambda, phi);
    const int m = static_cast<int>(in.lambda.size());
    for (int v : alpha)
        if (v < 0) return 0;
    long total = std::accumulate(alpha.begin(), alpha.end(), 0L);
    if (total != in.size) return 0;
    if (m == 0) return 1;
    const int maxval = in.phi.empty() ? 0 : in.phi.back();
    for (std::size_t j = maxval; j < alpha.size(); ++j)
        if (alpha[j] != 0) return 0;

    // Layer the tableau by value: states are intermediate shapes, each value
    // adds a horizontal strip; a row must be complete once its flag passes.
    std::map<std::vector<int>, mpz_class> states;
    states[std::vector<int>(m, 0)] = 1;
    std::vector<int> next_shape(m);
    for (int value = 1; value <= maxval; ++value) {
        const int count = value <= static_cast<int>(alpha.size()) ? alpha[value - 1] : 0;
        std::map<std::vector<int>, mpz_class> next;
        for (const auto& [shape, ways] : states) {
            // enumerate horizontal strips of `count` cells
            auto rec = [&](auto&& self, int row, int remaining) -> void {
                if (row == m) {
                    if (remaining == 0) {
                        auto [it, inserted] = next.try_emplace(
                            std::vector<int>(next_shape.begin(), next_shape.end()), ways);
                        if (!inserted) it->second += ways;
                    }
                    return;
                }
                int lo = shape[row];
                int hi = std::min(in.lambda[row], row == 0 ? in.lambda[row] : shape[row - 1]);
                if (in.phi[row] == value) lo = in.lambda[row];   // row must finish now
                if (in.phi[row] < value) hi = shape[row];        // row already closed
                for (int v = lo; v <= hi; ++v) {
                    const int used = v - shape[row];
                    if (used > remaining) break;
                    next_shape[row] = v;
                    self(self, row + 1, remaining - used);
                }
            };
            rec(rec, 0, count);
        }
        states = std::move(next);
        if (states.empty()) return 0;
    }
    auto it = states.find(in.lambda);
    return it == states.end() ? mpz_class(0) : it->second;
}

mpz_class kostka(const Partition& lambda, const ContentVec& alpha) {
    Partition positive;
    for (int part : lambda)
        if (part > 0) positive.push_back(part);
    const int bound =
        std::max(static_cast<int>(positive.size()), static_cast<int>(alpha.size()));
    Flag phi(positive.size(), std::max(bound, 1));
    return flagged_kostka(positive, phi, alpha);
}

namespace {

// complete homogeneous polynomial of degree k in x_1..x_bound, inside `vars`
SparsePoly homogeneous(int k, int bound, int vars) {
    SparsePoly out(vars);
    if (k < 0) return out;
    std::vector<int> exps(vars, 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == bound) {
            if (remaining == 0) out.add_term(exps, 1);
            return;
        }
        if (var == bound - 1) {
            exps[var] = remaining;
            out.add_term(exps, 1);
            exps[var] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[var] = e;
            self(self, var + 1, remaining - e);
        }
        exps[var] = 0;
    };
    if (bound == 0) {
        if (k == 0) out.add_term(exps, 1);
        return out;
    }
    rec(rec, 0, k);
    return out;
}

}  // namespace

SparsePoly flagged_schur(const Partition& lambda, const Flag& phi, int vars) {
    const KostkaInput in = prepare(lambda, phi);
    const int m = static_cast<int>(in.lambda.size());
    if (m > 7 || in.size > 40)
        throw std::runtime_error("flagged determinant rejected beyond the test budget");
    if (m == 0) return SparsePoly::constant(vars, 1);
    if (!in.phi.empty() && in.phi.back() > vars)
        throw std::invalid_argument("variable count below the largest flag entry");

    // Leibniz expansion of det | h_{lambda_i - i + j}(phi_i) |
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    SparsePoly det(vars);
    do {
        int sign = 1;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        SparsePoly prod = SparsePoly::constant(vars, sign);
        bool zero = false;
        for (int i = 0; i < m && !zero; ++i) {
            const int degree = in.lambda[i] - (i + 1) + (perm[i] + 1);
            if (degree < 0) { zero = true; break; }
            prod = prod * homogeneous(degree, in.phi[i], vars);
            if (prod.is_zero()) zero = true;
        }
        if (!zero) det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// --- coefficient counting ---------------------------------------------------

mpz_class CoefficientCounter::count(const Code& code, const ContentVec& alpha) {
    for (int v : alpha)
        if (v < 0) return 0;
    ContentVec a = normalized(alpha);
    if (static_cast<int>(a.size()) > code.length()) return 0;
    if (std::accumulate(a.begin(), a.end(), 0L) != code.box_count()) return 0;
    return count_normalized(code, a);
}

mpz_class CoefficientCounter::count_normalized(const Code& code, const ContentVec& alpha) {
    const auto key = std::make_pair(code.entries(), alpha);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    mpz_class total;
    if (is_vexillary(code)) {
        const auto [lambda, phi] = shape_and_flag(code);
        total = flagged_kostka(lambda, phi, alpha);
    } else {
        const TransitionChildren children = transition_children(code);
        const int r = children.deletion_row;
        if (static_cast<int>(alpha.size()) >= r && alpha[r - 1] > 0) {
            ContentVec reduced = alpha;
            reduced[r - 1] -= 1;
            total += count(children.deletion_child, reduced);
        }
        for (const auto& [pivot_row, child] : children.march_children)
            total += count(child, alpha);
    }
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(key, total);
    return total;
}

mpz_class count_coefficient(const Code& code, const ContentVec& alpha) {
    CoefficientCounter counter;
    return counter.count(code, alpha);
}

// --- certificate verification ----------------------------------------------

ContentVec deletion_weight(const TransitionString& steps, int length) {
    ContentVec w(length, 0);
    for (const TransitionStep& step : steps)
        if (const auto* run = std::get_if<DeletionRun>(&step))
            if (run->row >= 1 && run->row <= length) w[run->row - 1] += run->multiplicity;
    return w;
}

VerifyResult verify_witness(const TransitionString& steps, const RowCountMatrix& r,
                            const Code& code, const ContentVec& alpha) {
    const int L = code.length();
    if (static_cast<long>(steps.size()) > static_cast<long>(L) * L)
        return {false, "path_too_long"};
    for (std::size_t t = 0; t < steps.size(); ++t) {
        if (const auto* run = std::get_if<DeletionRun>(&steps[t])) {
            if (run->multiplicity < 1) return {false, "empty_deletion_run"};
            if (run->row < 1 || run->row > L) return {false, "deletion_row_out_of_range"};
            if (t + 1 < steps.size())
                if (const auto* next = std::get_if<DeletionRun>(&steps[t + 1]))
                    if (next->row == run->row) return {false, "unmerged_deletion_runs"};
        }
        if (const auto* march = std::get_if<MarchMove>(&steps[t]))
            if (march->pivot_row < 1 || march->pivot_row > L)
                return {false, "pivot_row_out_of_range"};
    }

    Code current = code;
    for (const TransitionStep& step : steps) {
        if (is_vexillary(current)) return {false, "step_from_leaf"};
        const auto z = accessible_box(current);
        if (!z) return {false, "step_from_leaf"};
        const OneLine w = code_to_oneline(current);
        if (const auto* run = std::get_if<DeletionRun>(&step)) {
            if (run->row != z->row) return {false, "deletion_not_at_accessible_row"};
            int min_prefix = w[0];
            for (int i = 1; i < z->row; ++i) min_prefix = std::min(min_prefix, w[i - 1]);
            const int available = current.at(z->row) - (min_prefix - 1);
            if (available < run->multiplicity) return {false, "deletion_run_too_long"};
            std::vector<int> entries = current.entries();
            entries[z->row - 1] -= run->multiplicity;
            current = Code(std::move(entries));
        } else {
            const int i = std::get<MarchMove>(step).pivot_row;
            bool found = false;
            for (const Box& p : pivots(current, *z))
                if (p.row == i) { found = true; break; }
            if (!found) return {false, "not_a_pivot"};
            const int b = march_offset(w, z->row, i, current.at(z->row));
            std::vector<int> entries = current.entries();
            entries[i - 1] += b;
            entries[z->row - 1] -= b;
            current = Code(std::move(entries));
        }
    }
    if (!is_vexillary(current)) return {false, "leaf_not_vexillary"};

    if (static_cast<int>(r.size()) != L) return {false, "matrix_shape"};
    for (const auto& row : r) {
        if (static_cast<int>(row.size()) != L) return {false, "matrix_shape"};
        for (int v : row)
            if (v < 0) return {false, "matrix_negative_entry"};
    }
    const auto [lambda, phi] = shape_and_flag(current);
    const int parts = static_cast<int>(lambda.size());
    if (parts > L) return {false, "leaf_too_long"};
    for (int i = 0; i < L; ++i) {
        const long row_sum = std::accumulate(r[i].begin(), r[i].end(), 0L);
        if (row_sum != (i < parts ? lambda[i] : 0)) return {false, "row_sum_mismatch"};
    }
    for (int i = 0; i < parts; ++i)
        for (int j = phi[i]; j < L; ++j)
            if (r[i][j] != 0) return {false, "flag_violated"};
    for (int i = 0; i + 1 < L; ++i) {
        long below = 0, above = 0;
        for (int j = 0; j < L; ++j) {
            below += r[i + 1][j];  // values <= j+1 in row i+2
            if (j > 0) above += r[i][j - 1];
            if (below > above) return {false, "columns_not_strict"};
        }
    }

    ContentVec expected = deletion_weight(steps, L);
    for (int j = 0; j < L; ++j)
        for (int i = 0; i < L; ++i) expected[j] += r[i][j];
    ContentVec target(L, 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) return {false, "negative_content"};
        if (static_cast<int>(i) < L)
            target[i] = alpha[i];
        else if (alpha[i] != 0)
            return {false, "content_beyond_code"};
    }
    if (expected != target) return {false, "weight_mismatch"};
    return {true, "ok"};
}

// --- tree export -------------------------------------------------------------

namespace {

void build_tree(TransitionTreeNode& node, std::size_t& budget) {
    if (budget == 0) throw std::runtime_error("tree node budget exceeded");
    --budget;
    node.oneline = code_to_oneline(node.code);
    node.vexillary = is_vexillary(node.code);
    if (node.vexillary) return;
    const TransitionChildren ch = transition_children(node.code);
    {
        TransitionTreeNode child;
        child.code = ch.deletion_child;
        node.children.emplace_back("x" + std::to_string(ch.deletion_row), std::move(child));
    }
    for (const auto& [pivot_row, child_code] : ch.march_children) {
        TransitionTreeNode child;
        child.code = child_code;
        node.children.emplace_back(std::to_string(pivot_row), std::move(child));
    }
    for (auto& [label, child] : node.children) build_tree(child, budget);
}

void render_tree(const TransitionTreeNode& node, const std::string& prefix,
                 const std::string& edge, std::ostringstream& os) {
    os << prefix;
    if (!edge.empty()) os << "--" << edge << "--> ";
    os << "code=" << node.code.to_string() << " w=" << to_string(node.oneline);
    if (node.vexillary) os << " [leaf]";
    os << '\n';
    for (const auto& [label, child] : node.children)
        render_tree(child, prefix + "  ", label, os);
}

}  // namespace

TransitionTreeNode transition_tree(const Code& code, std::size_t max_nodes) {
    TransitionTreeNode root;
    root.code = code;
    std::size_t budget = max_nodes;
    build_tree(root, budget);
    return root;
}

std::string render_tree_text(const TransitionTreeNode& node) {
    std::ostringstream os;
    render_tree(node, "", "", os);
    return os.str();
}

namespace {

void walk_paths(const Code& code, TransitionString& steps, std::vector<TransitionPath>& out,
                std::size_t max_paths) {
    if (is_vexillary(code)) {
        if (out.size() >= max_paths) throw std::runtime_error("path budget exceeded");
        TransitionPath path;
        path.steps = steps;
        path.leaf = code;
        out.push_back(std::move(path));
        return;
    }
    const TransitionChildren ch = transition_children(code);
    if (!steps.empty() && std::holds_alternative<DeletionRun>(steps.back()) &&
        std::get<DeletionRun>(steps.back()).row == ch.deletion_row) {
        TransitionString extended = steps;
        std::get<DeletionRun>(extended.back()).multiplicity += 1;
        walk_paths(ch.deletion_child, extended, out, max_paths);
    } else {
        steps.push_back(DeletionRun{ch.deletion_row, 1});
        walk_paths(ch.deletion_child, steps, out, max_paths);
        steps.pop_back();
    }
    for (const auto& [pivot_row, child] : ch.march_children) {
        steps.push_back(MarchMove{pivot_row});
        walk_paths(child, steps, out, max_paths);
        steps.pop_back();
    }
}

}  // namespace

std::vector<TransitionPath> enumerate_transition_paths(const Code& code,
                                                       std::size_t max_paths) {
    std::vector<TransitionPath> out;
    TransitionString steps;
    walk_paths(code, steps, out, max_paths);
    for (TransitionPath& path : out) path.delwt = deletion_weight(path.steps, code.length());
    return out;
}

}  // namespace schub
