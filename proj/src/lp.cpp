#include "schub/lp.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace schub {

namespace {

Rational row_value(const LinearRow& row, const WitnessPoint& p) {
    Rational v = 0;
    for (const auto& [var, coeff] : row.terms) v += coeff * p.values.at(var);
    return v;
}

bool row_holds(const LinearRow& row, const Rational& lhs) {
    switch (row.sense) {
        case Sense::LE: return lhs <= row.rhs;
        case Sense::EQ: return lhs == row.rhs;
        case Sense::GE: return lhs >= row.rhs;
    }
    return false;
}

// --- exact bounded-variable phase-1 simplex -------------------------------

class Simplex {
public:
    explicit Simplex(const LPInstance& inst, const SolveOptions& opts)
        : inst_(inst), opts_(opts) {}

    FeasibilityResult run() {
        if (!presolve_bounds()) return {FeasStatus::Infeasible, {}, false};
        build_standard_form();
        if (infeasible_) return {FeasStatus::Infeasible, {}, false};
        if (!phase1()) return {FeasStatus::Infeasible, {}, false};
        return extract();
    }

private:
    struct VarMap {
        enum Kind { Shift, Mirror, SplitPos } kind = Shift;
        Rational offset = 0;  // lo for Shift, hi for Mirror
        int column = -1;      // first standard-form column
        int column_neg = -1;  // second column for splits
    };

    const LPInstance& inst_;
    const SolveOptions& opts_;
    bool infeasible_ = false;

    std::vector<std::optional<Rational>> lo_, hi_;
    std::vector<LinearRow> general_rows_;
    std::vector<VarMap> vmap_;

    int ncols_ = 0;
    std::vector<Rational> upper_;
    std::vector<char> has_upper_;
    std::vector<char> artificial_;
    std::vector<std::vector<Rational>> a_;  // m x ncols_
    std::vector<Rational> rhs_;             // current basic values
    std::vector<int> basis_;
    std::vector<char> at_upper_;
    std::vector<Rational> d_;  // reduced costs (phase-1 objective)
    Rational obj_ = 0;
    bool used_split_ = false;

    bool presolve_bounds() {
        const int n = inst_.var_count();
        lo_.assign(n, std::nullopt);
        hi_.assign(n, std::nullopt);
        for (const LinearRow& row : inst_.rows) {
            std::vector<std::pair<int, Rational>> terms;
            for (const auto& t : row.terms)
                if (t.second != 0) terms.push_back(t);
            if (terms.empty()) {
                if (!row_holds(row, 0)) return false;
                continue;
            }
            if (terms.size() == 1) {
                const auto& [var, coeff] = terms.front();
                Rational bound = row.rhs / coeff;
                Sense sense = row.sense;
                if (coeff < 0 && sense != Sense::EQ)
                    sense = (sense == Sense::LE) ? Sense::GE : Sense::LE;
                if (sense == Sense::LE || sense == Sense::EQ)
                    if (!hi_[var] || bound < *hi_[var]) hi_[var] = bound;
                if (sense == Sense::GE || sense == Sense::EQ)
                    if (!lo_[var] || bound > *lo_[var]) lo_[var] = bound;
                continue;
            }
            LinearRow general = row;
            general.terms = std::move(terms);
            general_rows_.push_back(std::move(general));
        }
        for (int v = 0; v < n; ++v)
            if (lo_[v] && hi_[v] && *lo_[v] > *hi_[v]) return false;
        return true;
    }

    void build_standard_form() {
        const int n = inst_.var_count();
        vmap_.assign(n, {});
        ncols_ = 0;
        upper_.clear();
        has_upper_.clear();
        artificial_.clear();
        auto add_col = [&](std::optional<Rational> up) {
            upper_.push_back(up.value_or(0));
            has_upper_.push_back(up.has_value());
            artificial_.push_back(0);
            return ncols_++;
        };
        for (int v = 0; v < n; ++v) {
            VarMap& m = vmap_[v];
            if (lo_[v]) {
                m.kind = VarMap::Shift;
                m.offset = *lo_[v];
                m.column = add_col(hi_[v] ? std::optional<Rational>(*hi_[v] - *lo_[v])
                                          : std::nullopt);
            } else if (hi_[v]) {
                m.kind = VarMap::Mirror;
                m.offset = *hi_[v];
                m.column = add_col(std::nullopt);
            } else {
                m.kind = VarMap::SplitPos;
                m.column = add_col(std::nullopt);
                m.column_neg = add_col(std::nullopt);
                used_split_ = true;
            }
        }

        const int m = static_cast<int>(general_rows_.size());
        a_.assign(m, std::vector<Rational>(ncols_, Rational(0)));
        rhs_.assign(m, Rational(0));
        basis_.assign(m, -1);
        std::vector<Sense> senses(m);
        for (int i = 0; i < m; ++i) {
            const LinearRow& row = general_rows_[i];
            Rational b = row.rhs;
            for (const auto& [var, coeff] : row.terms) {
                const VarMap& vm = vmap_[var];
                switch (vm.kind) {
                    case VarMap::Shift:
                        a_[i][vm.column] += coeff;
                        b -= coeff * vm.offset;
                        break;
                    case VarMap::Mirror:
                        a_[i][vm.column] -= coeff;
                        b -= coeff * vm.offset;
                        break;
                    case VarMap::SplitPos:
                        a_[i][vm.column] += coeff;
                        a_[i][vm.column_neg] -= coeff;
                        break;
                }
            }
            senses[i] = row.sense;
            if (b < 0) {
                for (auto& c : a_[i]) c = -c;
                b = -b;
                if (senses[i] != Sense::EQ)
                    senses[i] = (senses[i] == Sense::LE) ? Sense::GE : Sense::LE;
            }
            rhs_[i] = b;
        }
        // slacks, then artificials where a slack cannot start basic
        for (int i = 0; i < m; ++i) {
            if (senses[i] == Sense::LE) {
                int col = static_cast<int>(upper_.size());
                upper_.push_back(0);
                has_upper_.push_back(0);
                artificial_.push_back(0);
                for (auto& row : a_) row.push_back(Rational(0));
                a_[i][col] = 1;
                ++ncols_;
                basis_[i] = col;  // slack basic at rhs >= 0
            } else if (senses[i] == Sense::GE) {
                int col = static_cast<int>(upper_.size());
                upper_.push_back(0);
                has_upper_.push_back(0);
                artificial_.push_back(0);
                for (auto& row : a_) row.push_back(Rational(0));
                a_[i][col] = -1;
                ++ncols_;
                if (rhs_[i] == 0) {
                    for (auto& c : a_[i]) c = -c;
                    basis_[i] = col;
                }
            }
        }
        for (int i = 0; i < m; ++i) {
            if (basis_[i] >= 0) continue;
            int col = static_cast<int>(upper_.size());
            upper_.push_back(0);
            has_upper_.push_back(0);
            artificial_.push_back(1);
            for (auto& row : a_) row.push_back(Rational(0));
            a_[i][col] = 1;
            ++ncols_;
            basis_[i] = col;
        }
        at_upper_.assign(ncols_, 0);
        // phase-1 reduced costs: c_j - sum over artificial-basic rows of a_ij
        d_.assign(ncols_, Rational(0));
        obj_ = 0;
        for (int j = 0; j < ncols_; ++j)
            if (artificial_[j]) d_[j] = 1;
        for (int i = 0; i < m; ++i) {
            if (!artificial_[basis_[i]]) continue;
            obj_ += rhs_[i];
            for (int j = 0; j < ncols_; ++j) d_[j] -= a_[i][j];
        }
        for (int i = 0; i < m; ++i) d_[basis_[i]] = 0;
    }

    void trace_pivot(int enter, int leave_row) const {
        if (!opts_.trace) return;
        *opts_.trace << "pivot enter=" << enter << " row=" << leave_row << " obj=" << obj_
                     << '\n';
        for (std::size_t i = 0; i < a_.size(); ++i) {
            *opts_.trace << "  [" << basis_[i] << "]";
            for (const auto& c : a_[i]) *opts_.trace << ' ' << c;
            *opts_.trace << " | " << rhs_[i] << '\n';
        }
    }

    bool phase1() {
        const int m = static_cast<int>(a_.size());
        std::vector<char> in_basis(ncols_, 0);
        for (int i = 0; i < m; ++i) in_basis[basis_[i]] = 1;

        while (true) {
            // Bland: smallest improving nonbasic index
            int enter = -1, dir = 0;
            for (int j = 0; j < ncols_; ++j) {
                if (in_basis[j]) continue;
                if (!at_upper_[j] && d_[j] < 0) { enter = j; dir = 1; break; }
                if (at_upper_[j] && d_[j] > 0) { enter = j; dir = -1; break; }
            }
            if (enter < 0) break;

            // bounded ratio test
            bool bounded = false;
            Rational tstar = 0;
            int leave_row = -1;   // -1 means bound flip of the entering column
            int leave_var = enter;
            bool leave_to_upper = false;
            if (has_upper_[enter]) {
                bounded = true;
                tstar = upper_[enter];
            }
            for (int i = 0; i < m; ++i) {
                const Rational eff = a_[i][enter] * dir;
                if (eff == 0) continue;
                Rational t;
                bool to_upper;
                if (eff > 0) {
                    t = rhs_[i] / eff;
                    to_upper = false;
                } else {
                    if (!has_upper_[basis_[i]]) continue;
                    t = (upper_[basis_[i]] - rhs_[i]) / (-eff);
                    to_upper = true;
                }
                if (!bounded || t < tstar ||
                    (t == tstar && basis_[i] < leave_var)) {
                    bounded = true;
                    tstar = t;
                    leave_row = i;
                    leave_var = basis_[i];
                    leave_to_upper = to_upper;
                }
            }
            if (!bounded) throw std::logic_error("phase-1 simplex ray: objective unbounded below");

            obj_ += d_[enter] * dir * tstar;
            for (int i = 0; i < m; ++i) rhs_[i] -= a_[i][enter] * dir * tstar;

            if (leave_row < 0) {
                at_upper_[enter] ^= 1;
                continue;
            }
            trace_pivot(enter, leave_row);
            const int leaving = basis_[leave_row];
            in_basis[leaving] = 0;
            at_upper_[leaving] = leave_to_upper;
            // entering value
            Rational enter_pos = at_upper_[enter] ? upper_[enter] : Rational(0);
            rhs_[leave_row] = enter_pos + dir * tstar;
            at_upper_[enter] = 0;
            in_basis[enter] = 1;
            basis_[leave_row] = enter;

            const Rational pivot = a_[leave_row][enter];
            for (auto& c : a_[leave_row]) c /= pivot;
            for (int i = 0; i < m; ++i) {
                if (i == leave_row || a_[i][enter] == 0) continue;
                const Rational f = a_[i][enter];
                for (int j = 0; j < ncols_; ++j) a_[i][j] -= f * a_[leave_row][j];
            }
            if (d_[enter] != 0) {
                const Rational f = d_[enter];
                for (int j = 0; j < ncols_; ++j) d_[j] -= f * a_[leave_row][j];
            }
        }
        if (obj_ != 0) return false;
        drive_out_artificials();
        return true;
    }

    void drive_out_artificials() {
        const int m = static_cast<int>(a_.size());
        for (int i = 0; i < m; ++i) {
            if (!artificial_[basis_[i]]) continue;
            // value is 0 here; a degenerate pivot removes it when possible
            int enter = -1;
            for (int j = 0; j < ncols_; ++j) {
                if (artificial_[j] || j == basis_[i]) continue;
                bool basic = false;
                for (int r = 0; r < m; ++r)
                    if (basis_[r] == j) { basic = true; break; }
                if (!basic && a_[i][j] != 0) { enter = j; break; }
            }
            if (enter < 0) continue;  // redundant row
            const Rational pivot = a_[i][enter];
            for (auto& c : a_[i]) c /= pivot;
            for (int r = 0; r < m; ++r) {
                if (r == i || a_[r][enter] == 0) continue;
                const Rational f = a_[r][enter];
                for (int j = 0; j < ncols_; ++j) a_[r][j] -= f * a_[i][j];
            }
            // entering held a bound position; value stays there (degenerate)
            rhs_[i] = at_upper_[enter] ? upper_[enter] : Rational(0);
            at_upper_[enter] = 0;
            basis_[i] = enter;
        }
    }

    FeasibilityResult extract() const {
        const int m = static_cast<int>(a_.size());
        std::vector<Rational> col_value(ncols_, Rational(0));
        for (int j = 0; j < ncols_; ++j)
            if (at_upper_[j]) col_value[j] = upper_[j];
        for (int i = 0; i < m; ++i) col_value[basis_[i]] = rhs_[i];
        WitnessPoint point;
        point.values.resize(inst_.var_count());
        for (int v = 0; v < inst_.var_count(); ++v) {
            const VarMap& vm = vmap_[v];
            switch (vm.kind) {
                case VarMap::Shift: point.values[v] = vm.offset + col_value[vm.column]; break;
                case VarMap::Mirror: point.values[v] = vm.offset - col_value[vm.column]; break;
                case VarMap::SplitPos:
                    point.values[v] = col_value[vm.column] - col_value[vm.column_neg];
                    break;
            }
        }
        return {FeasStatus::Feasible, std::move(point), !used_split_};
    }
};

// --- exact linear algebra helpers -----------------------------------------

// Row-reduces m (destructively); returns pivot column of each reduced row.
std::vector<int> row_reduce(std::vector<std::vector<Rational>>& m, int ncols) {
    std::vector<int> pivot_cols;
    std::size_t rank = 0;
    for (int c = 0; c < ncols && rank < m.size(); ++c) {
        std::size_t sel = rank;
        while (sel < m.size() && m[sel][c] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        const Rational piv = m[rank][c];
        for (int j = 0; j < ncols; ++j) m[rank][j] /= piv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (int j = 0; j < ncols; ++j) m[i][j] -= f * m[rank][j];
        }
        pivot_cols.push_back(c);
        ++rank;
    }
    m.resize(rank);
    return pivot_cols;
}

std::optional<std::vector<Rational>> kernel_vector(std::vector<std::vector<Rational>> m,
                                                   int ncols) {
    std::vector<int> pivots = row_reduce(m, ncols);
    std::vector<char> is_pivot(ncols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    int free_col = -1;
    for (int c = 0; c < ncols; ++c)
        if (!is_pivot[c]) { free_col = c; break; }
    if (free_col < 0) return std::nullopt;
    std::vector<Rational> d(ncols, Rational(0));
    d[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) d[pivots[i]] = -m[i][free_col];
    return d;
}

std::vector<std::vector<Rational>> active_rows(const LPInstance& inst, const WitnessPoint& p) {
    std::vector<std::vector<Rational>> rows;
    for (const LinearRow& row : inst.rows) {
        if (row_value(row, p) != row.rhs) continue;
        std::vector<Rational> dense(inst.var_count(), Rational(0));
        for (const auto& [var, coeff] : row.terms) dense[var] += coeff;
        rows.push_back(std::move(dense));
    }
    return rows;
}

}  // namespace

FeasibilityResult solve_feasibility(const LPInstance& instance, const SolveOptions& opts) {
    return Simplex(instance, opts).run();
}

bool satisfies(const LPInstance& instance, const WitnessPoint& point) {
    if (static_cast<int>(point.values.size()) != instance.var_count()) return false;
    for (const LinearRow& row : instance.rows)
        if (!row_holds(row, row_value(row, point))) return false;
    return true;
}

WitnessPoint drive_to_vertex(const LPInstance& instance, WitnessPoint point) {
    if (!satisfies(instance, point))
        throw std::invalid_argument("drive_to_vertex requires a feasible starting point");
    const int n = instance.var_count();
    for (int round = 0; round <= n; ++round) {
        auto direction = kernel_vector(active_rows(instance, point), n);
        if (!direction) return point;
        for (int attempt = 0; attempt < 2; ++attempt) {
            bool bounded = false;
            Rational tmax = 0;
            for (const LinearRow& row : instance.rows) {
                Rational g = 0;
                for (const auto& [var, coeff] : row.terms) g += coeff * (*direction)[var];
                Rational slack = row.rhs - row_value(row, point);
                bool blocks = (row.sense == Sense::LE && g > 0) ||
                              (row.sense == Sense::GE && g < 0);
                if (row.sense == Sense::EQ && g != 0)
                    throw std::logic_error("null direction leaves an equality row");
                if (!blocks) continue;
                Rational t = slack / g;
                if (!bounded || t < tmax) { bounded = true; tmax = t; }
            }
            if (bounded) {
                for (int v = 0; v < n; ++v) point.values[v] += tmax * (*direction)[v];
                break;
            }
            if (attempt == 1) throw std::logic_error("feasible region unbounded along null direction");
            for (auto& x : *direction) x = -x;
        }
    }
    throw std::logic_error("drive_to_vertex failed to reach full rank");
}

bool verify_vertex(const LPInstance& instance, const WitnessPoint& point) {
    if (!satisfies(instance, point)) return false;
    auto rows = active_rows(instance, point);
    return row_reduce(rows, instance.var_count()).size() ==
           static_cast<std::size_t>(instance.var_count());
}

WitnessPoint assert_integral_vertex(const FeasibilityResult& result) {
    if (result.status != FeasStatus::Feasible)
        throw std::logic_error("assert_integral_vertex: result is not feasible");
    if (!result.is_vertex)
        throw std::logic_error("assert_integral_vertex: result is not a vertex");
    for (const Rational& v : result.point.values)
        if (v.get_den() != 1)
            throw std::logic_error("assert_integral_vertex: fractional coordinate " +
                                   v.get_str());
    return result.point;
}

// --- integer feasibility of the compressed system -------------------------

namespace {

class MaxFlow {
public:
    explicit MaxFlow(int n) : graph_(n) {}

    int add_edge(int from, int to, long long cap) {
        graph_[from].push_back({to, cap, static_cast<int>(graph_[to].size())});
        graph_[to].push_back({from, 0, static_cast<int>(graph_[from].size()) - 1});
        return static_cast<int>(graph_[from].size()) - 1;
    }

    long long run(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            iter_.assign(graph_.size(), 0);
            while (long long f = dfs(s, t, std::numeric_limits<long long>::max())) flow += f;
        }
        return flow;
    }

    long long sent(int from, int edge_index) const {
        const Edge& e = graph_[from][edge_index];
        return graph_[e.to][e.rev].cap;  // residual of the reverse edge
    }

private:
    struct Edge {
        int to;
        long long cap;
        int rev;
    };
    std::vector<std::vector<Edge>> graph_;
    std::vector<int> level_, iter_;

    bool bfs(int s, int t) {
        level_.assign(graph_.size(), -1);
        std::vector<int> queue{s};
        level_[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (const Edge& e : graph_[u])
                if (e.cap > 0 && level_[e.to] < 0) {
                    level_[e.to] = level_[u] + 1;
                    queue.push_back(e.to);
                }
        }
        return level_[t] >= 0;
    }

    long long dfs(int u, int t, long long limit) {
        if (u == t) return limit;
        for (int& i = iter_[u]; i < static_cast<int>(graph_[u].size()); ++i) {
            Edge& e = graph_[u][i];
            if (e.cap <= 0 || level_[e.to] != level_[u] + 1) continue;
            long long f = dfs(e.to, t, std::min(limit, e.cap));
            if (f > 0) {
                e.cap -= f;
                graph_[e.to][e.rev].cap += f;
                return f;
            }
        }
        return 0;
    }
};

struct TransportModel {
    MaxFlow flow;
    long long supply = 0;
    std::vector<std::vector<std::pair<int, int>>> label_edges;  // [i][k] -> edge idx or -1
    TransportModel(int nodes) : flow(nodes) {}
};

}  // namespace

std::optional<std::vector<std::vector<int>>> prefix_transport_witness(
    const std::vector<std::vector<int>>& row_sets, const std::vector<int>& multiplicities,
    int row_bound, const std::vector<int>& alpha) {
    const int ell = static_cast<int>(row_sets.size());
    if (static_cast<int>(multiplicities.size()) != ell)
        throw std::invalid_argument("one multiplicity per class required");
    if (static_cast<int>(alpha.size()) != row_bound)
        throw std::invalid_argument("alpha must have one entry per row");
    long long demand = 0;
    int total_slots = 0;
    for (int k = 0; k < ell; ++k) {
        if (multiplicities[k] < 1) throw std::invalid_argument("multiplicities must be positive");
        int prev = 0;
        for (int r : row_sets[k]) {
            if (r <= prev || r > row_bound)
                throw std::invalid_argument("row sets must be increasing within [1, row_bound]");
            prev = r;
        }
        demand += static_cast<long long>(multiplicities[k]) * row_sets[k].size();
        total_slots += static_cast<int>(row_sets[k].size());
    }
    long long supply = 0;
    for (int a : alpha) {
        if (a < 0) throw std::invalid_argument("alpha entries must be nonnegative");
        supply += a;
    }
    if (supply != demand)
        throw std::invalid_argument("alpha total must match the class box count");

    const int source = 0;
    const int label0 = 1;                    // labels 1..row_bound
    const int slot0 = label0 + row_bound;    // then slots class by class
    const int sink = slot0 + total_slots;
    MaxFlow flow(sink + 1);
    for (int i = 1; i <= row_bound; ++i)
        flow.add_edge(source, label0 + i - 1, alpha[i - 1]);

    std::vector<std::vector<int>> label_edge(row_bound,
                                             std::vector<int>(ell, -1));
    int slot_base = slot0;
    const long long inf = std::numeric_limits<long long>::max() / 4;
    for (int k = 0; k < ell; ++k) {
        const auto& rows = row_sets[k];
        const int q = static_cast<int>(rows.size());
        for (int t = 0; t < q; ++t) {
            flow.add_edge(slot_base + t, sink, multiplicities[k]);
            if (t + 1 < q) flow.add_edge(slot_base + t, slot_base + t + 1, inf);
        }
        // label i feeds the first slot whose box row is >= i
        int t = 0;
        for (int i = 1; i <= (q ? rows.back() : 0); ++i) {
            while (rows[t] < i) ++t;
            label_edge[i - 1][k] =
                flow.add_edge(label0 + i - 1, slot_base + t, multiplicities[k]);
        }
        slot_base += q;
    }

    if (flow.run(source, sink) != supply) return std::nullopt;
    std::vector<std::vector<int>> witness(row_bound, std::vector<int>(ell, 0));
    for (int i = 0; i < row_bound; ++i)
        for (int k = 0; k < ell; ++k)
            if (label_edge[i][k] >= 0)
                witness[i][k] = static_cast<int>(flow.sent(label0 + i, label_edge[i][k]));
    return witness;
}

bool prefix_transport_feasible(const std::vector<std::vector<int>>& row_sets,
                               const std::vector<int>& multiplicities, int row_bound,
                               const std::vector<int>& alpha) {
    return prefix_transport_witness(row_sets, multiplicities, row_bound, alpha).has_value();
}

}  // namespace schub
