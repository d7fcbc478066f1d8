#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace schub {

/// Exact rational scalar. GMP keeps fractions canonical (lowest terms,
/// positive denominator) after every operation.
using Rational = mpq_class;

enum class Sense { LE, EQ, GE };

/// One halfspace/hyperplane over named variables; terms sorted by variable
/// index, no zero coefficients.
struct LinearRow {
    std::vector<std::pair<int, Rational>> terms;
    Sense sense = Sense::LE;
    Rational rhs = 0;
    bool operator==(const LinearRow&) const = default;
};

struct LPInstance {
    std::vector<std::string> variables;
    std::vector<LinearRow> rows;
    int var_count() const { return static_cast<int>(variables.size()); }
    bool operator==(const LPInstance&) const = default;
};

struct WitnessPoint {
    std::vector<Rational> values;  // indexed like LPInstance::variables
    bool operator==(const WitnessPoint&) const = default;
};

enum class FeasStatus { Feasible, Infeasible };

struct FeasibilityResult {
    FeasStatus status = FeasStatus::Infeasible;
    WitnessPoint point;     // meaningful when Feasible
    bool is_vertex = false; // basic feasible solution of the instance
};

struct SolveOptions {
    std::ostream* trace = nullptr;  // per-pivot tableau dump when set
};

/// Exact phase-1 simplex with Bland's rule on bounded variables.
/// Feasible results carry a basic feasible solution (a vertex whenever the
/// feasible region is pointed, which holds for all instances built here).
FeasibilityResult solve_feasibility(const LPInstance& instance, const SolveOptions& opts = {});

/// Exact re-substitution of a point into every row.
bool satisfies(const LPInstance& instance, const WitnessPoint& point);

/// Moves a feasible point along null directions of its active rows until the
/// active set has full column rank. Terminates after at most var_count steps;
/// requires the feasible region to be bounded along the walked directions.
WitnessPoint drive_to_vertex(const LPInstance& instance, WitnessPoint point);

/// Active rows at the point have full column rank.
bool verify_vertex(const LPInstance& instance, const WitnessPoint& point);

/// Returns the witness when every coordinate is an integer; throws
/// std::logic_error otherwise (or when the result is not a feasible vertex).
/// Fractional coordinates here would contradict total unimodularity of the
/// tableau polytope systems, so this is a bug trap rather than a user error.
WitnessPoint assert_integral_vertex(const FeasibilityResult& result);

/// Feasibility of the compressed tableau polytope, decided exactly in
/// integers: scaled variables y_{ik} = mult_k * x_{ik} range over [0, mult_k],
/// row sums must equal alpha_i and column prefixes must cover the class box
/// prefixes. Equivalent to LP feasibility of the same system by network
/// integrality; used for instances too large for the dense simplex.
/// Precondition: sum(alpha) == sum_k mult_k * |row_sets[k]|.
bool prefix_transport_feasible(const std::vector<std::vector<int>>& row_sets,
                               const std::vector<int>& multiplicities, int row_bound,
                               const std::vector<int>& alpha);

/// Same decision, returning the integer matrix y (row_bound x classes) on
/// success.
std::optional<std::vector<std::vector<int>>> prefix_transport_witness(
    const std::vector<std::vector<int>>& row_sets, const std::vector<int>& multiplicities,
    int row_bound, const std::vector<int>& alpha);

}  // namespace schub
