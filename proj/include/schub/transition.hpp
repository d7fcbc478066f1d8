#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "schub/code.hpp"
#include "schub/schubert.hpp"

namespace schub {

/// One edge of the branching recursion applied at the current node.
struct MarchMove {
    int pivot_row = 0;
    bool operator==(const MarchMove&) const = default;
};
struct DeletionRun {
    int row = 0;
    int multiplicity = 1;
    bool operator==(const DeletionRun&) const = default;
};
using TransitionStep = std::variant<MarchMove, DeletionRun>;
using TransitionString = std::vector<TransitionStep>;

/// Counts of each value per row of a row-weakly-increasing tableau;
/// entry [i][j] is the number of (j+1)'s in row i+1.
using RowCountMatrix = std::vector<std::vector<int>>;

struct TransitionChildren {
    int deletion_row = 0;
    Code deletion_child;
    std::vector<std::pair<int, Code>> march_children;  // (pivot row, child code)
};

/// Children of a non-vexillary node: the single deletion child (box count
/// drops by one) and one march child per pivot (box count preserved).
/// Throws std::invalid_argument on vexillary input.
TransitionChildren transition_children(const Code& code);

/// Flagged Kostka number: semistandard tableaux of shape lambda with row-i
/// entries at most phi_i and content alpha.
mpz_class flagged_kostka(const Partition& lambda, const Flag& phi, const ContentVec& alpha);

/// Kostka number: the unconstrained-flag case.
mpz_class kostka(const Partition& lambda, const ContentVec& alpha);

/// Determinant of complete homogeneous polynomials h_{lambda_i - i + j}
/// bounded by phi_i, over the given number of variables. Test-oracle grade;
/// throws std::runtime_error beyond a small size budget.
SparsePoly flagged_schur(const Partition& lambda, const Flag& phi, int vars);

/// Exact coefficient via the branching recursion with memoization; leaves
/// are evaluated by flagged Kostka counting.
class CoefficientCounter {
public:
    mpz_class count(const Code& code, const ContentVec& alpha);

private:
    mpz_class count_normalized(const Code& code, const ContentVec& alpha);

    std::mutex mutex_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, mpz_class> memo_;
};

/// One-shot convenience wrapper around CoefficientCounter.
mpz_class count_coefficient(const Code& code, const ContentVec& alpha);

struct VerifyResult {
    bool ok = false;
    std::string reason;  // "ok" or a rejection code
};

/// Certificate check: the step string must trace a valid root-to-leaf path
/// (deletion runs only at the accessible row with enough non-dominant boxes,
/// marches only at genuine pivots, alternation on same-row runs, length at
/// most L^2), the leaf must be vexillary, the matrix must decode to a
/// flag-bounded semistandard tableau of the leaf shape, and the deletion
/// weight plus the tableau content must reproduce alpha.
VerifyResult verify_witness(const TransitionString& steps, const RowCountMatrix& r,
                            const Code& code, const ContentVec& alpha);

ContentVec deletion_weight(const TransitionString& steps, int length);

struct TransitionTreeNode {
    Code code;
    OneLine oneline;
    bool vexillary = false;
    std::vector<std::pair<std::string, TransitionTreeNode>> children;  // edge: "x3" or "2"
};

/// The full branching tree below the given code. Throws std::runtime_error
/// when the node budget is exceeded.
TransitionTreeNode transition_tree(const Code& code, std::size_t max_nodes = 4096);
std::string render_tree_text(const TransitionTreeNode& node);

struct TransitionPath {
    TransitionString steps;
    Code leaf;
    ContentVec delwt;
};

/// Every root-to-leaf path with consecutive same-row deletions collapsed
/// into runs. Throws std::runtime_error beyond the budget.
std::vector<TransitionPath> enumerate_transition_paths(const Code& code,
                                                       std::size_t max_paths = 100000);

}  // namespace schub
