#pragma once

#include <optional>
#include <vector>

#include "schub/diagram.hpp"
#include "schub/lp.hpp"
#include "schub/tableau.hpp"

namespace schub {

/// All 2^n values theta_D(S), indexed by row-set bitmask. Construction is
/// exponential in the ambient grid side and rejects sides beyond 18.
class ThetaTable {
public:
    explicit ThetaTable(const Diagram& d);
    long theta(unsigned mask) const { return thetas_[mask]; }
    int ambient() const { return ambient_; }
    /// Sum over the full grid equals #D and every subset inequality holds.
    bool contains(const ContentVec& alpha) const;

private:
    int ambient_ = 0;
    long box_count_ = 0;
    std::vector<long> thetas_;
};

/// Direct exponential membership test for the subset-sum polytope of D:
/// total equality plus all 2^n theta inequalities. Test-oracle grade.
bool schubitope_contains_direct(const Diagram& d, const ContentVec& alpha);

/// The tableau polytope of D and alpha over n^2 variables a_{i,j} in
/// column-major order: unit bounds, row content equalities, and column
/// prefix covering conditions.
LPInstance build_polytope(const Diagram& d, const ContentVec& alpha);

/// Grouping of identical columns of a diagram with multiplicities.
struct Compression {
    int row_bound = 0;                             // m: no boxes below this row
    std::vector<std::vector<int>> column_classes;  // P_k, sorted columns
    std::vector<int> representatives;              // p_k = min P_k
    std::vector<int> multiplicities;               // lambda_k = #P_k
    std::vector<std::vector<int>> row_sets;        // R_k = box rows of column p_k

    int class_count() const { return static_cast<int>(column_classes.size()); }
};

/// Column classes of the Rothe diagram computed in O(L^2) from the code
/// alone: the intervals cut out by the sorted window values, restricted to
/// columns that carry boxes; m = L.
Compression compression_from_code(const Code& code);

/// One class per column, m = ambient: the compressed system coincides with
/// the full tableau polytope.
Compression trivial_compression(const Diagram& d);

/// The compressed polytope over m x ell variables a_{i,k}: unit bounds,
/// multiplicity-weighted row content equalities, and per-class prefix
/// covering conditions.
LPInstance build_compressed(const Compression& c, const ContentVec& alpha_tilde);

/// Copies each class value to all columns of its class (rows above
/// row_bound, zero elsewhere), landing in the full polytope's coordinates.
WitnessPoint expand_compressed_point(const Compression& c, const WitnessPoint& compressed,
                                     int ambient);

enum class DecideEngine { Auto, Simplex, Flow };

struct DecideOptions {
    bool trivial_compression = false;
    DecideEngine engine = DecideEngine::Auto;
};

/// True iff the Schubert coefficient c_{alpha,w} is nonzero, where w is the
/// permutation with the given code: content totals are screened, then the
/// compressed polytope's feasibility is decided exactly.
bool decide_nonvanishing(const Code& code, const ContentVec& alpha,
                         const DecideOptions& opts = {});

/// A column-strict perfect tableau witnessing nonvanishing, built from an
/// integral vertex of the tableau polytope (compressed solve, expansion,
/// vertex drive); nullopt when the coefficient vanishes.
std::optional<Tableau> witness_perfect_tableau(const Code& code, const ContentVec& alpha,
                                               const DecideOptions& opts = {});

}  // namespace schub
