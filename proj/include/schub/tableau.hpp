#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "schub/diagram.hpp"

namespace schub {

/// Label value reserved for an unlabelled box.
inline constexpr int kUnlabelled = 0;

/// A filling of a diagram with labels in [n]; 0 marks an unlabelled box.
class Tableau {
public:
    Tableau() = default;
    Tableau(Diagram shape, std::vector<int> labels);

    const Diagram& shape() const { return shape_; }
    const std::vector<int>& labels() const { return labels_; }  // parallel to shape().boxes()
    int label(Box b) const;
    void set_label(Box b, int value);

    /// Number of each label in [n], n = ambient grid side.
    ContentVec content() const;
    /// Boxes whose labels lie in the set s (sorted rows).
    std::vector<Box> preimage(const std::vector<int>& s) const;
    long labelled_count() const;

    bool fully_labelled() const;
    bool is_flagged() const;          // label <= row everywhere
    bool is_column_injective() const;
    bool is_column_strict() const;    // labelled boxes strictly increase down columns

    /// Grid rendering: digits for labels, '.' for unlabelled boxes,
    /// spaces outside the shape.
    std::string render() const;

    bool operator==(const Tableau&) const = default;

private:
    Diagram shape_;
    std::vector<int> labels_;
};

enum class WordSymbol : char { Open = '(', Close = ')', Star = '*' };

/// Column reading word: symbols with their originating rows, top to bottom.
struct ColumnWord {
    int column = 0;
    std::vector<std::pair<WordSymbol, int>> symbols;
    std::string text() const;
};

struct WordTheta {
    std::vector<ColumnWord> words;  // one per column 1..n
    long theta = 0;
};

/// All column words of D for the row set s, and theta_D(s) = total stars
/// plus matched () pairs (inside-out pairing).
WordTheta word_and_theta(const Diagram& d, const std::vector<int>& s);

/// The greedy flagged column-injective tableau pi_{D,s}: stars keep their
/// row, each matched ')' takes the row of its '(' partner, the rest stay
/// unlabelled.
Tableau greedy_tableau(const Diagram& d, const std::vector<int>& s);

/// True iff sum of alpha over s is at most the number of boxes labelled in s.
bool exhausts(const Tableau& t, const ContentVec& alpha, const std::vector<int>& s);

struct EnumerateOptions {
    bool column_strict_only = false;
    std::size_t max_boxes = 16;
};

/// Exhaustive list of fully-labelled flagged column-injective fillings of
/// content alpha, boxes in reading order, labels ascending. Throws
/// std::runtime_error when the diagram exceeds the enumeration budget.
std::vector<Tableau> enumerate_perfect(const Diagram& d, const ContentVec& alpha,
                                       const EnumerateOptions& opts = {});

/// The fillings F_0, ..., F_N (N = number of 132 patterns): F_0 labels each
/// box with its row; each later step decrements a column run attached to the
/// next 132-box in reading order. All are column-strict, flagged, and fully
/// labelled, with strictly decreasing label sums.
std::vector<Tableau> weigandt_fillings(const Code& code);

}  // namespace schub
