#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace schub {

/// Lehmer code of a permutation: row sizes of its Rothe diagram.
/// Normalized so that the last entry is positive; the empty code is the
/// identity permutation.
class Code {
public:
    Code() = default;
    explicit Code(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int length() const { return static_cast<int>(entries_.size()); }
    int at(int i) const { return entries_[i - 1]; }  // 1-indexed
    bool empty() const { return entries_.empty(); }

    long box_count() const;
    int max_entry() const;
    /// Grid side n = L + max entry; every box and dot of the Rothe
    /// diagram fits in [n]^2.
    int ambient() const;

    std::string to_string() const;

    auto operator<=>(const Code&) const = default;

private:
    std::vector<int> entries_;
};

/// One-line notation, possibly a prefix of a permutation: distinct
/// positive values w(1), ..., w(m).
using OneLine = std::vector<int>;

/// Nonnegative exponent/content vector.
using ContentVec = std::vector<int>;

/// Weakly decreasing nonnegative parts.
using Partition = std::vector<int>;

/// Weakly increasing positive row bounds, one per positive part.
using Flag = std::vector<int>;

/// The length-L prefix (w(1),...,w(L)) of the minimal-length permutation
/// with the given code: w(i) is the (c_i+1)-st smallest value unused so far.
OneLine code_to_oneline(const Code& code);

/// Inverse of code_to_oneline up to trailing-zero stripping.
/// Throws std::invalid_argument on repeated or nonpositive values.
Code oneline_to_code(const OneLine& w);

/// Extends a one-line prefix to a full permutation of [n], filling the
/// remaining positions with the unused values in increasing order.
OneLine complete_oneline(const OneLine& prefix, int n);

/// Number of 132 patterns: triples i<j<k with w(i) < w(k) < w(j).
/// Requires a full permutation of [n].
long count_132(const OneLine& w);

/// Code-level vexillary (2143-avoidance) test.
bool is_vexillary(const Code& code);

/// Shape lambda(v) (code sorted decreasingly, zeros dropped) and flag
/// phi(v) (the values e_i = max{j >= i : c_j >= c_i} over nonzero c_i,
/// sorted increasingly). Throws std::invalid_argument unless vexillary.
std::pair<Partition, Flag> shape_and_flag(const Code& code);

/// Code of the grassmannian permutation w_lambda: the reversed partition.
Code grassmannian_code(const Partition& lambda);

std::string to_string(const OneLine& w);

}  // namespace schub
