#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "schub/code.hpp"

namespace schub {

/// 1-indexed box position (row, col) in matrix coordinates.
struct Box {
    int row = 0;
    int col = 0;
    auto operator<=>(const Box&) const = default;
};

/// A finite set of boxes inside an ambient n x n grid.
class Diagram {
public:
    Diagram() = default;
    Diagram(int ambient, std::vector<Box> boxes);

    int ambient() const { return ambient_; }
    const std::vector<Box>& boxes() const { return boxes_; }  // sorted, reading order
    int box_count() const { return static_cast<int>(boxes_.size()); }
    bool contains(int row, int col) const;
    bool contains(Box b) const { return contains(b.row, b.col); }

    /// Rows r with (r, col) present, increasing.
    std::vector<int> column_rows(int col) const;
    int row_size(int row) const;
    int column_size(int col) const;

    /// Connected components under 4-adjacency; component(b) is an id >= 0,
    /// identical within a component. Boxes only.
    std::vector<int> component_ids() const;

    auto operator<=>(const Diagram&) const = default;

private:
    int ambient_ = 0;
    std::vector<Box> boxes_;
    std::vector<char> grid_;  // ambient_*ambient_ presence mask
};

/// Rothe diagram of the permutation with the given code, on the canonical
/// ambient grid of side L + max entry.
Diagram rothe_diagram(const Code& code);

/// Boxes (i,j) of D with neither (i+1,j) nor (i,j+1) in D.
std::vector<Box> essential_set(const Diagram& d);

/// Boxes of the connected component of (1,1), empty if (1,1) is absent.
std::vector<Box> dominant_component(const Diagram& d);

/// The southmost-then-eastmost box of Ess(w) \ Dom(w), if any.
std::optional<Box> accessible_box(const Code& code);

/// Dots (i, w(i)) maximally southeast among those strictly northwest of z.
/// Throws std::invalid_argument if no dot lies northwest of z.
std::vector<Box> pivots(const Code& code, Box z);

struct RenderOptions {
    bool mark_essential = false;  // essential boxes as 'E'
    bool rays = false;            // hook rays from each dot
};

/// Text grid: '#' box, 'o' dot, '.' empty; optional 'E' and ray marks.
std::string render_diagram(const Code& code, const RenderOptions& opts = {});

}  // namespace schub
