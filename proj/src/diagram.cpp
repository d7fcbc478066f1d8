#include "schub/diagram.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace schub {

Diagram::Diagram(int ambient, std::vector<Box> boxes)
    : ambient_(ambient), boxes_(std::move(boxes)) {
    if (ambient_ < 0) throw std::invalid_argument("ambient grid side must be nonnegative");
    std::sort(boxes_.begin(), boxes_.end());
    boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
    grid_.assign(static_cast<std::size_t>(ambient_) * ambient_, 0);
    for (const Box& b : boxes_) {
        if (b.row < 1 || b.row > ambient_ || b.col < 1 || b.col > ambient_)
            throw std::invalid_argument("box outside the ambient grid");
        grid_[static_cast<std::size_t>(b.row - 1) * ambient_ + (b.col - 1)] = 1;
    }
}

bool Diagram::contains(int row, int col) const {
    if (row < 1 || row > ambient_ || col < 1 || col > ambient_) return false;
    return grid_[static_cast<std::size_t>(row - 1) * ambient_ + (col - 1)] != 0;
}

std::vector<int> Diagram::column_rows(int col) const {
    std::vector<int> rows;
    for (int r = 1; r <= ambient_; ++r)
        if (contains(r, col)) rows.push_back(r);
    return rows;
}

int Diagram::row_size(int row) const {
    int n = 0;
    for (int c = 1; c <= ambient_; ++c)
        if (contains(row, c)) ++n;
    return n;
}

int Diagram::column_size(int col) const {
    int n = 0;
    for (int r = 1; r <= ambient_; ++r)
        if (contains(r, col)) ++n;
    return n;
}

std::vector<int> Diagram::component_ids() const {
    std::vector<int> ids(boxes_.size(), -1);
    auto index_of = [&](Box b) {
        auto it = std::lower_bound(boxes_.begin(), boxes_.end(), b);
        return static_cast<int>(it - boxes_.begin());
    };
    int next = 0;
    for (std::size_t i = 0; i < boxes_.size(); ++i) {
        if (ids[i] >= 0) continue;
        int id = next++;
        std::queue<Box> q;
        q.push(boxes_[i]);
        ids[i] = id;
        while (!q.empty()) {
            Box b = q.front();
            q.pop();
            const Box nbrs[4] = {{b.row - 1, b.col}, {b.row + 1, b.col},
                                 {b.row, b.col - 1}, {b.row, b.col + 1}};
            for (Box nb : nbrs) {
                if (!contains(nb)) continue;
                int j = index_of(nb);
                if (ids[j] < 0) {
                    ids[j] = id;
                    q.push(nb);
                }
            }
        }
    }
    return ids;
}

Diagram rothe_diagram(const Code& code) {
    const int n = code.ambient();
    const OneLine w = code_to_oneline(code);
    std::vector<char> used(n + 2, 0);
    std::vector<Box> boxes;
    for (int i = 1; i <= code.length(); ++i) {
        for (int j = 1; j < w[i - 1]; ++j)
            if (!used[j]) boxes.push_back({i, j});
        used[w[i - 1]] = 1;
    }
    return Diagram(n, std::move(boxes));
}

std::vector<Box> essential_set(const Diagram& d) {
    std::vector<Box> ess;
    for (const Box& b : d.boxes())
        if (!d.contains(b.row + 1, b.col) && !d.contains(b.row, b.col + 1))
            ess.push_back(b);
    return ess;
}

std::vector<Box> dominant_component(const Diagram& d) {
    if (!d.contains(1, 1)) return {};
    auto ids = d.component_ids();
    int dom = -1;
    for (std::size_t i = 0; i < d.boxes().size(); ++i)
        if (d.boxes()[i] == Box{1, 1}) dom = ids[i];
    std::vector<Box> out;
    for (std::size_t i = 0; i < d.boxes().size(); ++i)
        if (ids[i] == dom) out.push_back(d.boxes()[i]);
    return out;
}

std::optional<Box> accessible_box(const Code& code) {
    Diagram d = rothe_diagram(code);
    std::vector<Box> ess = essential_set(d);
    std::vector<Box> dom = dominant_component(d);
    std::optional<Box> best;
    for (const Box& b : ess) {
        if (std::binary_search(dom.begin(), dom.end(), b)) continue;
        if (!best || b.row > best->row || (b.row == best->row && b.col > best->col))
            best = b;
    }
    return best;
}

std::vector<Box> pivots(const Code& code, Box z) {
    const OneLine w = code_to_oneline(code);
    std::vector<Box> nw;  // dots strictly northwest of z
    for (int i = 1; i <= static_cast<int>(w.size()); ++i)
        if (i < z.row && w[i - 1] < z.col) nw.push_back({i, w[i - 1]});
    if (nw.empty()) throw std::invalid_argument("no dot northwest of the given box");
    std::vector<Box> piv;
    for (const Box& a : nw) {
        bool dominated = false;
        for (const Box& b : nw)
            if (b.row > a.row && b.col > a.col) { dominated = true; break; }
        if (!dominated) piv.push_back(a);
    }
    std::sort(piv.begin(), piv.end());
    return piv;
}

std::string render_diagram(const Code& code, const RenderOptions& opts) {
    const int n = code.ambient();
    if (n == 0) return "(empty)\n";
    Diagram d = rothe_diagram(code);
    OneLine w = complete_oneline(code_to_oneline(code), n);
    std::vector<std::string> grid(n, std::string(n, '.'));
    if (opts.rays) {
        for (int i = 1; i <= n; ++i) {
            for (int j = w[i - 1] + 1; j <= n; ++j) grid[i - 1][j - 1] = '-';
            for (int r = i + 1; r <= n; ++r) {
                char& cell = grid[r - 1][w[i - 1] - 1];
                cell = (cell == '-') ? '+' : '|';
            }
        }
    }
    for (const Box& b : d.boxes()) grid[b.row - 1][b.col - 1] = '#';
    if (opts.mark_essential)
        for (const Box& b : essential_set(d)) grid[b.row - 1][b.col - 1] = 'E';
    for (int i = 1; i <= n; ++i) grid[i - 1][w[i - 1] - 1] = 'o';
    std::ostringstream os;
    for (const auto& line : grid) os << line << '\n';
    return os.str();
}

}  // namespace schub
