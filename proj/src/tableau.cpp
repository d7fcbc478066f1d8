#include "schub/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schub {

Tableau::Tableau(Diagram shape, std::vector<int> labels)
    : shape_(std::move(shape)), labels_(std::move(labels)) {
    if (labels_.size() != shape_.boxes().size())
        throw std::invalid_argument("label list must match the shape box count");
    for (int v : labels_)
        if (v < 0 || v > shape_.ambient())
            throw std::invalid_argument("label out of range");
}

int Tableau::label(Box b) const {
    const auto& bs = shape_.boxes();
    auto it = std::lower_bound(bs.begin(), bs.end(), b);
    if (it == bs.end() || *it != b) throw std::invalid_argument("box not in shape");
    return labels_[it - bs.begin()];
}

void Tableau::set_label(Box b, int value) {
    const auto& bs = shape_.boxes();
    auto it = std::lower_bound(bs.begin(), bs.end(), b);
    if (it == bs.end() || *it != b) throw std::invalid_argument("box not in shape");
    labels_[it - bs.begin()] = value;
}

ContentVec Tableau::content() const {
    ContentVec counts(shape_.ambient(), 0);
    for (int v : labels_)
        if (v != kUnlabelled) ++counts[v - 1];
    return counts;
}

std::vector<Box> Tableau::preimage(const std::vector<int>& s) const {
    std::vector<Box> out;
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] != kUnlabelled &&
            std::find(s.begin(), s.end(), labels_[i]) != s.end())
            out.push_back(shape_.boxes()[i]);
    return out;
}

long Tableau::labelled_count() const {
    return std::count_if(labels_.begin(), labels_.end(),
                         [](int v) { return v != kUnlabelled; });
}

bool Tableau::fully_labelled() const {
    return std::all_of(labels_.begin(), labels_.end(),
                       [](int v) { return v != kUnlabelled; });
}

bool Tableau::is_flagged() const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] != kUnlabelled && labels_[i] > shape_.boxes()[i].row)
            return false;
    return true;
}

bool Tableau::is_column_injective() const {
    const int n = shape_.ambient();
    std::vector<int> seen(static_cast<std::size_t>(n) * (n + 1), 0);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        int v = labels_[i];
        if (v == kUnlabelled) continue;
        int& cell = seen[static_cast<std::size_t>(shape_.boxes()[i].col - 1) * (n + 1) + v];
        if (cell) return false;
        cell = 1;
    }
    return true;
}

bool Tableau::is_column_strict() const {
    // strictly increasing down each column over the labelled boxes
    const int n = shape_.ambient();
    std::vector<int> last(n + 1, 0);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        int v = labels_[i];
        if (v == kUnlabelled) continue;
        int col = shape_.boxes()[i].col;
        if (last[col] >= v) return false;
        last[col] = v;
    }
    return true;
}

std::string Tableau::render() const {
    const int n = shape_.ambient();
    if (n == 0) return "(empty)\n";
    int width = 1;
    for (int m = n; m >= 10; m /= 10) ++width;
    std::vector<std::string> grid(n, std::string(static_cast<std::size_t>(n) * (width + 1) - 1, ' '));
    auto put = [&](int r, int c, const std::string& s) {
        std::size_t pos = static_cast<std::size_t>(c - 1) * (width + 1);
        for (std::size_t k = 0; k < s.size(); ++k) grid[r - 1][pos + k] = s[k];
    };
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        const Box& b = shape_.boxes()[i];
        put(b.row, b.col, labels_[i] == kUnlabelled ? "." : std::to_string(labels_[i]));
    }
    std::ostringstream os;
    for (auto& line : grid) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

std::string ColumnWord::text() const {
    std::string s;
    for (const auto& [sym, row] : symbols) s.push_back(static_cast<char>(sym));
    return s;
}

namespace {

std::vector<char> row_mask(int n, const std::vector<int>& s) {
    std::vector<char> in(n + 1, 0);
    for (int r : s) {
        if (r < 1 || r > n) throw std::invalid_argument("row set out of range");
        in[r] = 1;
    }
    return in;
}

}  // namespace

WordTheta word_and_theta(const Diagram& d, const std::vector<int>& s) {
    const int n = d.ambient();
    const auto in = row_mask(n, s);
    WordTheta out;
    out.words.reserve(n);
    for (int c = 1; c <= n; ++c) {
        ColumnWord word;
        word.column = c;
        long column_theta = 0;
        std::vector<int> open_stack;
        for (int r = 1; r <= n; ++r) {
            const bool box = d.contains(r, c);
            if (box && in[r]) {
                word.symbols.emplace_back(WordSymbol::Star, r);
                ++column_theta;
            } else if (box) {
                word.symbols.emplace_back(WordSymbol::Close, r);
                if (!open_stack.empty()) {
                    open_stack.pop_back();
                    ++column_theta;
                }
            } else if (in[r]) {
                word.symbols.emplace_back(WordSymbol::Open, r);
                open_stack.push_back(r);
            }
        }
        out.theta += column_theta;
        out.words.push_back(std::move(word));
    }
    return out;
}

Tableau greedy_tableau(const Diagram& d, const std::vector<int>& s) {
    const int n = d.ambient();
    const auto in = row_mask(n, s);
    std::vector<int> labels(d.boxes().size(), kUnlabelled);
    auto set = [&](int r, int c, int v) {
        Box b{r, c};
        auto it = std::lower_bound(d.boxes().begin(), d.boxes().end(), b);
        labels[it - d.boxes().begin()] = v;
    };
    for (int c = 1; c <= n; ++c) {
        std::vector<int> open_stack;
        for (int r = 1; r <= n; ++r) {
            const bool box = d.contains(r, c);
            if (box && in[r]) {
                set(r, c, r);
            } else if (box) {
                if (!open_stack.empty()) {
                    set(r, c, open_stack.back());
                    open_stack.pop_back();
                }
            } else if (in[r]) {
                open_stack.push_back(r);
            }
        }
    }
    return Tableau(d, std::move(labels));
}

bool exhausts(const Tableau& t, const ContentVec& alpha, const std::vector<int>& s) {
    long lhs = 0;
    for (int i : s)
        if (i >= 1 && i <= static_cast<int>(alpha.size())) lhs += alpha[i - 1];
    return lhs <= static_cast<long>(t.preimage(s).size());
}

std::vector<Tableau> enumerate_perfect(const Diagram& d, const ContentVec& alpha,
                                       const EnumerateOptions& opts) {
    if (static_cast<std::size_t>(d.box_count()) > opts.max_boxes)
        throw std::runtime_error("diagram exceeds the enumeration budget");
    const int n = d.ambient();
    long total = std::accumulate(alpha.begin(), alpha.end(), 0L);
    for (std::size_t i = n; i < alpha.size(); ++i)
        if (alpha[i] != 0) return {};
    if (total != d.box_count()) return {};

    std::vector<int> remaining(n + 1, 0);
    for (std::size_t i = 0; i < alpha.size() && i < static_cast<std::size_t>(n); ++i)
        remaining[i + 1] = alpha[i];

    const auto& boxes = d.boxes();
    std::vector<int> labels(boxes.size(), kUnlabelled);
    std::vector<char> used_in_col(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    std::vector<int> last_in_col(n + 1, 0);  // label of the lowest filled box so far
    std::vector<Tableau> out;

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == boxes.size()) {
            out.emplace_back(d, labels);
            return;
        }
        const Box b = boxes[idx];
        const int lo = opts.column_strict_only ? last_in_col[b.col] + 1 : 1;
        for (int v = lo; v <= b.row; ++v) {
            if (remaining[v] == 0) continue;
            char& used = used_in_col[static_cast<std::size_t>(b.col) * (n + 1) + v];
            if (used) continue;
            used = 1;
            --remaining[v];
            labels[idx] = v;
            int saved = last_in_col[b.col];
            last_in_col[b.col] = v;
            self(self, idx + 1);
            last_in_col[b.col] = saved;
            labels[idx] = kUnlabelled;
            ++remaining[v];
            used = 0;
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Tableau> weigandt_fillings(const Code& code) {
    const Diagram d = rothe_diagram(code);
    const int n = d.ambient();
    const OneLine w = complete_oneline(code_to_oneline(code), n);

    // 132-pattern boxes (row j, col w(k)), with multiplicity, reading order.
    std::vector<Box> pattern_boxes;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                if (w[i - 1] < w[k - 1] && w[k - 1] < w[j - 1])
                    pattern_boxes.push_back({j, w[k - 1]});
    std::sort(pattern_boxes.begin(), pattern_boxes.end());

    std::vector<char> is_pattern_box(static_cast<std::size_t>(n + 1) * (n + 1), 0);
    for (const Box& b : pattern_boxes)
        is_pattern_box[static_cast<std::size_t>(b.row) * (n + 1) + b.col] = 1;

    std::vector<int> labels;
    labels.reserve(d.boxes().size());
    for (const Box& b : d.boxes()) labels.push_back(b.row);

    std::vector<Tableau> fillings;
    fillings.emplace_back(d, labels);
    Tableau current = fillings.back();
    for (const Box& b : pattern_boxes) {
        // Column run from b upward, stopping at a gap or at another pattern
        // box (pattern boxes strictly north come earlier in reading order).
        for (int r = b.row; r >= 1 && d.contains(r, b.col); --r) {
            if (r != b.row && is_pattern_box[static_cast<std::size_t>(r) * (n + 1) + b.col]) break;
            current.set_label({r, b.col}, current.label({r, b.col}) - 1);
        }
        if (!current.is_flagged() || !current.is_column_strict() || !current.fully_labelled())
            throw std::logic_error("filling update broke an invariant");
        for (int v : current.labels())
            if (v < 1) throw std::logic_error("filling update produced a nonpositive label");
        fillings.push_back(current);
    }
    return fillings;
}

}  // namespace schub
