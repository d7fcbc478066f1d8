#include "schub/code.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace schub {

Code::Code(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int c : entries_) {
        if (c < 0) throw std::invalid_argument("code entries must be nonnegative");
    }
    while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

long Code::box_count() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0L);
}

int Code::max_entry() const {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

int Code::ambient() const { return length() + max_entry(); }

std::string Code::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ',';
        os << entries_[i];
    }
    os << ')';
    return os.str();
}

OneLine code_to_oneline(const Code& code) {
    const int L = code.length();
    OneLine w;
    w.reserve(L);
    std::vector<char> used;  // used[v-1] for values seen so far
    for (int i = 1; i <= L; ++i) {
        // w(i) is the (c_i+1)-st smallest positive value not used yet.
        int need = code.at(i) + 1;
        int v = 0;
        while (need > 0) {
            ++v;
            if (v > static_cast<int>(used.size())) used.resize(v, 0);
            if (!used[v - 1]) --need;
        }
        used[v - 1] = 1;
        w.push_back(v);
    }
    return w;
}

Code oneline_to_code(const OneLine& w) {
    std::set<int> seen;
    for (int v : w) {
        if (v < 1) throw std::invalid_argument("one-line values must be positive");
        if (!seen.insert(v).second) throw std::invalid_argument("one-line values must be distinct");
    }
    std::vector<int> code(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        int c = 0;
        for (int j = 1; j < w[i]; ++j) {
            bool earlier = false;
            for (std::size_t k = 0; k < i; ++k)
                if (w[k] == j) { earlier = true; break; }
            if (!earlier) ++c;
        }
        code[i] = c;
    }
    return Code(code);
}

OneLine complete_oneline(const OneLine& prefix, int n) {
    for (int v : prefix) {
        if (v > n) throw std::invalid_argument("prefix value exceeds requested size");
    }
    std::vector<char> used(n + 1, 0);
    for (int v : prefix) used[v] = 1;
    OneLine w = prefix;
    for (int v = 1; v <= n && static_cast<int>(w.size()) < n; ++v)
        if (!used[v]) w.push_back(v);
    return w;
}

long count_132(const OneLine& w) {
    const int n = static_cast<int>(w.size());
    {
        std::vector<char> used(n + 1, 0);
        for (int v : w) {
            if (v < 1 || v > n || used[v])
                throw std::invalid_argument("count_132 requires a full permutation");
            used[v] = 1;
        }
    }
    long total = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (w[i] < w[k] && w[k] < w[j]) ++total;
    return total;
}

bool is_vexillary(const Code& code) {
    // Fulton's criterion: vexillary iff no essential box lies strictly
    // southeast of another.
    const int L = code.length();
    const OneLine w = code_to_oneline(code);
    const int n = code.ambient();
    std::vector<char> used(n + 2, 0);
    std::vector<std::vector<char>> row_boxes(L + 2, std::vector<char>(n + 2, 0));
    for (int i = 1; i <= L; ++i) {
        for (int j = 1; j < w[i - 1]; ++j)
            if (!used[j]) row_boxes[i][j] = 1;
        used[w[i - 1]] = 1;
    }
    int min_col_above = n + 1;  // over essential boxes in strictly earlier rows
    for (int i = 1; i <= L; ++i) {
        int row_min = n + 1;
        for (int j = 1; j <= n; ++j) {
            if (!row_boxes[i][j]) continue;
            if (row_boxes[i][j + 1] || row_boxes[i + 1][j]) continue;
            if (j > min_col_above) return false;
            row_min = std::min(row_min, j);
        }
        min_col_above = std::min(min_col_above, row_min);
    }
    return true;
}

std::pair<Partition, Flag> shape_and_flag(const Code& code) {
    if (!is_vexillary(code)) throw std::invalid_argument("shape_and_flag requires a vexillary code");
    const auto& c = code.entries();
    const int L = code.length();
    Partition lambda;
    Flag flag;
    for (int i = 0; i < L; ++i) {
        if (c[i] == 0) continue;
        lambda.push_back(c[i]);
        int e = i;
        for (int j = i; j < L; ++j)
            if (c[j] >= c[i]) e = j;
        flag.push_back(e + 1);
    }
    std::sort(lambda.rbegin(), lambda.rend());
    std::sort(flag.begin(), flag.end());
    return {lambda, flag};
}

Code grassmannian_code(const Partition& lambda) {
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
        if (lambda[i] < lambda[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    std::vector<int> rev(lambda.rbegin(), lambda.rend());
    return Code(rev);
}

std::string to_string(const OneLine& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    os << ')';
    return os.str();
}

}  // namespace schub
