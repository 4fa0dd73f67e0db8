#include "coralarm/tableau.hpp"

#include <algorithm>

namespace coralarm {

CoralTableau::CoralTableau(CoralSnake shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != shape_.length())
        throw TypeError("tableau needs exactly one entry per snake cell");
    for (int e : entries_)
        if (e < 0) throw TypeError("tableau entries must be non-negative");
    const auto& steps = shape_.steps();
    for (size_t i = 0; i < steps.size(); ++i) {
        bool horizontal = steps[i] == CoralSnake::Step::Right;
        if (horizontal ? entries_[i + 1] <= entries_[i] : entries_[i + 1] < entries_[i])
            throw TypeError("tableau entries must increase strictly across right steps and weakly across vertical ones");
    }
}

int CoralTableau::max_entry() const {
    if (empty()) return -1;
    return *std::max_element(entries_.begin(), entries_.end());
}

bool CoralTableau::is_type(int m, int n) const {
    if (empty()) return true;
    return shape_.height() <= m && max_entry() + shape_.length() <= n;
}

bool CoralTableau::is_tight() const {
    const auto& steps = shape_.steps();
    for (size_t i = 0; i < steps.size(); ++i) {
        int expect = entries_[i] + (steps[i] == CoralSnake::Step::Right ? 1 : 0);
        if (entries_[i + 1] != expect) return false;
    }
    return true;
}

CoralTableau state_to_tableau(const ArmState& s) {
    std::vector<int> rows;
    std::vector<int> entries;
    int h = 0;
    int col = 0;
    for (Link l : s.links()) {
        switch (l) {
            case Link::Right:
                ++col;
                break;
            case Link::Up:
                rows.push_back(h);
                entries.push_back(col);
                ++h;
                break;
            case Link::Down:
                --h;
                rows.push_back(h);
                entries.push_back(col);
                break;
        }
    }
    if (rows.empty()) return CoralTableau();
    std::vector<CoralSnake::Step> steps;
    steps.reserve(rows.size() - 1);
    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i] == rows[i - 1] + 1) steps.push_back(CoralSnake::Step::Up);
        else if (rows[i] == rows[i - 1] - 1) steps.push_back(CoralSnake::Step::Down);
        else steps.push_back(CoralSnake::Step::Right);
    }
    return CoralTableau(CoralSnake(static_cast<int>(rows.size()), std::move(steps)), std::move(entries));
}

ArmState tableau_to_state(const CoralTableau& t, int m, int n) {
    if (!t.is_type(m, n)) throw TypeError("tableau is not of type (m, n)");
    std::vector<Link> links(static_cast<size_t>(n), Link::Right);
    auto dirs = t.shape().vertical_dirs();
    for (int i = 0; i < t.shape().length(); ++i) {
        // cell i's vertical link sits after entry(i) right links and i
        // earlier vertical links
        int pos = t.entry(i) + i;  // 0-based
        links[static_cast<size_t>(pos)] = dirs[static_cast<size_t>(i)] ? Link::Up : Link::Down;
    }
    return ArmState(m, std::move(links));
}

CoralTableau tight_tableau(const NumberedSnake& e, int m, int n) {
    if (e.shape.empty()) throw BoundsError("a numbered snake needs a nonempty shape");
    if (e.s < 0 || e.s > n - e.shape.length() - e.shape.width() + 1)
        throw BoundsError("numbered snake value s out of range for (m, n)");
    if (e.shape.height() > m) throw BoundsError("snake height exceeds tunnel width");
    std::vector<int> entries;
    entries.reserve(static_cast<size_t>(e.shape.length()));
    int v = e.s;
    entries.push_back(v);
    for (auto st : e.shape.steps()) {
        if (st == CoralSnake::Step::Right) ++v;
        entries.push_back(v);
    }
    return CoralTableau(e.shape, std::move(entries));
}

NumberedSnake numbered_of_tight(const CoralTableau& t) {
    if (t.empty()) throw TypeError("the empty tableau is not a numbered snake");
    if (!t.is_tight()) throw TypeError("tableau is not tight");
    return NumberedSnake{t.shape(), t.entry(0)};
}

std::vector<int> jumps(const CoralTableau& t, int, int) {
    // A cell jumps when raising its entry keeps the entry inequalities: only
    // the bound with the next cell can break (the bound with the previous
    // cell only gets slacker), so the last cell always jumps. The length cap
    // is deliberately not consulted: the jump cells must index the maximal
    // elements of the tableau's ideal, and the full-shape element is always
    // maximal even when the tableau is pinned against the far wall.
    std::vector<int> out;
    int l = t.shape().length();
    const auto& steps = t.shape().steps();
    for (int i = 0; i < l; ++i) {
        if (i + 1 < l) {
            int v = t.entry(i) + 1;
            bool horizontal = steps[static_cast<size_t>(i)] == CoralSnake::Step::Right;
            if (horizontal ? t.entry(i + 1) <= v : t.entry(i + 1) < v) continue;
        }
        out.push_back(i);
    }
    return out;
}

NumberedSnake jump_tight(const CoralTableau& t, int cell) {
    CoralSnake mu = t.shape().prefix(cell + 1);
    return NumberedSnake{mu, t.entry(cell) - (mu.width() - 1)};
}

}  // namespace coralarm
