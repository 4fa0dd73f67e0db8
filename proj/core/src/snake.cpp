#include "coralarm/snake.hpp"

#include <algorithm>

namespace coralarm {

CoralSnake::CoralSnake(int cell_count, std::vector<Step> steps) : cells_(cell_count), steps_(std::move(steps)) {
    if (cells_ < 1) throw TypeError("a nonempty coral snake needs at least one cell");
    if (static_cast<int>(steps_.size()) != cells_ - 1)
        throw TypeError("coral snake step count must be cell count minus one");
    // The corner-color rule is equivalent to: the robot's vertical direction
    // persists across vertical snake steps and flips across right steps, so
    // an Up step is only possible while going up, and Down while going down.
    bool up = true;
    int row = 0;
    for (Step st : steps_) {
        switch (st) {
            case Step::Up:
                if (!up) throw TypeError("snake steps up while its vertical direction is down");
                ++row;
                break;
            case Step::Down:
                if (up) throw TypeError("snake steps down while its vertical direction is up");
                --row;
                break;
            case Step::Right:
                up = !up;
                break;
        }
        if (row < 0) throw TypeError("snake leaves the tunnel below row 0");
    }
}

CoralSnake CoralSnake::from_steps(const std::string& steps) {
    std::vector<Step> parsed;
    parsed.reserve(steps.size());
    for (char c : steps) {
        switch (c) {
            case 'u': parsed.push_back(Step::Up); break;
            case 'd': parsed.push_back(Step::Down); break;
            case 'r': parsed.push_back(Step::Right); break;
            default: throw CharError(std::string("invalid snake step '") + c + "'");
        }
    }
    return CoralSnake(static_cast<int>(steps.size()) + 1, std::move(parsed));
}

std::vector<int> CoralSnake::rows() const {
    std::vector<int> out;
    if (empty()) return out;
    out.reserve(static_cast<size_t>(cells_));
    int row = 0;
    out.push_back(0);
    for (Step st : steps_) {
        if (st == Step::Up) ++row;
        if (st == Step::Down) --row;
        out.push_back(row);
    }
    return out;
}

std::vector<bool> CoralSnake::vertical_dirs() const {
    std::vector<bool> out;
    if (empty()) return out;
    out.reserve(static_cast<size_t>(cells_));
    bool up = true;
    out.push_back(true);
    for (Step st : steps_) {
        if (st == Step::Right) up = !up;
        out.push_back(up);
    }
    return out;
}

int CoralSnake::height() const {
    if (empty()) return 0;
    auto r = rows();
    return *std::max_element(r.begin(), r.end()) + 1;
}

int CoralSnake::width() const {
    if (empty()) return 0;
    return 1 + static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::Right));
}

CoralSnake CoralSnake::prefix(int k) const {
    if (k < 0 || k > cells_) throw BoundsError("snake prefix length out of range");
    if (k == 0) return CoralSnake();
    return CoralSnake(k, std::vector<Step>(steps_.begin(), steps_.begin() + (k - 1)));
}

bool CoralSnake::is_prefix_of(const CoralSnake& other) const {
    if (cells_ > other.cells_) return false;
    return std::equal(steps_.begin(), steps_.end(), other.steps_.begin());
}

std::string CoralSnake::step_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step st : steps_)
        out.push_back(st == Step::Up ? 'u' : (st == Step::Down ? 'd' : 'r'));
    return out;
}

bool CoralSnake::canonical_less(const CoralSnake& a, const CoralSnake& b) {
    auto key = [](Step s) { return s == Step::Up ? 0 : (s == Step::Down ? 1 : 2); };
    const auto& sa = a.steps_;
    const auto& sb = b.steps_;
    size_t k = std::min(sa.size(), sb.size());
    for (size_t i = 0; i < k; ++i)
        if (sa[i] != sb[i]) return key(sa[i]) < key(sb[i]);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    return a.cells_ < b.cells_;  // the empty snake sorts before the one-cell snake
}

CoralSnake snake_meet(const CoralSnake& a, const CoralSnake& b) {
    if (a.empty() || b.empty()) return CoralSnake();
    size_t k = 0;
    while (k < a.steps().size() && k < b.steps().size() && a.steps()[k] == b.steps()[k]) ++k;
    return a.prefix(static_cast<int>(k) + 1);
}

namespace {

void extend(std::vector<CoralSnake::Step>& steps, int cells, int row, int max_row, bool up, int width, int m,
            int n, std::vector<CoralSnake>& out) {
    out.push_back(CoralSnake(cells, steps));
    // Prune on l + w - 1 <= n; every extension grows l (and possibly w).
    auto try_step = [&](CoralSnake::Step st, int new_row, bool new_up) {
        int new_width = width + (st == CoralSnake::Step::Right ? 1 : 0);
        if (new_row < 0 || new_row >= m) return;
        if (cells + 1 + new_width - 1 > n) return;
        steps.push_back(st);
        extend(steps, cells + 1, new_row, std::max(max_row, new_row), new_up, new_width, m, n, out);
        steps.pop_back();
    };
    if (up) try_step(CoralSnake::Step::Up, row + 1, true);
    if (!up) try_step(CoralSnake::Step::Down, row - 1, false);
    try_step(CoralSnake::Step::Right, row, !up);
}

}  // namespace

std::vector<CoralSnake> enumerate_snakes(int m, int n) {
    std::vector<CoralSnake> out;
    if (m < 1 || n < 1) return out;
    std::vector<CoralSnake::Step> steps;
    extend(steps, 1, 0, 0, true, 1, m, n, out);
    std::sort(out.begin(), out.end(), CoralSnake::canonical_less);
    return out;
}

}  // namespace coralarm
