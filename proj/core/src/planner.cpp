#include "coralarm/planner.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "coralarm/errors.hpp"
#include "coralarm/snake.hpp"

namespace coralarm {

std::vector<int> vertical_labelling(const ArmState& s) {
    std::vector<int> labels;
    int n = s.length();
    for (int p = 1; p <= n; ++p)
        if (s.link(p) != Link::Right) labels.push_back(n - p + 1);
    return labels;
}

long long Decomposition::removal_cost() const {
    return std::accumulate(removed_a.begin(), removed_a.end(), 0LL);
}

long long Decomposition::transfer_cost() const {
    long long c = 0;
    for (size_t i = 0; i < kept_a.size(); ++i) c += std::abs(kept_a[i] - kept_b[i]);
    return c;
}

long long Decomposition::insertion_cost() const {
    return std::accumulate(removed_b.begin(), removed_b.end(), 0LL);
}

long long Decomposition::total() const {
    return removal_cost() + transfer_cost() + insertion_cost();
}

Decomposition decompose(const ArmState& a, const ArmState& b) {
    if (a.length() != b.length())
        throw LengthMismatch("cannot plan between arms of length " + std::to_string(a.length()) +
                             " and " + std::to_string(b.length()));
    if (a.width() != b.width())
        throw WidthMismatch("cannot plan between tunnels of width " + std::to_string(a.width()) +
                            " and " + std::to_string(b.width()));
    CoralTableau ta = state_to_tableau(a);
    CoralTableau tb = state_to_tableau(b);
    Decomposition d;
    d.common = snake_meet(ta.shape(), tb.shape()).length();
    std::vector<int> la = vertical_labelling(a);
    std::vector<int> lb = vertical_labelling(b);
    d.kept_a.assign(la.begin(), la.begin() + d.common);
    d.removed_a.assign(la.begin() + d.common, la.end());
    d.kept_b.assign(lb.begin(), lb.begin() + d.common);
    d.removed_b.assign(lb.begin() + d.common, lb.end());
    return d;
}

long long distance_edge(const ArmState& a, const ArmState& b) { return decompose(a, b).total(); }

long long distance_tableau(const CoralTableau& a, const CoralTableau& b, int n) {
    int k = snake_meet(a.shape(), b.shape()).length();
    long long d = 0;
    // label of cell i (0-based) is n - i - entry(i)
    for (int i = k; i < a.shape().length(); ++i) d += n - i - a.entry(i);
    for (int i = 0; i < k; ++i) d += std::abs(a.entry(i) - b.entry(i));
    for (int i = k; i < b.shape().length(); ++i) d += n - i - b.entry(i);
    return d;
}

std::vector<Move> geodesic_edge(const ArmState& a, const ArmState& b) {
    Decomposition check = decompose(a, b);  // validates lengths and widths
    int n = a.length();
    int k = check.common;
    CoralTableau ta = state_to_tableau(a);
    CoralTableau tb = state_to_tableau(b);

    std::vector<Move> plan;
    ArmState cur = a;
    auto step = [&](Move mv) {
        cur = apply_move(cur, mv);
        plan.push_back(mv);
    };

    // walk each surplus vertical of a to the free end and flip it away,
    // innermost last so earlier cells never move
    for (int j = ta.shape().length(); j > k; --j) {
        for (int p = ta.entry(j - 1) + j; p < n; ++p) step(Move::switch_corner(p));
        step(Move::flip_end(Link::Right));
    }

    // slide the shared verticals: raise every column to the componentwise
    // max from the free end inward, then lower to the target from the base
    // outward; both passes keep the tableau valid at every step
    std::vector<int> col(static_cast<size_t>(k));
    for (int j = 1; j <= k; ++j) col[static_cast<size_t>(j - 1)] = ta.entry(j - 1);
    for (int j = k; j >= 1; --j) {
        int top = std::max(ta.entry(j - 1), tb.entry(j - 1));
        for (int& c = col[static_cast<size_t>(j - 1)]; c < top; ++c) step(Move::switch_corner(c + j));
    }
    for (int j = 1; j <= k; ++j)
        for (int& c = col[static_cast<size_t>(j - 1)]; c > tb.entry(j - 1); --c)
            step(Move::switch_corner(c + j - 1));

    // grow the surplus verticals of b from the free end, walking each to its
    // column before adding the next
    std::vector<bool> dirs = tb.shape().vertical_dirs();
    for (int j = k + 1; j <= tb.shape().length(); ++j) {
        step(Move::flip_end(dirs[static_cast<size_t>(j - 1)] ? Link::Up : Link::Down));
        for (int c = n - j; c > tb.entry(j - 1); --c) step(Move::switch_corner(c + j - 1));
    }
    return plan;
}

std::vector<std::vector<Move>> normal_cube_path(const CoralPip& cp, const ArmState& a,
                                                const ArmState& b) {
    decompose(a, b);  // validates lengths and widths
    int m = cp.m(), n = cp.n();
    const Pip& p = cp.pip();
    Bitset cur = tableau_to_ideal(state_to_tableau(a), cp);
    Bitset goal = tableau_to_ideal(state_to_tableau(b), cp);

    std::vector<std::vector<Move>> plan;
    while (!(cur == goal)) {
        std::vector<int> toggles;
        for (int e : maximal_elements(p, cur))
            if (!goal.test(e)) toggles.push_back(e);
        for (int e : addable_elements(p, cur))
            if (goal.test(e)) toggles.push_back(e);
        if (toggles.empty()) throw Error("normal cube path stalled before reaching the target");
        ArmState from = tableau_to_state(ideal_to_tableau(cur, cp), m, n);
        std::vector<Move> step;
        for (int e : toggles) {
            Bitset next = cur;
            next.toggle(e);
            step.push_back(move_between(from, tableau_to_state(ideal_to_tableau(next, cp), m, n)));
        }
        for (int e : toggles) cur.toggle(e);
        plan.push_back(std::move(step));
    }
    return plan;
}

std::vector<std::vector<Move>> normal_cube_path(const ArmState& a, const ArmState& b) {
    return normal_cube_path(build_coral_pip(a.width(), a.length()), a, b);
}

ArmState zigzag_position(int m, int n) {
    std::vector<Link> links;
    Link dir = Link::Up;
    while (static_cast<int>(links.size()) < n) {
        for (int i = 0; i < m && static_cast<int>(links.size()) < n; ++i) links.push_back(dir);
        if (static_cast<int>(links.size()) < n) links.push_back(Link::Right);
        dir = dir == Link::Up ? Link::Down : Link::Up;
    }
    return ArmState(m, std::move(links));
}

ArmState near_zigzag_position(int m, int n) {
    if (n < 4) throw BoundsError("the near-zigzag needs at least 4 links, got " + std::to_string(n));
    std::vector<Link> links{Link::Up, Link::Right, Link::Down, Link::Right};
    ArmState tail = zigzag_position(m, n - 4);
    links.insert(links.end(), tail.links().begin(), tail.links().end());
    return ArmState(m, std::move(links));
}

ArmState horizontal_position(int m, int n) {
    return ArmState(m, std::vector<Link>(static_cast<size_t>(n), Link::Right));
}

namespace {

long long triangular(long long n) { return n * (n + 1) / 2; }

// total vertical label saved by the zigzag of length n in width m
long long zigzag_credit(long long m, long long n) {
    long long k = n / (m + 1), r = n % (m + 1);
    return (r + 1) * k + k * (k - 1) / 2 * (m + 1);
}

}  // namespace

long long diameter(int m, int n) {
    if (m < 1 || n < 0) throw BoundsError("diameter needs m >= 1 and n >= 0");
    if (n == 0) return 0;
    if (m == 1) return n % 2 == 0 ? static_cast<long long>(n) * (n + 2) / 4
                                  : static_cast<long long>(n + 1) * (n + 1) / 4;
    if (n < 6) return triangular(n) - zigzag_credit(m, n);
    return triangular(n - 1) - zigzag_credit(m, n) + triangular(n - 2) -
           zigzag_credit(m, static_cast<long long>(m) + n - 3);
}

}  // namespace coralarm
