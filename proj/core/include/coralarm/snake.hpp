#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "coralarm/errors.hpp"

namespace coralarm {

/// A coral snake: a path of unit cells starting at (row 0, col 0), taking
/// steps up, down, or right, subject to the corner-color rule. Stored as the
/// step sequence; containment (initial sub-snake) is prefix testing.
///
/// The alternating coloring is never stored: the color of cell i is the
/// parity of i, and the corner-color rule is equivalent to a consistency
/// condition on the directions of the vertical arm links the cells encode
/// (see vertical_dirs()).
class CoralSnake {
public:
    enum class Step : std::uint8_t { Up, Down, Right };

    /// The empty snake (no cells).
    CoralSnake() = default;

    /// A snake with cell_count >= 1 cells and the given steps between them.
    /// Throws TypeError if the steps violate the corner-color rule or leave
    /// row 0 downward.
    CoralSnake(int cell_count, std::vector<Step> steps);

    static CoralSnake from_steps(const std::string& steps);  // "urd..." chars; one cell + |steps|

    bool empty() const { return cells_ == 0; }
    int length() const { return cells_; }                  // l: number of cells
    const std::vector<Step>& steps() const { return steps_; }

    int height() const;  // h: number of distinct rows touched
    int width() const;   // w: number of distinct columns touched

    /// Row of each cell, 0-indexed from the tunnel bottom.
    std::vector<int> rows() const;

    /// Direction (true = up) of the robot's vertical step encoded by each
    /// cell. The first cell always encodes an up step; the direction flips
    /// across each right step of the snake and persists across vertical ones.
    std::vector<bool> vertical_dirs() const;

    CoralSnake prefix(int k) const;  // first k cells
    bool is_prefix_of(const CoralSnake& other) const;

    /// Step string in u/d/r characters.
    std::string step_string() const;

    bool operator==(const CoralSnake& other) const = default;

    /// Canonical order: lexicographic on the step string with u < d < r,
    /// shorter prefixes first.
    static bool canonical_less(const CoralSnake& a, const CoralSnake& b);

private:
    int cells_ = 0;
    std::vector<Step> steps_;
};

/// Longest common initial sub-snake.
CoralSnake snake_meet(const CoralSnake& a, const CoralSnake& b);

/// All coral snakes lambda with at least one cell, h(lambda) <= m and
/// l(lambda) + w(lambda) - 1 <= n, in canonical order.
std::vector<CoralSnake> enumerate_snakes(int m, int n);

}  // namespace coralarm
