#pragma once

#include <vector>

#include "coralarm/arm.hpp"
#include "coralarm/snake.hpp"

namespace coralarm {

/// A filling of a coral snake with non-negative integers, strictly
/// increasing across right steps and weakly increasing across vertical
/// steps, following the direction of the snake.
class CoralTableau {
public:
    CoralTableau() = default;  // empty tableau
    CoralTableau(CoralSnake shape, std::vector<int> entries);

    bool empty() const { return shape_.empty(); }
    const CoralSnake& shape() const { return shape_; }
    const std::vector<int>& entries() const { return entries_; }
    int entry(int i) const { return entries_[static_cast<size_t>(i)]; }  // 0-based cell index
    int max_entry() const;

    /// h(shape) <= m and max(entries) + l(shape) <= n. The empty tableau is
    /// of every type.
    bool is_type(int m, int n) const;

    /// Constant along columns (vertical steps) and +1 along rows (right steps).
    bool is_tight() const;

    bool operator==(const CoralTableau& other) const = default;

private:
    CoralSnake shape_;
    std::vector<int> entries_;
};

/// An element (lambda, s) of the coral PIP; equivalently a tight tableau.
struct NumberedSnake {
    CoralSnake shape;
    int s = 0;

    bool operator==(const NumberedSnake& other) const = default;
};

/// One tableau cell per vertical link of s: the cell's row is the lower of
/// the two heights of that vertical step and its entry is the 0-indexed
/// column where the step is taken.
CoralTableau state_to_tableau(const ArmState& s);

/// Inverse of state_to_tableau for tableaux of type (m, n): vertical steps
/// go at the recorded columns, everything else is a right link.
/// Throws TypeError if t is not of type (m, n).
ArmState tableau_to_state(const CoralTableau& t, int m, int n);

/// The tight tableau of the numbered snake e. Throws BoundsError if
/// e.s > n - l - w + 1 for the ambient (m, n).
CoralTableau tight_tableau(const NumberedSnake& e, int m, int n);

/// Inverse of tight_tableau. Throws TypeError if t is not tight.
NumberedSnake numbered_of_tight(const CoralTableau& t);

/// 0-based indices of the cells whose entry can be incremented by one while
/// keeping t a coral tableau of type (m, n).
std::vector<int> jumps(const CoralTableau& t, int m, int n);

/// The tight tableau T_i on the first i+1 cells of sh(t) whose last entry
/// equals t's entry at cell i; t is the componentwise minimum of the
/// extensions of these over all jump cells i.
NumberedSnake jump_tight(const CoralTableau& t, int cell);

}  // namespace coralarm
