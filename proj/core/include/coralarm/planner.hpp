#pragma once

#include <vector>

#include "coralarm/arm.hpp"
#include "coralarm/pip.hpp"
#include "coralarm/tableau.hpp"

namespace coralarm {

/// Labels of the vertical links of s, in arm order: the link at 1-based
/// position p gets label n - p + 1, so the label counts the moves needed to
/// walk that link to the free end of the arm and flip it away.
std::vector<int> vertical_labelling(const ArmState& s);

/// The closed-form distance between two states splits their vertical labels
/// at the longest common initial sub-snake of their shapes: the common part
/// is transferred in place, the rest is removed from one arm and grown on
/// the other.
struct Decomposition {
    int common = 0;              // cells of the shared initial sub-snake
    std::vector<int> kept_a;     // labels of a's first `common` verticals
    std::vector<int> removed_a;  // labels of a's remaining verticals
    std::vector<int> kept_b;
    std::vector<int> removed_b;

    long long removal_cost() const;    // sum of removed_a
    long long transfer_cost() const;   // sum of |kept_a - kept_b|
    long long insertion_cost() const;  // sum of removed_b
    long long total() const;
};

/// Throws LengthMismatch / WidthMismatch if a and b live in different spaces.
Decomposition decompose(const ArmState& a, const ArmState& b);

/// Minimal number of single moves between a and b.
long long distance_edge(const ArmState& a, const ArmState& b);

/// Same distance computed directly from the tableaux (n is the arm length).
long long distance_tableau(const CoralTableau& a, const CoralTableau& b, int n);

/// An explicit optimal move sequence from a to b: walk the extra verticals
/// of a off the free end, slide the shared ones into place (raising all
/// columns to the componentwise max first, so no two ever collide), then
/// grow the extra verticals of b from the free end.
std::vector<Move> geodesic_edge(const ArmState& a, const ArmState& b);

/// An optimal plan in the cube metric: each step is a set of pairwise
/// independent moves executed simultaneously (one cube of the configuration
/// space). Greedy over consistent ideals: drop every maximal element not
/// wanted by the target, add every addable element the target wants.
std::vector<std::vector<Move>> normal_cube_path(const CoralPip& cp, const ArmState& a,
                                                const ArmState& b);
std::vector<std::vector<Move>> normal_cube_path(const ArmState& a, const ArmState& b);

/// The fully folded zigzag: vertical runs of length m separated by single
/// right links, starting upward.
ArmState zigzag_position(int m, int n);
/// The zigzag with its first fold shortened: "urdr" followed by the zigzag
/// of length n - 4. Throws BoundsError if n < 4.
ArmState near_zigzag_position(int m, int n);
/// The fully stretched arm r^n.
ArmState horizontal_position(int m, int n);

/// Diameter of the transition graph of R(m, n), in closed form.
long long diameter(int m, int n);

}  // namespace coralarm
