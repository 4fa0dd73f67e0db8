#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "coralarm/errors.hpp"

namespace coralarm {

/// Direction of a single unit link of the arm. There is no Left: the arm
/// only ever faces up, down, or right.
enum class Link : std::uint8_t { Up, Down, Right };

char link_char(Link l);
Link link_from_char(char c);

/// A validated position of the arm in a tunnel of width `width`: a sequence
/// of links starting at the tunnel's lower-left corner. Immutable after
/// construction.
class ArmState {
public:
    /// Validates the link sequence: every prefix height must stay in
    /// [0, width] and no immediate up/down reversal may occur.
    ArmState(int width, std::vector<Link> links);

    int width() const { return width_; }
    int length() const { return static_cast<int>(links_.size()); }
    const std::vector<Link>& links() const { return links_; }
    Link link(int i) const { return links_[static_cast<size_t>(i - 1)]; }  // 1-based

    /// Height of the arm tip after the first k links.
    int height_after(int k) const;

    bool operator==(const ArmState& other) const = default;
    auto operator<=>(const ArmState& other) const = default;

private:
    int width_;
    std::vector<Link> links_;
};

/// One of the two local moves. SwitchCorner carries the 1-based index of the
/// first link of the adjacent pair it swaps; FlipEnd carries the new
/// direction of the last link.
struct Move {
    enum class Kind : std::uint8_t { SwitchCorner, FlipEnd };

    Kind kind;
    int index = 0;     // SwitchCorner only
    Link target = Link::Right;  // FlipEnd only

    static Move switch_corner(int i) { return Move{Kind::SwitchCorner, i, Link::Right}; }
    static Move flip_end(Link target) { return Move{Kind::FlipEnd, 0, target}; }

    bool operator==(const Move& other) const = default;
    auto operator<=>(const Move& other) const = default;

    std::string to_string() const;
};

ArmState parse_state(const std::string& text, int width);
std::string render_state(const ArmState& s);

/// All legal moves at s, in canonical order. Complete: every edge of the
/// transition graph incident to s corresponds to exactly one entry.
std::vector<Move> legal_moves(const ArmState& s);

bool is_legal(const ArmState& s, const Move& mv);

/// Applies mv to s. Throws IllegalMove if mv is not legal at s.
ArmState apply_move(const ArmState& s, const Move& mv);

/// True iff a and b are physically independent (commutative) at s: they
/// touch disjoint links, each remains legal after the other, and both
/// orders produce the same state. Throws IllegalMove if a or b is not
/// legal at s.
bool independent(const ArmState& s, const Move& a, const Move& b);

/// The unique legal move taking u to v, for adjacent states.
/// Throws IllegalMove if u and v are not adjacent in the transition graph.
Move move_between(const ArmState& u, const ArmState& v);

}  // namespace coralarm
