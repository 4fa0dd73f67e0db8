#include "coralarm/arm.hpp"

#include <algorithm>

namespace coralarm {

char link_char(Link l) {
    switch (l) {
        case Link::Up: return 'u';
        case Link::Down: return 'd';
        case Link::Right: return 'r';
    }
    return '?';
}

Link link_from_char(char c) {
    switch (c) {
        case 'u': return Link::Up;
        case 'd': return Link::Down;
        case 'r': return Link::Right;
    }
    throw CharError(std::string("invalid link character '") + c + "' (expected u, d, or r)");
}

namespace {

bool vertical(Link l) { return l != Link::Right; }

int delta(Link l) {
    switch (l) {
        case Link::Up: return 1;
        case Link::Down: return -1;
        case Link::Right: return 0;
    }
    return 0;
}

}  // namespace

ArmState::ArmState(int width, std::vector<Link> links) : width_(width), links_(std::move(links)) {
    if (width_ < 1) throw TunnelError("tunnel width must be at least 1");
    int h = 0;
    Link prev = Link::Right;
    for (size_t i = 0; i < links_.size(); ++i) {
        Link l = links_[i];
        if (i > 0 && vertical(l) && vertical(prev) && l != prev)
            throw ReversalError("adjacent links reverse direction at position " + std::to_string(i + 1));
        h += delta(l);
        if (h < 0 || h > width_)
            throw TunnelError("prefix height " + std::to_string(h) + " outside tunnel [0," +
                              std::to_string(width_) + "] at position " + std::to_string(i + 1));
        prev = l;
    }
}

int ArmState::height_after(int k) const {
    int h = 0;
    for (int i = 0; i < k; ++i) h += delta(links_[static_cast<size_t>(i)]);
    return h;
}

std::string Move::to_string() const {
    if (kind == Kind::SwitchCorner) return "switch(" + std::to_string(index) + ")";
    return std::string("flip(") + link_char(target) + ")";
}

ArmState parse_state(const std::string& text, int width) {
    std::vector<Link> links;
    links.reserve(text.size());
    for (char c : text) links.push_back(link_from_char(c));
    return ArmState(width, std::move(links));
}

std::string render_state(const ArmState& s) {
    std::string out;
    out.reserve(static_cast<size_t>(s.length()));
    for (Link l : s.links()) out.push_back(link_char(l));
    return out;
}

namespace {

// Applies without legality checking; validity is established by
// reconstructing the ArmState (which revalidates).
std::vector<Link> raw_apply(const ArmState& s, const Move& mv) {
    std::vector<Link> links = s.links();
    if (mv.kind == Move::Kind::SwitchCorner) {
        std::swap(links[static_cast<size_t>(mv.index - 1)], links[static_cast<size_t>(mv.index)]);
    } else {
        links.back() = mv.target;
    }
    return links;
}

bool valid_links(int width, const std::vector<Link>& links) {
    int h = 0;
    Link prev = Link::Right;
    for (size_t i = 0; i < links.size(); ++i) {
        Link l = links[i];
        if (i > 0 && vertical(l) && vertical(prev) && l != prev) return false;
        h += delta(l);
        if (h < 0 || h > width) return false;
        prev = l;
    }
    return true;
}

}  // namespace

std::vector<Move> legal_moves(const ArmState& s) {
    std::vector<Move> moves;
    int n = s.length();
    for (int i = 1; i < n; ++i) {
        Link a = s.link(i);
        Link b = s.link(i + 1);
        if (vertical(a) == vertical(b)) continue;  // need an {R, vertical} pair
        Move mv = Move::switch_corner(i);
        if (valid_links(s.width(), raw_apply(s, mv))) moves.push_back(mv);
    }
    if (n > 0) {
        Link last = s.link(n);
        std::vector<Link> targets =
            vertical(last) ? std::vector<Link>{Link::Right} : std::vector<Link>{Link::Up, Link::Down};
        for (Link t : targets) {
            Move mv = Move::flip_end(t);
            if (valid_links(s.width(), raw_apply(s, mv))) moves.push_back(mv);
        }
    }
    return moves;
}

bool is_legal(const ArmState& s, const Move& mv) {
    int n = s.length();
    if (mv.kind == Move::Kind::SwitchCorner) {
        if (mv.index < 1 || mv.index >= n) return false;
        if (vertical(s.link(mv.index)) == vertical(s.link(mv.index + 1))) return false;
    } else {
        if (n == 0) return false;
        Link last = s.link(n);
        if (vertical(last) ? mv.target != Link::Right : !vertical(mv.target)) return false;
    }
    return valid_links(s.width(), raw_apply(s, mv));
}

ArmState apply_move(const ArmState& s, const Move& mv) {
    if (!is_legal(s, mv)) throw IllegalMove("move " + mv.to_string() + " is not legal at " + render_state(s));
    return ArmState(s.width(), raw_apply(s, mv));
}

bool independent(const ArmState& s, const Move& a, const Move& b) {
    if (!is_legal(s, a)) throw IllegalMove("move " + a.to_string() + " is not legal at " + render_state(s));
    if (!is_legal(s, b)) throw IllegalMove("move " + b.to_string() + " is not legal at " + render_state(s));
    if (a == b) return false;
    auto touched = [n = s.length()](const Move& mv) {
        if (mv.kind == Move::Kind::SwitchCorner) return std::pair<int, int>{mv.index, mv.index + 1};
        return std::pair<int, int>{n, n};
    };
    auto [a0, a1] = touched(a);
    auto [b0, b1] = touched(b);
    if (std::max(a0, b0) <= std::min(a1, b1)) return false;  // shared link index
    ArmState sa = apply_move(s, a);
    ArmState sb = apply_move(s, b);
    if (!is_legal(sa, b) || !is_legal(sb, a)) return false;
    return apply_move(sa, b) == apply_move(sb, a);
}

Move move_between(const ArmState& u, const ArmState& v) {
    for (const Move& mv : legal_moves(u))
        if (apply_move(u, mv) == v) return mv;
    throw IllegalMove("states " + render_state(u) + " and " + render_state(v) + " are not adjacent");
}

}  // namespace coralarm
