#include "coralarm/enumeration.hpp"

#include <algorithm>
#include <deque>
#include <ostream>

#include "coralarm/errors.hpp"

namespace coralarm {

int TransitionGraph::vertex(const std::string& state) const {
    auto it = index.find(state);
    if (it == index.end()) throw UnknownVertex("state " + state + " is not a vertex of G(R(" +
                                               std::to_string(m) + "," + std::to_string(n) + "))");
    return it->second;
}

long long TransitionGraph::edge_count() const {
    long long twice = 0;
    for (const auto& nbrs : adj) twice += static_cast<long long>(nbrs.size());
    return twice / 2;
}

TransitionGraph enumerate_states(int m, int n, long long max_states) {
    TransitionGraph g;
    g.m = m;
    g.n = n;
    ArmState horizontal(m, std::vector<Link>(static_cast<size_t>(n), Link::Right));
    std::string key = render_state(horizontal);
    g.index[key] = 0;
    g.states.push_back(key);
    g.adj.emplace_back();
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        ArmState s = parse_state(g.states[static_cast<size_t>(u)], m);
        for (const Move& mv : legal_moves(s)) {
            std::string t = render_state(apply_move(s, mv));
            auto [it, inserted] = g.index.try_emplace(t, static_cast<int>(g.states.size()));
            if (inserted) {
                if (static_cast<long long>(g.states.size()) >= max_states)
                    throw Error("state enumeration exceeded the cap of " + std::to_string(max_states));
                g.states.push_back(t);
                g.adj.emplace_back();
                queue.push_back(it->second);
            }
            g.adj[static_cast<size_t>(u)].emplace_back(it->second, mv);
        }
    }
    return g;
}

namespace {

void collect_cliques(const std::vector<std::vector<bool>>& compatible, std::vector<int>& current, int next,
                     std::vector<std::vector<int>>& out) {
    out.push_back(current);
    int k = static_cast<int>(compatible.size());
    for (int i = next; i < k; ++i) {
        bool ok = true;
        for (int j : current)
            if (!compatible[static_cast<size_t>(j)][static_cast<size_t>(i)]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        current.push_back(i);
        collect_cliques(compatible, current, i + 1, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<CubeRep> enumerate_cube_reps(const TransitionGraph& g) {
    std::vector<CubeRep> reps;
    for (int u = 0; u < static_cast<int>(g.states.size()); ++u) {
        const std::string& base_key = g.states[static_cast<size_t>(u)];
        ArmState s = parse_state(base_key, g.m);
        std::vector<Move> moves = legal_moves(s);
        int k = static_cast<int>(moves.size());
        std::vector<std::vector<bool>> compatible(static_cast<size_t>(k), std::vector<bool>(static_cast<size_t>(k)));
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                compatible[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    compatible[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                        independent(s, moves[static_cast<size_t>(i)], moves[static_cast<size_t>(j)]);
        std::vector<std::vector<int>> cliques;
        std::vector<int> current;
        collect_cliques(compatible, current, 0, cliques);
        for (const auto& clique : cliques) {
            // keep the cube only at its lexicographically least vertex, so
            // each geometric cube is counted once
            bool canonical = true;
            unsigned size = 1u << clique.size();
            for (unsigned mask = 1; mask < size && canonical; ++mask) {
                ArmState v = s;
                for (size_t j = 0; j < clique.size(); ++j)
                    if (mask >> j & 1) v = apply_move(v, moves[static_cast<size_t>(clique[j])]);
                if (render_state(v) < base_key) canonical = false;
            }
            if (!canonical) continue;
            CubeRep rep;
            rep.base = u;
            for (int j : clique) rep.moves.push_back(moves[static_cast<size_t>(j)]);
            reps.push_back(std::move(rep));
        }
    }
    return reps;
}

CubeComplex enumerate_cubes(const TransitionGraph& g) {
    CubeComplex x;
    for (const auto& key : g.states) x.add_vertex(key);
    x.root = g.vertex(std::string(static_cast<size_t>(g.n), 'r'));
    for (const CubeRep& rep : enumerate_cube_reps(g)) {
        int d = static_cast<int>(rep.moves.size());
        if (d == 0) continue;
        ArmState s = parse_state(g.states[static_cast<size_t>(rep.base)], g.m);
        std::vector<int> verts(static_cast<size_t>(1) << d);
        for (unsigned mask = 0; mask < verts.size(); ++mask) {
            ArmState v = s;
            for (int j = 0; j < d; ++j)
                if (mask >> j & 1) v = apply_move(v, rep.moves[static_cast<size_t>(j)]);
            verts[mask] = g.vertex(render_state(v));
        }
        if (static_cast<int>(x.cubes.size()) <= d) x.cubes.resize(static_cast<size_t>(d) + 1);
        x.cubes[static_cast<size_t>(d)].push_back(std::move(verts));
    }
    return x;
}

std::vector<int> bfs_distances(const TransitionGraph& g, int source) {
    std::vector<int> dist(g.states.size(), -1);
    std::deque<int> queue{source};
    dist[static_cast<size_t>(source)] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (auto [v, mv] : g.adj[static_cast<size_t>(u)])
            if (dist[static_cast<size_t>(v)] < 0) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

int bfs_distance(const TransitionGraph& g, const std::string& u, const std::string& v) {
    return bfs_distances(g, g.vertex(u))[static_cast<size_t>(g.vertex(v))];
}

int all_pairs_diameter(const TransitionGraph& g) {
    int diameter = 0;
    for (int u = 0; u < static_cast<int>(g.states.size()); ++u)
        for (int d : bfs_distances(g, u)) diameter = std::max(diameter, d);
    return diameter;
}

std::vector<int> cube_metric_distances(const TransitionGraph& g, int source) {
    std::vector<std::vector<int>> adj(g.states.size());
    CubeComplex x = enumerate_cubes(g);
    for (const auto& dim : x.cubes)
        for (const auto& cube : dim)
            for (size_t a = 0; a < cube.size(); ++a)
                for (size_t b = a + 1; b < cube.size(); ++b) {
                    adj[static_cast<size_t>(cube[a])].push_back(cube[b]);
                    adj[static_cast<size_t>(cube[b])].push_back(cube[a]);
                }
    std::vector<int> dist(g.states.size(), -1);
    std::deque<int> queue{source};
    dist[static_cast<size_t>(source)] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj[static_cast<size_t>(u)])
            if (dist[static_cast<size_t>(v)] < 0) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

int PartialWord::x_degree() const {
    int n = 0;
    for (const auto& sym : symbols) n += sym.kind == WordSymbol::Kind::Box ? 2 : 1;
    return n;
}

int PartialWord::y_degree() const {
    int d = 0;
    for (const auto& sym : symbols)
        if (sym.kind == WordSymbol::Kind::Box || sym.kind == WordSymbol::Kind::Claw) ++d;
    return d;
}

std::string PartialWord::text() const {
    std::string out;
    for (const auto& sym : symbols) {
        switch (sym.kind) {
            case WordSymbol::Kind::R: out += 'r'; break;
            case WordSymbol::Kind::V: out += 'v'; break;
            case WordSymbol::Kind::Box: out += '#'; break;
            case WordSymbol::Kind::Claw: out += 'L'; break;
        }
    }
    return out;
}

PartialWord cube_to_word(const ArmState& base, const std::vector<Move>& moves) {
    if (base.width() != 2) throw WidthUnsupported("partial-state words are defined for width 2 only");
    int n = base.length();
    std::vector<bool> switch_at(static_cast<size_t>(n) + 1, false);
    bool flip = false;
    Link flip_target = Link::Right;
    for (const Move& mv : moves) {
        if (mv.kind == Move::Kind::SwitchCorner) switch_at[static_cast<size_t>(mv.index)] = true;
        else {
            flip = true;
            flip_target = mv.target;
        }
    }
    PartialWord word;
    int i = 1;
    while (i <= n) {
        if (i < n && switch_at[static_cast<size_t>(i)]) {
            Link vert = base.link(i) == Link::Right ? base.link(i + 1) : base.link(i);
            word.symbols.push_back({WordSymbol::Kind::Box, vert == Link::Up});
            i += 2;
        } else if (i == n && flip) {
            Link vert = base.link(n) == Link::Right ? flip_target : base.link(n);
            word.symbols.push_back({WordSymbol::Kind::Claw, vert == Link::Up});
            i += 1;
        } else {
            Link l = base.link(i);
            if (l == Link::Right) word.symbols.push_back({WordSymbol::Kind::R, false});
            else word.symbols.push_back({WordSymbol::Kind::V, l == Link::Up});
            i += 1;
        }
    }
    return word;
}

namespace {

bool has_vertical(const WordSymbol& s) { return s.kind != WordSymbol::Kind::R; }

std::string classify(const std::vector<WordSymbol>& chunk, bool final_chunk) {
    // shape: leading r's, then up to two non-r symbols separated by r's
    size_t i = 0;
    while (i < chunk.size() && chunk[i].kind == WordSymbol::Kind::R) ++i;
    size_t lead = i;
    std::vector<WordSymbol> verts;
    std::vector<size_t> gaps;  // r-runs after each vertical symbol
    while (i < chunk.size()) {
        verts.push_back(chunk[i]);
        ++i;
        size_t run = 0;
        while (i < chunk.size() && chunk[i].kind == WordSymbol::Kind::R) ++i, ++run;
        gaps.push_back(run);
    }
    auto fail = [&]() -> std::string {
        throw UnclassifiableFactor("word chunk matches no irreducible family: " +
                                   PartialWord{chunk}.text());
    };
    if (!final_chunk) {
        if (lead == 0 || verts.size() != 2 || gaps.back() != 0) return fail();
        if (verts[0].kind == WordSymbol::Kind::Claw || verts[1].kind == WordSymbol::Kind::Claw) return fail();
        bool primed = verts[0].up != verts[1].up;
        if (primed && gaps[0] == 0) return fail();  // opposite steps would intersect
        bool box0 = verts[0].kind == WordSymbol::Kind::Box;
        bool box1 = verts[1].kind == WordSymbol::Kind::Box;
        if (box0 && box1) return primed ? "M2" : "M1";
        if (box0 && !box1) return primed ? "M4" : "M3";
        if (!box0 && box1) return primed ? "M6" : "M5";
        return primed ? "M8" : "M7";
    }
    if (verts.empty()) return "F1";  // r*, possibly empty
    if (lead == 0) return fail();
    if (verts.size() == 1) {
        if (verts[0].kind == WordSymbol::Kind::Claw) return gaps[0] == 0 ? "F2" : fail();
        return verts[0].kind == WordSymbol::Kind::Box ? "F3" : "F6";
    }
    if (verts.size() != 2 || verts[1].kind != WordSymbol::Kind::Claw || gaps[1] != 0) return fail();
    bool primed = verts[0].up != verts[1].up;
    if (primed && gaps[0] == 0) return fail();
    if (verts[0].kind == WordSymbol::Kind::Box) return primed ? "F5" : "F4";
    if (verts[0].kind == WordSymbol::Kind::V) return primed ? "F8" : "F7";
    return fail();
}

}  // namespace

std::vector<WordFactor> factorize_word(const PartialWord& w) {
    if (w.symbols.empty() || w.symbols.front().kind != WordSymbol::Kind::R)
        throw UnclassifiableFactor("factorization is defined for words starting with r");
    std::vector<std::vector<WordSymbol>> chunks(1);
    int height = 0;
    for (const auto& sym : w.symbols) {
        chunks.back().push_back(sym);
        if (sym.kind == WordSymbol::Kind::V || sym.kind == WordSymbol::Kind::Box) {
            height += sym.up ? 1 : -1;
            if (height == 0 || height == 2) chunks.emplace_back();  // border arrival starts a new factor
        }
    }
    std::vector<WordFactor> out;
    for (size_t c = 0; c < chunks.size(); ++c) {
        bool final_chunk = c + 1 == chunks.size();
        out.push_back(WordFactor{classify(chunks[c], final_chunk), PartialWord{chunks[c]}});
    }
    return out;
}

void write_dot(std::ostream& os, const TransitionGraph& g) {
    os << "graph transitions {\n  node [shape=box, fontsize=10];\n";
    for (size_t i = 0; i < g.states.size(); ++i)
        os << "  s" << i << " [label=\"" << (g.states[i].empty() ? "(empty)" : g.states[i]) << "\"];\n";
    for (int u = 0; u < static_cast<int>(g.states.size()); ++u)
        for (auto [v, mv] : g.adj[static_cast<size_t>(u)])
            if (u < v) os << "  s" << u << " -- s" << v << " [label=\"" << mv.to_string() << "\"];\n";
    os << "}\n";
}

void write_json(std::ostream& os, const TransitionGraph& g) {
    os << "{\n  \"width\": " << g.m << ",\n  \"length\": " << g.n << ",\n  \"states\": [";
    for (size_t i = 0; i < g.states.size(); ++i) os << (i ? ", " : "") << "\"" << g.states[i] << "\"";
    os << "],\n  \"edges\": [";
    bool first = true;
    for (int u = 0; u < static_cast<int>(g.states.size()); ++u)
        for (auto [v, mv] : g.adj[static_cast<size_t>(u)])
            if (u < v) {
                os << (first ? "" : ", ") << "[" << u << ", " << v << "]";
                first = false;
            }
    os << "]\n}\n";
}

}  // namespace coralarm
