#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "coralarm/arm.hpp"
#include "coralarm/complex.hpp"

namespace coralarm {

/// The transition graph G(R(m,n)): vertices are reachable states, edges are
/// single legal moves. Built by BFS from the horizontal position.
struct TransitionGraph {
    int m = 0;
    int n = 0;
    std::vector<std::string> states;  // BFS order; states[0] is horizontal
    std::unordered_map<std::string, int> index;
    std::vector<std::vector<std::pair<int, Move>>> adj;  // (neighbor, move)

    int vertex(const std::string& state) const;  // throws UnknownVertex
    long long edge_count() const;
};

/// BFS over legal moves from the horizontal position. Throws Error if more
/// than max_states states are found.
TransitionGraph enumerate_states(int m, int n, long long max_states = 1'000'000);

/// A cube of the configuration space: a base state plus a set of pairwise
/// independent moves applicable there. Canonical representative: the base
/// whose state string is lexicographically least among the cube's vertices.
struct CubeRep {
    int base;                 // vertex id in the transition graph
    std::vector<Move> moves;  // pairwise independent; empty for 0-cubes
};

/// Every cube of S(m,n) once, dimensions 0..d, canonical representatives.
std::vector<CubeRep> enumerate_cube_reps(const TransitionGraph& g);

/// The full cubical complex, rooted at the horizontal position.
CubeComplex enumerate_cubes(const TransitionGraph& g);

int bfs_distance(const TransitionGraph& g, const std::string& u, const std::string& v);
std::vector<int> bfs_distances(const TransitionGraph& g, int source);
int all_pairs_diameter(const TransitionGraph& g);

/// Distances in the cube metric: one step moves between any two vertices of
/// a common cube.
std::vector<int> cube_metric_distances(const TransitionGraph& g, int source);

/// One symbol of a partial-state word (width 2 only). The vertical
/// direction is tracked for every non-r symbol so factors can be classified
/// into the primed/unprimed families.
struct WordSymbol {
    enum class Kind : std::uint8_t { R, V, Box, Claw };
    Kind kind;
    bool up = false;

    bool operator==(const WordSymbol&) const = default;
};

struct PartialWord {
    std::vector<WordSymbol> symbols;

    int x_degree() const;  // total length n
    int y_degree() const;  // cube dimension d
    std::string text() const;  // "r", "v", box and claw rendered as "#" and "L"

    bool operator==(const PartialWord&) const = default;
};

/// Superimposes the 2^d positions of the cube (base, moves) and reads the
/// word left to right. Throws WidthUnsupported unless the ambient width is 2.
PartialWord cube_to_word(const ArmState& base, const std::vector<Move>& moves);

/// One irreducible factor of a word, classified into the families M1..M8
/// (inner) and F1..F8 (final).
struct WordFactor {
    std::string family;
    PartialWord word;
};

/// Splits a word that starts with r into irreducible factors, cutting after
/// each vertical symbol that arrives at a tunnel border, and classifies
/// each factor. The last factor is always an F family, all others M.
/// Throws UnclassifiableFactor if a chunk matches no family.
std::vector<WordFactor> factorize_word(const PartialWord& w);

/// DOT export of the transition graph.
void write_dot(std::ostream& os, const TransitionGraph& g);
/// JSON edge list.
void write_json(std::ostream& os, const TransitionGraph& g);

}  // namespace coralarm
