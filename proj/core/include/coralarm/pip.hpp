#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coralarm/bitset.hpp"
#include "coralarm/complex.hpp"
#include "coralarm/tableau.hpp"

namespace coralarm {

/// A poset with inconsistent pairs. Elements are indexed 0..size()-1 in a
/// canonical order fixed at construction; the strict order and the symmetric
/// inconsistency relation are stored densely (these posets stay small).
/// Immutable after construction.
class Pip {
public:
    Pip() = default;
    /// Builds from predicates and validates the PIP axioms: the order must
    /// be a strict partial order, inconsistency must propagate upward, and
    /// comparable pairs must be consistent.
    Pip(std::vector<std::string> labels, std::function<bool(int, int)> less,
        std::function<bool(int, int)> inconsistent);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }

    bool less(int a, int b) const { return less_[static_cast<size_t>(a)].test(b); }
    bool leq(int a, int b) const { return a == b || less(a, b); }
    bool inconsistent(int a, int b) const { return incons_[static_cast<size_t>(a)].test(b); }

    /// Strict down-set of e as a bitset (excluding e).
    const Bitset& below(int e) const { return below_[static_cast<size_t>(e)]; }
    /// Elements inconsistent with e.
    const Bitset& inconsistent_with(int e) const { return incons_[static_cast<size_t>(e)]; }

    /// Hasse covers: pairs (a, b) with b covering a.
    std::vector<std::pair<int, int>> covers() const;
    /// Inconsistent pairs (a, b), a < b by index, minimal under the
    /// componentwise order (these generate all others by upward propagation).
    std::vector<std::pair<int, int>> minimal_inconsistent_pairs() const;

private:
    std::vector<std::string> labels_;
    std::vector<Bitset> less_;   // less_[a].test(b) iff a < b
    std::vector<Bitset> below_;  // below_[b].test(a) iff a < b
    std::vector<Bitset> incons_;
};

/// The coral PIP C(m, n) together with its numbered-snake elements.
class CoralPip {
public:
    CoralPip(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    const Pip& pip() const { return pip_; }
    int size() const { return pip_.size(); }
    const std::vector<NumberedSnake>& elements() const { return elements_; }
    const NumberedSnake& element(int i) const { return elements_[static_cast<size_t>(i)]; }

    /// Index of (shape, s); throws UnknownVertex if absent.
    int index_of(const CoralSnake& shape, int s) const;

private:
    int m_, n_;
    std::vector<NumberedSnake> elements_;
    Pip pip_;
    std::unordered_map<std::string, int> index_;
};

CoralPip build_coral_pip(int m, int n);

bool is_consistent_ideal(const Pip& p, const Bitset& subset);
/// Elements e addable to the consistent ideal I: not in I, strict down-set
/// inside I, consistent with everything in I.
std::vector<int> addable_elements(const Pip& p, const Bitset& ideal);
std::vector<int> maximal_elements(const Pip& p, const Bitset& ideal);

/// Every consistent order ideal, in canonical (bitset) order. The empty
/// ideal is always present.
std::vector<Bitset> enumerate_ideals(const Pip& p);

/// The cube complex X(P): one vertex per consistent ideal, one |M|-cube per
/// pair (I, M) with M a subset of I's maximal elements, rooted at the empty
/// ideal. Vertex labels default to the sorted element-index list; for a
/// coral PIP, labels are the corresponding state strings.
CubeComplex complex_from_pip(const Pip& p);
CubeComplex complex_from_pip(const CoralPip& cp);

/// The consistent ideal of C(m, n) corresponding to a coral tableau of type
/// (m, n), and its inverse.
Bitset tableau_to_ideal(const CoralTableau& t, const CoralPip& cp);
CoralTableau ideal_to_tableau(const Bitset& ideal, const CoralPip& cp);

/// Result of reconstructing a PIP from a rooted cube complex via its
/// hyperplanes.
struct ReconstructedPip {
    Pip pip;                                    // one element per hyperplane class
    std::vector<std::vector<int>> class_edges;  // edge ids (into x.cubes[1]) per class
    std::vector<Bitset> vertex_crossings;       // per vertex, hyperplanes crossed from the root
};

/// Identifies hyperplane classes (opposite edges of squares), computes the
/// crossing set of every vertex from the root, and reads off the order and
/// inconsistency relations. Throws NotCat0Evidence if two paths to a vertex
/// disagree on its crossing set.
ReconstructedPip pip_from_complex(const CubeComplex& x);

/// Executable content of the main structure theorem: the PIP reconstructed
/// from the brute-force complex (vertex labels = state strings, rooted at
/// the horizontal position) must be C(m, n) under the labelling that sends
/// each hyperplane class to the unique element toggled between the ideals
/// of its endpoints. Returns an explanation on failure.
std::optional<std::string> coral_pip_mismatch(const CubeComplex& brute, int m, int n);

/// DOT export of the Hasse diagram; minimal inconsistent pairs are dotted.
void write_dot(std::ostream& os, const Pip& p);
/// JSON export of elements, covers, and minimal inconsistent pairs.
void write_json(std::ostream& os, const Pip& p);

}  // namespace coralarm
