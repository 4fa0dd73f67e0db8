#include "coralarm/pip.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace coralarm {

Pip::Pip(std::vector<std::string> labels, std::function<bool(int, int)> less,
         std::function<bool(int, int)> inconsistent)
    : labels_(std::move(labels)) {
    int n = static_cast<int>(labels_.size());
    less_.assign(static_cast<size_t>(n), Bitset(n));
    below_.assign(static_cast<size_t>(n), Bitset(n));
    incons_.assign(static_cast<size_t>(n), Bitset(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a != b && less(a, b)) {
                less_[static_cast<size_t>(a)].set(b);
                below_[static_cast<size_t>(b)].set(a);
            }
            if (a != b && inconsistent(a, b)) incons_[static_cast<size_t>(a)].set(b);
        }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            if (incons_[static_cast<size_t>(a)].test(b) != incons_[static_cast<size_t>(b)].test(a))
                throw Error("inconsistency relation is not symmetric");
            if (this->less(a, b)) {
                if (this->less(b, a)) throw Error("order relation is not antisymmetric");
                // transitivity: everything above b is above a
                if (!less_[static_cast<size_t>(b)].is_subset_of(less_[static_cast<size_t>(a)]))
                    throw Error("order relation is not transitive");
                // upward propagation: p incons b and b < b' forces p incons b'
                if (!incons_[static_cast<size_t>(a)].is_subset_of(incons_[static_cast<size_t>(b)]))
                    throw Error("inconsistency does not propagate upward");
            }
        }
        if (less_[static_cast<size_t>(a)].intersects(incons_[static_cast<size_t>(a)]) ||
            below_[static_cast<size_t>(a)].intersects(incons_[static_cast<size_t>(a)]))
            throw Error("comparable pair marked inconsistent");
    }
}

std::vector<std::pair<int, int>> Pip::covers() const {
    std::vector<std::pair<int, int>> out;
    int n = size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!less(a, b)) continue;
            bool cover = true;
            for (int c : less_[static_cast<size_t>(a)].bits())
                if (less(c, b)) {
                    cover = false;
                    break;
                }
            if (cover) out.emplace_back(a, b);
        }
    return out;
}

std::vector<std::pair<int, int>> Pip::minimal_inconsistent_pairs() const {
    std::vector<std::pair<int, int>> out;
    int n = size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!inconsistent(a, b)) continue;
            bool minimal = true;
            for (int a2 = 0; a2 < n && minimal; ++a2)
                for (int b2 = 0; b2 < n; ++b2) {
                    if (a2 == a && b2 == b) continue;
                    if (leq(a2, a) && leq(b2, b) && a2 != b2 && inconsistent(a2, b2)) {
                        minimal = false;
                        break;
                    }
                }
            if (minimal) out.emplace_back(a, b);
        }
    return out;
}

namespace {

std::string element_key(const CoralSnake& shape, int s) {
    return shape.step_string() + "#" + std::to_string(s);
}

}  // namespace

CoralPip::CoralPip(int m, int n) : m_(m), n_(n) {
    if (m < 1) throw TunnelError("tunnel width must be at least 1");
    if (n < 0) throw BoundsError("arm length must be non-negative");
    for (const CoralSnake& shape : enumerate_snakes(m, n)) {
        int cap = n - shape.length() - shape.width() + 1;
        for (int s = 0; s <= cap; ++s) elements_.push_back(NumberedSnake{shape, s});
    }
    std::vector<std::string> labels;
    labels.reserve(elements_.size());
    for (size_t i = 0; i < elements_.size(); ++i) {
        const auto& e = elements_[i];
        labels.push_back("(" + e.shape.step_string() + "," + std::to_string(e.s) + ")");
        index_[element_key(e.shape, e.s)] = static_cast<int>(i);
    }
    auto less = [this](int a, int b) {
        const auto& ea = elements_[static_cast<size_t>(a)];
        const auto& eb = elements_[static_cast<size_t>(b)];
        return ea.shape.is_prefix_of(eb.shape) && ea.s >= eb.s && !(ea == eb);
    };
    auto incons = [this](int a, int b) {
        const auto& ea = elements_[static_cast<size_t>(a)];
        const auto& eb = elements_[static_cast<size_t>(b)];
        return !ea.shape.is_prefix_of(eb.shape) && !eb.shape.is_prefix_of(ea.shape);
    };
    pip_ = Pip(std::move(labels), less, incons);
}

int CoralPip::index_of(const CoralSnake& shape, int s) const {
    auto it = index_.find(element_key(shape, s));
    if (it == index_.end())
        throw UnknownVertex("numbered snake (" + shape.step_string() + "," + std::to_string(s) +
                            ") is not an element of C(" + std::to_string(m_) + "," + std::to_string(n_) + ")");
    return it->second;
}

CoralPip build_coral_pip(int m, int n) { return CoralPip(m, n); }

bool is_consistent_ideal(const Pip& p, const Bitset& subset) {
    for (int e : subset.bits()) {
        if (!p.below(e).is_subset_of(subset)) return false;
        if (p.inconsistent_with(e).intersects(subset)) return false;
    }
    return true;
}

std::vector<int> addable_elements(const Pip& p, const Bitset& ideal) {
    std::vector<int> out;
    for (int e = 0; e < p.size(); ++e) {
        if (ideal.test(e)) continue;
        if (!p.below(e).is_subset_of(ideal)) continue;
        if (p.inconsistent_with(e).intersects(ideal)) continue;
        out.push_back(e);
    }
    return out;
}

std::vector<int> maximal_elements(const Pip& p, const Bitset& ideal) {
    std::vector<int> out;
    for (int e : ideal.bits()) {
        bool maximal = true;
        for (int f : ideal.bits())
            if (p.less(e, f)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(e);
    }
    return out;
}

std::vector<Bitset> enumerate_ideals(const Pip& p) {
    std::unordered_set<Bitset, BitsetHash> seen;
    std::deque<Bitset> queue;
    Bitset empty(p.size());
    seen.insert(empty);
    queue.push_back(empty);
    while (!queue.empty()) {
        Bitset ideal = queue.front();
        queue.pop_front();
        for (int e : addable_elements(p, ideal)) {
            Bitset next = ideal;
            next.set(e);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    std::vector<Bitset> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::string ideal_label(const Bitset& ideal) {
    std::string out = "{";
    bool first = true;
    for (int e : ideal.bits()) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

CubeComplex complex_from_ideals(const Pip& p, const std::function<std::string(const Bitset&)>& label) {
    CubeComplex x;
    std::vector<Bitset> ideals = enumerate_ideals(p);
    std::unordered_map<Bitset, int, BitsetHash> id;
    for (const Bitset& ideal : ideals) id[ideal] = x.add_vertex(label(ideal));
    Bitset empty(p.size());
    x.root = id.at(empty);
    for (const Bitset& ideal : ideals) {
        std::vector<int> maxels = maximal_elements(p, ideal);
        int k = static_cast<int>(maxels.size());
        // one cube per nonempty subset M of the maximal elements
        for (unsigned subset = 1; subset < (1u << k); ++subset) {
            std::vector<int> chosen;
            for (int j = 0; j < k; ++j)
                if (subset >> j & 1) chosen.push_back(maxels[static_cast<size_t>(j)]);
            int d = static_cast<int>(chosen.size());
            std::vector<int> verts(static_cast<size_t>(1) << d);
            for (unsigned mask = 0; mask < verts.size(); ++mask) {
                Bitset v = ideal;
                for (int j = 0; j < d; ++j)
                    if (!(mask >> j & 1)) v.reset(chosen[static_cast<size_t>(j)]);
                verts[mask] = id.at(v);
            }
            if (static_cast<int>(x.cubes.size()) <= d) x.cubes.resize(static_cast<size_t>(d) + 1);
            x.cubes[static_cast<size_t>(d)].push_back(std::move(verts));
        }
    }
    return x;
}

}  // namespace

CubeComplex complex_from_pip(const Pip& p) {
    return complex_from_ideals(p, ideal_label);
}

CubeComplex complex_from_pip(const CoralPip& cp) {
    return complex_from_ideals(cp.pip(), [&cp](const Bitset& ideal) {
        return render_state(tableau_to_state(ideal_to_tableau(ideal, cp), cp.m(), cp.n()));
    });
}

Bitset tableau_to_ideal(const CoralTableau& t, const CoralPip& cp) {
    if (!t.is_type(cp.m(), cp.n())) throw TypeError("tableau is not of type (m, n)");
    Bitset ideal(cp.size());
    int n = cp.n();
    for (int i = 0; i < t.shape().length(); ++i) {
        CoralSnake prefix = t.shape().prefix(i + 1);
        int w = prefix.width();
        int lo = t.entry(i) - (w - 1);
        int hi = n - prefix.length() - w + 1;
        for (int s = lo; s <= hi; ++s) ideal.set(cp.index_of(prefix, s));
    }
    return ideal;
}

CoralTableau ideal_to_tableau(const Bitset& ideal, const CoralPip& cp) {
    if (!is_consistent_ideal(cp.pip(), ideal))
        throw InconsistentIdeal("subset is not a consistent order ideal");
    if (!ideal.any()) return CoralTableau();
    // shapes in a consistent ideal form a chain under prefix containment
    const CoralSnake* shape = nullptr;
    for (int e : ideal.bits()) {
        const CoralSnake& candidate = cp.element(e).shape;
        if (!shape || shape->is_prefix_of(candidate)) shape = &candidate;
    }
    std::vector<int> entries(static_cast<size_t>(shape->length()));
    std::vector<int> min_s(static_cast<size_t>(shape->length()), -1);
    for (int e : ideal.bits()) {
        const NumberedSnake& el = cp.element(e);
        if (!el.shape.is_prefix_of(*shape)) throw InconsistentIdeal("ideal shapes do not form a chain");
        int i = el.shape.length() - 1;
        if (min_s[static_cast<size_t>(i)] < 0 || el.s < min_s[static_cast<size_t>(i)])
            min_s[static_cast<size_t>(i)] = el.s;
    }
    for (int i = 0; i < shape->length(); ++i) {
        if (min_s[static_cast<size_t>(i)] < 0)
            throw InconsistentIdeal("ideal is missing a prefix shape");
        entries[static_cast<size_t>(i)] = min_s[static_cast<size_t>(i)] + shape->prefix(i + 1).width() - 1;
    }
    return CoralTableau(*shape, std::move(entries));
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

ReconstructedPip pip_from_complex(const CubeComplex& x) {
    const auto& edges = x.edges();
    int ne = static_cast<int>(edges.size());
    int nv = static_cast<int>(x.labels.size());

    auto pair_key = [nv](int a, int b) {
        if (a > b) std::swap(a, b);
        return static_cast<long long>(a) * nv + b;
    };
    std::unordered_map<long long, int> edge_id;
    for (int e = 0; e < ne; ++e) edge_id[pair_key(edges[static_cast<size_t>(e)][0], edges[static_cast<size_t>(e)][1])] = e;

    // opposite edges of every square belong to the same hyperplane
    Dsu dsu(ne);
    if (x.cubes.size() > 2) {
        for (const auto& sq : x.cubes[2]) {
            dsu.unite(edge_id.at(pair_key(sq[0], sq[1])), edge_id.at(pair_key(sq[2], sq[3])));
            dsu.unite(edge_id.at(pair_key(sq[0], sq[2])), edge_id.at(pair_key(sq[1], sq[3])));
        }
    }
    std::unordered_map<int, int> class_of_root;
    std::vector<int> edge_class(static_cast<size_t>(ne));
    std::vector<std::vector<int>> class_edges;
    for (int e = 0; e < ne; ++e) {
        int root = dsu.find(e);
        auto [it, inserted] = class_of_root.try_emplace(root, static_cast<int>(class_edges.size()));
        if (inserted) class_edges.emplace_back();
        edge_class[static_cast<size_t>(e)] = it->second;
        class_edges[static_cast<size_t>(it->second)].push_back(e);
    }
    int nh = static_cast<int>(class_edges.size());

    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(nv));  // (neighbor, class)
    for (int e = 0; e < ne; ++e) {
        int a = edges[static_cast<size_t>(e)][0];
        int b = edges[static_cast<size_t>(e)][1];
        adj[static_cast<size_t>(a)].emplace_back(b, edge_class[static_cast<size_t>(e)]);
        adj[static_cast<size_t>(b)].emplace_back(a, edge_class[static_cast<size_t>(e)]);
    }

    std::vector<Bitset> crossing(static_cast<size_t>(nv));
    std::vector<bool> seen(static_cast<size_t>(nv), false);
    std::deque<int> queue;
    crossing[static_cast<size_t>(x.root)] = Bitset(nh);
    seen[static_cast<size_t>(x.root)] = true;
    queue.push_back(x.root);
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (auto [v, c] : adj[static_cast<size_t>(u)]) {
            Bitset cross = crossing[static_cast<size_t>(u)];
            cross.toggle(c);
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = true;
                crossing[static_cast<size_t>(v)] = std::move(cross);
                queue.push_back(v);
                ++reached;
            } else if (crossing[static_cast<size_t>(v)] != cross) {
                throw NotCat0Evidence("two paths from the root to vertex " + x.labels[static_cast<size_t>(v)] +
                                      " cross different hyperplane sets");
            }
        }
    }
    if (reached != nv) throw NotCat0Evidence("complex is not connected from the root");

    // order: H1 < H2 iff every crossing set containing H2 contains H1;
    // inconsistent iff no crossing set contains both
    std::vector<Bitset> holders(static_cast<size_t>(nh), Bitset(nv));
    for (int v = 0; v < nv; ++v)
        for (int c : crossing[static_cast<size_t>(v)].bits()) holders[static_cast<size_t>(c)].set(v);
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(nh));
    for (int c = 0; c < nh; ++c) labels.push_back("H" + std::to_string(c));
    auto less = [&holders](int a, int b) {
        return a != b && holders[static_cast<size_t>(b)].is_subset_of(holders[static_cast<size_t>(a)]) &&
               holders[static_cast<size_t>(a)] != holders[static_cast<size_t>(b)];
    };
    auto incons = [&holders](int a, int b) {
        return a != b && !holders[static_cast<size_t>(a)].intersects(holders[static_cast<size_t>(b)]);
    };
    return ReconstructedPip{Pip(std::move(labels), less, incons), std::move(class_edges), std::move(crossing)};
}

std::optional<std::string> coral_pip_mismatch(const CubeComplex& brute, int m, int n) {
    CoralPip cp = build_coral_pip(m, n);
    ReconstructedPip recon = pip_from_complex(brute);
    if (recon.pip.size() != cp.size())
        return "hyperplane count " + std::to_string(recon.pip.size()) + " != coral PIP size " +
               std::to_string(cp.size());

    std::vector<Bitset> vertex_ideal;
    vertex_ideal.reserve(brute.labels.size());
    for (const auto& label : brute.labels)
        vertex_ideal.push_back(tableau_to_ideal(state_to_tableau(parse_state(label, m)), cp));

    // each hyperplane class must toggle one fixed coral element across all its edges
    int nh = recon.pip.size();
    std::vector<int> mapped(static_cast<size_t>(nh), -1);
    std::vector<bool> hit(static_cast<size_t>(cp.size()), false);
    for (int c = 0; c < nh; ++c) {
        for (int e : recon.class_edges[static_cast<size_t>(c)]) {
            const auto& edge = brute.edges()[static_cast<size_t>(e)];
            const Bitset& ia = vertex_ideal[static_cast<size_t>(edge[0])];
            const Bitset& ib = vertex_ideal[static_cast<size_t>(edge[1])];
            int toggled = -1;
            for (int el = 0; el < cp.size(); ++el)
                if (ia.test(el) != ib.test(el)) {
                    if (toggled >= 0) return "an edge toggles more than one coral element";
                    toggled = el;
                }
            if (toggled < 0) return "an edge toggles no coral element";
            if (mapped[static_cast<size_t>(c)] < 0) mapped[static_cast<size_t>(c)] = toggled;
            else if (mapped[static_cast<size_t>(c)] != toggled)
                return "hyperplane class " + std::to_string(c) + " toggles two different coral elements";
        }
        int el = mapped[static_cast<size_t>(c)];
        if (hit[static_cast<size_t>(el)]) return "two hyperplane classes map to the same coral element";
        hit[static_cast<size_t>(el)] = true;
    }
    for (int a = 0; a < nh; ++a)
        for (int b = 0; b < nh; ++b) {
            if (recon.pip.less(a, b) !=
                cp.pip().less(mapped[static_cast<size_t>(a)], mapped[static_cast<size_t>(b)]))
                return "order relation differs at (" + recon.pip.label(a) + ", " + recon.pip.label(b) + ")";
            if (a < b && recon.pip.inconsistent(a, b) !=
                             cp.pip().inconsistent(mapped[static_cast<size_t>(a)], mapped[static_cast<size_t>(b)]))
                return "inconsistency relation differs at (" + recon.pip.label(a) + ", " + recon.pip.label(b) + ")";
        }
    return std::nullopt;
}

void write_dot(std::ostream& os, const Pip& p) {
    os << "graph pip {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
    for (int i = 0; i < p.size(); ++i) os << "  e" << i << " [label=\"" << p.label(i) << "\"];\n";
    for (auto [a, b] : p.covers()) os << "  e" << a << " -- e" << b << ";\n";
    for (auto [a, b] : p.minimal_inconsistent_pairs())
        os << "  e" << a << " -- e" << b << " [style=dotted, constraint=false];\n";
    os << "}\n";
}

void write_json(std::ostream& os, const Pip& p) {
    os << "{\n  \"elements\": [";
    for (int i = 0; i < p.size(); ++i) os << (i ? ", " : "") << "\"" << p.label(i) << "\"";
    os << "],\n  \"covers\": [";
    auto covers = p.covers();
    for (size_t i = 0; i < covers.size(); ++i)
        os << (i ? ", " : "") << "[" << covers[i].first << ", " << covers[i].second << "]";
    os << "],\n  \"minimal_inconsistent_pairs\": [";
    auto pairs = p.minimal_inconsistent_pairs();
    for (size_t i = 0; i < pairs.size(); ++i)
        os << (i ? ", " : "") << "[" << pairs[i].first << ", " << pairs[i].second << "]";
    os << "]\n}\n";
}

}  // namespace coralarm
