#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace coralarm {

/// An explicit cubical complex. A k-cube (k >= 1) is stored as its 2^k
/// vertex ids indexed by axis mask: verts[mask ^ (1 << j)] is the vertex
/// across axis j from verts[mask]. Vertices are 0-cubes and live in labels.
struct CubeComplex {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    int root = 0;
    /// cubes[d] for d >= 1 (cubes[0] unused); each entry has 2^d vertex ids.
    std::vector<std::vector<std::vector<int>>> cubes;

    int add_vertex(const std::string& label);
    int vertex(const std::string& label) const;  // throws UnknownVertex

    int dimension() const { return static_cast<int>(cubes.size()) - 1; }
    const std::vector<std::vector<int>>& edges() const;  // the 1-cubes

    /// (f_0, ..., f_d).
    std::vector<long long> fvector() const;
};

long long euler_characteristic(const std::vector<long long>& fv);

}  // namespace coralarm
