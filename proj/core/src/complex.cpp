#include "coralarm/complex.hpp"

#include "coralarm/errors.hpp"

namespace coralarm {

int CubeComplex::add_vertex(const std::string& label) {
    auto [it, inserted] = index.try_emplace(label, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
}

int CubeComplex::vertex(const std::string& label) const {
    auto it = index.find(label);
    if (it == index.end()) throw UnknownVertex("no vertex labelled " + label);
    return it->second;
}

const std::vector<std::vector<int>>& CubeComplex::edges() const {
    static const std::vector<std::vector<int>> none;
    return cubes.size() > 1 ? cubes[1] : none;
}

std::vector<long long> CubeComplex::fvector() const {
    std::vector<long long> fv{static_cast<long long>(labels.size())};
    for (size_t d = 1; d < cubes.size(); ++d) fv.push_back(static_cast<long long>(cubes[d].size()));
    while (fv.size() > 1 && fv.back() == 0) fv.pop_back();
    return fv;
}

long long euler_characteristic(const std::vector<long long>& fv) {
    long long chi = 0;
    int sign = 1;
    for (long long f : fv) {
        chi += sign * f;
        sign = -sign;
    }
    return chi;
}

}  // namespace coralarm
