#include "mirrorcayley/prepotential.hpp"

#include <algorithm>

namespace mc {

void PrepotentialPolynomial::add(const std::vector<int>& e, const QSeries& coeff) {
    if (e.size() != coordinates.size())
        throw std::invalid_argument("exponent vector length does not match coordinate count");
    auto it = monomials.find(e);
    if (it == monomials.end())
        monomials.emplace(e, coeff);
    else
        it->second = it->second + coeff;
}

const QSeries* PrepotentialPolynomial::find(const std::vector<int>& e) const {
    auto it = monomials.find(e);
    return it == monomials.end() ? nullptr : &it->second;
}

json prepotential_to_json(const PrepotentialPolynomial& p) {
    json mons = json::array();
    for (const auto& [e, s] : p.monomials) {
        mons.push_back(json{{"exponents", e}, {"series", qseries_to_json(s)}});
    }
    return json{{"coordinates", p.coordinates}, {"monomials", mons}};
}

std::vector<int> exps(std::initializer_list<std::pair<int, int>> powers, int n) {
    std::vector<int> e(static_cast<size_t>(n), 0);
    for (const auto& [idx, pow] : powers) e.at(static_cast<size_t>(idx)) += pow;
    return e;
}

PrepotentialPolynomial permute_coordinates(const PrepotentialPolynomial& p,
                                           const std::vector<int>& perm) {
    if (perm.size() != p.coordinates.size()) throw std::invalid_argument("bad permutation size");
    PrepotentialPolynomial out;
    out.coordinates = p.coordinates;
    for (const auto& [e, s] : p.monomials) {
        std::vector<int> pe(e.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) pe[static_cast<size_t>(perm[i])] = e[i];
        out.add(pe, s);
    }
    return out;
}

bool prepotential_equal(const PrepotentialPolynomial& a, const PrepotentialPolynomial& b) {
    if (a.coordinates.size() != b.coordinates.size()) return false;
    auto nonzero = [](const PrepotentialPolynomial& p) {
        std::map<std::vector<int>, QSeries> m;
        for (const auto& [e, s] : p.monomials)
            if (!s.is_zero()) m.emplace(e, s);
        return m;
    };
    auto ma = nonzero(a), mb = nonzero(b);
    if (ma.size() != mb.size()) return false;
    for (const auto& [e, s] : ma) {
        auto it = mb.find(e);
        if (it == mb.end()) return false;
        if (!(s == it->second)) return false;
    }
    return true;
}

}  // namespace mc
