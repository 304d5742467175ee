#pragma once

#include <map>
#include <string>
#include <vector>

#include "mirrorcayley/serialize.hpp"
#include "mirrorcayley/series.hpp"

namespace mc {

// Multivariate polynomial in formal coordinates whose coefficients are
// q/u/v-series. Exponent vectors are indexed against `coordinates`; the
// dependence on the distinguished degree-one parameter lives inside the
// coefficient series.
struct PrepotentialPolynomial {
    std::vector<std::string> coordinates;
    std::map<std::vector<int>, QSeries> monomials;

    void add(const std::vector<int>& exps, const QSeries& coeff);
    const QSeries* find(const std::vector<int>& exps) const;
};

json prepotential_to_json(const PrepotentialPolynomial& p);

// exponent vector helper: exps({{1,2},{3,1}}, n) = x1^2 x3 in n coordinates
std::vector<int> exps(std::initializer_list<std::pair<int, int>> powers, int n);

// applies a coordinate permutation to every monomial (used by symmetry tests)
PrepotentialPolynomial permute_coordinates(const PrepotentialPolynomial& p,
                                           const std::vector<int>& perm);

bool prepotential_equal(const PrepotentialPolynomial& a, const PrepotentialPolynomial& b);

}  // namespace mc
