#pragma once

#include <optional>

#include "mirrorcayley/qforms.hpp"
#include "mirrorcayley/series.hpp"

namespace mc {

struct HypergeometricParams {
    Rational a, b, c;
};

// 2F1(a,b;c;x) = sum (a)_n (b)_n / ((c)_n n!) x^n, exact rational coefficients
Series hg_series(const HypergeometricParams& p, const std::string& var, int order);

// Orbifold-point chart for the level-N elliptic curve family. Everything is
// a series with rational coefficients in the normalized elliptic coordinate v.
//
// level 3: chart variable is psi (psi^3 = 1/alpha), F3 = 2F1(1/3,1/3;2/3;x),
//          F4 = 2F1(2/3,2/3;4/3;x), v(psi) = 3 psi F4(psi^3)/F3(psi^3).
// level 2: chart variable is w = psi^2 (w^2 = 1/alpha), F3 = 2F1(1/4,1/4;1/2;x),
//          F4 = 2F1(3/4,3/4;3/2;x), v(w) = 2 w F4(w^2)/F3(w^2).
struct OrbifoldChart {
    int level = 0;
    int psi_exponent = 0;  // d = 3 or 4 (psi = alpha^{-1/d'}, chart var ~ alpha^{-...})
    int chart_power = 0;   // chart variable^chart_power = 1/alpha (3 resp. 2)
    Series F3, F4;         // in "x"
    Series v_of_psi;       // in "psi" (level 3) / "w" (level 2)
    Series psi_of_v;       // in "v", compositional inverse
};

OrbifoldChart build_chart(int level, int order);

// Elliptic expansions at the orbifold point, in v:
//   level 3: C(C3) = F3(psi(v)^3), C(A3) = psi(v) F3(psi(v)^3),
//            C_hol(E3) = 6 d/dv log C(C3) - C(A3)^2
//   level 2: C(C2^2) = F3(w(v)^2)^2, C(A2^2) = w(v) F3(w(v)^2)^2,
//            C_hol(E2gen) = 4 d/dv log C(C2^2) - C(A2^2)
struct CayleyExpansions {
    FormDescriptor C_A, C_C, C_E_hol;
    int level = 0;
    int order = 0;
};

const CayleyExpansions& cayley_expansions(int level, int order);

// level 3: -(C(C3)^3 - C(A3)^3)^{1/3} (constant term -1), the B-generator at
// the elliptic point; level 2 returns the elliptic image of B2^4 = A2^4 - C2^4
// (constant term -1), which keeps coefficients rational.
Series cayley_B_analogue(int level, int order);

struct SchwarzianReport {
    int level = 0;
    int order = 0;
    bool q_value_ok = false;          // {v, chart} equals the normal-form Q-value
    bool chain_rule_ok = false;       // {chart, v} = -(chart'(v))^2 Q(chart(v))
    bool first_order_form_ok = false; // d(chart)/dv = c * chart^e (1 - chart^p) F3(chart^p)^2
    int fitted_exponent = -1;         // e above
    Rational fitted_constant;         // c above
    bool cusp_schwarz_ok = false;     // q-side d(alpha) = alpha(1-alpha) A^2
};

json schwarzian_report_to_json(const SchwarzianReport& r);

SchwarzianReport schwarzian_crosscheck(int level, int order);

// M^{-k/2} * series(v/M) for rational M. The first overload requires the
// prefactor to be rational (k even, or M a perfect square); the second allows
// any M whose square root lies in Q(zeta_24).
Series rescale_form(const Series& s, const Rational& k, const Rational& M);
CycSeries rescale_form_cyc(const Series& s, const Rational& k, const Rational& M);

}  // namespace mc
