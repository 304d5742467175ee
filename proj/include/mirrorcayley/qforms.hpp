#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mirrorcayley/serialize.hpp"
#include "mirrorcayley/series.hpp"

namespace mc {

enum class ExpansionPoint { infinity_cusp, elliptic_point };

// A named modular object together with its expansion data.
struct FormDescriptor {
    std::string name;
    int level = 0;  // 2 or 3
    Rational weight;
    ExpansionPoint expansion_point = ExpansionPoint::infinity_cusp;
    QSeries series;
};

json form_to_json(const FormDescriptor& f);

// One factor eta(m tau)^r of an eta quotient, plus an overall rational scale.
struct EtaQuotientSpec {
    struct Factor {
        int multiplier;
        int exponent;
    };
    std::vector<Factor> factors;
    Rational scale = Rational(1);

    Rational offset() const;  // sum of m*r/24
};

QSeries eta_quotient(const EtaQuotientSpec& spec, int order);

// eta(m tau) = q^{m/24} prod (1 - q^{m n}), truncated at total degree `order`
QSeries eta_series(int multiplier, int order);

enum class ThetaKind { theta2, theta3 };

// theta3(m tau) = sum_n q^{m n^2/2}; theta2(m tau) = sum_n q^{m (n+1/2)^2/2};
// multiplier must be even so exponents land in a single offset class.
QSeries theta_series(ThetaKind kind, int multiplier, int order);

// E2(m tau) = 1 - 24 sum sigma_1(n) q^{m n}
Series eisenstein_e2(int multiplier, int order);

// Quasi-modular generators, Borwein-Maier naming:
//   level 3: A3 = theta2(2t)theta2(6t)+theta3(2t)theta3(6t),
//            B3 = eta(t)^3/eta(3t), C3 = 3 eta(3t)^3/eta(t),
//            E3 = (3 E2(3t) + E2(t))/4
//   level 2 (squared generators, all weight 2):
//            B2^2 = eta(t)^8/eta(2t)^4, C2^2 = 8 eta(2t)^8/eta(t)^4,
//            A2^2 = sqrt(B2^4 + C2^4), E2gen = (2 E2(2t) + E2(t))/3
struct Generators {
    FormDescriptor A, B, C, E;
    int level = 0;
    int order = 0;
};

// memoized behind an internal cache keyed by (level, order); safe for
// concurrent readers
const Generators& generators(int level, int order);

// E-generator with an explicit denominator; denominator 4 (level 3) resp. 3
// (level 2) is the value the Ramanujan system forces. Other denominators are
// for negative-control experiments.
Series e_generator(int level, int order, int denominator);

// level 3: alpha = C3^3/A3^3 = 27q + ...; level 2: alpha = C2^4/A2^4 = 64q + ...
QSeries hauptmodul(int level, int order);

struct RamanujanReport {
    int level = 0;
    int r = 0;
    int order = 0;
    bool pass = false;
    // first exponent (offset included) at which each residual fails, if any;
    // order: dA, dB, dC, dE
    std::vector<std::optional<Rational>> first_nonzero;
};

json ramanujan_report_to_json(const RamanujanReport& r);

// Verifies the differential system
//   dA = (1/2r) A (E + (2 C^r - A^r)/A^{r-2})
//   dB = (1/2r) B (E - A^2)
//   dC = (1/2r) C (E + A^2)
//   dE = (1/2r) (E^2 - A^4)
// with d = q d/dq, in squared-generator form for level 2. e_denominator
// overrides the E-generator normalization (negative control).
RamanujanReport verify_ramanujan(int level, int r, int order, int e_denominator = 0);

}  // namespace mc
