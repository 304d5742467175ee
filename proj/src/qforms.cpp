#include "mirrorcayley/qforms.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace mc {

namespace {
const std::string kQ = "q";
}

json form_to_json(const FormDescriptor& f) {
    json j = qseries_to_json(f.series);
    j["name"] = f.name;
    j["level"] = f.level;
    j["weight"] = rational_to_json(f.weight);
    j["expansion_point"] =
        f.expansion_point == ExpansionPoint::infinity_cusp ? "infinity_cusp" : "elliptic_point";
    return j;
}

Rational EtaQuotientSpec::offset() const {
    Rational off(0);
    for (const auto& f : factors) off += Rational(f.multiplier * f.exponent, 24);
    return off;
}

QSeries eta_series(int multiplier, int order) {
    if (multiplier < 1) throw std::invalid_argument("eta multiplier must be >= 1");
    if (order < 0) throw std::invalid_argument("negative order");
    Series body = Series::constant(Rational(1), kQ, order);
    for (int n = 1; multiplier * n <= order; ++n) {
        Series factor = Series::constant(Rational(1), kQ, order);
        factor.set(multiplier * n, Rational(-1));
        body = body * factor;
    }
    return QSeries(Rational(multiplier, 24), body);
}

QSeries eta_quotient(const EtaQuotientSpec& spec, int order) {
    // keep enough body terms that every quotient is exact to `order`
    QSeries acc(Rational(0), Series::constant(spec.scale, kQ, order));
    for (const auto& f : spec.factors) {
        QSeries e = eta_series(f.multiplier, order);
        acc = acc * e.pow_int(f.exponent);
    }
    return acc;
}

QSeries theta_series(ThetaKind kind, int multiplier, int order) {
    if (multiplier < 1 || multiplier % 2 != 0)
        throw std::invalid_argument("theta multiplier must be a positive even integer");
    if (order < 0) throw std::invalid_argument("negative order");
    if (kind == ThetaKind::theta3) {
        Series body(kQ, order);
        body.set(0, Rational(1));
        for (long n = 1; multiplier * n * n / 2 <= order; ++n)
            body.set(static_cast<int>(multiplier * n * n / 2), Rational(2));
        return QSeries(Rational(0), body);
    }
    // theta2(m tau) = 2 q^{m/8} sum_{n>=0} q^{m n(n+1)/2}
    Series body(kQ, order);
    for (long n = 0; multiplier * n * (n + 1) / 2 <= order; ++n)
        body.set(static_cast<int>(multiplier * n * (n + 1) / 2), Rational(2));
    return QSeries(Rational(multiplier, 8), body);
}

Series eisenstein_e2(int multiplier, int order) {
    if (multiplier < 1) throw std::invalid_argument("E2 multiplier must be >= 1");
    Series s = Series::constant(Rational(1), kQ, order);
    for (int n = 1; multiplier * n <= order; ++n) {
        long sigma = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) sigma += d;
        s.set(multiplier * n, Rational(-24) * Rational(sigma));
    }
    return s;
}

Series e_generator(int level, int order, int denominator) {
    if (denominator == 0) denominator = (level == 3) ? 4 : 3;
    if (level == 3) {
        Series e = eisenstein_e2(3, order) * Rational(3) + eisenstein_e2(1, order);
        return e * Rational(1, denominator);
    }
    if (level == 2) {
        Series e = eisenstein_e2(2, order) * Rational(2) + eisenstein_e2(1, order);
        return e * Rational(1, denominator);
    }
    throw std::invalid_argument("unsupported level " + std::to_string(level));
}

namespace {

Generators build_generators(int level, int order) {
    Generators g;
    g.level = level;
    g.order = order;
    if (level == 3) {
        QSeries a = theta_series(ThetaKind::theta2, 2, order) * theta_series(ThetaKind::theta2, 6, order) +
                    theta_series(ThetaKind::theta3, 2, order) * theta_series(ThetaKind::theta3, 6, order);
        g.A = {"A3", 3, Rational(1), ExpansionPoint::infinity_cusp, a};
        g.B = {"B3", 3, Rational(1), ExpansionPoint::infinity_cusp,
               eta_quotient({{{1, 3}, {3, -1}}, Rational(1)}, order)};
        g.C = {"C3", 3, Rational(1), ExpansionPoint::infinity_cusp,
               eta_quotient({{{3, 3}, {1, -1}}, Rational(3)}, order)};
        g.E = {"E3", 3, Rational(2), ExpansionPoint::infinity_cusp,
               QSeries(e_generator(3, order, 4))};
        return g;
    }
    if (level == 2) {
        QSeries b2sq = eta_quotient({{{1, 8}, {2, -4}}, Rational(1)}, order);
        QSeries c2sq = eta_quotient({{{2, 8}, {1, -4}}, Rational(8)}, order);
        QSeries a2sq = (b2sq * b2sq + c2sq * c2sq).nth_root(2);
        g.A = {"A2sq", 2, Rational(2), ExpansionPoint::infinity_cusp, a2sq};
        g.B = {"B2sq", 2, Rational(2), ExpansionPoint::infinity_cusp, b2sq};
        g.C = {"C2sq", 2, Rational(2), ExpansionPoint::infinity_cusp, c2sq};
        g.E = {"E2gen", 2, Rational(2), ExpansionPoint::infinity_cusp,
               QSeries(e_generator(2, order, 3))};
        return g;
    }
    throw std::invalid_argument("unsupported level " + std::to_string(level));
}

std::mutex g_gen_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const Generators>> g_gen_cache;

}  // namespace

const Generators& generators(int level, int order) {
    std::lock_guard<std::mutex> lock(g_gen_mutex);
    auto key = std::make_pair(level, order);
    auto it = g_gen_cache.find(key);
    if (it == g_gen_cache.end())
        it = g_gen_cache.emplace(key, std::make_shared<const Generators>(build_generators(level, order))).first;
    return *it->second;
}

QSeries hauptmodul(int level, int order) {
    const Generators& g = generators(level, order);
    if (level == 3) {
        QSeries c3 = g.C.series.pow_int(3);
        QSeries a3 = g.A.series.pow_int(3);
        return QSeries(c3 / a3);
    }
    if (level == 2) {
        QSeries c4 = g.C.series.pow_int(2);
        QSeries a4 = g.A.series.pow_int(2);
        return QSeries(c4 / a4);
    }
    throw std::invalid_argument("unsupported level " + std::to_string(level));
}

json ramanujan_report_to_json(const RamanujanReport& r) {
    json residuals = json::array();
    const char* names[] = {"dA", "dB", "dC", "dE"};
    for (size_t i = 0; i < r.first_nonzero.size(); ++i) {
        json e{{"residual", names[i]}};
        if (r.first_nonzero[i])
            e["first_nonzero_exponent"] = rational_to_json(*r.first_nonzero[i]);
        else
            e["first_nonzero_exponent"] = nullptr;
        residuals.push_back(e);
    }
    return json{{"level", r.level}, {"r", r.r}, {"order", r.order}, {"pass", r.pass}, {"residuals", residuals}};
}

RamanujanReport verify_ramanujan(int level, int r, int order, int e_denominator) {
    if (!((level == 3 && r == 3) || (level == 2 && r == 4)))
        throw std::invalid_argument("unsupported (N, r) pair");
    RamanujanReport rep;
    rep.level = level;
    rep.r = r;
    rep.order = order;

    Generators g = generators(level, order);
    if (e_denominator != 0) {
        g.E.series = QSeries(e_generator(level, order, e_denominator));
    }
    const QSeries& A = g.A.series;
    const QSeries& B = g.B.series;
    const QSeries& C = g.C.series;
    const QSeries& E = g.E.series;

    std::vector<QSeries> residuals;
    if (level == 3) {
        QSeries A2 = A * A, A3 = A2 * A, C3 = C * C * C;
        residuals.push_back(A.theta() * Rational(6) - (A * E + C3 * Rational(2) - A3));
        residuals.push_back(B.theta() * Rational(6) - B * (E - A2));
        residuals.push_back(C.theta() * Rational(6) - C * (E + A2));
        residuals.push_back(E.theta() * Rational(6) - (E * E - A3 * A));
    } else {
        // squared-generator form: a = A2^2, b = B2^2, c = C2^2
        QSeries a2 = A * A, c2 = C * C;
        residuals.push_back(A.theta() * Rational(4) - (A * E + c2 * Rational(2) - a2));
        residuals.push_back(B.theta() * Rational(4) - B * (E - A));
        residuals.push_back(C.theta() * Rational(4) - C * (E + A));
        residuals.push_back(E.theta() * Rational(8) - (E * E - a2));
    }

    rep.pass = true;
    for (const auto& res : residuals) {
        QSeries n = res.normalized();
        int val = n.body().valuation();
        if (val < 0) {
            rep.first_nonzero.emplace_back(std::nullopt);
        } else {
            rep.first_nonzero.emplace_back(n.offset() + Rational(val));
            rep.pass = false;
        }
    }
    return rep;
}

}  // namespace mc
