#include "mirrorcayley/serialize.hpp"

#include <sstream>

namespace mc {

namespace {

json bigint_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

mpz_class bigint_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long long>());
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw std::invalid_argument("expected integer or string for big integer");
}

}  // namespace

json rational_to_json(const Rational& r) {
    return json::array({bigint_to_json(r.get_num()), bigint_to_json(r.get_den())});
}

Rational rational_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("rational must be a [num,den] pair");
    Rational r(bigint_from_json(j[0]), bigint_from_json(j[1]));
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in rational");
    r.canonicalize();
    return r;
}

json cyc_to_json(const Cyc& z) {
    json a = json::array();
    for (const auto& c : z.coeffs()) a.push_back(rational_to_json(c));
    return a;
}

Cyc cyc_from_json(const json& j) {
    if (!j.is_array() || j.size() != 8) throw std::invalid_argument("cyclotomic scalar must be an 8-vector");
    std::array<Rational, 8> c;
    for (int i = 0; i < 8; ++i) c[static_cast<size_t>(i)] = rational_from_json(j[static_cast<size_t>(i)]);
    return Cyc::from_coeffs(c);
}

json series_to_json(const Series& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(rational_to_json(c));
    return json{{"variable", s.var()}, {"trunc", s.trunc()}, {"coeffs", coeffs}};
}

Series series_from_json(const json& j) {
    std::string var = j.at("variable").get<std::string>();
    int trunc = j.at("trunc").get<int>();
    const json& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != trunc + 1)
        throw std::invalid_argument("coefficient count does not match trunc");
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& e : coeffs) c.push_back(rational_from_json(e));
    return Series(var, std::move(c));
}

json qseries_to_json(const QSeries& s) {
    json j = series_to_json(s.body());
    if (s.offset() != 0) j["offset"] = rational_to_json(s.offset());
    return j;
}

QSeries qseries_from_json(const json& j) {
    Series body = series_from_json(j);
    Rational off(0);
    if (j.contains("offset")) off = rational_from_json(j.at("offset"));
    return QSeries(off, body);
}

json cyc_series_to_json(const CycSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(cyc_to_json(c));
    return json{{"variable", s.var()}, {"trunc", s.trunc()}, {"coeffs", coeffs}, {"scalar", "cyclotomic24"}};
}

CycSeries cyc_series_from_json(const json& j) {
    std::string var = j.at("variable").get<std::string>();
    int trunc = j.at("trunc").get<int>();
    const json& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) != trunc + 1)
        throw std::invalid_argument("coefficient count does not match trunc");
    std::vector<Cyc> c;
    c.reserve(coeffs.size());
    for (const auto& e : coeffs) c.push_back(cyc_from_json(e));
    return CycSeries(var, std::move(c));
}

std::string qseries_to_csv(const QSeries& s) {
    std::ostringstream os;
    os << "exponent,numerator,denominator\n";
    for (int n = 0; n <= s.trunc(); ++n) {
        Rational e = s.offset() + Rational(n);
        os << rat_str(e) << "," << s.body().at(n).get_num().get_str() << ","
           << s.body().at(n).get_den().get_str() << "\n";
    }
    return os.str();
}

std::string qseries_to_pretty(const QSeries& s) {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= s.trunc(); ++n) {
        const Rational& c = s.body().at(n);
        if (c == 0) continue;
        Rational e = s.offset() + Rational(n);
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (ac == 1);
        if (!unit || e == 0) os << rat_str(ac);
        if (e != 0) {
            if (!unit) os << "*";
            os << s.var();
            if (e != 1) os << "^" << (is_integer(e) ? rat_str(e) : "(" + rat_str(e) + ")");
        }
    }
    if (first) os << "0";
    Rational top = s.offset() + Rational(s.trunc() + 1);
    os << " + O(" << s.var() << "^" << (is_integer(top) ? rat_str(top) : "(" + rat_str(top) + ")") << ")";
    return os.str();
}

}  // namespace mc
