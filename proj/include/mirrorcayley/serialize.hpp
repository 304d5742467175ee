#pragma once

#include <string>

#include <json.hpp>

#include "mirrorcayley/series.hpp"

namespace mc {

using json = nlohmann::json;

// Rationals serialize as [num, den]; entries are JSON integers when they fit
// in 64 bits and decimal strings otherwise.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json cyc_to_json(const Cyc& z);
Cyc cyc_from_json(const json& j);

// {"variable": .., "offset": [n,d] (omitted when zero), "trunc": .., "coeffs": [..]}
json series_to_json(const Series& s);
Series series_from_json(const json& j);

json qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const json& j);

json cyc_series_to_json(const CycSeries& s);
CycSeries cyc_series_from_json(const json& j);

// one coefficient per row: "exponent,numerator,denominator"
std::string qseries_to_csv(const QSeries& s);

std::string qseries_to_pretty(const QSeries& s);

}  // namespace mc
