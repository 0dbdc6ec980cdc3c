#pragma once

#include <json.hpp>

#include "qzeta/flag.hpp"
#include "qzeta/weights.hpp"

namespace qzeta {

// Deterministic JSON views. Exact quantities are emitted as rational strings,
// never as floating point; nlohmann::ordered_json keeps field order stable so
// identical inputs give byte-identical documents.
using Json = nlohmann::ordered_json;

Json rat_json(const Rat& r);
Json vec_json(const Vec& v);

Json root_system_json(const RootSystem& rs);
Json weight_system_json(const RootSystem& rs, const WeightSystem& ws);
Json spherical_coeffs_json(const FlagSpace& fs, const SphericalCoeffs& sc);

}  // namespace qzeta
