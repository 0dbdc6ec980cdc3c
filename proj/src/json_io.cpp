#include "qzeta/json_io.hpp"

namespace qzeta {

Json rat_json(const Rat& r) { return r.get_str(); }

Json vec_json(const Vec& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(rat_json(x));
    return arr;
}

namespace {

Json vec_list_json(const std::vector<Vec>& vs) {
    Json arr = Json::array();
    for (const auto& v : vs) arr.push_back(vec_json(v));
    return arr;
}

std::string node_ordering_note(LieType t) {
    switch (t) {
        case LieType::A: return "chain 1..r";
        case LieType::B: return "chain 1..r, node r short";
        case LieType::C: return "chain 1..r, node r long";
        case LieType::D: return "chain 1..r-2 forking into r-1 and r";
        case LieType::E6: return "chain 1-2-3-4-5, node 6 attached to node 3";
        case LieType::E7: return "chain 1-2-3-4-5-6, node 7 attached to node 3";
    }
    return {};
}

}  // namespace

Json root_system_json(const RootSystem& rs) {
    Json j;
    j["lie_type"] = lie_type_name(rs.type());
    j["rank"] = rs.rank();
    j["ambient_dim"] = rs.ambient_dim();
    j["node_ordering"] = node_ordering_note(rs.type());
    j["simple_roots"] = vec_list_json(rs.simple_roots());
    j["positive_roots"] = vec_list_json(rs.positive_roots());
    j["fundamental_weights"] = vec_list_json(rs.fundamental_weights());
    j["rho"] = vec_json(rs.rho());
    j["theta"] = vec_json(rs.theta());
    Json cart = Json::array();
    for (const auto& row : rs.cartan_matrix()) {
        Json jr = Json::array();
        for (long x : row) jr.push_back(x);
        cart.push_back(jr);
    }
    j["cartan_matrix"] = cart;
    return j;
}

Json weight_system_json(const RootSystem& rs, const WeightSystem& ws) {
    Json j;
    j["highest"] = Json{{"labels", vec_json(rs.dynkin_labels(ws.highest))},
                        {"coords", vec_json(ws.highest)}};
    j["dimension"] = static_cast<long>(ws.total_multiplicity());
    Json entries = Json::array();
    for (const auto& [w, m] : ws.entries)
        entries.push_back(Json{{"labels", vec_json(rs.dynkin_labels(w))},
                               {"coords", vec_json(w)},
                               {"multiplicity", static_cast<long>(m)}});
    j["entries"] = entries;
    return j;
}

Json spherical_coeffs_json(const FlagSpace& fs, const SphericalCoeffs& sc) {
    Json j;
    j["space"] = fs.name;
    j["a_S"] = vec_json(sc.a_S);
    j["b_S"] = vec_json(sc.b_S);
    j["theta_sq"] = rat_json(sc.theta_sq);
    j["d"] = fs.classical_dim;
    return j;
}

}  // namespace qzeta
