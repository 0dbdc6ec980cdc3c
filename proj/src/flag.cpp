#include "qzeta/flag.hpp"

#include <stdexcept>

namespace qzeta {

std::string flag_family_name(FlagFamily f) {
    switch (f) {
        case FlagFamily::AIII: return "AIII";
        case FlagFamily::BDI: return "BDI";
        case FlagFamily::CI: return "CI";
        case FlagFamily::DIII: return "DIII";
        case FlagFamily::EIII: return "EIII";
        case FlagFamily::EVII: return "EVII";
    }
    throw std::logic_error("unreachable");
}

FlagFamily flag_family_from_name(const std::string& name) {
    if (name == "AIII") return FlagFamily::AIII;
    if (name == "BDI") return FlagFamily::BDI;
    if (name == "CI") return FlagFamily::CI;
    if (name == "DIII") return FlagFamily::DIII;
    if (name == "EIII") return FlagFamily::EIII;
    if (name == "EVII") return FlagFamily::EVII;
    throw std::invalid_argument("unknown flag family '" + name + "'");
}

std::vector<std::vector<long>> FlagSpace::expansion_matrix() const {
    std::vector<std::vector<long>> c;
    for (const auto& mu : spherical_weights) {
        Vec labels = ambient.dynkin_labels(mu);
        std::vector<long> row;
        for (const auto& l : labels) {
            if (!is_integer(l) || l < 0)
                throw std::logic_error("spherical weight is not dominant integral");
            row.push_back(l.get_num().get_si());
        }
        c.push_back(std::move(row));
    }
    return c;
}

Weight FlagSpace::spherical_weight_from_labels(const std::vector<long>& m) const {
    if (m.size() != spherical_weights.size())
        throw std::invalid_argument(name + ": expected " + std::to_string(spherical_weights.size()) +
                                    " spherical labels");
    Weight w = zero_vec(ambient.ambient_dim());
    for (std::size_t k = 0; k < m.size(); ++k)
        w = add(w, scale(spherical_weights[k], Rat(m[k])));
    return w;
}

namespace {

Weight omega(const RootSystem& rs, int k) { return rs.fundamental_weights()[k - 1]; }

}  // namespace

FlagSpace build_flag(FlagFamily family, const FlagParams& params, bool allow_degenerate) {
    RootSystem ambient = [&] {
        switch (family) {
            case FlagFamily::AIII: {
                if (params.q < 1 || (!allow_degenerate && params.p <= params.q))
                    throw std::invalid_argument("AIII requires p > q >= 1");
                if (params.p < params.q) throw std::invalid_argument("AIII requires p >= q");
                return build_root_system(LieType::A, static_cast<int>(params.p + params.q - 1));
            }
            case FlagFamily::BDI: {
                if (params.p < 3 && !allow_degenerate)
                    throw std::invalid_argument("BDI(q=2) requires p >= 3");
                if (params.p < 3) throw std::invalid_argument("BDI ambient group needs p >= 3");
                const long r = (params.p % 2 == 0) ? params.p / 2 + 1 : (params.p + 1) / 2;
                return build_root_system(params.p % 2 == 0 ? LieType::D : LieType::B,
                                         static_cast<int>(r));
            }
            case FlagFamily::CI:
                if (params.r < 2) throw std::invalid_argument("CI requires r >= 2");
                return build_root_system(LieType::C, static_cast<int>(params.r));
            case FlagFamily::DIII:
                if (params.r < 3) throw std::invalid_argument("DIII requires r >= 3");
                return build_root_system(LieType::D, static_cast<int>(params.r));
            case FlagFamily::EIII: return build_root_system(LieType::E6, 6);
            case FlagFamily::EVII: return build_root_system(LieType::E7, 7);
        }
        throw std::logic_error("unreachable");
    }();

    FlagSpace fs{family, params, std::move(ambient), {}, 0, {}};
    switch (family) {
        case FlagFamily::AIII: {
            const long p = params.p, q = params.q, r = p + q - 1;
            for (long k = 1; k <= q; ++k)
                fs.spherical_weights.push_back(
                    add(omega(fs.ambient, k), omega(fs.ambient, r + 1 - k)));
            fs.classical_dim = 2 * p * q;
            fs.name = "AIII(" + std::to_string(p) + "," + std::to_string(q) + ")";
            break;
        }
        case FlagFamily::BDI: {
            // mu_1 = 2 omega_1 = 2 e_1 and mu_2 = e_1 + e_2 = theta in every rank;
            // the expression of mu_2 in fundamental weights varies at the small
            // ranks (2 omega_2 for B_2, omega_2 + omega_3 for D_3) but the vector
            // does not.
            fs.spherical_weights.push_back(scale(omega(fs.ambient, 1), Rat(2)));
            fs.spherical_weights.push_back(fs.ambient.theta());
            fs.classical_dim = 2 * params.p;
            fs.name = "BDI(" + std::to_string(params.p) + ")";
            break;
        }
        case FlagFamily::CI: {
            for (long k = 1; k <= params.r; ++k)
                fs.spherical_weights.push_back(scale(omega(fs.ambient, k), Rat(2)));
            fs.classical_dim = params.r * (params.r + 1);
            fs.name = "CI(" + std::to_string(params.r) + ")";
            break;
        }
        case FlagFamily::DIII: {
            const long r = params.r, l = r / 2;
            for (long j = 1; j <= l - 1; ++j)
                fs.spherical_weights.push_back(omega(fs.ambient, 2 * j));
            if (r % 2 == 0)
                fs.spherical_weights.push_back(scale(omega(fs.ambient, r), Rat(2)));
            else
                fs.spherical_weights.push_back(
                    add(omega(fs.ambient, r - 1), omega(fs.ambient, r)));
            fs.classical_dim = r * (r - 1);
            fs.name = "DIII(" + std::to_string(r) + ")";
            break;
        }
        case FlagFamily::EIII:
            fs.spherical_weights.push_back(add(omega(fs.ambient, 1), omega(fs.ambient, 5)));
            fs.spherical_weights.push_back(omega(fs.ambient, 6));
            fs.classical_dim = 32;
            fs.name = "EIII";
            break;
        case FlagFamily::EVII:
            fs.spherical_weights.push_back(omega(fs.ambient, 1));
            fs.spherical_weights.push_back(omega(fs.ambient, 5));
            fs.spherical_weights.push_back(scale(omega(fs.ambient, 6), Rat(2)));
            fs.classical_dim = 54;
            fs.name = "EVII";
            break;
    }

    for (const auto& mu : fs.spherical_weights)
        if (!fs.ambient.is_dominant(mu) || !fs.ambient.on_weight_lattice(mu))
            throw std::logic_error(fs.name + ": spherical weight is not dominant integral");
    return fs;
}

SphericalCoeffs spherical_coeffs(const FlagSpace& fs, const Weight& lambda0) {
    SphericalCoeffs out;
    out.theta_sq = dot(fs.ambient.theta(), fs.ambient.theta());
    out.classical_dim = fs.classical_dim;

    // Substitution rule: with mu_k = sum_j c_kj omega_j and (Lambda, gamma) =
    // sum_j n_j (omega_j, gamma), the spherical coefficient is sum_j c_kj (omega_j, gamma).
    Vec a_group = fs.ambient.coeffs_against(scale(fs.ambient.rho(), Rat(2)));
    Vec b_group = fs.ambient.coeffs_against(lambda0);
    auto c = fs.expansion_matrix();
    for (int k = 0; k < fs.num_spherical(); ++k) {
        Rat a = 0, b = 0;
        for (int j = 0; j < fs.ambient.rank(); ++j) {
            a += Rat(c[k][j]) * a_group[j];
            b += Rat(c[k][j]) * b_group[j];
        }
        out.a_S.push_back(a);
        out.b_S.push_back(b);
    }
    return out;
}

SphericalCoeffs spherical_coeffs(const FlagSpace& fs, Lambda0Choice lambda0) {
    return spherical_coeffs(fs, lambda0_weight(fs.ambient, lambda0));
}

QdimAsymReport check_qdim_asym(const FlagSpace& fs) {
    SphericalCoeffs sc = spherical_coeffs(fs, Lambda0Choice::Adjoint);
    Rat mx = sc.a_S.front();
    for (const auto& a : sc.a_S)
        if (a > mx) mx = a;
    QdimAsymReport rep;
    rep.lhs = Rat(2) / sc.theta_sq * mx;
    rep.classical_dim = fs.classical_dim;
    rep.ok = (rep.lhs == Rat(fs.classical_dim));
    return rep;
}

std::vector<FlagSpace> default_catalog() {
    std::vector<FlagSpace> out;
    for (long p = 2; p <= 6; ++p)
        for (long q = 1; q < p && p + q <= 7; ++q)
            out.push_back(build_flag(FlagFamily::AIII, {.p = p, .q = q}));
    for (long p = 3; p <= 9; ++p) out.push_back(build_flag(FlagFamily::BDI, {.p = p}));
    for (long r = 2; r <= 6; ++r) out.push_back(build_flag(FlagFamily::CI, {.r = r}));
    for (long r = 3; r <= 7; ++r) out.push_back(build_flag(FlagFamily::DIII, {.r = r}));
    out.push_back(build_flag(FlagFamily::EIII, {}));
    out.push_back(build_flag(FlagFamily::EVII, {}));
    return out;
}

}  // namespace qzeta
