#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qzeta/casimir.hpp"
#include "qzeta/rootdata.hpp"

namespace qzeta {

enum class FlagFamily { AIII, BDI, CI, DIII, EIII, EVII };

std::string flag_family_name(FlagFamily f);
FlagFamily flag_family_from_name(const std::string& name);

// Parameters: AIII uses (p, q); BDI uses p; CI and DIII use r; EIII/EVII none.
struct FlagParams {
    long p = 0;
    long q = 0;
    long r = 0;
};

// One compact irreducible Hermitian symmetric space G/K: the ambient group,
// its fundamental spherical weights and the classical real dimension.
struct FlagSpace {
    FlagFamily family;
    FlagParams params;
    RootSystem ambient;
    std::vector<Weight> spherical_weights;
    long classical_dim = 0;
    std::string name;

    int num_spherical() const { return static_cast<int>(spherical_weights.size()); }

    // Expansion matrix c_kj with mu_k = sum_j c_kj omega_j (the Dynkin labels
    // of the spherical weights), used by the substitution rule.
    std::vector<std::vector<long>> expansion_matrix() const;

    // Dominant spherical weight sum m_k mu_k.
    Weight spherical_weight_from_labels(const std::vector<long>& m) const;
};

// Builds a catalog entry. Parameter restrictions (AIII p > q >= 1, BDI p >= 3,
// CI r >= 2, DIII r >= 3) are enforced unless allow_degenerate is set; the
// override only relaxes ranges that still define a valid ambient group.
FlagSpace build_flag(FlagFamily family, const FlagParams& params, bool allow_degenerate = false);

// Coefficients of (Lambda_S, 2 rho) and (Lambda_S, Lambda_0) in the spherical
// labels m_k, obtained from the group coefficient vectors by the substitution
// n_j -> sum_k c_kj m_k.
struct SphericalCoeffs {
    std::vector<Rat> a_S;      // (mu_k, 2 rho)
    std::vector<Rat> b_S;      // (mu_k, Lambda_0)
    Rat theta_sq;              // (theta, theta)
    long classical_dim = 0;
};

SphericalCoeffs spherical_coeffs(const FlagSpace& fs, Lambda0Choice lambda0);
SphericalCoeffs spherical_coeffs(const FlagSpace& fs, const Weight& lambda0);

// Verifies (2/(theta,theta)) * max{a_k^S} = d exactly.
struct QdimAsymReport {
    bool ok = false;
    Rat lhs;
    long classical_dim = 0;
};
QdimAsymReport check_qdim_asym(const FlagSpace& fs);

// The default desk-scale catalog grid used by the CLI and the verification
// suite: AIII p+q <= 7, BDI 3 <= p <= 9, CI r <= 6, DIII r <= 7, EIII, EVII.
std::vector<FlagSpace> default_catalog();

}  // namespace qzeta
