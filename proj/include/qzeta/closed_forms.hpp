#pragma once

#include "qzeta/flag.hpp"
#include "qzeta/rootdata.hpp"

namespace qzeta {

// Hard-coded closed forms of the coefficient tables, kept deliberately
// independent of the geometric computation in rootdata/flag so the two routes
// can be checked against each other.
namespace closed_forms {

// Coefficients of (Lambda, 2 rho) in the Dynkin labels n_k.
std::vector<Rat> weyl_vector_pairing(LieType type, int rank);

// Coefficients of (Lambda, Lambda_F) with Lambda_F the fundamental-representation
// weight (first node for A-D, omega_1 for E6, omega_6 for E7).
std::vector<Rat> fundamental_pairing(LieType type, int rank);

// Coefficients of (Lambda, theta).
std::vector<Rat> adjoint_pairing(LieType type, int rank);

// Spherical analogues in the labels m_k.
std::vector<Rat> spherical_weyl_pairing(FlagFamily family, const FlagParams& params);
std::vector<Rat> spherical_fundamental_pairing(FlagFamily family, const FlagParams& params);
std::vector<Rat> spherical_adjoint_pairing(FlagFamily family, const FlagParams& params);

}  // namespace closed_forms

}  // namespace qzeta
