#pragma once

#include <string>
#include <vector>

#include "qzeta/rational.hpp"

namespace qzeta {

// A weight is its exact coordinate vector in the ambient orthonormal basis.
// The Dynkin-label view is derived through the owning RootSystem.
using Weight = Vec;

enum class LieType { A, B, C, D, E6, E7 };

std::string lie_type_name(LieType t);
LieType lie_type_from_name(const std::string& name);

// One simple root system in the orthonormal-basis conventions used throughout
// the library (node ordering: A-D chains numbered left to right, with the
// short/fork end last; E6 chain 1-2-3-4-5 with node 6 on node 3; E7 chain
// 1-2-3-4-5-6 with node 7 on node 3). Immutable after construction.
class RootSystem {
public:
    LieType type() const { return type_; }
    int rank() const { return rank_; }
    int ambient_dim() const { return ambient_dim_; }
    std::string name() const;

    const std::vector<Vec>& simple_roots() const { return simple_roots_; }
    const std::vector<Vec>& positive_roots() const { return positive_roots_; }
    const std::vector<Vec>& fundamental_weights() const { return fundamental_weights_; }
    const Vec& rho() const { return rho_; }
    const Vec& theta() const { return theta_; }
    const std::vector<std::vector<long>>& cartan_matrix() const { return cartan_matrix_; }

    // d_i = (alpha_i, alpha_i)/2
    const std::vector<Rat>& simple_root_half_norms() const { return half_norms_; }

    // <w, alpha_i^vee> for every simple root; integers exactly on the weight lattice.
    Vec dynkin_labels(const Weight& w) const;

    // Sum n_k omega_k from labels (rational labels allowed).
    Weight weight_from_labels(const Vec& labels) const;
    Weight weight_from_labels(const std::vector<long>& labels) const;

    // Coordinates of v in the simple-root basis (exact; v must lie in the span).
    Vec expand_in_simple_roots(const Vec& v) const;

    bool is_dominant(const Weight& w) const;
    bool on_weight_lattice(const Weight& w) const;

    // Coefficients c_k with (Lambda, target) = sum c_k n_k for Lambda = sum n_k omega_k,
    // i.e. c_k = (omega_k, target).
    Vec coeffs_against(const Weight& target) const;

    Weight fundamental_rep_weight() const;  // Lambda_F: omega_1 for A-D, omega_1 for E6, omega_6 for E7
    Weight adjoint_rep_weight() const { return theta_; }

private:
    friend RootSystem build_root_system(LieType type, int rank);
    RootSystem() = default;

    LieType type_{};
    int rank_ = 0;
    int ambient_dim_ = 0;
    std::vector<Vec> simple_roots_;
    std::vector<Vec> positive_roots_;
    std::vector<Vec> fundamental_weights_;
    Vec rho_;
    Vec theta_;
    std::vector<std::vector<long>> cartan_matrix_;
    std::vector<Rat> half_norms_;
    // Gram matrix of simple roots, kept for expand_in_simple_roots.
    std::vector<std::vector<Rat>> gram_;
};

// Valid ranks: A r>=1, B r>=2, C r>=2, D r>=3; E6/E7 take rank 6/7 (or 0 for default).
// Construction validates all structural invariants and throws std::invalid_argument
// or std::logic_error on failure.
RootSystem build_root_system(LieType type, int rank);

inline Rat inner(const Weight& a, const Weight& b) { return dot(a, b); }

}  // namespace qzeta
