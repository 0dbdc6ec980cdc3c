#pragma once

#include "qzeta/qforms.hpp"
#include "qzeta/weights.hpp"

namespace qzeta {

// Which fixed representation Lambda_0 the central element is built from.
enum class Lambda0Choice { Fundamental, Adjoint };

Weight lambda0_weight(const RootSystem& rs, Lambda0Choice choice);
std::string lambda0_name(Lambda0Choice choice);

// The one-parameter central element, fixed by a root system, a dominant
// weight Lambda_0 and a positive rational t. The weight system of V(Lambda_0)
// is precomputed; everything else is pure.
class CasimirSpec {
public:
    CasimirSpec(const RootSystem& rs, Weight lambda0, Rat t,
                std::int64_t dimension_cap = kDefaultDimensionCap);

    const RootSystem& root_system() const { return *rs_; }
    const Weight& lambda0() const { return lambda0_; }
    const Rat& t() const { return t_; }
    const WeightSystem& lambda0_weights() const { return ws0_; }

    // Exponent e with r_lambda = q^e:
    // e = 2(Lambda, lam) + (lam, lam + 2 rho) - (Lambda_0, Lambda_0 + 2 rho).
    Rat r_lambda_exponent(const Weight& Lambda, const Weight& lam) const;

    // a_{t,lam} = (q^{t e} - q^{-t e}) / (q - q^{-1}).
    Real a_t_lambda(const QContext& ctx, const Weight& Lambda, const Weight& lam) const;

    // Eigenvalue of C_t on V(Lambda): sum over the weights lam of V(Lambda_0)
    // of mult * a_{t,lam}^2 * qdim(Lambda+lam)/qdim(Lambda). Lambda must be
    // dominant. Throws numeric_error if cancellation exceeds the working
    // precision budget.
    Real chi(const QContext& ctx, const Weight& Lambda) const;

    // Growth exponent of chi along rays: 4 t (Lambda, Lambda_0), exact.
    Rat chi_exponent(const Weight& Lambda) const;

    // chi(Lambda) * q^{chi_exponent(Lambda)}; bounded along dominant rays.
    Real chi_normalized(const QContext& ctx, const Weight& Lambda) const;

private:
    const RootSystem* rs_;
    Weight lambda0_;
    Rat t_;
    WeightSystem ws0_;
    Rat casimir_shift_;  // (Lambda_0, Lambda_0 + 2 rho)
    // Per-weight cached data: coordinates, multiplicity, (lam, lam + 2 rho).
    struct Term {
        Weight lam;
        std::int64_t mult;
        Rat lam_casimir;
    };
    std::vector<Term> terms_;
};

}  // namespace qzeta
