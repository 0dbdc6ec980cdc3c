#include "qzeta/casimir.hpp"

namespace qzeta {

Weight lambda0_weight(const RootSystem& rs, Lambda0Choice choice) {
    return choice == Lambda0Choice::Fundamental ? rs.fundamental_rep_weight()
                                                : rs.adjoint_rep_weight();
}

std::string lambda0_name(Lambda0Choice choice) {
    return choice == Lambda0Choice::Fundamental ? "fundamental" : "adjoint";
}

CasimirSpec::CasimirSpec(const RootSystem& rs, Weight lambda0, Rat t, std::int64_t dimension_cap)
    : rs_(&rs), lambda0_(std::move(lambda0)), t_(std::move(t)) {
    if (t_ <= 0) throw std::invalid_argument("t must be a positive rational");
    if (!rs.is_dominant(lambda0_) || !rs.on_weight_lattice(lambda0_))
        throw std::invalid_argument("Lambda_0 must be dominant with integer labels");
    ws0_ = weight_system(rs, lambda0_, dimension_cap);
    Vec two_rho = scale(rs.rho(), Rat(2));
    casimir_shift_ = dot(lambda0_, add(lambda0_, two_rho));
    for (const auto& [lam, mult] : ws0_.entries)
        terms_.push_back({lam, mult, dot(lam, add(lam, two_rho))});
}

Rat CasimirSpec::r_lambda_exponent(const Weight& Lambda, const Weight& lam) const {
    if (ws0_.multiplicity(lam) == 0)
        throw std::invalid_argument("lambda is not a weight of V(Lambda_0)");
    Vec two_rho = scale(rs_->rho(), Rat(2));
    return 2 * dot(Lambda, lam) + dot(lam, add(lam, two_rho)) - casimir_shift_;
}

Real CasimirSpec::a_t_lambda(const QContext& ctx, const Weight& Lambda, const Weight& lam) const {
    return ctx.q_number(t_ * r_lambda_exponent(Lambda, lam));
}

Real CasimirSpec::chi(const QContext& ctx, const Weight& Lambda) const {
    if (!rs_->is_dominant(Lambda))
        throw std::invalid_argument("chi requires a dominant weight");

    const Vec shifted = add(Lambda, rs_->rho());
    // (Lambda + rho, alpha) > 0 for dominant Lambda, so the denominators of the
    // quantum-dimension ratios never vanish.
    Real sum(0);
    Real max_abs(0);
    for (const auto& term : terms_) {
        Rat e = 2 * dot(Lambda, term.lam) + term.lam_casimir - casimir_shift_;
        if (e == 0) continue;  // a_{t,lam} vanishes exactly
        Real a = ctx.q_number(t_ * e);

        // qdim(Lambda+lam)/qdim(Lambda) as one product over positive roots.
        Vec shifted_up = add(shifted, term.lam);
        Real ratio(1);
        bool vanished = false;
        for (const auto& alpha : rs_->positive_roots()) {
            Rat xu = dot(shifted_up, alpha);
            if (xu == 0) {
                vanished = true;
                break;
            }
            Rat x = dot(shifted, alpha);
            ratio *= (ctx.q_pow(xu) - ctx.q_pow(-xu)) / (ctx.q_pow(x) - ctx.q_pow(-x));
        }
        if (vanished) continue;

        Real contrib = Real(term.mult) * a * a * ratio;
        sum += contrib;
        Real mag = abs(contrib);
        if (mag > max_abs) max_abs = mag;
    }

    // chi is a sum of squares times signed ratios that can only cancel down to
    // zero, never below; anything further negative means the working precision
    // was exhausted.
    if (sum < 0) {
        Real budget = max_abs * pow(Real(10), -static_cast<long>(ctx.digits() / 2));
        if (-sum > budget)
            throw numeric_error("chi evaluated to " + sum.str(8) +
                                " with largest term " + max_abs.str(8) +
                                "; increase the working precision");
    }
    return sum;
}

Rat CasimirSpec::chi_exponent(const Weight& Lambda) const {
    return 4 * t_ * dot(Lambda, lambda0_);
}

Real CasimirSpec::chi_normalized(const QContext& ctx, const Weight& Lambda) const {
    return chi(ctx, Lambda) * ctx.q_pow(chi_exponent(Lambda));
}

}  // namespace qzeta
