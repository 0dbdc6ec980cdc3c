#include "qzeta/qforms.hpp"

namespace qzeta {

Real to_real(const Rat& r) {
    Real x;
    mpfr_set_q(x.backend().data(), r.get_mpq_t(), MPFR_RNDN);
    return x;
}

QContext::QContext(const std::string& q_decimal, unsigned digits) : q_str_(q_decimal), digits_(digits) {
    if (digits_ < 10) throw std::invalid_argument("precision must be at least 10 digits");
    Real::default_precision(digits_);
    q_ = Real(q_decimal);
    if (!(q_ > 0 && q_ < 1))
        throw std::invalid_argument("q must lie strictly inside (0,1), got '" + q_decimal + "'");
    log_q_ = log(q_);
    q_minus_qinv_ = q_ - 1 / q_;
}

Real QContext::q_pow(const Rat& e) const {
    if (e == 0) return Real(1);
    return exp(to_real(e) * log_q_);
}

Real QContext::q_number(const Rat& e) const {
    if (e == 0) return Real(0);
    return (q_pow(e) - q_pow(-e)) / q_minus_qinv_;
}

Real qdim(const QContext& ctx, const RootSystem& rs, const Weight& highest) {
    Vec shifted = add(highest, rs.rho());
    // Exact-zero shortcut keeps reflection-degenerate arguments at exactly 0.
    for (const auto& a : rs.positive_roots())
        if (dot(shifted, a) == 0) return Real(0);
    Real out(1);
    for (const auto& a : rs.positive_roots()) {
        Rat x = dot(shifted, a);
        Rat y = dot(rs.rho(), a);
        out *= (ctx.q_pow(x) - ctx.q_pow(-x)) / (ctx.q_pow(y) - ctx.q_pow(-y));
    }
    return out;
}

Rat qdim_exponent(const RootSystem& rs, const Weight& highest) {
    return dot(highest, scale(rs.rho(), Rat(2)));
}

Real qdim_normalized(const QContext& ctx, const RootSystem& rs, const Weight& w) {
    return qdim(ctx, rs, w) * ctx.q_pow(qdim_exponent(rs, w));
}

RatioWindow qdim_ratio_window(const QContext& ctx, const RootSystem& rs, const Weight& ray,
                              long n_lo, long n_hi) {
    if (n_lo > n_hi || n_lo < 0) throw std::invalid_argument("degenerate sample range");
    if (!rs.is_dominant(ray) || is_zero(ray))
        throw std::invalid_argument("ray must be dominant and nonzero");
    RatioWindow win{Real(0), Real(0)};
    bool first = true;
    for (long n = n_lo; n <= n_hi; ++n) {
        Real v = qdim_normalized(ctx, rs, scale(ray, Rat(n)));
        if (first || v < win.lo) win.lo = v;
        if (first || v > win.hi) win.hi = v;
        first = false;
    }
    return win;
}

}  // namespace qzeta
