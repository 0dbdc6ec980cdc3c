#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <string>

#include "qzeta/rootdata.hpp"

namespace qzeta {

// Arbitrary-precision real; working precision is set per QContext.
using Real = boost::multiprecision::mpfr_float;

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Real to_real(const Rat& r);

// Deformation parameter q in (0,1) with a working precision in decimal digits.
// Construction sets the thread's default mpfr precision; all evaluation goes
// through the context, so a single context at a time is the intended use.
class QContext {
public:
    static constexpr unsigned kDefaultDigits = 50;

    explicit QContext(const std::string& q_decimal, unsigned digits = kDefaultDigits);

    const Real& q() const { return q_; }
    unsigned digits() const { return digits_; }
    const std::string& q_string() const { return q_str_; }

    // q^e for exact rational e, evaluated as exp(e ln q) at full precision.
    Real q_pow(const Rat& e) const;

    // [x]_q-style difference (q^e - q^-e)/(q - q^-1).
    Real q_number(const Rat& e) const;

    const Real& q_minus_qinv() const { return q_minus_qinv_; }

private:
    std::string q_str_;
    unsigned digits_;
    Real q_;
    Real log_q_;
    Real q_minus_qinv_;
};

// Quantum dimension of V(highest) by the product formula over positive roots.
// The argument may be any lattice weight: the value is signed, and exactly 0
// whenever some (highest+rho, alpha) vanishes. This makes the Casimir
// eigenvalue sum well defined for shifts that leave the dominant cone.
Real qdim(const QContext& ctx, const RootSystem& rs, const Weight& highest);

// Decay exponent of the quantum dimension: (highest, 2 rho), exact.
Rat qdim_exponent(const RootSystem& rs, const Weight& highest);

// Normalized quantum dimension qdim(w) * q^{(w, 2rho)}; tends to a finite
// positive limit along dominant rays.
Real qdim_normalized(const QContext& ctx, const RootSystem& rs, const Weight& w);

struct RatioWindow {
    Real lo;
    Real hi;
};

// Empirical bracket of qdim(n*ray) * q^{(n*ray, 2rho)} over n in [n_lo, n_hi].
RatioWindow qdim_ratio_window(const QContext& ctx, const RootSystem& rs, const Weight& ray,
                              long n_lo, long n_hi);

}  // namespace qzeta
