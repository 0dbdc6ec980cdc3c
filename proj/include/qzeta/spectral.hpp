#pragma once

#include <map>
#include <memory>
#include <vector>

#include "qzeta/flag.hpp"

namespace qzeta {

// Closed-form spectral dimensions. The coefficient vectors are
// a_k = (omega_k, 2 rho) and b_k = (omega_k, Lambda_0) (spherical analogues
// for flag spaces); all b_k must be positive.
Rat spectral_dim_group(const RootSystem& rs, const Weight& lambda0, const Rat& t);
Rat spectral_dim_group(const RootSystem& rs, Lambda0Choice lambda0, const Rat& t);
Rat spectral_dim_flag(const FlagSpace& fs, Lambda0Choice lambda0, const Rat& t);
Rat spectral_dim_flag(const FlagSpace& fs, const Weight& lambda0, const Rat& t);

struct ProductFactor {
    LieType type;
    int rank;
    Lambda0Choice lambda0 = Lambda0Choice::Fundamental;
    Rat t = Rat(1);
};

Rat spectral_dim_product(const std::vector<ProductFactor>& factors);

// A lazily evaluated zeta series over dominant (or spherical) labels. Terms
// carry a positive eigenvalue chi and a quantum-dimension weight factor;
// the trivial representation (chi = 0) is excluded from every sum.
class ZetaSeries {
public:
    enum class Kind { Group, Flag, Product };

    static ZetaSeries group(const QContext& ctx, const RootSystem& rs, Lambda0Choice lambda0,
                            const Rat& t);
    static ZetaSeries flag(const QContext& ctx, const FlagSpace& fs, Lambda0Choice lambda0,
                           const Rat& t);
    static ZetaSeries product(const QContext& ctx, const std::vector<ProductFactor>& factors);

    Kind kind() const { return kind_; }
    int rank() const { return total_rank_; }
    const QContext& context() const { return *ctx_; }

    // Closed-form spectral dimension of this series.
    Rat closed_form_dimension() const;

    // Per-direction geometric decay exponent at real argument s, from the
    // iterated-geometric-series shape of the tail: the direction-k terms decay
    // like q^{e_k(s) * n_k}. Convergence holds iff every exponent is positive.
    Rat direction_exponent(int k, const Rat& s) const;
    bool converges(const Rat& s) const;

    // Term data at a nonzero label vector (length rank()).
    Real term_weight(const std::vector<long>& labels) const;      // quantum-dimension factor
    Real term_eigenvalue(const std::vector<long>& labels) const;  // chi
    Real term_value(const Rat& s, const std::vector<long>& labels) const;

    // Per-factor views; factors correspond to the label slices in order.
    std::size_t num_factors() const { return factors_.size(); }
    int factor_rank(std::size_t factor) const { return factors_.at(factor).rank; }
    Real factor_weight(std::size_t factor, const std::vector<long>& factor_labels) const;
    Real factor_eigenvalue(std::size_t factor, const std::vector<long>& factor_labels) const;

private:
    struct Factor {
        std::shared_ptr<const RootSystem> rs;
        std::shared_ptr<const FlagSpace> fs;  // set for flag kind
        std::shared_ptr<const CasimirSpec> cas;
        Rat t;
        std::vector<Rat> a, b;
        Rat p;  // factor spectral dimension
        int rank = 0;

        Weight weight_from(const std::vector<long>& labels) const;
    };

    ZetaSeries() = default;
    void add_group_factor(const RootSystem& rs, Lambda0Choice lambda0, const Rat& t);
    void finalize();

    Kind kind_{};
    const QContext* ctx_ = nullptr;
    std::vector<Factor> factors_;
    int total_rank_ = 0;
    Rat p_sum_;  // sum of factor spectral dimensions
};

struct ZetaValue {
    Real value;
    Real tail_bound;        // meaningful only when tail_finite
    bool tail_finite = false;
    long terms_summed = 0;  // box terms after zero-mode exclusion
};

// Partial sum over the (N+1)^rank label box minus the zero mode, plus a
// geometric tail bound with an empirical prefactor calibrated on the box.
ZetaValue zeta_truncated(const ZetaSeries& series, const Rat& s, long N);

// Empirical divergence check: partial sums at N0, 2 N0 and 4 N0 diverge when
// the box-to-box increments stop decaying.
bool detect_divergence_raw(const ZetaSeries& series, const Rat& s, long N0 = 25);

enum class AbscissaMode { Exact, RawGrowth };

// Bisection for the abscissa of convergence. The bracket must straddle:
// the series diverges at s_lo and converges at s_hi.
Rat estimate_abscissa(const ZetaSeries& series, Rat s_lo, Rat s_hi, const Rat& tol,
                      AbscissaMode mode = AbscissaMode::Exact, long raw_N0 = 25);

}  // namespace qzeta
