#include "qzeta/spectral.hpp"

#include <stdexcept>

namespace qzeta {

namespace {

Rat max_ratio(const std::vector<Rat>& a, const std::vector<Rat>& b, const std::string& what) {
    if (a.empty()) throw std::invalid_argument(what + ": empty coefficient vector");
    Rat best;
    bool first = true;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (b[k] <= 0)
            throw std::invalid_argument(what + ": degenerate representation, b_" +
                                        std::to_string(k + 1) + " is not positive");
        Rat r = a[k] / b[k];
        if (first || r > best) best = r;
        first = false;
    }
    return best;
}

}  // namespace

Rat spectral_dim_group(const RootSystem& rs, const Weight& lambda0, const Rat& t) {
    if (t <= 0) throw std::invalid_argument("t must be positive");
    Vec a = rs.coeffs_against(scale(rs.rho(), Rat(2)));
    Vec b = rs.coeffs_against(lambda0);
    return max_ratio(a, b, rs.name()) / t;
}

Rat spectral_dim_group(const RootSystem& rs, Lambda0Choice lambda0, const Rat& t) {
    return spectral_dim_group(rs, lambda0_weight(rs, lambda0), t);
}

Rat spectral_dim_flag(const FlagSpace& fs, const Weight& lambda0, const Rat& t) {
    if (t <= 0) throw std::invalid_argument("t must be positive");
    SphericalCoeffs sc = spherical_coeffs(fs, lambda0);
    return max_ratio(sc.a_S, sc.b_S, fs.name) / (2 * t);
}

Rat spectral_dim_flag(const FlagSpace& fs, Lambda0Choice lambda0, const Rat& t) {
    return spectral_dim_flag(fs, lambda0_weight(fs.ambient, lambda0), t);
}

Rat spectral_dim_product(const std::vector<ProductFactor>& factors) {
    if (factors.empty()) throw std::invalid_argument("product needs at least one factor");
    Rat p = 0;
    for (const auto& f : factors) {
        RootSystem rs = build_root_system(f.type, f.rank);
        p += spectral_dim_group(rs, f.lambda0, f.t);
    }
    return p;
}

Weight ZetaSeries::Factor::weight_from(const std::vector<long>& labels) const {
    if (fs) return fs->spherical_weight_from_labels(labels);
    return rs->weight_from_labels(labels);
}

void ZetaSeries::add_group_factor(const RootSystem& rs, Lambda0Choice lambda0, const Rat& t) {
    Factor f;
    f.rs = std::make_shared<RootSystem>(rs);
    f.t = t;
    f.cas = std::make_shared<CasimirSpec>(*f.rs, lambda0_weight(*f.rs, lambda0), t);
    Vec a = f.rs->coeffs_against(scale(f.rs->rho(), Rat(2)));
    Vec b = f.rs->coeffs_against(f.cas->lambda0());
    f.a.assign(a.begin(), a.end());
    f.b.assign(b.begin(), b.end());
    f.p = max_ratio(f.a, f.b, f.rs->name()) / t;
    f.rank = f.rs->rank();
    factors_.push_back(std::move(f));
}

void ZetaSeries::finalize() {
    total_rank_ = 0;
    p_sum_ = 0;
    for (const auto& f : factors_) {
        total_rank_ += f.rank;
        p_sum_ += f.p;
    }
}

ZetaSeries ZetaSeries::group(const QContext& ctx, const RootSystem& rs, Lambda0Choice lambda0,
                             const Rat& t) {
    ZetaSeries s;
    s.kind_ = Kind::Group;
    s.ctx_ = &ctx;
    s.add_group_factor(rs, lambda0, t);
    s.finalize();
    return s;
}

ZetaSeries ZetaSeries::flag(const QContext& ctx, const FlagSpace& fs, Lambda0Choice lambda0,
                            const Rat& t) {
    ZetaSeries s;
    s.kind_ = Kind::Flag;
    s.ctx_ = &ctx;
    Factor f;
    f.fs = std::make_shared<FlagSpace>(fs);
    f.rs = std::shared_ptr<const RootSystem>(f.fs, &f.fs->ambient);
    f.t = t;
    f.cas = std::make_shared<CasimirSpec>(*f.rs, lambda0_weight(*f.rs, lambda0), t);
    SphericalCoeffs sc = spherical_coeffs(*f.fs, f.cas->lambda0());
    f.a = sc.a_S;
    f.b = sc.b_S;
    f.p = max_ratio(f.a, f.b, f.fs->name) / (2 * t);
    f.rank = f.fs->num_spherical();
    s.factors_.push_back(std::move(f));
    s.finalize();
    return s;
}

ZetaSeries ZetaSeries::product(const QContext& ctx, const std::vector<ProductFactor>& factors) {
    if (factors.size() < 2) throw std::invalid_argument("product series needs >= 2 factors");
    ZetaSeries s;
    s.kind_ = Kind::Product;
    s.ctx_ = &ctx;
    for (const auto& f : factors) {
        RootSystem rs = build_root_system(f.type, f.rank);
        s.add_group_factor(rs, f.lambda0, f.t);
    }
    s.finalize();
    return s;
}

Rat ZetaSeries::closed_form_dimension() const { return p_sum_; }

Rat ZetaSeries::direction_exponent(int k, const Rat& s) const {
    int idx = k;
    for (const auto& f : factors_) {
        if (idx < f.rank) {
            if (kind_ == Kind::Flag) return 2 * s * f.t * f.b[idx] - f.a[idx];
            // Product directions follow the Hoelder split of the eigenvalue sum
            // with weight u_i = p_i / sum p_j; for a single group factor u = 1.
            Rat u = (kind_ == Kind::Product) ? f.p / p_sum_ : Rat(1);
            return 2 * (s * u * f.t * f.b[idx] - f.a[idx]);
        }
        idx -= f.rank;
    }
    throw std::out_of_range("direction index");
}

bool ZetaSeries::converges(const Rat& s) const {
    for (int k = 0; k < total_rank_; ++k)
        if (direction_exponent(k, s) <= 0) return false;
    return true;
}

Real ZetaSeries::factor_weight(std::size_t factor, const std::vector<long>& labels) const {
    const Factor& f = factors_.at(factor);
    Weight w = f.weight_from(labels);
    Real d = qdim(*ctx_, *f.rs, w);
    return (kind_ == Kind::Flag) ? d : d * d;
}

Real ZetaSeries::term_weight(const std::vector<long>& labels) const {
    Real out(1);
    std::size_t off = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::vector<long> part(labels.begin() + off, labels.begin() + off + factors_[i].rank);
        out *= factor_weight(i, part);
        off += factors_[i].rank;
    }
    return out;
}

Real ZetaSeries::factor_eigenvalue(std::size_t factor, const std::vector<long>& labels) const {
    const Factor& f = factors_.at(factor);
    return f.cas->chi(*ctx_, f.weight_from(labels));
}

Real ZetaSeries::term_eigenvalue(const std::vector<long>& labels) const {
    Real out(0);
    std::size_t off = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::vector<long> part(labels.begin() + off, labels.begin() + off + factors_[i].rank);
        out += factor_eigenvalue(i, part);
        off += factors_[i].rank;
    }
    return out;
}

Real ZetaSeries::term_value(const Rat& s, const std::vector<long>& labels) const {
    Real ev = term_eigenvalue(labels);
    if (!(ev > 0)) throw numeric_error("zeta term has non-positive eigenvalue");
    return term_weight(labels) * exp(-to_real(s) / 2 * log(ev));
}

namespace {

bool all_zero(const std::vector<long>& v) {
    for (long x : v)
        if (x != 0) return false;
    return true;
}

// Memoizes per-factor (weight, eigenvalue) pairs so box sums over products
// cost O(sum of factor boxes) expensive evaluations instead of their product.
class BoxEvaluator {
public:
    explicit BoxEvaluator(const ZetaSeries& series) : series_(series), memo_(series.num_factors()) {}

    // weight and eigenvalue of the full term at `labels`
    std::pair<Real, Real> parts(const std::vector<long>& labels) {
        Real w(1), ev(0);
        std::size_t off = 0;
        for (std::size_t i = 0; i < series_.num_factors(); ++i) {
            const std::size_t r = series_.factor_rank(i);
            std::vector<long> part(labels.begin() + off, labels.begin() + off + r);
            auto it = memo_[i].find(part);
            if (it == memo_[i].end()) {
                Real fw = series_.factor_weight(i, part);
                Real fe = series_.factor_eigenvalue(i, part);
                it = memo_[i].emplace(std::move(part), std::make_pair(fw, fe)).first;
            }
            w *= it->second.first;
            ev += it->second.second;
            off += r;
        }
        return {w, ev};
    }

    Real term(const Rat& s, const std::vector<long>& labels) {
        auto [w, ev] = parts(labels);
        if (!(ev > 0)) throw numeric_error("zeta term has non-positive eigenvalue");
        return w * exp(-to_real(s) / 2 * log(ev));
    }

private:
    const ZetaSeries& series_;
    std::vector<std::map<std::vector<long>, std::pair<Real, Real>>> memo_;
};

}  // namespace

ZetaValue zeta_truncated(const ZetaSeries& series, const Rat& s, long N) {
    if (N < 1) throw std::invalid_argument("truncation box must have N >= 1");
    const QContext& ctx = series.context();
    const int rank = series.rank();

    const bool conv = series.converges(s);
    std::vector<Real> ratios(rank);
    if (conv)
        for (int k = 0; k < rank; ++k) ratios[k] = ctx.q_pow(series.direction_exponent(k, s));

    ZetaValue out;
    out.value = Real(0);
    Real c_emp(0);

    BoxEvaluator eval(series);
    for (LabelBoxIterator it(rank, N); !it.done(); it.advance()) {
        const auto& n = it.labels();
        if (all_zero(n)) continue;  // zero mode excluded
        Real term = eval.term(s, n);
        out.value += term;
        ++out.terms_summed;
        if (conv) {
            Real model(1);
            for (int k = 0; k < rank; ++k)
                model *= ctx.q_pow(series.direction_exponent(k, s) * n[k]);
            Real c = term / model;
            if (c > c_emp) c_emp = c;
        }
    }

    if (!conv) {
        out.tail_finite = false;
        out.tail_bound = Real(0);
        return out;
    }

    // Geometric model of the complement of the box, bounded by the union of
    // the half-spaces {n_k > N}: sum_k r_k^{N+1}/(1-r_k) * prod_{j!=k} 1/(1-r_j).
    // Computed without cancellation so tiny tails survive at any precision.
    // The empirically calibrated prefactor carries a margin of 2.
    Real full(1);
    for (int k = 0; k < rank; ++k) full *= 1 / (1 - ratios[k]);
    Real tail(0);
    for (int k = 0; k < rank; ++k) {
        Real overflow_k = ctx.q_pow(series.direction_exponent(k, s) * (N + 1));
        tail += full * overflow_k;  // full already carries the 1/(1-r_k) factor
    }
    out.tail_finite = true;
    out.tail_bound = 2 * c_emp * tail;
    return out;
}

bool detect_divergence_raw(const ZetaSeries& series, const Rat& s, long N0) {
    BoxEvaluator eval(series);
    auto partial = [&](long N) {
        Real v(0);
        for (LabelBoxIterator it(series.rank(), N); !it.done(); it.advance()) {
            if (all_zero(it.labels())) continue;
            v += eval.term(s, it.labels());
        }
        return v;
    };
    Real v1 = partial(N0);
    Real v2 = partial(2 * N0);
    Real v3 = partial(4 * N0);
    Real d1 = v2 - v1;
    Real d2 = v3 - v2;
    // Increments of a convergent series decay geometrically box over box;
    // non-decaying increments signal divergence.
    return d2 >= d1;
}

Rat estimate_abscissa(const ZetaSeries& series, Rat s_lo, Rat s_hi, const Rat& tol,
                      AbscissaMode mode, long raw_N0) {
    if (!(s_lo < s_hi)) throw std::invalid_argument("abscissa bracket must satisfy s_lo < s_hi");
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    auto converges_at = [&](const Rat& s) {
        if (mode == AbscissaMode::Exact) return series.converges(s);
        return !detect_divergence_raw(series, s, raw_N0);
    };
    if (converges_at(s_lo) || !converges_at(s_hi))
        throw std::invalid_argument("bracket does not straddle the abscissa");
    while (s_hi - s_lo > tol) {
        Rat mid = (s_lo + s_hi) / 2;
        if (converges_at(mid))
            s_hi = mid;
        else
            s_lo = mid;
    }
    return (s_lo + s_hi) / 2;
}

}  // namespace qzeta
