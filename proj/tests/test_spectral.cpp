#include <doctest.h>

#include "qzeta/spectral.hpp"

using namespace qzeta;

TEST_CASE("group spectral dimension closed forms") {
    RootSystem a1 = build_root_system(LieType::A, 1);
    CHECK(spectral_dim_group(a1, Lambda0Choice::Fundamental, Rat(1)) == Rat(2));

    // C_r with the adjoint representation: a_k = k(2r+1-k), b_k = 2, so the
    // maximum sits at k = r and p = r(r+1)/(2t).
    for (int r = 2; r <= 6; ++r) {
        RootSystem cr = build_root_system(LieType::C, r);
        for (const Rat& t : {Rat(1, 4), Rat(1, 2), Rat(1)})
            CHECK(spectral_dim_group(cr, Lambda0Choice::Adjoint, t) ==
                  Rat(long(r) * (r + 1)) / (2 * t));
    }

    // doubling t halves p
    RootSystem b3 = build_root_system(LieType::B, 3);
    for (auto choice : {Lambda0Choice::Fundamental, Lambda0Choice::Adjoint}) {
        Rat p1 = spectral_dim_group(b3, choice, Rat(1, 2));
        Rat p2 = spectral_dim_group(b3, choice, Rat(1));
        CHECK(p1 == 2 * p2);
    }

    CHECK_THROWS_AS(spectral_dim_group(a1, Lambda0Choice::Fundamental, Rat(0)),
                    std::invalid_argument);
    // a zero Lambda_0 pairs to zero with every fundamental weight
    CHECK_THROWS_AS(spectral_dim_group(a1, zero_vec(2), Rat(1)), std::invalid_argument);
}

TEST_CASE("flag spectral dimension closed forms") {
    for (const FlagSpace& fs : default_catalog()) {
        CAPTURE(fs.name);
        for (const Rat& t : {Rat(1, 4), Rat(1, 2), Rat(1)}) {
            CHECK(spectral_dim_flag(fs, Lambda0Choice::Adjoint, t) ==
                  Rat(fs.classical_dim) / (4 * t));
        }
        CHECK(spectral_dim_flag(fs, Lambda0Choice::Adjoint, Rat(1, 4)) ==
              Rat(fs.classical_dim));
        CHECK(spectral_dim_flag(fs, Lambda0Choice::Adjoint, Rat(1, 2)) ==
              Rat(fs.classical_dim) / 2);
        if (fs.family == FlagFamily::AIII || fs.family == FlagFamily::CI ||
            fs.family == FlagFamily::DIII)
            for (const Rat& t : {Rat(1, 4), Rat(1)})
                CHECK(spectral_dim_flag(fs, Lambda0Choice::Fundamental, t) ==
                      Rat(fs.classical_dim) / (2 * t));
    }
}

TEST_CASE("product spectral dimension") {
    std::vector<ProductFactor> aa{{LieType::A, 1, Lambda0Choice::Fundamental, Rat(1)},
                                  {LieType::A, 1, Lambda0Choice::Fundamental, Rat(1)}};
    CHECK(spectral_dim_product(aa) == Rat(4));

    std::vector<ProductFactor> single{{LieType::B, 2, Lambda0Choice::Adjoint, Rat(1, 2)}};
    RootSystem b2 = build_root_system(LieType::B, 2);
    CHECK(spectral_dim_product(single) ==
          spectral_dim_group(b2, Lambda0Choice::Adjoint, Rat(1, 2)));

    std::vector<ProductFactor> mixed{{LieType::A, 2, Lambda0Choice::Adjoint, Rat(1)},
                                     {LieType::C, 2, Lambda0Choice::Fundamental, Rat(1, 2)}};
    std::vector<ProductFactor> swapped{mixed[1], mixed[0]};
    CHECK(spectral_dim_product(mixed) == spectral_dim_product(swapped));
    CHECK_THROWS_AS(spectral_dim_product({}), std::invalid_argument);
}

TEST_CASE("series construction and term structure") {
    QContext ctx("0.5");
    RootSystem a1 = build_root_system(LieType::A, 1);
    ZetaSeries g = ZetaSeries::group(ctx, a1, Lambda0Choice::Fundamental, Rat(1));
    CHECK(g.rank() == 1);
    CHECK(g.closed_form_dimension() == Rat(2));

    // group terms carry the squared quantum dimension
    CasimirSpec spec(a1, a1.fundamental_weights()[0], Rat(1));
    for (long n : {1L, 4L}) {
        Weight lam = scale(a1.fundamental_weights()[0], Rat(n));
        Real d = qdim(ctx, a1, lam);
        CHECK(abs(g.term_weight({n}) - d * d) < Real("1e-40") * d * d);
        Real ev = spec.chi(ctx, lam);
        CHECK(abs(g.term_eigenvalue({n}) - ev) < Real("1e-40") * ev);
        Real expect = d * d * exp(Real(-2) * log(ev));
        CHECK(abs(g.term_value(Rat(4), {n}) - expect) < Real("1e-40") * expect);
    }

    // flag terms carry the first power: compare AIII(2,1) against the ambient
    // A_2 group series on the same weights
    FlagSpace cp2 = build_flag(FlagFamily::AIII, {.p = 2, .q = 1});
    ZetaSeries f = ZetaSeries::flag(ctx, cp2, Lambda0Choice::Adjoint, Rat(1, 4));
    ZetaSeries g2 = ZetaSeries::group(ctx, cp2.ambient, Lambda0Choice::Adjoint, Rat(1, 4));
    CHECK(f.rank() == 1);
    for (long m : {1L, 3L}) {
        Weight lam = cp2.spherical_weight_from_labels({m});
        Real d = qdim(ctx, cp2.ambient, lam);
        CHECK(abs(f.term_weight({m}) - d) < Real("1e-40") * d);
        // mu_1 = omega_1 + omega_2, so the same module sits at group labels (m, m)
        Real w_group = g2.term_weight({m, m});
        CHECK(abs(w_group - d * d) < Real("1e-40") * (d * d));
        Real ev_flag = f.term_eigenvalue({m});
        Real ev_group = g2.term_eigenvalue({m, m});
        CHECK(abs(ev_flag - ev_group) < Real("1e-40") * ev_group);
    }
}

TEST_CASE("product term weights factor") {
    QContext ctx("0.5");
    std::vector<ProductFactor> aa{{LieType::A, 1, Lambda0Choice::Fundamental, Rat(1)},
                                  {LieType::A, 1, Lambda0Choice::Fundamental, Rat(1)}};
    ZetaSeries prod = ZetaSeries::product(ctx, aa);
    CHECK(prod.rank() == 2);
    CHECK(prod.closed_form_dimension() == Rat(4));
    for (auto [n1, n2] : {std::pair{1L, 2L}, {3L, 1L}}) {
        Real w = prod.term_weight({n1, n2});
        Real w1 = prod.factor_weight(0, {n1});
        Real w2 = prod.factor_weight(1, {n2});
        CHECK(abs(w - w1 * w2) < Real("1e-40") * w);
        Real ev = prod.term_eigenvalue({n1, n2});
        Real e1 = prod.factor_eigenvalue(0, {n1});
        Real e2 = prod.factor_eigenvalue(1, {n2});
        CHECK(abs(ev - (e1 + e2)) < Real("1e-40") * ev);
    }
}

TEST_CASE("exact convergence predicate matches the closed form") {
    QContext ctx("0.5");
    RootSystem a1 = build_root_system(LieType::A, 1);
    ZetaSeries g = ZetaSeries::group(ctx, a1, Lambda0Choice::Fundamental, Rat(1));
    CHECK(g.converges(Rat(21, 10)));
    CHECK_FALSE(g.converges(Rat(2)));       // boundary diverges
    CHECK_FALSE(g.converges(Rat(19, 10)));

    FlagSpace ci2 = build_flag(FlagFamily::CI, {.r = 2});
    ZetaSeries f = ZetaSeries::flag(ctx, ci2, Lambda0Choice::Adjoint, Rat(1, 4));
    CHECK(f.closed_form_dimension() == Rat(6));
    CHECK(f.converges(Rat(61, 10)));
    CHECK_FALSE(f.converges(Rat(6)));
}

TEST_CASE("zeta truncation: tail bound and monotonicity on A_1") {
    QContext ctx("0.5");
    RootSystem a1 = build_root_system(LieType::A, 1);
    ZetaSeries g = ZetaSeries::group(ctx, a1, Lambda0Choice::Fundamental, Rat(1));

    ZetaValue v40 = zeta_truncated(g, Rat(4), 40);  // s = 2p
    CHECK(v40.tail_finite);
    CHECK(v40.tail_bound < Real("1e-6") * v40.value);
    CHECK(v40.terms_summed == 40);

    // monotone in N, and the next box stays within the previous tail bound
    ZetaValue v80 = zeta_truncated(g, Rat(4), 80);
    CHECK(v80.value >= v40.value);
    CHECK(v80.value - v40.value <= v40.tail_bound);

    ZetaValue below = zeta_truncated(g, Rat(3, 2), 10);  // s < p
    CHECK_FALSE(below.tail_finite);
}

TEST_CASE("zeta truncation stabilizes on the AIII(2,1) flag series") {
    QContext ctx("0.5");
    FlagSpace cp2 = build_flag(FlagFamily::AIII, {.p = 2, .q = 1});
    ZetaSeries f = ZetaSeries::flag(ctx, cp2, Lambda0Choice::Adjoint, Rat(1, 4));
    ZetaValue v60 = zeta_truncated(f, Rat(8), 60);
    ZetaValue v120 = zeta_truncated(f, Rat(8), 120);
    CHECK(v60.tail_finite);
    CHECK(abs(v120.value - v60.value) < Real("1e-10") * v60.value);
    CHECK(abs(v120.value - v60.value) <= v60.tail_bound);
}

TEST_CASE("abscissa estimation, exact predicate") {
    QContext ctx("0.5");
    RootSystem a1 = build_root_system(LieType::A, 1);
    ZetaSeries g = ZetaSeries::group(ctx, a1, Lambda0Choice::Fundamental, Rat(1));
    Rat est = estimate_abscissa(g, Rat(1, 2), Rat(4), Rat(1, 1000));
    CHECK(abs(est - Rat(2)) <= Rat(1, 1000));

    FlagSpace cp2 = build_flag(FlagFamily::AIII, {.p = 2, .q = 1});
    ZetaSeries f = ZetaSeries::flag(ctx, cp2, Lambda0Choice::Adjoint, Rat(1, 4));
    est = estimate_abscissa(f, Rat(1), Rat(8), Rat(1, 1000));
    CHECK(abs(est - Rat(4)) <= Rat(1, 1000));

    std::vector<ProductFactor> aa{{LieType::A, 1, Lambda0Choice::Fundamental, Rat(1)},
                                  {LieType::A, 1, Lambda0Choice::Fundamental, Rat(1)}};
    ZetaSeries prod = ZetaSeries::product(ctx, aa);
    est = estimate_abscissa(prod, Rat(1), Rat(8), Rat(1, 1000));
    CHECK(abs(est - Rat(4)) <= Rat(1, 1000));

    CHECK_THROWS_AS(estimate_abscissa(g, Rat(3), Rat(8), Rat(1, 1000)), std::invalid_argument);
    CHECK_THROWS_AS(estimate_abscissa(g, Rat(1, 2), Rat(1), Rat(1, 1000)), std::invalid_argument);
}

TEST_CASE("abscissa agrees with closed forms across the small catalog") {
    QContext ctx("0.5");
    for (const FlagSpace& fs : default_catalog()) {
        if (fs.num_spherical() > 3 || fs.ambient.rank() > 3) continue;
        CAPTURE(fs.name);
        for (const Rat& t : {Rat(1, 4), Rat(1, 2), Rat(1)}) {
            ZetaSeries f = ZetaSeries::flag(ctx, fs, Lambda0Choice::Adjoint, t);
            Rat p = f.closed_form_dimension();
            Rat est = estimate_abscissa(f, p / 2, 2 * p, Rat(1, 1000));
            CHECK(abs(est - p) <= Rat(1, 1000));
        }
    }
}

TEST_CASE("raw growth detection agrees with the exact predicate on the product") {
    QContext ctx("0.5");
    std::vector<ProductFactor> aa{{LieType::A, 1, Lambda0Choice::Fundamental, Rat(1)},
                                  {LieType::A, 1, Lambda0Choice::Fundamental, Rat(1)}};
    ZetaSeries prod = ZetaSeries::product(ctx, aa);
    CHECK(detect_divergence_raw(prod, Rat(39, 10), 25));
    CHECK_FALSE(detect_divergence_raw(prod, Rat(41, 10), 25));
    CHECK_FALSE(prod.converges(Rat(39, 10)));
    CHECK(prod.converges(Rat(41, 10)));
}
