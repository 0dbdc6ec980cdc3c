#include <doctest.h>

#include "qzeta/closed_forms.hpp"
#include "qzeta/rootdata.hpp"

using namespace qzeta;

namespace {

std::vector<std::pair<LieType, int>> full_grid() {
    std::vector<std::pair<LieType, int>> g;
    for (int r = 1; r <= 8; ++r) g.emplace_back(LieType::A, r);
    for (int r = 2; r <= 8; ++r) g.emplace_back(LieType::B, r);
    for (int r = 2; r <= 8; ++r) g.emplace_back(LieType::C, r);
    for (int r = 3; r <= 8; ++r) g.emplace_back(LieType::D, r);
    g.emplace_back(LieType::E6, 6);
    g.emplace_back(LieType::E7, 7);
    return g;
}

long expected_positive_count(LieType t, int r) {
    switch (t) {
        case LieType::A: return long(r) * (r + 1) / 2;
        case LieType::B:
        case LieType::C: return long(r) * r;
        case LieType::D: return long(r) * (r - 1);
        case LieType::E6: return 36;
        case LieType::E7: return 63;
    }
    return -1;
}

// Standard Cartan matrix assembled from the Dynkin diagram of the type.
std::vector<std::vector<long>> expected_cartan(LieType t, int r) {
    std::vector<std::vector<long>> m(r, std::vector<long>(r, 0));
    for (int i = 0; i < r; ++i) m[i][i] = 2;
    auto bond = [&](int i, int j) { m[i][j] = m[j][i] = -1; };
    switch (t) {
        case LieType::A:
            for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
            break;
        case LieType::B:
            for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
            m[r - 2][r - 1] = -2;  // a_ij = 2(a_i,a_j)/(a_j,a_j), alpha_r short
            break;
        case LieType::C:
            for (int i = 0; i + 1 < r; ++i) bond(i, i + 1);
            m[r - 1][r - 2] = -2;
            break;
        case LieType::D:
            for (int i = 0; i + 1 < r - 1; ++i) bond(i, i + 1);
            bond(r - 3, r - 1);
            break;
        case LieType::E6:
            for (int i = 0; i < 4; ++i) bond(i, i + 1);
            bond(2, 5);
            break;
        case LieType::E7:
            for (int i = 0; i < 5; ++i) bond(i, i + 1);
            bond(2, 6);
            break;
    }
    return m;
}

}  // namespace

TEST_CASE("structural invariants across the full type grid") {
    for (auto [type, r] : full_grid()) {
        RootSystem rs = build_root_system(type, r);
        CAPTURE(rs.name());

        CHECK(rs.positive_roots().size() == std::size_t(expected_positive_count(type, r)));
        CHECK(rs.cartan_matrix() == expected_cartan(type, r));

        // (omega_i, alpha_j^vee) = delta_ij
        for (int i = 0; i < r; ++i) {
            Vec labels = rs.dynkin_labels(rs.fundamental_weights()[i]);
            for (int j = 0; j < r; ++j) CHECK(labels[j] == Rat(i == j ? 1 : 0));
        }

        // sum of positive roots equals 2 rho (rho itself is cross-checked at build)
        Vec sum = zero_vec(rs.ambient_dim());
        for (const auto& a : rs.positive_roots()) sum = add(sum, a);
        CHECK(sum == scale(rs.rho(), Rat(2)));

        // every positive root is a non-negative integer combination of simple roots
        for (const auto& a : rs.positive_roots()) {
            Vec c = rs.expand_in_simple_roots(a);
            for (const auto& x : c) {
                CHECK(is_integer(x));
                CHECK(x >= 0);
            }
        }

        // short roots have squared length 2 for the simply-laced types and C_r;
        // the B_r tables put the short roots at squared length 1 instead.
        Rat min_len;
        bool first = true;
        for (const auto& a : rs.positive_roots()) {
            Rat len = dot(a, a);
            if (first || len < min_len) min_len = len;
            first = false;
        }
        CHECK(min_len == (type == LieType::B ? Rat(1) : Rat(2)));

        // theta is dominant and its squared length is 2 except for C_r
        CHECK(rs.is_dominant(rs.theta()));
        CHECK(dot(rs.theta(), rs.theta()) == (type == LieType::C ? Rat(4) : Rat(2)));
    }
}

TEST_CASE("A_2 simple and positive roots") {
    RootSystem rs = build_root_system(LieType::A, 2);
    CHECK(rs.ambient_dim() == 3);
    CHECK(rs.simple_roots()[0] == Vec{Rat(1), Rat(-1), Rat(0)});
    CHECK(rs.simple_roots()[1] == Vec{Rat(0), Rat(1), Rat(-1)});
    CHECK(rs.positive_roots().size() == 3);
}

TEST_CASE("C_2 and E6 highest roots") {
    RootSystem c2 = build_root_system(LieType::C, 2);
    CHECK(c2.theta() == Vec{Rat(2), Rat(0)});
    CHECK(dot(c2.theta(), c2.theta()) == Rat(4));

    RootSystem e6 = build_root_system(LieType::E6, 6);
    Vec expected{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2),
                 Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(1, 2)};
    CHECK(e6.theta() == expected);
    CHECK(dot(e6.theta(), e6.theta()) == Rat(2));
}

TEST_CASE("invalid ranks are rejected") {
    CHECK_THROWS_AS(build_root_system(LieType::A, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(LieType::B, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(LieType::C, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(LieType::D, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system(LieType::E6, 5), std::invalid_argument);
}

TEST_CASE("B_2 and D_3 are valid low-rank aliases") {
    CHECK(build_root_system(LieType::B, 2).positive_roots().size() == 4);
    CHECK(build_root_system(LieType::D, 3).positive_roots().size() == 6);
}

TEST_CASE("inner products") {
    RootSystem a1 = build_root_system(LieType::A, 1);
    Weight w1 = a1.fundamental_weights()[0];
    CHECK(inner(w1, w1) == Rat(1, 2));
    CHECK(inner(zero_vec(2), w1) == 0);
    CHECK_THROWS_AS(inner(w1, zero_vec(3)), std::invalid_argument);

    // (Lambda, theta) = sum n_k on A_r
    RootSystem a3 = build_root_system(LieType::A, 3);
    Weight lam = a3.weight_from_labels(std::vector<long>{2, 5, 1});
    CHECK(inner(lam, a3.theta()) == Rat(8));
}

TEST_CASE("coeffs_against reproduces the spot values") {
    RootSystem a3 = build_root_system(LieType::A, 3);
    CHECK(a3.coeffs_against(scale(a3.rho(), Rat(2))) == Vec{Rat(3), Rat(4), Rat(3)});

    RootSystem e6 = build_root_system(LieType::E6, 6);
    CHECK(e6.coeffs_against(scale(e6.rho(), Rat(2))) ==
          Vec{Rat(16), Rat(30), Rat(42), Rat(30), Rat(16), Rat(22)});

    RootSystem a2 = build_root_system(LieType::A, 2);
    CHECK(a2.coeffs_against(a2.fundamental_rep_weight()) == Vec{Rat(2, 3), Rat(1, 3)});
}

TEST_CASE("coefficient tables match the closed forms on the full grid") {
    for (auto [type, r] : full_grid()) {
        RootSystem rs = build_root_system(type, r);
        CAPTURE(rs.name());
        CHECK(rs.coeffs_against(scale(rs.rho(), Rat(2))) ==
              closed_forms::weyl_vector_pairing(type, r));
        CHECK(rs.coeffs_against(rs.fundamental_rep_weight()) ==
              closed_forms::fundamental_pairing(type, r));
        CHECK(rs.coeffs_against(rs.theta()) == closed_forms::adjoint_pairing(type, r));
    }
}

TEST_CASE("label round trip is the identity on the weight lattice") {
    for (auto [type, r] : {std::pair{LieType::B, 3}, {LieType::D, 4}, {LieType::E6, 6}}) {
        RootSystem rs = build_root_system(type, r);
        std::vector<long> labels(r);
        for (int i = 0; i < r; ++i) labels[i] = (i * 7 + 3) % 5;
        Weight w = rs.weight_from_labels(labels);
        Vec back = rs.dynkin_labels(w);
        for (int i = 0; i < r; ++i) CHECK(back[i] == Rat(labels[i]));
        CHECK(rs.on_weight_lattice(w));
        CHECK(rs.is_dominant(w));
    }
}
