#include "qzeta/rootdata.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qzeta {

std::string lie_type_name(LieType t) {
    switch (t) {
        case LieType::A: return "A";
        case LieType::B: return "B";
        case LieType::C: return "C";
        case LieType::D: return "D";
        case LieType::E6: return "E6";
        case LieType::E7: return "E7";
    }
    throw std::logic_error("unreachable");
}

LieType lie_type_from_name(const std::string& name) {
    if (name == "A") return LieType::A;
    if (name == "B") return LieType::B;
    if (name == "C") return LieType::C;
    if (name == "D") return LieType::D;
    if (name == "E6") return LieType::E6;
    if (name == "E7") return LieType::E7;
    throw std::invalid_argument("unknown Lie type '" + name + "'");
}

std::string RootSystem::name() const {
    if (type_ == LieType::E6 || type_ == LieType::E7) return lie_type_name(type_);
    return lie_type_name(type_) + std::to_string(rank_);
}

namespace {

Vec basis_vec(int dim, int i, Rat c = Rat(1)) {
    Vec v(dim, Rat(0));
    v[i] = c;
    return v;
}

// Half-integer spinor-type vector 1/2 * (signs over coordinates).
Vec half_vec(int dim, const std::vector<int>& signs) {
    Vec v(dim, Rat(0));
    for (int i = 0; i < dim; ++i) v[i] = Rat(signs[i], 2);
    return v;
}

void build_classical(LieType type, int r, int dim, std::vector<Vec>& simple,
                     std::vector<Vec>& positive, Vec& theta) {
    auto e = [&](int i) { return basis_vec(dim, i); };
    switch (type) {
        case LieType::A:
            for (int i = 0; i < r; ++i) simple.push_back(sub(e(i), e(i + 1)));
            for (int i = 0; i < r + 1; ++i)
                for (int j = i + 1; j < r + 1; ++j) positive.push_back(sub(e(i), e(j)));
            theta = sub(e(0), e(r));
            break;
        case LieType::B:
            for (int i = 0; i < r - 1; ++i) simple.push_back(sub(e(i), e(i + 1)));
            simple.push_back(e(r - 1));
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) {
                    positive.push_back(sub(e(i), e(j)));
                    positive.push_back(add(e(i), e(j)));
                }
            for (int i = 0; i < r; ++i) positive.push_back(e(i));
            theta = add(e(0), e(1));
            break;
        case LieType::C:
            for (int i = 0; i < r - 1; ++i) simple.push_back(sub(e(i), e(i + 1)));
            simple.push_back(scale(e(r - 1), Rat(2)));
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) {
                    positive.push_back(sub(e(i), e(j)));
                    positive.push_back(add(e(i), e(j)));
                }
            for (int i = 0; i < r; ++i) positive.push_back(scale(e(i), Rat(2)));
            theta = scale(e(0), Rat(2));
            break;
        case LieType::D:
            for (int i = 0; i < r - 1; ++i) simple.push_back(sub(e(i), e(i + 1)));
            simple.push_back(add(e(r - 2), e(r - 1)));
            for (int i = 0; i < r; ++i)
                for (int j = i + 1; j < r; ++j) {
                    positive.push_back(sub(e(i), e(j)));
                    positive.push_back(add(e(i), e(j)));
                }
            theta = add(e(0), e(1));
            break;
        default:
            throw std::logic_error("build_classical: not a classical type");
    }
}

// E6/E7 in the 8-dimensional ambient space. Spinor-type positive roots are
// generated by sign pattern and validated by count (36 and 63).
void build_exceptional(LieType type, std::vector<Vec>& simple, std::vector<Vec>& positive,
                       Vec& theta) {
    const int dim = 8;
    auto e = [&](int i) { return basis_vec(dim, i); };
    const int chain = (type == LieType::E6) ? 4 : 5;  // chain roots e_{i+1} - e_i
    const int top = (type == LieType::E6) ? 5 : 6;    // e_i +- e_j range for j < i <= top

    // alpha_1 = (e_1 - e_2 - ... - e_7 + e_8)/2, then the chain, then e_1 + e_2 as the
    // branch node attached to node 3.
    simple.push_back(half_vec(dim, {1, -1, -1, -1, -1, -1, -1, 1}));
    for (int i = 0; i < chain; ++i) simple.push_back(sub(e(i + 1), e(i)));
    simple.push_back(add(e(0), e(1)));

    for (int i = 1; i < top; ++i)
        for (int j = 0; j < i; ++j) {
            positive.push_back(sub(e(i), e(j)));
            positive.push_back(add(e(i), e(j)));
        }
    if (type == LieType::E6) {
        // (+-e_1 ... +-e_5 - e_6 - e_7 + e_8)/2 with an even number of minus signs
        // among the first five.
        for (int mask = 0; mask < 32; ++mask) {
            if (__builtin_popcount(mask) % 2 != 0) continue;
            std::vector<int> s(8, 0);
            for (int i = 0; i < 5; ++i) s[i] = (mask >> i & 1) ? -1 : 1;
            s[5] = s[6] = -1;
            s[7] = 1;
            positive.push_back(half_vec(dim, s));
        }
        theta = half_vec(dim, {1, 1, 1, 1, 1, -1, -1, 1});
    } else {
        // (+-e_1 ... +-e_6 - e_7 + e_8)/2 with an odd number of minus signs among
        // the first six, plus e_8 - e_7.
        for (int mask = 0; mask < 64; ++mask) {
            if (__builtin_popcount(mask) % 2 != 1) continue;
            std::vector<int> s(8, 0);
            for (int i = 0; i < 6; ++i) s[i] = (mask >> i & 1) ? -1 : 1;
            s[6] = -1;
            s[7] = 1;
            positive.push_back(half_vec(dim, s));
        }
        positive.push_back(sub(e(7), e(6)));
        theta = sub(e(7), e(6));
    }
}

std::size_t expected_positive_count(LieType type, int r) {
    switch (type) {
        case LieType::A: return std::size_t(r) * (r + 1) / 2;
        case LieType::B:
        case LieType::C: return std::size_t(r) * r;
        case LieType::D: return std::size_t(r) * (r - 1);
        case LieType::E6: return 36;
        case LieType::E7: return 63;
    }
    throw std::logic_error("unreachable");
}

}  // namespace

Vec RootSystem::dynkin_labels(const Weight& w) const {
    Vec labels(rank_);
    for (int i = 0; i < rank_; ++i) labels[i] = dot(w, simple_roots_[i]) / half_norms_[i];
    return labels;
}

Weight RootSystem::weight_from_labels(const Vec& labels) const {
    if (static_cast<int>(labels.size()) != rank_)
        throw std::invalid_argument(name() + ": expected " + std::to_string(rank_) +
                                    " labels, got " + std::to_string(labels.size()));
    Weight w = zero_vec(ambient_dim_);
    for (int i = 0; i < rank_; ++i) w = add(w, scale(fundamental_weights_[i], labels[i]));
    return w;
}

Weight RootSystem::weight_from_labels(const std::vector<long>& labels) const {
    Vec l(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) l[i] = Rat(labels[i]);
    return weight_from_labels(l);
}

Vec RootSystem::expand_in_simple_roots(const Vec& v) const {
    // Solve via the Gram matrix: (v, alpha_j) = sum_i x_i (alpha_i, alpha_j).
    std::vector<Rat> rhs(rank_);
    for (int j = 0; j < rank_; ++j) rhs[j] = dot(v, simple_roots_[j]);
    Vec x = solve_linear(gram_, rhs);
    // Reject vectors outside the root span.
    Vec recon = zero_vec(ambient_dim_);
    for (int i = 0; i < rank_; ++i) recon = add(recon, scale(simple_roots_[i], x[i]));
    if (recon != v) throw std::invalid_argument("vector is not in the span of the simple roots");
    return x;
}

bool RootSystem::is_dominant(const Weight& w) const {
    for (const auto& l : dynkin_labels(w))
        if (l < 0) return false;
    return true;
}

bool RootSystem::on_weight_lattice(const Weight& w) const {
    for (const auto& l : dynkin_labels(w))
        if (!is_integer(l)) return false;
    return true;
}

Vec RootSystem::coeffs_against(const Weight& target) const {
    check_same_dim(target, rho_);
    Vec c(rank_);
    for (int i = 0; i < rank_; ++i) c[i] = dot(fundamental_weights_[i], target);
    return c;
}

Weight RootSystem::fundamental_rep_weight() const {
    if (type_ == LieType::E7) return fundamental_weights_[5];  // omega_6
    return fundamental_weights_[0];
}

RootSystem build_root_system(LieType type, int rank) {
    int r = rank;
    switch (type) {
        case LieType::A:
            if (r < 1) throw std::invalid_argument("A_r requires r >= 1");
            break;
        case LieType::B:
            if (r < 2) throw std::invalid_argument("B_r requires r >= 2");
            break;
        case LieType::C:
            if (r < 2) throw std::invalid_argument("C_r requires r >= 2");
            break;
        case LieType::D:
            if (r < 3) throw std::invalid_argument("D_r requires r >= 3");
            break;
        case LieType::E6:
            if (r != 0 && r != 6) throw std::invalid_argument("E6 has fixed rank 6");
            r = 6;
            break;
        case LieType::E7:
            if (r != 0 && r != 7) throw std::invalid_argument("E7 has fixed rank 7");
            r = 7;
            break;
    }

    RootSystem rs;
    rs.type_ = type;
    rs.rank_ = r;
    switch (type) {
        case LieType::A: rs.ambient_dim_ = r + 1; break;
        case LieType::E6:
        case LieType::E7: rs.ambient_dim_ = 8; break;
        default: rs.ambient_dim_ = r; break;
    }

    if (type == LieType::E6 || type == LieType::E7)
        build_exceptional(type, rs.simple_roots_, rs.positive_roots_, rs.theta_);
    else
        build_classical(type, r, rs.ambient_dim_, rs.simple_roots_, rs.positive_roots_, rs.theta_);

    if (rs.positive_roots_.size() != expected_positive_count(type, r))
        throw std::logic_error(rs.name() + ": positive root count mismatch");

    rs.half_norms_.resize(r);
    rs.gram_.assign(r, std::vector<Rat>(r));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) rs.gram_[i][j] = dot(rs.simple_roots_[i], rs.simple_roots_[j]);
        rs.half_norms_[i] = rs.gram_[i][i] / 2;
    }

    rs.cartan_matrix_.assign(r, std::vector<long>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rat a = rs.gram_[i][j] / rs.half_norms_[j];
            if (!is_integer(a)) throw std::logic_error(rs.name() + ": non-integer Cartan entry");
            rs.cartan_matrix_[i][j] = a.get_num().get_si();
        }

    // omega_i = sum_m x_m alpha_m with (omega_i, alpha_j) = delta_ij d_i.
    rs.fundamental_weights_.resize(r);
    for (int i = 0; i < r; ++i) {
        std::vector<Rat> rhs(r, Rat(0));
        rhs[i] = rs.half_norms_[i];
        Vec x = solve_linear(rs.gram_, rhs);
        Vec w = zero_vec(rs.ambient_dim_);
        for (int m = 0; m < r; ++m) w = add(w, scale(rs.simple_roots_[m], x[m]));
        rs.fundamental_weights_[i] = w;
    }

    Vec half_sum = zero_vec(rs.ambient_dim_);
    for (const auto& a : rs.positive_roots_) half_sum = add(half_sum, a);
    half_sum = scale(half_sum, Rat(1, 2));
    Vec weight_sum = zero_vec(rs.ambient_dim_);
    for (const auto& w : rs.fundamental_weights_) weight_sum = add(weight_sum, w);
    if (half_sum != weight_sum)
        throw std::logic_error(rs.name() + ": rho mismatch between half-sum and weight sum");
    rs.rho_ = half_sum;

    // theta must be a positive root dominating every positive root.
    if (std::find(rs.positive_roots_.begin(), rs.positive_roots_.end(), rs.theta_) ==
        rs.positive_roots_.end())
        throw std::logic_error(rs.name() + ": theta is not a positive root");
    for (const auto& a : rs.positive_roots_) {
        Vec diff = rs.expand_in_simple_roots(sub(rs.theta_, a));
        for (const auto& c : diff)
            if (c < 0 || !is_integer(c))
                throw std::logic_error(rs.name() + ": theta does not dominate a positive root");
    }

    return rs;
}

}  // namespace qzeta
