#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qzeta {

// Exact rational scalar and coordinate vector. All weight/root coordinates in
// the library are exact; floating point only enters in the q-evaluation layer.
using Rat = mpq_class;
using Vec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p" or "p/q". Used by the CLI for --t and custom labels.
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("cannot parse rational '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline void check_same_dim(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("ambient dimension mismatch: " +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
}

inline Rat dot(const Vec& a, const Vec& b) {
    check_same_dim(a, b);
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    check_same_dim(a, b);
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Vec sub(const Vec& a, const Vec& b) {
    check_same_dim(a, b);
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline Vec scale(const Vec& a, const Rat& c) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

inline bool is_zero(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Exact lexicographic order; usable as a std::map comparator for weights.
struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            int c = cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
};

// Solves the square system M x = rhs by Gaussian elimination over Q.
// Throws if M is singular.
inline std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> M, std::vector<Rat> rhs) {
    const std::size_t n = M.size();
    if (rhs.size() != n) throw std::invalid_argument("solve_linear: size mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("solve_linear: singular matrix");
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || M[row][col] == 0) continue;
            Rat f = M[row][col] / M[col][col];
            for (std::size_t k = col; k < n; ++k) M[row][k] -= f * M[col][k];
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / M[i][i];
    return x;
}

}  // namespace qzeta
