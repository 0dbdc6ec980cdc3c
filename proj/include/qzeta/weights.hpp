#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "qzeta/rootdata.hpp"

namespace qzeta {

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Weights of an irreducible module V(highest) with their multiplicities,
// keyed by exact ambient coordinates. Immutable once built.
struct WeightSystem {
    Weight highest;
    std::map<Weight, std::int64_t, VecLess> entries;

    std::int64_t total_multiplicity() const {
        std::int64_t t = 0;
        for (const auto& [w, m] : entries) t += m;
        return t;
    }
    std::int64_t multiplicity(const Weight& w) const {
        auto it = entries.find(w);
        return it == entries.end() ? 0 : it->second;
    }
};

inline constexpr std::int64_t kDefaultDimensionCap = 1'000'000;

// Weyl dimension formula, prod (highest+rho, a) / (rho, a) over positive roots.
// Exact; throws std::invalid_argument unless highest is dominant on the lattice.
mpz_class classical_dim(const RootSystem& rs, const Weight& highest);

// Full weight multiset of V(highest) via the Freudenthal recursion, processed
// by increasing height of highest - weight. Throws resource_error when the
// classical dimension exceeds the cap.
WeightSystem weight_system(const RootSystem& rs, const Weight& highest,
                           std::int64_t dimension_cap = kDefaultDimensionCap);

// All label vectors (n_1..n_r) with 0 <= n_k <= bound, in lexicographic order
// with n_1 most significant. Rank and bound stay desk-scale so materializing
// the list is fine.
std::vector<std::vector<long>> dominant_labels_box(int rank, long bound);

// The same box as weights sum n_k omega_k, in the same order.
std::vector<Weight> enumerate_dominant(const RootSystem& rs, long bound);

// Incremental odometer over the same box for callers that do not want the
// whole list at once.
class LabelBoxIterator {
public:
    LabelBoxIterator(int rank, long bound) : bound_(bound), labels_(rank, 0), done_(rank == 0) {}
    bool done() const { return done_; }
    const std::vector<long>& labels() const { return labels_; }
    void advance();

private:
    long bound_;
    std::vector<long> labels_;
    bool done_;
};

}  // namespace qzeta
