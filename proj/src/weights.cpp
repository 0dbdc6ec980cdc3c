#include "qzeta/weights.hpp"

#include <set>

namespace qzeta {

mpz_class classical_dim(const RootSystem& rs, const Weight& highest) {
    if (!rs.on_weight_lattice(highest) || !rs.is_dominant(highest))
        throw std::invalid_argument(rs.name() + ": highest weight must be dominant with integer labels");
    Vec shifted = add(highest, rs.rho());
    Rat dim = 1;
    for (const auto& a : rs.positive_roots()) dim *= dot(shifted, a) / dot(rs.rho(), a);
    if (!is_integer(dim)) throw std::logic_error("Weyl dimension is not an integer");
    return dim.get_num();
}

namespace {

// Non-negative integer coordinates of highest - w in the simple-root basis,
// or empty if w is not below highest in the root lattice.
std::vector<long> depth_coords(const RootSystem& rs, const Weight& highest, const Weight& w) {
    Vec c = rs.expand_in_simple_roots(sub(highest, w));
    std::vector<long> out;
    out.reserve(c.size());
    for (const auto& x : c) {
        if (!is_integer(x) || x < 0) return {};
        out.push_back(x.get_num().get_si());
    }
    return out;
}

}  // namespace

WeightSystem weight_system(const RootSystem& rs, const Weight& highest, std::int64_t dimension_cap) {
    if (!rs.on_weight_lattice(highest) || !rs.is_dominant(highest))
        throw std::invalid_argument(rs.name() + ": highest weight must be dominant with integer labels");
    {
        mpz_class dim = classical_dim(rs, highest);
        if (dim > dimension_cap)
            throw resource_error(rs.name() + ": module dimension " + dim.get_str() +
                                 " exceeds cap " + std::to_string(dimension_cap));
    }

    const int r = rs.rank();
    // Positive roots in the simple-root basis, for staying inside the cone
    // below the highest weight.
    std::vector<std::vector<long>> pos_in_simple;
    for (const auto& a : rs.positive_roots()) {
        Vec c = rs.expand_in_simple_roots(a);
        std::vector<long> ci(r);
        for (int i = 0; i < r; ++i) ci[i] = c[i].get_num().get_si();
        pos_in_simple.push_back(ci);
    }

    const Rat casimir_top = dot(add(highest, rs.rho()), add(highest, rs.rho()));

    WeightSystem ws;
    ws.highest = highest;
    ws.entries[highest] = 1;

    // Layered Freudenthal: weights at height h of highest - w only depend on
    // multiplicities at smaller heights, so a height-layer BFS suffices.
    std::vector<Weight> frontier{highest};

    while (!frontier.empty()) {
        // Candidate children one simple root below the current layer.
        std::set<Weight, VecLess> candidates;
        for (const auto& w : frontier)
            for (int i = 0; i < r; ++i) {
                Weight child = sub(w, rs.simple_roots()[i]);
                if (!ws.entries.count(child)) candidates.insert(child);
            }

        std::vector<Weight> next;
        for (const auto& mu : candidates) {
            std::vector<long> c = depth_coords(rs, highest, mu);
            if (c.empty()) throw std::logic_error("candidate weight left the root cone");
            Rat denom = casimir_top - dot(add(mu, rs.rho()), add(mu, rs.rho()));
            if (denom <= 0) continue;  // weights other than highest satisfy |mu+rho| < |highest+rho|
            Rat sum = 0;
            for (std::size_t ai = 0; ai < pos_in_simple.size(); ++ai) {
                // j ranges while mu + j*alpha stays in the cone below highest.
                long jmax = -1;
                for (int i = 0; i < r; ++i)
                    if (pos_in_simple[ai][i] > 0) {
                        long lim = c[i] / pos_in_simple[ai][i];
                        jmax = (jmax < 0) ? lim : std::min(jmax, lim);
                    }
                Weight up = mu;
                for (long j = 1; j <= jmax; ++j) {
                    up = add(up, rs.positive_roots()[ai]);
                    auto it = ws.entries.find(up);
                    if (it == ws.entries.end()) continue;
                    sum += Rat(2 * it->second) * dot(up, rs.positive_roots()[ai]);
                }
            }
            Rat mult = sum / denom;
            if (!is_integer(mult) || mult < 0)
                throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
            if (mult == 0) continue;
            ws.entries[mu] = mult.get_num().get_si();
            next.push_back(mu);
        }
        frontier = std::move(next);
    }

    return ws;
}

std::vector<std::vector<long>> dominant_labels_box(int rank, long bound) {
    if (bound < 0) throw std::invalid_argument("label bound must be >= 0");
    std::vector<std::vector<long>> out;
    for (LabelBoxIterator it(rank, bound); !it.done(); it.advance()) out.push_back(it.labels());
    return out;
}

std::vector<Weight> enumerate_dominant(const RootSystem& rs, long bound) {
    std::vector<Weight> out;
    for (LabelBoxIterator it(rs.rank(), bound); !it.done(); it.advance())
        out.push_back(rs.weight_from_labels(it.labels()));
    return out;
}

void LabelBoxIterator::advance() {
    for (int i = static_cast<int>(labels_.size()) - 1; i >= 0; --i) {
        if (labels_[i] < bound_) {
            ++labels_[i];
            return;
        }
        labels_[i] = 0;
    }
    done_ = true;
}

}  // namespace qzeta
