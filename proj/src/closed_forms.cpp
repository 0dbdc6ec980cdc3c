#include "qzeta/closed_forms.hpp"

#include <stdexcept>

namespace qzeta::closed_forms {

namespace {

std::vector<Rat> from_longs(std::initializer_list<long> xs) {
    std::vector<Rat> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

std::vector<Rat> weyl_vector_pairing(LieType type, int rank) {
    const long r = rank;
    std::vector<Rat> c;
    switch (type) {
        case LieType::A:
            for (long k = 1; k <= r; ++k) c.emplace_back(k * (r + 1 - k));
            return c;
        case LieType::B:
            for (long k = 1; k <= r - 1; ++k) c.emplace_back(k * (2 * r - k));
            c.push_back(rat(r * r, 2));
            return c;
        case LieType::C:
            for (long k = 1; k <= r; ++k) c.emplace_back(k * (2 * r + 1 - k));
            return c;
        case LieType::D:
            for (long k = 1; k <= r - 2; ++k) c.emplace_back(k * (2 * r - 1 - k));
            c.push_back(rat(r * (r - 1), 2));
            c.push_back(rat(r * (r - 1), 2));
            return c;
        case LieType::E6: return from_longs({16, 30, 42, 30, 16, 22});
        case LieType::E7: return from_longs({34, 66, 96, 75, 52, 27, 49});
    }
    throw std::logic_error("unreachable");
}

std::vector<Rat> fundamental_pairing(LieType type, int rank) {
    const long r = rank;
    std::vector<Rat> c;
    switch (type) {
        case LieType::A:
            for (long k = 1; k <= r; ++k) c.push_back(rat(r + 1 - k, r + 1));
            return c;
        case LieType::B:
            for (long k = 1; k <= r - 1; ++k) c.emplace_back(1);
            c.emplace_back(Rat(1, 2));
            return c;
        case LieType::C:
            for (long k = 1; k <= r; ++k) c.emplace_back(1);
            return c;
        case LieType::D:
            for (long k = 1; k <= r - 2; ++k) c.emplace_back(1);
            c.emplace_back(Rat(1, 2));
            c.emplace_back(Rat(1, 2));
            return c;
        case LieType::E6:
            return {Rat(4, 3), Rat(5, 3), Rat(2), Rat(4, 3), Rat(2, 3), Rat(1)};
        case LieType::E7:
            return {Rat(1), Rat(2), Rat(3), Rat(5, 2), Rat(2), Rat(3, 2), Rat(3, 2)};
    }
    throw std::logic_error("unreachable");
}

std::vector<Rat> adjoint_pairing(LieType type, int rank) {
    const long r = rank;
    std::vector<Rat> c;
    switch (type) {
        case LieType::A:
            for (long k = 1; k <= r; ++k) c.emplace_back(1);
            return c;
        case LieType::B:
            c.emplace_back(1);
            for (long k = 2; k <= r - 1; ++k) c.emplace_back(2);
            c.emplace_back(1);
            return c;
        case LieType::C:
            for (long k = 1; k <= r; ++k) c.emplace_back(2);
            return c;
        case LieType::D:
            c.emplace_back(1);
            for (long k = 2; k <= r - 2; ++k) c.emplace_back(2);
            c.emplace_back(1);
            c.emplace_back(1);
            return c;
        case LieType::E6: return from_longs({1, 2, 3, 2, 1, 2});
        case LieType::E7: return from_longs({2, 3, 4, 3, 2, 1, 2});
    }
    throw std::logic_error("unreachable");
}

std::vector<Rat> spherical_weyl_pairing(FlagFamily family, const FlagParams& params) {
    std::vector<Rat> c;
    switch (family) {
        case FlagFamily::AIII: {
            const long r = params.p + params.q - 1;
            for (long k = 1; k <= params.q; ++k) c.emplace_back(2 * k * (r + 1 - k));
            return c;
        }
        case FlagFamily::BDI:
            return {Rat(2 * params.p), Rat(2 * (params.p - 1))};
        case FlagFamily::CI:
            for (long k = 1; k <= params.r; ++k) c.emplace_back(2 * k * (2 * params.r + 1 - k));
            return c;
        case FlagFamily::DIII: {
            const long l = params.r / 2;
            if (params.r % 2 == 0)
                for (long k = 1; k <= l; ++k) c.emplace_back(2 * k * (4 * l - 1 - 2 * k));
            else
                for (long k = 1; k <= l; ++k) c.emplace_back(2 * k * (4 * l + 1 - 2 * k));
            return c;
        }
        case FlagFamily::EIII: return from_longs({32, 22});
        case FlagFamily::EVII: return from_longs({34, 52, 54});
    }
    throw std::logic_error("unreachable");
}

std::vector<Rat> spherical_fundamental_pairing(FlagFamily family, const FlagParams& params) {
    std::vector<Rat> c;
    switch (family) {
        case FlagFamily::AIII:
            for (long k = 1; k <= params.q; ++k) c.emplace_back(1);
            return c;
        case FlagFamily::BDI: return from_longs({2, 1});
        case FlagFamily::CI:
            for (long k = 1; k <= params.r; ++k) c.emplace_back(2);
            return c;
        case FlagFamily::DIII:
            for (long k = 1; k <= params.r / 2; ++k) c.emplace_back(1);
            return c;
        case FlagFamily::EIII: return from_longs({2, 1});
        case FlagFamily::EVII: return from_longs({1, 2, 3});
    }
    throw std::logic_error("unreachable");
}

std::vector<Rat> spherical_adjoint_pairing(FlagFamily family, const FlagParams& params) {
    std::vector<Rat> c;
    switch (family) {
        case FlagFamily::AIII:
            for (long k = 1; k <= params.q; ++k) c.emplace_back(2);
            return c;
        case FlagFamily::BDI: return from_longs({2, 2});
        case FlagFamily::CI:
            for (long k = 1; k <= params.r; ++k) c.emplace_back(4);
            return c;
        case FlagFamily::DIII:
            for (long k = 1; k <= params.r / 2; ++k) c.emplace_back(2);
            return c;
        case FlagFamily::EIII: return from_longs({2, 2});
        case FlagFamily::EVII: return from_longs({2, 2, 2});
    }
    throw std::logic_error("unreachable");
}

}  // namespace qzeta::closed_forms
