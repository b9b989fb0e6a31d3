#include "nts/core/rng.hpp"

#include <stdexcept>

namespace nts {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

// Lemire's nearly-divisionless method.
std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("Rng::below: bound must be positive");
    }
    std::uint64_t x = next();
    auto product = static_cast<u128>(x) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            x = next();
            product = static_cast<u128>(x) * bound;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::uint64_t>(product >> 64);
}

}  // namespace nts
