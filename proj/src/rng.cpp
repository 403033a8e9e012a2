#include "evoland/rng.hpp"

#include <bit>

namespace evoland {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound <= 1) {
        return 0;
    }
    // Smallest all-ones mask covering bound - 1; retry until the draw fits.
    const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
    for (;;) {
        const std::uint64_t x = engine_() & mask;
        if (x < bound) {
            return x;
        }
    }
}

}  // namespace evoland
