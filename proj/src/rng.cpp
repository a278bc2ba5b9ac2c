#include "typeqa/rng.hpp"

namespace typeqa {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ull;
    }
    return h;
}

std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view key) {
    SplitMix64 mixer(global_seed ^ fnv1a64(key));
    return mixer.next();
}

}  // namespace typeqa
