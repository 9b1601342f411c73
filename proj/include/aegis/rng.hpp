#pragma once

#include <cstdint>
#include <random>

namespace aegis {

// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t v) {
    std::uint64_t z = v + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Per-run seed from a master seed and a run counter. Injective in the
// counter for a fixed master (odd multiplier, bijective finalizer), so
// derived seeds never collide within one ensemble.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(master ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
}

// Uniform doubles in [0,1) with 53-bit resolution. mt19937_64 is fully
// specified by the standard, so streams are identical across platforms.
class UniformSampler {
public:
    explicit UniformSampler(std::uint64_t seed) : gen_(seed) {}

    double next() {
        ++count_;
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    std::uint64_t count() const { return count_; }

private:
    std::mt19937_64 gen_;
    std::uint64_t count_ = 0;
};

}  // namespace aegis
