#ifndef TROPCOMB_PRNG_HPP
#define TROPCOMB_PRNG_HPP

#include <cstdint>

namespace tropcomb {

// splitmix64: tiny deterministic generator. Every randomized report in the
// library is reproducible from (seed, trials) on any platform, which is why
// we do not use std:: distributions (their streams are implementation
// defined).
class Prng {
public:
    explicit Prng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi], inclusive. Modulo bias is irrelevant
    // at the ranges used here.
    long long range(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

    // Derives an independent stream keyed by salt (e.g. a trial index), so
    // per-trial draws do not depend on how many values other trials consumed.
    Prng fork(std::uint64_t salt) const {
        Prng child(state_ ^ (salt + 1) * 0x9e3779b97f4a7c15ULL);
        child.next();
        return child;
    }

private:
    std::uint64_t state_;
};

} // namespace tropcomb

#endif
