#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

namespace l4p::core {

// splitmix64; used to derive child seeds so that every component draws from
// an independent, reproducible stream.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Seed splitting rule: child(seed, name) = splitmix64(seed ^ fnv1a64(name)).
inline std::uint64_t child_seed(std::uint64_t seed, const std::string& name) {
    return splitmix64(seed ^ fnv1a64(name));
}

// Deterministic RNG. Uniform/normal draws are hand-rolled on top of the
// mt19937_64 bit stream so the byte-level output does not depend on the
// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t bits() { return gen_(); }

    // [0, 1)
    double uniform() { return double(gen_() >> 11) * (1.0 / 9007199254740992.0); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    long uniform_int(long n) { return long(gen_() % std::uint64_t(n)); }

    // Box-Muller; one value per call, cached pair.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        while (u1 <= 1e-300) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Children are derived from this generator's seed, not its stream, so the
    // derivation is independent of draw order.
    Rng child(const std::string& name) const { return Rng(child_seed(seed_, name)); }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_ = 0;
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace l4p::core
