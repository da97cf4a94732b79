#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace semican {

// Exact rational scalar. All linear algebra in this project is exact.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p" or "p/q".
inline Rat rat_parse(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool rat_is_int(const Rat& q) { return q.get_den() == 1; }

inline long long rat_to_ll(const Rat& q) {
    if (!rat_is_int(q)) throw std::invalid_argument("rat_to_ll: not an integer");
    return mpz_get_si(q.get_num_mpz_t());
}

// splitmix64, used to derive independent sub-seeds; stable across platforms.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) { return mix64(a ^ mix64(b)); }
inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c) { return mix64(mix64(a, b), c); }

// Deterministic integer stream in [-pool, pool].
class RatPool {
  public:
    explicit RatPool(std::uint64_t seed, long pool = 10000) : state_(mix64(seed)), pool_(pool) {}

    long next() {
        state_ = mix64(state_);
        return static_cast<long>(state_ % (2 * static_cast<std::uint64_t>(pool_) + 1)) - pool_;
    }

  private:
    std::uint64_t state_;
    long pool_;
};

}  // namespace semican
