#pragma once

#include <cstdint>
#include <vector>

#include "element.hpp"

namespace cuntz {

// Deterministic generator for seeded property sweeps.  Raw engine output is
// reduced by hand (never through std distributions, whose mappings vary by
// implementation), so a seed reproduces the same samples everywhere.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ^ 0x853c49e6748fea9bull) {
        next();
        next();
    }

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [0, n); modulo bias is irrelevant here.
    int below(int n) { return n <= 1 ? 0 : int(next() % std::uint64_t(n)); }

    bool coin() { return next() & 1; }

  private:
    std::uint64_t state_;
};

// Small coefficients over the whole field; denominators stay in {1, 2} so
// float comparisons in the numeric suites keep comfortable margins.
inline Scalar random_scalar(Rng& rng) {
    static const std::vector<Scalar> pool = {
        Scalar(1),
        Scalar(-1),
        Scalar(2),
        Scalar(Rational(1, 2)),
        Scalar(Rational(-1, 2)),
        Scalar::i(),
        -Scalar::i(),
        Scalar(Rational(1, 2)) * Scalar::i(),
        Scalar::sqrt2(),
        Scalar::inv_sqrt2(),
        Scalar(1) + Scalar::i(),
        Scalar(Rational(1, 2)) - Scalar(Rational(1, 2)) * Scalar::i(),
        Scalar(-1) + Scalar::inv_sqrt2() * Scalar::i(),
    };
    return pool[rng.below(int(pool.size()))];
}

inline Word random_word(Rng& rng, int d, int max_len) {
    Word w(std::size_t(rng.below(max_len + 1)));
    for (auto& l : w) l = std::uint8_t(1 + rng.below(d));
    return w;
}

inline Monomial random_monomial(Rng& rng, int d, int max_len, bool balanced) {
    Monomial m;
    m.creators = random_word(rng, d, max_len);
    if (balanced) {
        m.annihilators.resize(m.creators.size());
        for (auto& l : m.annihilators) l = std::uint8_t(1 + rng.below(d));
    } else {
        m.annihilators = random_word(rng, d, max_len);
    }
    return m;
}

// Random element with at most max_terms monomials of word length <= max_len.
// Terms can collide and cancel, so the result may have fewer terms; it is
// never deliberately zero but can be.
inline Element random_element(Rng& rng, int d, int max_len, int max_terms,
                              bool balanced) {
    Element x(d);
    const int terms = 1 + rng.below(max_terms);
    for (int t = 0; t < terms; ++t)
        x.add_term(random_monomial(rng, d, max_len, balanced), random_scalar(rng));
    return x;
}

}  // namespace cuntz
