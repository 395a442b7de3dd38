#pragma once

#include <map>
#include <string>
#include <vector>

#include "config.hpp"
#include "element.hpp"
#include "report.hpp"

namespace cuntz {

/**
 * Level-k generating family of the Cuntz-Krieger style subalgebra for the
 * all-ones 2x2 matrix: the balanced level-(k+1) monomials whose creator and
 * annihilator words begin with the same letter,
 *
 *     s_i s_mu (s_i s_nu)^*,   |mu| = |nu| = k,  i in {1, 2}.
 *
 * The family has 2^(2k+1) members and spans a proper subspace (half the
 * dimension) of the balanced monomials at its level; the span is closed
 * under products and adjoints, expands coherently into the next level's
 * family, and never captures the off-diagonal witness s_1 s_2^*.
 */
struct FaLevel {
    int k = 0;
    std::vector<Monomial> generators;
};

inline FaLevel fa_generators(int k, const Limits& limits = default_limits()) {
    if (k < 0) throw std::invalid_argument("fa_generators: need k >= 0");
    if (k + 1 > limits.max_level)
        throw ResourceError("fa_generators: level " + std::to_string(k + 1) +
                            " exceeds limit " + std::to_string(limits.max_level));
    FaLevel out;
    out.k = k;
    const auto words = all_words(2, k);
    for (std::uint8_t i = 1; i <= 2; ++i) {
        for (const auto& mu : words) {
            for (const auto& nu : words) {
                Monomial m;
                m.creators.reserve(k + 1);
                m.creators.push_back(i);
                m.creators.insert(m.creators.end(), mu.begin(), mu.end());
                m.annihilators.reserve(k + 1);
                m.annihilators.push_back(i);
                m.annihilators.insert(m.annihilators.end(), nu.begin(), nu.end());
                out.generators.push_back(std::move(m));
            }
        }
    }
    return out;
}

namespace detail {

// Row-reduced spanning set over Q(i, sqrt2).  Rows are sparse coefficient
// vectors keyed by monomial; each stored row is monic in its leading
// monomial and fully reduced against the others.
class SpanBasis {
  public:
    // Reduce v against the basis; returns true iff it vanishes (membership).
    bool reduces_to_zero(std::map<Monomial, Scalar> v) const {
        reduce(v);
        return v.empty();
    }

    // Insert v if independent; returns true when the rank grew.
    bool insert(std::map<Monomial, Scalar> v) {
        reduce(v);
        if (v.empty()) return false;
        const Scalar lead = v.begin()->second;
        for (auto& [m, c] : v) c = c / lead;
        rows_.emplace(v.begin()->first, std::move(v));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

  private:
    void reduce(std::map<Monomial, Scalar>& v) const {
        while (!v.empty()) {
            auto it = rows_.find(v.begin()->first);
            if (it == rows_.end()) return;
            const Scalar factor = v.begin()->second;
            for (const auto& [m, c] : it->second) {
                auto vi = v.find(m);
                if (vi == v.end()) {
                    v.emplace(m, -(factor * c));
                } else {
                    vi->second -= factor * c;
                    if (vi->second.is_zero()) v.erase(vi);
                }
            }
        }
    }

    std::map<Monomial, std::map<Monomial, Scalar>> rows_;
};

inline std::map<Monomial, Scalar> level_vector(const Element& x, int level) {
    return expand_to_level(x, level).terms();
}

}  // namespace detail

/**
 * Exact span membership at a fixed level: expand x to level k+1 and decide,
 * by row reduction over the coefficient field, whether it lies in the span
 * of the level-k generating family.
 */
inline bool fa_span_membership(const Element& x, int k,
                               const Limits& limits = default_limits()) {
    if (x.generator_count() != 2)
        throw std::invalid_argument("fa_span_membership: defined for d = 2 only");
    if (!is_balanced(x))
        throw std::invalid_argument("fa_span_membership: element is not gauge-invariant");
    const FaLevel fa = fa_generators(k, limits);
    detail::SpanBasis basis;
    for (const auto& g : fa.generators)
        basis.insert({{g, Scalar::one()}});
    return basis.reduces_to_zero(detail::level_vector(x, k + 1));
}

// The normalized symmetric isometry S = (s_1 + s_2)/sqrt2; S*S = 1 exactly.
inline Element average_isometry() {
    return (Element::generator(1, 2) + Element::generator(2, 2)) * Scalar::inv_sqrt2();
}

// The off-diagonal witness s_1 s_2^* (also the fermion seed; defined locally
// to keep this header independent of rfs.hpp).
inline Element fa_witness() {
    return Element::monomial(Monomial{{1}, {2}}, Scalar::one(), 2);
}

struct FaComparison {
    int level = 0;          // word length of the compared monomial spaces
    std::size_t fa_dim = 0;
    std::size_t full_dim = 0;
    bool witness_excluded = false;  // s_1 s_2^* stays outside the span
};

inline FaComparison fa_compare(int k, const Limits& limits = default_limits()) {
    if (k < 1) throw std::invalid_argument("fa_compare: need k >= 1");
    FaComparison cmp;
    cmp.level = k;
    const FaLevel fa = fa_generators(k - 1, limits);
    detail::SpanBasis basis;
    for (const auto& g : fa.generators)
        basis.insert({{g, Scalar::one()}});
    cmp.fa_dim = basis.rank();
    cmp.full_dim = std::size_t(1) << (2 * k);
    cmp.witness_excluded = !fa_span_membership(fa_witness(), k - 1, limits);
    return cmp;
}

/**
 * Report form: span dimension at level k is exactly half the balanced
 * dimension, and the off-diagonal witness is excluded.
 */
inline Report compare_fa_vs_car(int k, const Limits& limits = default_limits()) {
    Report rep;
    rep.suite = "fa vs gauge-invariant core, level " + std::to_string(k);
    const FaComparison cmp = fa_compare(k, limits);
    rep.add("span dimension = 2^(2k-1)",
            "level " + std::to_string(k) + ": dim " + std::to_string(cmp.fa_dim) +
                " of " + std::to_string(cmp.full_dim),
            cmp.fa_dim == (std::size_t(1) << (2 * k - 1)));
    rep.add("witness s1 s2* outside span", "level " + std::to_string(k),
            cmp.witness_excluded);
    return rep;
}

}  // namespace cuntz
