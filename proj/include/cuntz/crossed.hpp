#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "element.hpp"
#include "maps.hpp"
#include "report.hpp"
#include "uhf.hpp"

namespace cuntz {

/**
 * Normal form of a polynomial over the shift: a finite sum
 *
 *     s_1^{*N} a_{-N} + ... + s_1^* a_{-1} + a_0 + a_1 s_1 + ... + a_N s_1^N
 *
 * with every coefficient a_k gauge-invariant.  coeffs[k] holds a_k; positive
 * k means a_k s_1^k, negative k means s_1^{*|k|} a_k.  Coefficient maps are
 * not unique representatives in general; from_cuntz produces the canonical
 * ones (right-supported under e_k = delta^k(1) for k > 0, left-supported for
 * k < 0), and the round-trip identities below hold on those.
 */
struct CrossedElement {
    std::map<int, Element> coeffs;

    bool structurally_zero() const { return coeffs.empty(); }

    void add(int k, const Element& a) {
        if (a.structurally_zero()) return;
        auto it = coeffs.find(k);
        if (it == coeffs.end()) {
            coeffs.emplace(k, a);
        } else {
            it->second += a;
            if (it->second.structurally_zero()) coeffs.erase(it);
        }
    }
};

namespace detail {
inline Element shift_power(int k) {  // s_1^k for k >= 0
    return Element::monomial(Monomial{Word(std::size_t(k), 1), {}}, Scalar::one(), 2);
}
}  // namespace detail

/**
 * Decompose a polynomial along the gauge grading: the degree-g component x_g
 * factors as a_g s_1^g (g > 0) resp. s_1^{*|g|} a_g (g < 0) with a unique
 * canonical gauge-invariant coefficient, recovered by a_g = x_g s_1^{*g}
 * resp. a_g = s_1^{|g|} x_g.
 */
inline CrossedElement from_cuntz(const Element& x) {
    if (x.generator_count() != 2)
        throw std::invalid_argument("from_cuntz: defined for d = 2 only");
    CrossedElement ce;
    for (auto& [g, part] : grade(x)) {
        Element a = g == 0 ? part
                  : g > 0  ? part * adjoint(detail::shift_power(g))
                           : detail::shift_power(-g) * part;
        ce.add(g, a);
    }
    return ce;
}

// Reassemble the polynomial.  Every coefficient must be gauge-invariant.
inline Element to_cuntz(const CrossedElement& ce) {
    Element x = Element::zero(2);
    for (const auto& [k, a] : ce.coeffs) {
        if (!is_balanced(a))
            throw std::domain_error("to_cuntz: coefficient at k=" + std::to_string(k) +
                                    " is not gauge-invariant");
        x += k == 0 ? a
           : k > 0  ? a * detail::shift_power(k)
                    : adjoint(detail::shift_power(-k)) * a;
    }
    return x;
}

/**
 * Product in the crossed-product picture, computed natively on coefficient
 * maps (no detour through the word algebra):
 *
 *   (a s^m)(b s^n)           = a delta^m(b) s^(m+n)
 *   (s^{*j} a)(s^{*l} b)     = s^{*(j+l)} delta^l(a) b
 *   (a s^k)(s^{*j} b), k>=j  = a delta^(k-j)(e_j b) s^(k-j)
 *                     k< j   = s^{*(j-k)} delta^(j-k)(a e_k) b
 *   (s^{*j} a)(b s^k), k>=j  = delta_*^j(a b) s^(k-j)
 *                     k< j   = s^{*(j-k)} delta_*^k(a b)
 *
 * with e_j = delta^j(1) = s_1^j s_1^{*j}.  Gauge-invariance of every input
 * coefficient is required and is preserved by the rules.
 */
inline CrossedElement mul_crossed(const CrossedElement& x, const CrossedElement& y) {
    auto iter_delta = [](Element v, int times) {
        for (int t = 0; t < times; ++t) v = apply_delta(v);
        return v;
    };
    auto iter_delta_star = [](Element v, int times) {
        for (int t = 0; t < times; ++t) v = apply_delta_star(v);
        return v;
    };
    auto unit_image = [&](int j) {  // e_j = delta^j(1)
        return iter_delta(Element::identity(2), j);
    };

    for (const auto& [k, a] : x.coeffs)
        if (!is_balanced(a))
            throw std::domain_error("mul_crossed: left coefficient at k=" +
                                    std::to_string(k) + " is not gauge-invariant");
    for (const auto& [k, a] : y.coeffs)
        if (!is_balanced(a))
            throw std::domain_error("mul_crossed: right coefficient at k=" +
                                    std::to_string(k) + " is not gauge-invariant");

    CrossedElement r;
    for (const auto& [p, a] : x.coeffs) {
        for (const auto& [q, b] : y.coeffs) {
            if (p >= 0 && q >= 0) {
                r.add(p + q, a * iter_delta(b, p));
            } else if (p < 0 && q < 0) {
                r.add(p + q, iter_delta(a, -q) * b);
            } else if (p >= 0 && q < 0) {
                const int k = p, j = -q;
                if (k >= j)
                    r.add(k - j, a * iter_delta(unit_image(j) * b, k - j));
                else
                    r.add(-(j - k), iter_delta(a * unit_image(k), j - k) * b);
            } else {  // p < 0, q >= 0
                const int j = -p, k = q;
                if (k >= j)
                    r.add(k - j, iter_delta_star(a * b, j));
                else
                    r.add(-(j - k), iter_delta_star(a * b, k));
            }
        }
    }
    return r;
}

// Covariance s_1 a = delta(a) s_1 on every sample.
inline Report check_covariance(std::span<const Element> samples) {
    Report rep;
    rep.suite = "covariance";
    const Element s1 = Element::generator(1, 2);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Element& a = samples[i];
        bool ok = equals(s1 * a, apply_delta(a) * s1);
        rep.add("s1 a = delta(a) s1", "a=#" + std::to_string(i), ok,
                ok ? "" : clip("a = " + to_string(a)));
    }
    return rep;
}

/**
 * The coefficient bound: the constant coefficient of the normal form never
 * exceeds the whole element in norm.  The left side ||a_0|| is computed from
 * the exact matrix realization; the right side is the monotone numeric lower
 * bound family for ||x||.  A finite-depth failure is only INCONCLUSIVE: the
 * bound converges to ||x|| from below but a fixed cutoff may undershoot.
 */
struct CoefficientBound {
    double a0_norm = 0;
    std::vector<std::pair<int, double>> lower_bounds;  // (cutoff, bound)
    int depth = 0;
    double tolerance = 0;
    CheckStatus status = CheckStatus::pass;

    double lower_bound() const {
        return lower_bounds.empty() ? 0.0 : lower_bounds.back().second;
    }
};

inline CoefficientBound check_coefficient_bound(
    const Element& x, int depth, double tolerance = default_limits().tolerance,
    const Limits& limits = default_limits()) {
    CoefficientBound out;
    out.depth = depth;
    out.tolerance = tolerance;
    const Element a0 = degree_part(x, 0);
    out.a0_norm = a0.structurally_zero() ? 0.0 : norm_gauge_invariant(a0, limits);
    out.lower_bounds = norm_lower_bound_profile(x, depth, 3, limits);
    out.status = out.a0_norm <= out.lower_bound() + tolerance
                     ? CheckStatus::pass
                     : CheckStatus::inconclusive;
    return out;
}

}  // namespace cuntz
