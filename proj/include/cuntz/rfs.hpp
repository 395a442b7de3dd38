#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "element.hpp"
#include "maps.hpp"
#include "report.hpp"

namespace cuntz {

// Fermion seed a = s_1 s_2^*: satisfies a^2 = 0 and {a, a*} = 1.
inline Element rfs_seed() {
    return Element::monomial(Monomial{{1}, {2}}, Scalar::one(), 2);
}

struct CarGenerator {
    int mode = 1;   // 1-based fermion mode index
    Element value;  // zeta^(mode-1) of the seed
};

/**
 * n-th CAR generator a_n = zeta^(n-1)(a).  The image has exactly 2^(n-1)
 * terms, every one a balanced monomial of word length n with coefficient +-1.
 * Bounded by limits.max_car_index: term count doubles per mode.
 */
inline CarGenerator car_generator(int n, const Limits& limits = default_limits()) {
    if (n < 1) throw std::invalid_argument("car_generator: mode must be >= 1");
    if (n > limits.max_car_index)
        throw ResourceError("car_generator: mode " + std::to_string(n) +
                            " exceeds limit " + std::to_string(limits.max_car_index));
    Element a = rfs_seed();
    for (int k = 1; k < n; ++k) a = apply_zeta(a);
    return CarGenerator{n, std::move(a)};
}

// Membership in the gauge-invariant subalgebra: every monomial balanced.
// The CAR generators are built from balanced monomials, so the whole fermion
// image lies in this subalgebra.
inline bool in_car_subalgebra(const Element& x) { return is_balanced(x); }

/**
 * All CAR anticommutator identities among modes 1..N:
 *   one item per pair m <= n covering {a_m, a_n} = 0 together with its
 *   adjoint form {a_m*, a_n*} = 0, and one item per ordered pair (m, n) for
 *   {a_m, a_n*} = delta_mn.  Distinct-identity count is N(N+1)/2 + N^2.
 */
inline Report check_car_relations(int N, const Limits& limits = default_limits()) {
    if (N < 1) throw std::invalid_argument("check_car_relations: need N >= 1");
    Report rep;
    rep.suite = "car relations N=" + std::to_string(N);
    std::vector<Element> a;
    a.reserve(N);
    for (int n = 1; n <= N; ++n) a.push_back(car_generator(n, limits).value);
    const Element zero = Element::zero(2);
    const Element one = Element::identity(2);

    for (int m = 0; m < N; ++m) {
        for (int n = m; n < N; ++n) {
            bool plain = equals(anticommutator(a[m], a[n]), zero);
            bool starred =
                equals(anticommutator(adjoint(a[m]), adjoint(a[n])), zero);
            rep.add("{a_m, a_n} = 0 and {a_m*, a_n*} = 0",
                    "m=" + std::to_string(m + 1) + ", n=" + std::to_string(n + 1),
                    plain && starred);
        }
    }
    for (int m = 0; m < N; ++m) {
        for (int n = 0; n < N; ++n) {
            Element want = m == n ? one : zero;
            rep.add("{a_m, a_n*} = delta_mn",
                    "m=" + std::to_string(m + 1) + ", n=" + std::to_string(n + 1),
                    equals(anticommutator(a[m], adjoint(a[n])), want));
        }
    }
    return rep;
}

/**
 * Axioms of the recursive fermion system over the monomial basis of level
 * <= L: seed nilpotency/normalization once, anticommutation with zeta and
 * *-compatibility per basis element, and the product rule
 * zeta(X) zeta(Y) = phi(XY) per basis pair.
 */
inline Report check_rfs_axioms(int L, const Limits& limits = default_limits()) {
    if (L < 0) throw std::invalid_argument("check_rfs_axioms: need L >= 0");
    if (L > limits.max_level)
        throw ResourceError("check_rfs_axioms: level " + std::to_string(L) +
                            " exceeds limit " + std::to_string(limits.max_level));
    Report rep;
    rep.suite = "rfs axioms L=" + std::to_string(L);
    const Element a = rfs_seed();
    const Element zero = Element::zero(2);
    const Element one = Element::identity(2);

    rep.add("a^2 = 0", "seed", equals(a * a, zero));
    rep.add("{a, a*} = 1", "seed", equals(anticommutator(a, adjoint(a)), one));

    const std::vector<Element> basis = monomial_basis(2, L);
    std::vector<Element> zeta_of;
    zeta_of.reserve(basis.size());
    for (const auto& x : basis) zeta_of.push_back(apply_zeta(x));

    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool anti = equals(anticommutator(a, zeta_of[i]), zero);
        bool star = equals(adjoint(zeta_of[i]), apply_zeta(adjoint(basis[i])));
        rep.add("{a, zeta(X)} = 0", "X=#" + std::to_string(i), anti,
                anti ? "" : clip("X = " + to_string(basis[i])));
        rep.add("zeta(X)* = zeta(X*)", "X=#" + std::to_string(i), star,
                star ? "" : clip("X = " + to_string(basis[i])));
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            bool ok = equals(zeta_of[i] * zeta_of[j], apply_phi(basis[i] * basis[j]));
            rep.add("zeta(X) zeta(Y) = phi(XY)",
                    "X=#" + std::to_string(i) + ", Y=#" + std::to_string(j), ok,
                    ok ? ""
                       : clip("X = " + to_string(basis[i]) +
                              "; Y = " + to_string(basis[j])));
        }
    }
    return rep;
}

}  // namespace cuntz
