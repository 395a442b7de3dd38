#include <catch2/catch_amalgamated.hpp>

#include "cuntz/crossed.hpp"
#include "cuntz/rng.hpp"

using namespace cuntz;

namespace {
Element mono(Word c, Word a, Scalar s = Scalar::one()) {
    return Element::monomial(Monomial{std::move(c), std::move(a)}, s, 2);
}
Element e1() { return mono({1}, {1}); }  // s1 s1*
}  // namespace

TEST_CASE("generator decompositions") {
    auto ce = from_cuntz(Element::generator(1, 2));
    REQUIRE(ce.coeffs.size() == 1);
    REQUIRE(ce.coeffs.count(1) == 1);
    CHECK(equals(ce.coeffs.at(1), e1()));

    ce = from_cuntz(Element::generator(2, 2));
    REQUIRE(ce.coeffs.size() == 1);
    CHECK(equals(ce.coeffs.at(1), mono({2}, {1})));

    ce = from_cuntz(adjoint(Element::generator(1, 2)));
    REQUIRE(ce.coeffs.count(-1) == 1);
    CHECK(equals(ce.coeffs.at(-1), e1()));

    ce = from_cuntz(adjoint(Element::generator(2, 2)));
    REQUIRE(ce.coeffs.count(-1) == 1);
    CHECK(equals(ce.coeffs.at(-1), mono({1}, {2})));
}

TEST_CASE("mixed element splits by degree") {
    const Element x = Element::identity(2) + Element::generator(1, 2) +
                      mono({1, 2}, {}, Scalar::i());
    auto ce = from_cuntz(x);
    REQUIRE(ce.coeffs.size() == 3);
    CHECK(equals(ce.coeffs.at(0), Element::identity(2)));
    CHECK(equals(ce.coeffs.at(1), e1()));
    // s1 s2 s1* s1* with coefficient i
    CHECK(equals(ce.coeffs.at(2), mono({1, 2}, {1, 1}, Scalar::i())));
    for (auto& [k, a] : ce.coeffs) CHECK(is_balanced(a));
    CHECK(equals(to_cuntz(ce), x));
}

TEST_CASE("round trips") {
    Rng rng(21);
    for (int t = 0; t < 40; ++t) {
        const Element x = random_element(rng, 2, 3, 4, false);
        CHECK(equals(to_cuntz(from_cuntz(x)), x));
    }
    // Canonical maps compose to the identity on coefficient maps too.
    for (int t = 0; t < 10; ++t) {
        const Element x = random_element(rng, 2, 3, 4, false);
        auto ce = from_cuntz(x);
        auto ce2 = from_cuntz(to_cuntz(ce));
        REQUIRE(ce2.coeffs.size() == ce.coeffs.size());
        for (auto& [k, a] : ce.coeffs) {
            REQUIRE(ce2.coeffs.count(k) == 1);
            CHECK(equals(ce2.coeffs.at(k), a));
        }
    }
}

TEST_CASE("reassembly requires gauge-invariant coefficients") {
    CrossedElement ce;
    ce.add(0, Element::generator(1, 2));  // degree 1, not invariant
    CHECK_THROWS_AS(to_cuntz(ce), std::domain_error);

    CrossedElement bad;
    bad.add(1, Element::generator(1, 2));
    CHECK_THROWS_AS(mul_crossed(bad, from_cuntz(Element::identity(2))),
                    std::domain_error);
    CHECK_THROWS_AS(mul_crossed(from_cuntz(Element::identity(2)), bad),
                    std::domain_error);
}

TEST_CASE("native product, frozen cases") {
    const Element s1 = Element::generator(1, 2);
    // (e1 s)(s* e1) = s1 s1*
    auto p = mul_crossed(from_cuntz(s1), from_cuntz(adjoint(s1)));
    REQUIRE(p.coeffs.size() == 1);
    CHECK(equals(p.coeffs.at(0), e1()));
    // (s* e1)(e1 s) = s1* s1 = I
    p = mul_crossed(from_cuntz(adjoint(s1)), from_cuntz(s1));
    REQUIRE(p.coeffs.size() == 1);
    CHECK(equals(p.coeffs.at(0), Element::identity(2)));
    // degree-zero coefficients multiply pointwise
    const Element a = mono({1}, {2}) + mono({2}, {1});
    const Element b = mono({1}, {1}) - mono({2}, {2});
    CrossedElement ca, cb;
    ca.add(0, a);
    cb.add(0, b);
    auto q = mul_crossed(ca, cb);
    REQUIRE(q.coeffs.size() == 1);
    CHECK(equals(q.coeffs.at(0), a * b));
}

TEST_CASE("native product agrees with the word product") {
    Rng rng(22);
    for (int t = 0; t < 30; ++t) {
        const Element x = random_element(rng, 2, 3, 3, false);
        const Element y = random_element(rng, 2, 3, 3, false);
        auto p = mul_crossed(from_cuntz(x), from_cuntz(y));
        CHECK(equals(to_cuntz(p), x * y));
    }
}

TEST_CASE("covariance report") {
    std::vector<Element> samples = {Element::identity(2), mono({1}, {2}),
                                    mono({1}, {2}) + mono({2}, {1})};
    auto rep = check_covariance(samples);
    CHECK(rep.ok());
    CHECK(rep.items.size() == samples.size());
}

TEST_CASE("coefficient bound, conclusive cases") {
    const Element flip = mono({1}, {2}) + mono({2}, {1});
    auto cb = check_coefficient_bound(flip, 4);
    CHECK(cb.status == CheckStatus::pass);
    CHECK(cb.a0_norm == Catch::Approx(1.0).margin(1e-9));
    CHECK(cb.lower_bound() >= 1.0 - 1e-9);
    CHECK(cb.depth == 4);
    REQUIRE(cb.lower_bounds.size() == 2);  // cutoffs 3 and 4
    CHECK(cb.lower_bounds[0].first == 3);
    CHECK(cb.lower_bounds[1].first == 4);
    // monotone by construction
    CHECK(cb.lower_bounds[0].second <= cb.lower_bounds[1].second + 1e-12);

    // no degree-zero part at all: the inequality is vacuous
    cb = check_coefficient_bound(Element::generator(1, 2), 3);
    CHECK(cb.status == CheckStatus::pass);
    CHECK(cb.a0_norm == 0.0);
}

TEST_CASE("coefficient bound, one-sided at shallow depth") {
    // A projection supported beyond the cutoff: the compression at depth 1
    // is zero, so the certificate must come back inconclusive, not failed.
    const Element deep = mono({2, 2, 2}, {2, 2, 2});
    auto cb = check_coefficient_bound(deep, 1);
    CHECK(cb.status == CheckStatus::inconclusive);
    CHECK(cb.a0_norm == Catch::Approx(1.0).margin(1e-9));
    CHECK(cb.lower_bound() < cb.a0_norm);

    // Deep enough, the same element certifies.
    cb = check_coefficient_bound(deep, 3);
    CHECK(cb.status == CheckStatus::pass);
    CHECK(cb.lower_bound() >= 1.0 - 1e-9);
}
