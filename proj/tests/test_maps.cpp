#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "cuntz/maps.hpp"

using namespace cuntz;

namespace {
Element mono(Word c, Word a, Scalar s = Scalar::one()) {
    return Element::monomial(Monomial{std::move(c), std::move(a)}, s, 2);
}

std::vector<Element> probe_set() {
    return {Element::identity(2),
            Element::generator(1, 2),
            mono({1}, {2}),
            mono({2}, {1}) + Scalar::i() * mono({1, 1}, {2, 2}),
            adjoint(Element::generator(2, 2)) + Scalar(2) * Element::identity(2)};
}
}  // namespace

TEST_CASE("frozen images of the seed monomial") {
    const Element a = mono({1}, {2});  // s1 s2*

    CHECK(apply_rho(a) == mono({1, 1}, {1, 2}) + mono({2, 1}, {2, 2}));
    CHECK(apply_phi(a) == apply_rho(a));
    CHECK(apply_zeta(a) == mono({1, 1}, {1, 2}) - mono({2, 1}, {2, 2}));
    CHECK(apply_delta(a) == mono({1, 1}, {1, 2}));
    CHECK(apply_delta_star(a) == Element::zero(2));
    CHECK(apply_delta_star(mono({1, 1}, {1, 2})) == a);

    CHECK(apply_rho(Element::identity(2)) ==
          mono({1}, {1}) + mono({2}, {2}));
    CHECK(equals(apply_rho(Element::identity(2)), Element::identity(2)));
    CHECK(apply_delta(Element::identity(2)) == mono({1}, {1}));
    CHECK(apply_zeta(Element::identity(2)) == mono({1}, {1}) - mono({2}, {2}));
}

TEST_CASE("delta_star inverts delta and zeta") {
    for (const Element& x : probe_set()) {
        CHECK(equals(apply_delta_star(apply_delta(x)), x));
        CHECK(equals(apply_delta_star(apply_zeta(x)), x));
        CHECK(equals(apply_delta_star(apply_rho(x)), x));
    }
}

TEST_CASE("maps require two generators") {
    const Element y = Element::generator(1, 3);
    CHECK_THROWS_AS(apply_rho(y), std::invalid_argument);
    CHECK_THROWS_AS(apply_zeta(y), std::invalid_argument);
    CHECK_THROWS_AS(apply_delta(y), std::invalid_argument);
    CHECK_THROWS_AS(apply_delta_star(y), std::invalid_argument);
}

TEST_CASE("anticommutator") {
    const Element a = mono({1}, {2});
    CHECK(anticommutator(a, a) == Scalar(2) * (a * a));
    CHECK(equals(anticommutator(a, adjoint(a)), Element::identity(2)));
    CHECK(anticommutator(a, Element::identity(2)) == Scalar(2) * a);
}

TEST_CASE("structure verification passes for the named maps") {
    const auto samples = probe_set();
    for (MapTag tag : {MapTag::rho, MapTag::zeta, MapTag::phi, MapTag::delta,
                       MapTag::delta_star}) {
        const Report rep = verify_endomorphism(NamedMap{tag, 2}, samples);
        INFO(rep.suite);
        CHECK(rep.ok());
        CHECK(rep.items.size() > samples.size());
    }
}

TEST_CASE("transfer identities pass on probes") {
    const auto samples = probe_set();
    const Report rep = verify_transfer(samples);
    CHECK(rep.ok());
    // One fullness item per sample, one transfer item per ordered pair.
    CHECK(rep.items.size() == samples.size() + samples.size() * samples.size());
}

TEST_CASE("broken maps are caught with counterexamples") {
    const auto samples = probe_set();

    // Affine shift: breaks additivity and homogeneity.
    const Report r1 = detail::verify_unary_map(
        "affine", [](const Element& x) { return apply_rho(x) + Element::identity(2); },
        samples, false, false, false, false);
    CHECK(r1.failed() > 0);
    bool has_counterexample = false;
    for (const auto& it : r1.items)
        if (it.status == CheckStatus::fail && !it.counterexample.empty())
            has_counterexample = true;
    CHECK(has_counterexample);

    // Doubled endomorphism: linear and star-compatible but not multiplicative
    // and not unital.
    const Report r2 = detail::verify_unary_map(
        "doubled", [](const Element& x) { return Scalar(2) * apply_rho(x); },
        samples, true, false, true, false);
    CHECK(r2.failed() > 0);
    std::size_t mult_fails = 0, unital_fails = 0;
    for (const auto& it : r2.items) {
        if (it.identity.find("additive") != std::string::npos ||
            it.identity.find("star") != std::string::npos)
            CHECK(it.status == CheckStatus::pass);
        if (it.identity.find("multiplicative") != std::string::npos &&
            it.status == CheckStatus::fail)
            ++mult_fails;
        if (it.identity.find("unital") != std::string::npos &&
            it.status == CheckStatus::fail)
            ++unital_fails;
    }
    CHECK(mult_fails > 0);
    CHECK(unital_fails == 1);

    // Wrong sign rule: zeta does not satisfy plain multiplicativity.
    const Report r3 = detail::verify_unary_map(
        "zeta-as-hom", [](const Element& x) { return apply_zeta(x); }, samples,
        true, false, false, false);
    CHECK(r3.failed() > 0);
}

TEST_CASE("homogeneity probes cover the coefficient field") {
    // The probe scalars exercise rational, imaginary and sqrt2 parts; an
    // antilinear map fails homogeneity exactly on the imaginary probes.
    const auto samples = probe_set();
    const Report rep = detail::verify_unary_map(
        "antilinear", [](const Element& x) { return adjoint(apply_rho(x)); },
        samples, false, false, false, false);
    CHECK(rep.failed() > 0);
    for (const auto& it : rep.items)
        if (it.identity.find("star") != std::string::npos)
            CHECK(it.status == CheckStatus::pass);
}
