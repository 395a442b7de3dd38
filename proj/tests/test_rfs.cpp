#include <catch2/catch_amalgamated.hpp>

#include "cuntz/rfs.hpp"

using namespace cuntz;

namespace {
Element mono(Word c, Word a, Scalar s = Scalar::one()) {
    return Element::monomial(Monomial{std::move(c), std::move(a)}, s, 2);
}
}  // namespace

TEST_CASE("seed and first generators") {
    const Element a = rfs_seed();
    CHECK(a == mono({1}, {2}));
    CHECK((a * a).structurally_zero());
    CHECK(equals(anticommutator(a, adjoint(a)), Element::identity(2)));

    const auto g1 = car_generator(1);
    CHECK(g1.mode == 1);
    CHECK(g1.value == a);

    // Second mode, frozen: s1 s1 s2* s1* - s2 s1 s2* s2*.
    const auto g2 = car_generator(2);
    CHECK(g2.mode == 2);
    CHECK(g2.value == mono({1, 1}, {1, 2}) - mono({2, 1}, {2, 2}));
}

TEST_CASE("generator growth and membership") {
    for (int n = 1; n <= 6; ++n) {
        const Element v = car_generator(n).value;
        CHECK(v.term_count() == (std::size_t(1) << (n - 1)));
        CHECK(in_car_subalgebra(v));
        for (const auto& [m, c] : v.terms()) {
            CHECK(m.creators.size() == std::size_t(n));
            CHECK((c == Scalar::one() || c == Scalar(-1)));
        }
    }
    CHECK_FALSE(in_car_subalgebra(Element::generator(1, 2)));
}

TEST_CASE("mode bounds") {
    CHECK_THROWS_AS(car_generator(0), std::invalid_argument);
    CHECK_THROWS_AS(car_generator(-2), std::invalid_argument);
    CHECK_THROWS_AS(car_generator(13), ResourceError);
    Limits tight;
    tight.max_car_index = 3;
    CHECK_THROWS_AS(car_generator(4, tight), ResourceError);
    CHECK(car_generator(3, tight).mode == 3);
}

TEST_CASE("successor structure") {
    // a_{n+1} = zeta(a_n) and delta_* undoes zeta.
    for (int n = 1; n <= 4; ++n) {
        const Element an = car_generator(n).value;
        const Element an1 = car_generator(n + 1).value;
        CHECK(an1 == apply_zeta(an));
        CHECK(equals(apply_delta_star(an1), an));
    }
}

TEST_CASE("car relations report") {
    const Report r5 = check_car_relations(5);
    CHECK(r5.ok());
    CHECK(r5.items.size() == 5 * 6 / 2 + 25);

    const Report r1 = check_car_relations(1);
    CHECK(r1.ok());
    CHECK(r1.items.size() == 2);

    CHECK_THROWS_AS(check_car_relations(0), std::invalid_argument);
}

TEST_CASE("spot anticommutators across modes") {
    const Element a1 = car_generator(1).value;
    const Element a3 = car_generator(3).value;
    CHECK(equals(anticommutator(a1, a3), Element::zero(2)));
    CHECK(equals(anticommutator(a1, adjoint(a3)), Element::zero(2)));
    CHECK(equals(anticommutator(a3, adjoint(a3)), Element::identity(2)));
}

TEST_CASE("rfs axioms at low level") {
    const Report r = check_rfs_axioms(1);
    CHECK(r.ok());
    // 2 seed items + 2 per basis element (9) + 81 product-rule pairs.
    CHECK(r.items.size() == 2 + 18 + 81);

    CHECK_THROWS_AS(check_rfs_axioms(-1), std::invalid_argument);
    CHECK_THROWS_AS(check_rfs_axioms(9), ResourceError);
}

TEST_CASE("seed axioms discriminate") {
    // The flip s1 s2* + s2 s1* is self-adjoint with square one: it fails
    // nilpotency and normalization, so it cannot serve as a fermion seed.
    const Element w = mono({1}, {2}) + mono({2}, {1});
    CHECK_FALSE(is_zero(w * w));
    CHECK_FALSE(equals(anticommutator(w, adjoint(w)), Element::identity(2)));
}
