#include <catch2/catch_amalgamated.hpp>
#include <ntb/semiconjugacy.hpp>

#include <random>
#include <vector>

using namespace ntb;

TEST_CASE("witnessed equivalence of markers") {
    Endo phi(1, 0, 0, 3);
    auto w = same_class(v_pow(1), v_pow(3), phi);
    REQUIRE(w.has_value());
    CHECK(*w * v_pow(3) * phi.apply(*w).inverse() == v_pow(1));
    CHECK_FALSE(same_class(v_pow(1), v_pow(2), phi).has_value());
    CHECK_FALSE(same_class(u_pow(1), u_pow(2), phi).has_value());
}

TEST_CASE("canonical representatives") {
    Endo phi(1, 0, 0, 3);
    CHECK(canonical_marker(v_pow(3), phi) == v_pow(1));
    CHECK(canonical_marker(u_pow(5), phi) == u_pow(5));
    CHECK(canonical_marker(Monomial{2, -1}, phi) == Monomial{2, 1});

    // With the other twist the full invariant is n + 2m.
    Endo tri(1, 0, 1, -1);
    CHECK(canonical_marker(u_pow(1), tri) == v_pow(2));
    CHECK(canonical_marker(Monomial{1, -1}, tri) == v_pow(1));
    CHECK(canonical_marker(Monomial{-2, 1}, tri) == v_pow(-3));
}

TEST_CASE("equivalence relation properties at random") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> exp(-6, 6);
    std::vector<Endo> twists{Endo(1, 0, 0, 2),  Endo(1, 0, 0, -1), Endo(1, 0, 0, 0),
                             Endo(1, 0, 1, -1), Endo(1, 0, 2, 3),  Endo(1, 0, 1, 1)};
    for (const Endo& phi : twists) {
        for (int it = 0; it < 200; ++it) {
            Monomial g1{exp(rng), exp(rng)}, g2{exp(rng), exp(rng)}, g3{exp(rng), exp(rng)};
            CHECK(same_class(g1, g1, phi).has_value());
            CHECK(same_class(g1, g2, phi).has_value() == same_class(g2, g1, phi).has_value());
            if (same_class(g1, g2, phi) && same_class(g2, g3, phi))
                CHECK(same_class(g1, g3, phi).has_value());
            CHECK(same_class(g1, g2, phi).has_value() ==
                  (canonical_marker(g1, phi) == canonical_marker(g2, phi)));
            // The representative is idempotent and stays in the class.
            Monomial c = canonical_marker(g1, phi);
            CHECK(canonical_marker(c, phi) == c);
            CHECK(same_class(g1, c, phi).has_value());
        }
    }
}

TEST_CASE("class objects") {
    Endo phi(1, 0, 0, 3);
    SemiClass c = SemiClass::of(v_pow(3), phi);
    CHECK(c.rep == v_pow(1));
    CHECK(c.contains(v_pow(5)));
    CHECK_FALSE(c.contains(v_pow(2)));
    CHECK(c == SemiClass::of(v_pow(1), phi));
    CHECK(c.to_string() == "v");
}
