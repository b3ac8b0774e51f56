#include <catch2/catch_amalgamated.hpp>
#include <ntb/reduce.hpp>

#include <vector>

using namespace ntb;

namespace {

const std::vector<Endo>& twist_grid() {
    static const std::vector<Endo> g = [] {
        std::vector<Endo> v;
        for (int b3 : {0, 1, 2})
            for (int b4 : {-1, 0, 2}) v.emplace_back(1, 0, b3, b4);
        return v;
    }();
    return g;
}

// Independent check of the certificate equation:
//   input == d2(certificate) + index * (u^-1 (x) generator_m)
void check_certificate(const Chain1& input, const ReduceResult& r, const Endo& phi) {
    Chain1 remainder = input - d2(r.certificate, phi);
    Chain1 expected = Chain1::generator(u_pow(-1), r.generator_m, r.index);
    CHECK(remainder == expected);
}

} // namespace

TEST_CASE("power generator reduces with index minus two") {
    Endo phi(1, 0, 0, 3);
    Chain1 c = Chain1::generator(u_pow(2), Monomial{});
    ReduceResult r = reduce_cycle(c, phi);
    CHECK(r.index == -2);
    CHECK(r.cls.rep == u_pow(2));
    CHECK(r.generator_m == u_pow(3));
    check_certificate(c, r, phi);
}

TEST_CASE("trivial tensor factor reduces to zero") {
    Endo phi(1, 0, 0, 3);
    Chain1 c = Chain1::generator(Monomial{}, Monomial{1, 1});
    ReduceResult r = reduce_cycle(c, phi);
    CHECK(r.index == 0);
    CHECK(r.cls.rep == Monomial{1, 1});
    check_certificate(c, r, phi);
}

TEST_CASE("normalized generator has index one") {
    Endo phi(1, 0, 0, 3);
    Chain1 c = Chain1::generator(u_pow(-1), Monomial{1, 1});
    ReduceResult r = reduce_cycle(c, phi);
    CHECK(r.index == 1);
    CHECK(r.generator_m == Monomial{1, 1});
    check_certificate(c, r, phi);
}

TEST_CASE("power rule relates stacked exponents") {
    for (const Endo& phi : twist_grid()) {
        for (int k : {-3, -2, 2, 3}) {
            for (int a : {-1, 0, 2}) {
                Chain1 big = Chain1::generator(u_pow(k), Monomial{a, 1});
                Chain1 unit = Chain1::generator(u_pow(1), Monomial{a + k - 1, 1});
                ReduceResult rb = reduce_cycle(big, phi);
                ReduceResult ru = reduce_cycle(unit, phi);
                CHECK(rb.index == Int(k) * ru.index);
                CHECK(rb.cls == ru.cls);
                check_certificate(big, rb, phi);
                check_certificate(unit, ru, phi);
            }
        }
    }
}

TEST_CASE("cycle needing a positive peel reduces to zero") {
    Endo phi(1, 0, 0, 2);
    Chain1 c = Chain1::generator(v_pow(1), Monomial{});
    c.add(v_pow(1), v_pow(1), 1);
    c.add(v_pow(2), v_pow(-1), -1);
    REQUIRE(is_cycle(c, phi));
    ReduceResult r = reduce_cycle(c, phi);
    CHECK(r.index == 0);
    check_certificate(c, r, phi);
}

TEST_CASE("boundary pairs in the fiber direction have index zero") {
    for (const Endo& phi : twist_grid()) {
        Monomial m = u_pow(1);
        Monomial m2 = m * phi.apply(v_pow(1)) * v_pow(1);
        Chain1 c = Chain1::generator(v_pow(1), m) + Chain1::generator(v_pow(-1), m2);
        REQUIRE(is_cycle(c, phi));
        ReduceResult r = reduce_cycle(c, phi);
        CHECK(r.index == 0);
        check_certificate(c, r, phi);
    }
}

TEST_CASE("reduction rejects bad inputs") {
    Endo phi(1, 0, 0, 3);
    CHECK_THROWS_AS(reduce_cycle(Chain1::generator(v_pow(1), Monomial{}), phi),
                    std::invalid_argument);
    Chain1 mixed = Chain1::generator(u_pow(-1), u_pow(1)) +
                   Chain1::generator(u_pow(-1), Monomial{1, 1});
    REQUIRE(is_cycle(mixed, phi));
    CHECK_THROWS_AS(reduce_cycle(mixed, phi), std::invalid_argument);

    Chain1 ok = Chain1::generator(u_pow(-1), Monomial{1, 1});
    SemiClass wrong = SemiClass::of(u_pow(1), phi);
    CHECK_THROWS_AS(reduce_cycle(ok, phi, wrong), std::invalid_argument);
    SemiClass right = SemiClass::of(Monomial{0, 1}, phi);
    CHECK(reduce_cycle(ok, phi, right).index == 1);

    Endo identity_like(1, 0, 0, 1);
    CHECK_THROWS_AS(reduce_cycle(ok, identity_like), std::domain_error);
}

TEST_CASE("expected class parameter matches the inferred class") {
    Endo phi(1, 0, 1, -1);
    Chain1 c = Chain1::generator(u_pow(2), Monomial{0, 1});
    REQUIRE(is_cycle(c, phi));
    ReduceResult r1 = reduce_cycle(c, phi);
    ReduceResult r2 = reduce_cycle(c, phi, r1.cls);
    CHECK(r1.index == r2.index);
    CHECK(r1.generator_m == r2.generator_m);
    check_certificate(c, r1, phi);
}
