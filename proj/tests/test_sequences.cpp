// Capacity sequences N(a,b) and lattice counts: generation, duality with
// the counting oracle, scaling, symmetry.

#include <algorithm>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "echcap/capacities.hpp"
#include "echcap/counting.hpp"
#include "echcap/ellipsoid.hpp"

using namespace echcap;

TEST_CASE("ellipsoid canonicalizes order and validates positivity") {
    Ellipsoid e(Rat(5), Rat(2));
    CHECK(e.a == 2);
    CHECK(e.b == 5);
    CHECK(e.volume_proxy() == 10);
    CHECK_FALSE(e.is_ball());
    CHECK(ball(Rat(3, 2)).is_ball());
    CHECK_THROWS_AS(Ellipsoid(Rat(0), Rat(1)), DomainError);
    CHECK_THROWS_AS(Ellipsoid(Rat(2), Rat(-1)), DomainError);
}

TEST_CASE("the classical first twelve entries of N(2,3)") {
    auto v = gen_capacities(Ellipsoid(Rat(2), Rat(3)), 12);
    std::vector<Rat> expect{0, 2, 3, 4, 5, 6, 6, 7, 8, 8, 9, 9};
    CHECK(v == expect);
}

TEST_CASE("N(1,1) starts 0,1,1: multiplicity from the two generators") {
    auto v = gen_capacities(Ellipsoid(Rat(1), Rat(1)), 3);
    CHECK(v == std::vector<Rat>{0, 1, 1});
}

TEST_CASE("rational axes: N(1/2,3/4) begins 0,1/2,3/4,1") {
    auto v = gen_capacities(Ellipsoid(Rat(1, 2), Rat(3, 4)), 4);
    CHECK(v == std::vector<Rat>{0, Rat(1, 2), Rat(3, 4), 1});
}

TEST_CASE("merge agrees with the finite box enumeration, a <= b <= 6") {
    const std::size_t count = 200;
    for (long long a = 1; a <= 6; ++a) {
        for (long long b = a; b <= 6; ++b) {
            std::vector<Rat> box;
            for (long long k = 0; k <= static_cast<long long>(count); ++k)
                for (long long l = 0; l <= static_cast<long long>(count); ++l)
                    box.push_back(Rat(k * a + l * b));
            std::sort(box.begin(), box.end());
            box.resize(count);
            auto v = gen_capacities(Ellipsoid(Rat(a), Rat(b)), count);
            INFO("a=" << a << " b=" << b);
            CHECK(v == box);
        }
    }
}

TEST_CASE("scale equivariance of the capacity sequence") {
    const std::size_t count = 100;
    for (const Rat& lambda : {Rat(1, 2), Rat(2), Rat(3, 7)}) {
        for (auto [a, b] : {std::pair<Rat, Rat>{2, 3}, {1, 4}, {5, 5}}) {
            auto base = gen_capacities(Ellipsoid(a, b), count);
            auto scaled = gen_capacities(Ellipsoid(lambda * a, lambda * b), count);
            for (std::size_t n = 0; n < count; ++n) {
                INFO("lambda=" << lambda << " a=" << a << " b=" << b << " n=" << n);
                REQUIRE(scaled[n] == lambda * base[n]);
            }
        }
    }
}

TEST_CASE("swap symmetry: construction order of the axes is irrelevant") {
    auto v1 = gen_capacities(Ellipsoid(Rat(3), Rat(7)), 50);
    auto v2 = gen_capacities(Ellipsoid(Rat(7), Rat(3)), 50);
    CHECK(v1 == v2);
    CHECK(count_lattice_oracle(3, 7, 29) == count_lattice_oracle(7, 3, 29));
}

TEST_CASE("duality: counts derived from capacities match the oracle") {
    for (long long a = 1; a <= 8; ++a) {
        for (long long b = a; b <= 8; ++b) {
            auto seq = counts_from_capacities(Ellipsoid(Rat(a), Rat(b)), 500);
            REQUIRE(seq.values.size() == 501);
            for (long long n = 0; n <= 500; ++n) {
                INFO("a=" << a << " b=" << b << " n=" << n);
                REQUIRE(seq.values[static_cast<std::size_t>(n)] ==
                        count_lattice_oracle(a, b, n));
            }
        }
    }
}

TEST_CASE("counting oracle basics and the classical L_12(2,3) = 19") {
    CHECK(count_lattice_oracle(2, 3, 0) == 1);
    CHECK(count_lattice_oracle(2, 3, -1) == 0);
    CHECK(count_lattice_oracle(2, 3, 12) == 19);
    CHECK_THROWS_AS(count_lattice_oracle(0, 3, 5), DomainError);
}

TEST_CASE("equal axes counts are triangle numbers of floor(n/a)") {
    CHECK(triangle_number(-1) == 0);
    CHECK(triangle_number(0) == 1);
    CHECK(triangle_number(3) == 10);
    for (long long a = 1; a <= 5; ++a)
        for (long long n = 0; n <= 60; ++n)
            REQUIRE(count_equal_axes(a, n) == count_lattice_oracle(a, a, n));
}

TEST_CASE("capacity sequence lazy accessors agree with bulk generation") {
    CapacitySequence s(Ellipsoid(Rat(2), Rat(3)));
    CHECK(s.at(5) == 6);
    CHECK(s.materialized() >= 6);
    s.ensure_values_through(Rat(9));
    auto bulk = gen_capacities(Ellipsoid(Rat(2), Rat(3)), s.prefix().size());
    CHECK(s.prefix() == bulk);
}
