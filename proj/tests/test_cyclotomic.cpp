#include <catch2/catch_amalgamated.hpp>

#include "tcat/cyclotomic.hpp"

#include <random>

using tcat::CycNumber;
using tcat::Rat;

namespace {

CycNumber cyc(long n, long k) { return CycNumber::zeta(n, k); }

// Small "random" field elements: short sums of scaled roots of unity.
CycNumber random_value(std::mt19937_64& rng) {
    static const long conductors[] = {1, 3, 4, 5, 8, 12};
    std::uniform_int_distribution<int> pick(0, 5);
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 4);
    CycNumber acc;
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
        long n = conductors[pick(rng)];
        long k = static_cast<long>(rng() % static_cast<unsigned long>(n));
        acc += CycNumber(Rat(num(rng), den(rng))) * cyc(n, k);
    }
    return acc;
}

}  // namespace

TEST_CASE("constructor examples") {
    CHECK(cyc(1, 0).is_one());
    CHECK(cyc(2, 1) == CycNumber(-1));
    CHECK(cyc(4, 1) * cyc(4, 1) == CycNumber(-1));
    CHECK_THROWS_AS(cyc(0, 0), std::invalid_argument);
}

TEST_CASE("field operation examples") {
    CHECK(cyc(4, 1) * cyc(4, 3) == CycNumber(1));
    CHECK(cyc(3, 1) + cyc(3, 2) == CycNumber(-1));
    CHECK(CycNumber(-1).inverse() == CycNumber(-1));
    CHECK_THROWS_AS(CycNumber(0).inverse(), std::invalid_argument);
}

TEST_CASE("canonical form and equality") {
    // zeta_2 lives in Q, zeta_6 in Q(zeta_3).
    CHECK(cyc(2, 1).conductor() == 1);
    CHECK(cyc(6, 1).conductor() == 3);
    CHECK(cyc(6, 2) == cyc(3, 1));
    CHECK(cyc(12, 3) == cyc(4, 1));
    // zero canonicalizes too
    CHECK((cyc(8, 1) - cyc(8, 1)).conductor() == 1);
    CHECK((cyc(8, 1) - cyc(8, 1)).is_zero());
}

TEST_CASE("multiplicative order") {
    CHECK(CycNumber(1).multiplicative_order() == 1);
    CHECK(CycNumber(-1).multiplicative_order() == 2);
    CHECK(cyc(4, 1).multiplicative_order() == 4);
    CHECK(!CycNumber(2).multiplicative_order().has_value());
    CHECK(!(cyc(4, 1) + CycNumber(1)).multiplicative_order().has_value());
    CHECK_THROWS_AS(CycNumber(0).multiplicative_order(), std::invalid_argument);
    for (long n = 1; n <= 24; ++n)
        CHECK(cyc(n, 1).multiplicative_order() == n);
}

TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        CycNumber a = random_value(rng), b = random_value(rng), c = random_value(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == CycNumber(1));
    }
}

TEST_CASE("conductor lift round trip") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        CycNumber a = random_value(rng);
        // Multiplying by 1 expressed at a larger conductor forces a lift and
        // a reduction back to canonical form.
        CycNumber one = cyc(16, 0) * cyc(9, 0);
        CHECK(a * one == a);
        CHECK(a + CycNumber(0) == a);
    }
}

TEST_CASE("root of unity form and printing") {
    CHECK(cyc(4, 1).str() == "i");
    CHECK(cyc(4, 3).str() == "-i");
    CHECK(CycNumber(-1).str() == "-1");
    CHECK(cyc(3, 1).str() == "z3");
    CHECK(cyc(3, 2).str() == "z3^2");
    CHECK((cyc(3, 1).negated()).str() == "z6^5");
    auto [m, j] = (cyc(8, 1) * cyc(3, 1)).root_of_unity_form();
    CHECK(m == 24);
    CHECK(tcat::CycNumber::zeta(m, j) == cyc(8, 1) * cyc(3, 1));
}

TEST_CASE("dlog") {
    CHECK(tcat::dlog_root_of_unity(cyc(4, 1), 8) == 2);
    CHECK(tcat::dlog_root_of_unity(CycNumber(1), 8) == 0);
    CHECK(tcat::dlog_root_of_unity(CycNumber(-1), 8) == 4);
}

TEST_CASE("from_parts accepts non-canonical encodings") {
    CHECK(CycNumber::from_parts(2, {Rat(-1)}) == CycNumber(-1));
    CHECK(CycNumber::from_parts(6, {Rat(0), Rat(1)}) == cyc(6, 1));
    CHECK(CycNumber::from_parts(4, {Rat(0), Rat(1)}) == cyc(4, 1));
    CHECK_THROWS_AS(CycNumber::from_parts(4, {Rat(1)}), std::invalid_argument);
}
