#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "brauer/cyclotomic.hpp"
#include "brauer/modp.hpp"

using namespace brauer;
using namespace brauer::cyclo;

namespace {

// deterministic random cyclotomic with integer coefficients (an algebraic
// integer), conductor drawn from the divisors of 24
Cyclotomic random_algebraic_integer(std::mt19937_64& rng) {
    static const std::uint32_t pool[] = {1, 2, 3, 4, 6, 8, 12, 24};
    std::uint32_t e = pool[rng() % 8];
    std::vector<Rat> coeffs(euler_phi(e));
    for (auto& c : coeffs) c = Rat(static_cast<long long>(rng() % 11) - 5);
    return Cyclotomic::from_coeffs(e, std::move(coeffs));
}

} // namespace

TEST_CASE("rational arithmetic and valuation") {
    Rat a(BigInt(6), BigInt(4));
    CHECK(a.num() == 3);
    CHECK(a.den() == 2);
    CHECK((a * Rat(2)).is_integer());
    CHECK(Rat::parse("-7/21") == Rat(BigInt(-1), BigInt(3)));
    CHECK(Rat::parse("5") == Rat(5));
    CHECK(p_valuation(Rat(48), 2) == 4);
    CHECK(p_valuation(Rat(BigInt(3), BigInt(8)), 2) == -3);
    CHECK(p_valuation(Rat(45), 3) == 2);
    CHECK_THROWS_AS(p_valuation(Rat(0), 2), error);
    CHECK_THROWS_AS(Rat(5) / Rat(0), error);
}

TEST_CASE("zeta basics") {
    // zeta(4,1)^2 = -1
    auto i = Cyclotomic::zeta(4, 1);
    CHECK(i * i == Cyclotomic(-1));
    // zeta(3,1) + zeta(3,2) = -1
    CHECK(Cyclotomic::zeta(3, 1) + Cyclotomic::zeta(3, 2) == Cyclotomic(-1));
    // multiplicative order of zeta(e,k) is e/gcd(e,k)
    for (std::uint32_t e : {6u, 8u, 12u}) {
        for (std::uint32_t k = 1; k < e; ++k) {
            auto z = Cyclotomic::zeta(e, k);
            auto acc = z;
            std::uint32_t o = 1;
            while (acc != Cyclotomic(1)) {
                acc *= z;
                ++o;
            }
            CHECK(o == e / std::gcd(e, k));
        }
    }
}

TEST_CASE("cross-conductor arithmetic") {
    // equal values at different conductors compare equal
    auto m1 = Cyclotomic(-1);
    auto z63 = Cyclotomic::zeta(6, 3); // = -1
    CHECK(m1 == z63);
    CHECK(m1.compare(z63) == 0);
    // zeta_6 = -zeta_3^2
    CHECK(Cyclotomic::zeta(6, 1) == -(Cyclotomic::zeta(3, 2)));
    // lifted value keeps identity
    CHECK(Cyclotomic::zeta(4, 1).lifted_to(12) * Cyclotomic::zeta(4, 1).lifted_to(12) ==
          Cyclotomic(-1));
}

TEST_CASE("ring axioms on random values") {
    std::mt19937_64 rng(0xC1C10u);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_algebraic_integer(rng);
        auto b = random_algebraic_integer(rng);
        auto c = random_algebraic_integer(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        // conjugation is a ring involution
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("galois orbit sums are rational") {
    std::mt19937_64 rng(0xA1B2u);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_algebraic_integer(rng);
        std::uint32_t e = a.conductor();
        Cyclotomic sum;
        for (std::uint32_t t = 1; t <= e; ++t) {
            if (std::gcd(t, e) != 1) continue;
            sum += a.galois(t);
        }
        CHECK(sum.is_rational());
    }
}

TEST_CASE("mod-p reduction basics") {
    // integers reduce mod p
    auto r32 = ModpReduction::make(1, 3);
    CHECK(r32.reduce(Cyclotomic(7)) == r32.field().from_int(1));
    CHECK(r32.reduce(Cyclotomic(-1)) == r32.field().from_int(2));
    // p-power roots of unity collapse to 1
    auto r2 = ModpReduction::make(4, 2);
    CHECK(r2.reduce(Cyclotomic::zeta(4, 1)) == r2.field().one());
    auto r5 = ModpReduction::make(5, 5);
    CHECK(r5.reduce(Cyclotomic::zeta(5, 1)) == r5.field().one());
    // e=3, p=2: image of zeta_3 has order 3 in F_4
    auto r4 = ModpReduction::make(3, 2);
    CHECK(r4.field().q() == 4);
    auto th = r4.reduce(Cyclotomic::zeta(3, 1));
    CHECK(r4.field().element_order(th) == 3);
    // non-integral input
    CHECK_THROWS_AS(r4.reduce(Cyclotomic(Rat(BigInt(1), BigInt(2)))), nonintegral_error);
}

TEST_CASE("embedding checks") {
    CHECK(ModpReduction::make(4, 2).embedding_check());   // m = 1
    CHECK(ModpReduction::make(3, 2).embedding_check());   // m = 3 in F_4
    auto r = ModpReduction::make(5, 3);                   // ord_5(3) = 4
    CHECK(r.field().q() == 81);
    CHECK(r.embedding_check());
    CHECK(r.field().element_order(r.theta()) == 5);
}

TEST_CASE("reduction is a ring homomorphism") {
    auto red = ModpReduction::make(24, 2);
    std::mt19937_64 rng(0xF00Du);
    int pairs = 0;
    while (pairs < 1000) {
        auto a = random_algebraic_integer(rng);
        auto b = random_algebraic_integer(rng);
        ++pairs;
        const auto& f = red.field();
        CHECK(red.reduce(a * b) == f.mul(red.reduce(a), red.reduce(b)));
        CHECK(red.reduce(a + b) == f.add(red.reduce(a), red.reduce(b)));
    }
}

TEST_CASE("reduction variants give distinct primitive roots") {
    auto r0 = ModpReduction::make(3, 2, 0);
    auto r1 = ModpReduction::make(3, 2, 1);
    CHECK(r0.theta() != r1.theta());
    CHECK(r0.field().element_order(r1.theta()) == 3);
}

TEST_CASE("conductor cap is enforced") {
    CHECK_THROWS_AS(Cyclotomic::zeta(100000, 1), resource_error);
}
