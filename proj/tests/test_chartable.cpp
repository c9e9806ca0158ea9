#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "brauer/chartable.hpp"

using namespace brauer;
using namespace brauer::chartable;
using brauer::cyclo::BigInt;
using brauer::cyclo::Cyclotomic;
using brauer::cyclo::Rat;
using nlohmann::json;

// --------------------------------------------------------------------------
// groups used throughout
// --------------------------------------------------------------------------
namespace {

perm::Permutation cyc(std::uint32_t deg, const std::vector<std::vector<std::uint32_t>>& c) {
    return perm::Permutation::from_cycles(deg, c);
}

perm::PermGroup s3() {
    return perm::PermGroup::from_generators(3, {cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})});
}
perm::PermGroup s4() {
    return perm::PermGroup::from_generators(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 1}})});
}
perm::PermGroup a5() {
    return perm::PermGroup::from_generators(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})});
}
perm::PermGroup q8() {
    return perm::PermGroup::from_generators(
        8, {perm::Permutation({2, 3, 1, 0, 6, 7, 5, 4}),
            perm::Permutation({4, 5, 7, 6, 1, 0, 2, 3})});
}
perm::PermGroup d8() {
    return perm::PermGroup::from_generators(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{1, 3}})});
}

// 2x2 matrix action on the 8 nonzero vectors of F3^2, lexicographic points
perm::Permutation f3_action(int m00, int m01, int m10, int m11) {
    std::vector<std::pair<int, int>> vecs;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a || b) vecs.emplace_back(a, b);
    std::vector<perm::Point> img(8);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        auto [a, b] = vecs[i];
        std::pair<int, int> w{(m00 * a + m01 * b) % 3, (m10 * a + m11 * b) % 3};
        img[i] = static_cast<perm::Point>(
            std::find(vecs.begin(), vecs.end(), w) - vecs.begin());
    }
    return perm::Permutation(img);
}

perm::PermGroup sl23() {
    return perm::PermGroup::from_generators(8, {f3_action(1, 1, 0, 1), f3_action(0, 2, 1, 0)});
}
perm::PermGroup gl23() {
    return perm::PermGroup::from_generators(
        8, {f3_action(1, 1, 0, 1), f3_action(0, 2, 1, 0), f3_action(2, 0, 0, 1)});
}

// the Q8 subgroup {±1, ±i, ±j, ±k} inside SL2(3)/GL2(3)
std::vector<perm::Permutation> q8_in_gl23() {
    return {f3_action(0, 2, 1, 0), f3_action(1, 1, 1, 2)};
}

// --------------------------------------------------------------------------
// fixture tables, copied from the classical constructions by hand
// --------------------------------------------------------------------------

json cyv(int e, std::vector<std::string> coeffs) {
    return json{{"conductor", e}, {"coeffs", coeffs}};
}
json iv(long long n) { return cyv(1, {std::to_string(n)}); }

json fixture(const std::string& name, std::uint64_t order, std::uint32_t exponent,
             std::vector<std::uint64_t> sizes, std::vector<std::uint64_t> orders,
             std::vector<std::vector<json>> rows) {
    json j;
    j["name"] = name;
    j["order"] = order;
    j["exponent"] = exponent;
    j["class_sizes"] = sizes;
    j["element_orders"] = orders;
    j["characters"] = rows;
    return j;
}

json s3_fixture() {
    return fixture("S3", 6, 6, {1, 3, 2}, {1, 2, 3},
                   {{iv(1), iv(1), iv(1)},
                    {iv(1), iv(-1), iv(1)},
                    {iv(2), iv(0), iv(-1)}});
}

json s4_fixture() {
    return fixture("S4", 24, 12, {1, 6, 3, 8, 6}, {1, 2, 2, 3, 4},
                   {{iv(1), iv(1), iv(1), iv(1), iv(1)},
                    {iv(1), iv(-1), iv(1), iv(1), iv(-1)},
                    {iv(2), iv(0), iv(2), iv(-1), iv(0)},
                    {iv(3), iv(1), iv(-1), iv(0), iv(-1)},
                    {iv(3), iv(-1), iv(-1), iv(0), iv(1)}});
}

json a5_fixture() {
    // golden-ratio values: (1+sqrt5)/2 = -z5^2-z5^3, (1-sqrt5)/2 = 1+z5^2+z5^3
    json phi_plus = cyv(5, {"0", "0", "-1", "-1"});
    json phi_minus = cyv(5, {"1", "0", "1", "1"});
    return fixture("A5", 60, 30, {1, 15, 20, 12, 12}, {1, 2, 3, 5, 5},
                   {{iv(1), iv(1), iv(1), iv(1), iv(1)},
                    {iv(3), iv(-1), iv(0), phi_plus, phi_minus},
                    {iv(3), iv(-1), iv(0), phi_minus, phi_plus},
                    {iv(4), iv(0), iv(1), iv(-1), iv(-1)},
                    {iv(5), iv(1), iv(-1), iv(0), iv(0)}});
}

json q8_fixture() {
    return fixture("Q8", 8, 4, {1, 1, 2, 2, 2}, {1, 2, 4, 4, 4},
                   {{iv(1), iv(1), iv(1), iv(1), iv(1)},
                    {iv(1), iv(1), iv(1), iv(-1), iv(-1)},
                    {iv(1), iv(1), iv(-1), iv(1), iv(-1)},
                    {iv(1), iv(1), iv(-1), iv(-1), iv(1)},
                    {iv(2), iv(-2), iv(0), iv(0), iv(0)}});
}

json d8_fixture() {
    return fixture("D8", 8, 4, {1, 1, 2, 2, 2}, {1, 2, 4, 2, 2},
                   {{iv(1), iv(1), iv(1), iv(1), iv(1)},
                    {iv(1), iv(1), iv(1), iv(-1), iv(-1)},
                    {iv(1), iv(1), iv(-1), iv(1), iv(-1)},
                    {iv(1), iv(1), iv(-1), iv(-1), iv(1)},
                    {iv(2), iv(-2), iv(0), iv(0), iv(0)}});
}

json sl23_fixture() {
    // omega = z3, omega^2 = -1 - z3
    json w = cyv(3, {"0", "1"});
    json w2 = cyv(3, {"-1", "-1"});
    json mw = cyv(3, {"0", "-1"});
    json mw2 = cyv(3, {"1", "1"});
    return fixture("SL2(3)", 24, 12, {1, 1, 6, 4, 4, 4, 4}, {1, 2, 4, 3, 3, 6, 6},
                   {{iv(1), iv(1), iv(1), iv(1), iv(1), iv(1), iv(1)},
                    {iv(1), iv(1), iv(1), w, w2, w, w2},
                    {iv(1), iv(1), iv(1), w2, w, w2, w},
                    {iv(2), iv(-2), iv(0), iv(-1), iv(-1), iv(1), iv(1)},
                    {iv(2), iv(-2), iv(0), mw, mw2, w, w2},
                    {iv(2), iv(-2), iv(0), mw2, mw, w2, w},
                    {iv(3), iv(3), iv(-1), iv(0), iv(0), iv(0), iv(0)}});
}

std::multiset<long long> degree_multiset(const CharacterTable& T) {
    std::multiset<long long> out;
    for (std::uint32_t r = 0; r < T.num_rows(); ++r)
        out.insert(static_cast<long long>(T.degree(r)));
    return out;
}

} // namespace

TEST_CASE("class multiplication coefficients") {
    auto G = s3();
    // identity class is class 0
    CHECK(class_mult_coefficient(G, 0, 0, 0) == 1);
    const auto& ct = G.conjugacy_classes();
    // transposition class x itself at the identity: |K| pairs (x, x^{-1})
    std::uint32_t tcls = G.class_of(cyc(3, {{0, 1}}));
    CHECK(class_mult_coefficient(G, tcls, tcls, 0) == 3);
    // counting identity: sum_k a_ijk |K_k| = |K_i| |K_j|, all i, j (on S4)
    auto H = s4();
    const auto& hct = H.conjugacy_classes();
    for (std::uint32_t i = 0; i < hct.count(); ++i)
        for (std::uint32_t j = 0; j < hct.count(); ++j) {
            std::uint64_t total = 0;
            for (std::uint32_t k = 0; k < hct.count(); ++k)
                total += class_mult_coefficient(H, i, j, k) * hct.sizes[k];
            CHECK(total == hct.sizes[i] * hct.sizes[j]);
        }
}

TEST_CASE("dixon tables match the classical fixtures") {
    auto check = [](const perm::PermGroup& G, const json& fix) {
        CharacterTable computed = CharacterTable::dixon(G);
        CharacterTable oracle = CharacterTable::ingest(fix);
        CHECK(tables_equivalent(computed, oracle));
        computed.verify_orthogonality();
        BigInt dsum = 0;
        for (std::uint32_t r = 0; r < computed.num_rows(); ++r)
            dsum += computed.degree(r) * computed.degree(r);
        CHECK(dsum == G.order());
    };
    check(s3(), s3_fixture());
    check(s4(), s4_fixture());
    check(a5(), a5_fixture());
    check(q8(), q8_fixture());
    check(d8(), d8_fixture());
    check(sl23(), sl23_fixture());
}

TEST_CASE("GL2(3) table shape") {
    CharacterTable T = CharacterTable::dixon(gl23());
    CHECK(T.num_rows() == 8);
    CHECK(degree_multiset(T) == std::multiset<long long>{1, 1, 2, 2, 2, 3, 3, 4});
}

TEST_CASE("dixon output is independent of the prime") {
    for (auto make : {s3, q8, sl23, gl23}) {
        auto G = make();
        CharacterTable a = CharacterTable::dixon(G, 0);
        CharacterTable b = CharacterTable::dixon(G, 1);
        REQUIRE(a.dixon_prime() != b.dixon_prime());
        REQUIRE(a.num_rows() == b.num_rows());
        // canonical row order makes the tables literally equal
        for (std::uint32_t r = 0; r < a.num_rows(); ++r)
            for (std::uint32_t k = 0; k < a.num_classes(); ++k)
                CHECK(a.value(r, k) == b.value(r, k));
    }
}

TEST_CASE("table values are closed under galois conjugation") {
    CharacterTable T = CharacterTable::dixon(sl23());
    std::uint32_t e = T.exponent();
    for (std::uint32_t t = 2; t < e; ++t) {
        if (std::gcd(t, e) != 1) continue;
        for (std::uint32_t r = 0; r < T.num_rows(); ++r) {
            bool found = false;
            for (std::uint32_t r2 = 0; r2 < T.num_rows() && !found; ++r2) {
                bool eq = true;
                for (std::uint32_t k = 0; k < T.num_classes() && eq; ++k)
                    eq = T.value(r, k).galois(t) == T.value(r2, k);
                found = eq;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("ingest validation") {
    CHECK_NOTHROW(CharacterTable::ingest(s3_fixture()));

    // one sign flipped: column orthogonality must flag it
    json bad = s3_fixture();
    bad["characters"][1][1] = iv(1);
    try {
        CharacterTable::ingest(bad);
        FAIL("expected rejection");
    } catch (const malformed_input_error& e) {
        CHECK(std::string(e.what()).find("orthogonality") != std::string::npos);
    }

    // class sizes not summing to the order
    json bad2 = s3_fixture();
    bad2["class_sizes"] = std::vector<std::uint64_t>{1, 2, 2};
    CHECK_THROWS_AS(CharacterTable::ingest(bad2), malformed_input_error);

    // missing key
    json bad3 = s3_fixture();
    bad3.erase("exponent");
    CHECK_THROWS_AS(CharacterTable::ingest(bad3), malformed_input_error);
}

TEST_CASE("table serialization round-trips") {
    CharacterTable T = CharacterTable::dixon(sl23(), 0, "SL2(3)");
    json j = T.to_json();
    CharacterTable back = CharacterTable::ingest(j);
    CHECK(back.group_order() == 24);
    CHECK(tables_equivalent(T, back));
    // power maps were emitted and survive
    CHECK(j.contains("power_maps"));
}

TEST_CASE("restriction to central subgroups") {
    auto G = q8();
    CharacterTable T = CharacterTable::dixon(G);
    auto Z = G.center();

    // trivial character restricts to the trivial linear character
    LinearChar mu = restrict_to_central(T, T.trivial_row(), Z);
    CHECK(mu.is_trivial());

    // Z = 1: always trivial
    auto Z1 = G.trivial_subgroup();
    for (std::uint32_t r = 0; r < T.num_rows(); ++r)
        CHECK(restrict_to_central(T, r, Z1).is_trivial());

    // the faithful lambda of Z(Q8) has exactly one character over it
    auto lambdas = linear_characters(Z);
    REQUIRE(lambdas.size() == 2);
    int faithful = lambdas[0].is_trivial() ? 1 : 0;
    auto over = irr_over(T, Z, lambdas[faithful]);
    REQUIRE(over.size() == 1);
    CHECK(T.degree(over[0]) == 2);

    // trivial lambda: the characters with Z in the kernel (the four linears)
    auto over_triv = irr_over(T, Z, lambdas[1 - faithful]);
    CHECK(over_triv.size() == 4);
    for (auto r : over_triv) CHECK(T.degree(r) == 1);
}

TEST_CASE("sum of squared degrees over each lambda is |G|/|Z|") {
    for (auto make : {q8, sl23, gl23}) {
        auto G = make();
        CharacterTable T = CharacterTable::dixon(G);
        auto Z = G.center();
        for (const auto& lam : linear_characters(Z)) {
            BigInt sum = 0;
            for (auto r : irr_over(T, Z, lam)) sum += T.degree(r) * T.degree(r);
            CHECK(sum == G.order() / Z.order());
        }
    }
}

TEST_CASE("restriction multiplicities via fusion") {
    auto G = s3();
    CharacterTable TG = CharacterTable::dixon(G);
    auto A3 = G.subgroup({cyc(3, {{0, 1, 2}})});
    CharacterTable TH = CharacterTable::dixon(A3.group());

    // trivial over trivial: multiplicity 1
    CHECK(restriction_multiplicity(TG, TG.trivial_row(), A3, TH, TH.trivial_row()) == 1);

    // the degree-2 character of S3 restricted to A3 = both nontrivial linears
    std::uint32_t two = UINT32_MAX;
    for (std::uint32_t r = 0; r < TG.num_rows(); ++r)
        if (TG.degree(r) == 2) two = r;
    REQUIRE(two != UINT32_MAX);
    int nontrivial_hits = 0;
    for (std::uint32_t h = 0; h < TH.num_rows(); ++h) {
        BigInt m = restriction_multiplicity(TG, two, A3, TH, h);
        if (h == TH.trivial_row()) {
            CHECK(m == 0);
        } else {
            CHECK(m == 1);
            ++nontrivial_hits;
        }
    }
    CHECK(nontrivial_hits == 2);

    // GL2(3): a faithful degree-2 character restricted to Q8 contains theta
    auto GL = gl23();
    CharacterTable TGL = CharacterTable::dixon(GL);
    auto Q = GL.subgroup(q8_in_gl23());
    REQUIRE(Q.order() == 8);
    CharacterTable TQ = CharacterTable::dixon(Q.group());
    std::uint32_t theta = UINT32_MAX;
    for (std::uint32_t h = 0; h < TQ.num_rows(); ++h)
        if (TQ.degree(h) == 2) theta = h;
    REQUIRE(theta != UINT32_MAX);
    auto Zgl = GL.center();
    auto lams = linear_characters(Zgl);
    bool found_containing = false;
    for (std::uint32_t r = 0; r < TGL.num_rows(); ++r) {
        if (TGL.degree(r) != 2) continue;
        LinearChar mu = restrict_to_central(TGL, r, Zgl);
        if (mu.is_trivial()) continue; // the PGL2(3)-factoring character
        BigInt m = restriction_multiplicity(TGL, r, Q, TQ, theta);
        CHECK(m == 1);
        found_containing = true;
    }
    CHECK(found_containing);
}

TEST_CASE("irr_over rejects non-homomorphisms") {
    auto G = q8();
    CharacterTable T = CharacterTable::dixon(G);
    auto Z = G.center();
    auto lam = linear_characters(Z)[0];
    // corrupt a value so lambda(ab) != lambda(a)lambda(b)
    lam.values[1] = Cyclotomic(5);
    CHECK_THROWS_AS(irr_over(T, Z, lam), malformed_input_error);
}

TEST_CASE("trivial group table") {
    auto triv = perm::PermGroup::from_generators(1, {});
    CharacterTable T = CharacterTable::dixon(triv);
    CHECK(T.num_rows() == 1);
    CHECK(T.degree(0) == 1);
}
