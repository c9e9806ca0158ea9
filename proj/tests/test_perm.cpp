#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "brauer/group.hpp"

using namespace brauer;
using namespace brauer::perm;

// --------------------------------------------------------------------------
// brute-force oracles, independent of the stabilizer-chain machinery
// --------------------------------------------------------------------------
namespace naive {

std::set<std::vector<Point>> closure(const std::vector<Permutation>& gens) {
    std::uint32_t deg = gens.empty() ? 1 : gens[0].degree();
    std::set<std::vector<Point>> seen;
    std::vector<Permutation> queue{Permutation::identity(deg)};
    seen.insert(queue[0].images());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& g : gens) {
            auto nxt = compose(g, queue[head]);
            if (seen.insert(nxt.images()).second) queue.push_back(nxt);
        }
    }
    return seen;
}

std::multiset<std::size_t> class_sizes(const std::vector<Permutation>& gens) {
    auto elems = closure(gens);
    std::set<std::vector<Point>> unseen = elems;
    std::multiset<std::size_t> sizes;
    while (!unseen.empty()) {
        Permutation rep{*unseen.begin()};
        std::set<std::vector<Point>> orbit{rep.images()};
        std::vector<Permutation> queue{rep};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (const auto& g : gens) {
                auto c = conjugate(queue[head], g);
                if (orbit.insert(c.images()).second) queue.push_back(c);
            }
        }
        for (const auto& x : orbit) unseen.erase(x);
        sizes.insert(orbit.size());
    }
    return sizes;
}

std::size_t center_size(const std::vector<Permutation>& gens) {
    auto elems = closure(gens);
    std::size_t n = 0;
    for (const auto& ximg : elems) {
        Permutation x{ximg};
        bool central = true;
        for (const auto& eimg : elems) {
            Permutation e{eimg};
            if (compose(x, e) != compose(e, x)) {
                central = false;
                break;
            }
        }
        if (central) ++n;
    }
    return n;
}

} // namespace naive

namespace {

Permutation cyc(std::uint32_t deg, const std::vector<std::vector<std::uint32_t>>& cycles) {
    return Permutation::from_cycles(deg, cycles);
}

// Q8 in its left-regular action on (1, -1, i, -i, j, -j, k, -k)
std::vector<Permutation> q8_gens() {
    return {Permutation({2, 3, 1, 0, 6, 7, 5, 4}), Permutation({4, 5, 7, 6, 1, 0, 2, 3})};
}

// SL2(F3) acting on the 8 nonzero column vectors of F3^2, lexicographic
std::vector<Permutation> sl23_gens() {
    std::vector<std::pair<int, int>> vecs;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a || b) vecs.emplace_back(a, b);
    auto index = [&](int a, int b) {
        return static_cast<Point>(std::find(vecs.begin(), vecs.end(),
                                            std::make_pair(a, b)) -
                                  vecs.begin());
    };
    std::vector<Point> t(8), s(8);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        auto [a, b] = vecs[i];
        t[i] = index((a + b) % 3, b);
        s[i] = index((3 - b) % 3, a);
    }
    return {Permutation(t), Permutation(s)};
}

} // namespace

TEST_CASE("composition convention and basic invariants") {
    auto a = cyc(3, {{0, 1, 2}});
    auto b = cyc(3, {{0, 1}});
    // compose(a, b) applies b first
    CHECK(compose(a, b)(0) == a(b(0)));
    CHECK(compose(a, b) == cyc(3, {{0, 2}}));
    // inverse anti-homomorphism
    CHECK(compose(a, b).inverse() == compose(b.inverse(), a.inverse()));
    CHECK(a.order() == 3);
    CHECK(a.power(-1) == a.inverse());
    CHECK_THROWS_AS(Permutation({0, 0, 1}), malformed_input_error);
    CHECK_THROWS_AS(cyc(3, {{0, 1}, {1, 2}}), malformed_input_error);
}

TEST_CASE("orders by stabilizer chain agree with closure") {
    auto s3 = PermGroup::from_generators(3, {cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})});
    CHECK(s3.order() == 6);

    auto v4 = PermGroup::from_generators(4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
    CHECK(v4.order() == 4);

    auto q8 = PermGroup::from_generators(8, q8_gens());
    CHECK(q8.order() == naive::closure(q8_gens()).size());
    CHECK(q8.order() == 8);

    auto sl23 = PermGroup::from_generators(8, sl23_gens());
    CHECK(sl23.order() == naive::closure(sl23_gens()).size());
    CHECK(sl23.order() == 24);

    CHECK(sl23.contains(q8_gens().empty() ? Permutation::identity(8)
                                          : Permutation::identity(8)));
    CHECK_FALSE(sl23.contains(cyc(8, {{0, 1}})));
}

TEST_CASE("conjugacy classes match the brute-force oracle") {
    auto s3gens = std::vector<Permutation>{cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})};
    auto s3 = PermGroup::from_generators(3, s3gens);
    const auto& ct = s3.conjugacy_classes();
    std::multiset<std::size_t> sizes(ct.sizes.begin(), ct.sizes.end());
    CHECK(sizes == naive::class_sizes(s3gens));
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});

    auto q8 = PermGroup::from_generators(8, q8_gens());
    const auto& qt = q8.conjugacy_classes();
    std::multiset<std::size_t> qsizes(qt.sizes.begin(), qt.sizes.end());
    CHECK(qsizes == naive::class_sizes(q8_gens()));
    CHECK(qsizes == std::multiset<std::size_t>{1, 1, 2, 2, 2});

    auto triv = PermGroup::from_generators(2, {});
    CHECK(triv.conjugacy_classes().count() == 1);
    CHECK(triv.conjugacy_classes().sizes[0] == 1);

    // identity class first, representatives minimal, sizes sum to |G|
    CHECK(qt.reps[0].is_identity());
    std::uint64_t total = 0;
    for (std::uint32_t k = 0; k < qt.count(); ++k) {
        total += qt.sizes[k];
        CHECK(q8.order() % qt.sizes[k] == 0);
    }
    CHECK(total == q8.order());
}

TEST_CASE("centralizer and center") {
    auto q8 = PermGroup::from_generators(8, q8_gens());
    CHECK(q8.center().order() == naive::center_size(q8_gens()));
    CHECK(q8.center().order() == 2);

    // |centralizer| * |class| = |G|
    const auto& ct = q8.conjugacy_classes();
    for (std::uint32_t k = 0; k < ct.count(); ++k)
        CHECK(q8.centralizer(ct.reps[k]).order() * ct.sizes[k] == q8.order());

    auto s3 = PermGroup::from_generators(3, {cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})});
    CHECK(s3.center().order() == 1);
    auto der = s3.derived_subgroup();
    CHECK(der.order() == 3);
    CHECK(der.contains(cyc(3, {{0, 1, 2}})));
}

TEST_CASE("sylow subgroups") {
    auto sl23 = PermGroup::from_generators(8, sl23_gens());
    CHECK(sl23.sylow(2).order() == 8);
    CHECK(sl23.sylow(3).order() == 3);
    CHECK(sl23.sylow(5).order() == 1);
    CHECK_THROWS_AS(sl23.sylow(4), malformed_input_error);

    auto s3 = PermGroup::from_generators(3, {cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})});
    CHECK(s3.sylow(2).order() == 2);
    CHECK(s3.sylow(3).order() == 3);
}

TEST_CASE("quotient by central subgroup") {
    auto q8 = PermGroup::from_generators(8, q8_gens());
    auto z = q8.center();
    auto [quot, proj] = q8.quotient_by_central(z);
    CHECK(quot.order() == 4);
    CHECK(quot.is_abelian());
    // projection is a homomorphism with kernel exactly Z
    for (const auto& a : q8.elements())
        for (const auto& b : q8.generators())
            CHECK(proj.apply(compose(a, b)) == compose(proj.apply(a), proj.apply(b)));
    for (const auto& zel : z.group().elements()) CHECK(proj.apply(zel).is_identity());
    CHECK_FALSE(proj.apply(q8.generators()[0]).is_identity());

    // SL2(3) / center has the class sizes of A4
    auto sl23 = PermGroup::from_generators(8, sl23_gens());
    auto [a4, proj2] = sl23.quotient_by_central(sl23.center());
    CHECK(a4.order() == 12);
    std::multiset<std::uint64_t> sizes(a4.conjugacy_classes().sizes.begin(),
                                       a4.conjugacy_classes().sizes.end());
    CHECK(sizes == std::multiset<std::uint64_t>{1, 3, 4, 4});

    // trivial kernel: same class-size multiset as the group itself
    auto [same, proj3] = sl23.quotient_by_central(sl23.trivial_subgroup());
    CHECK(same.order() == sl23.order());
    std::multiset<std::uint64_t> s1(sl23.conjugacy_classes().sizes.begin(),
                                    sl23.conjugacy_classes().sizes.end());
    std::multiset<std::uint64_t> s2(same.conjugacy_classes().sizes.begin(),
                                    same.conjugacy_classes().sizes.end());
    CHECK(s1 == s2);

    // non-central kernel is rejected
    auto s3 = PermGroup::from_generators(3, {cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})});
    CHECK_THROWS_AS(s3.quotient_by_central(s3.subgroup({cyc(3, {{0, 1}})})),
                    precondition_error);
}

TEST_CASE("subgroup lists of abelian p-groups") {
    auto c4 = PermGroup::from_generators(4, {cyc(4, {{0, 1, 2, 3}})});
    CHECK(subgroups_of_abelian_p_group(c4.whole_subgroup(), 2).size() == 3);

    auto v4 = PermGroup::from_generators(4, {cyc(4, {{0, 1}}), cyc(4, {{2, 3}})});
    CHECK(subgroups_of_abelian_p_group(v4.whole_subgroup(), 2).size() == 5);

    auto c2 = PermGroup::from_generators(2, {cyc(2, {{0, 1}})});
    CHECK(subgroups_of_abelian_p_group(c2.whole_subgroup(), 2).size() == 2);

    auto s3 = PermGroup::from_generators(3, {cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})});
    CHECK_THROWS_AS(subgroups_of_abelian_p_group(s3.whole_subgroup(), 2),
                    precondition_error);
}

TEST_CASE("element order and p-regularity") {
    CHECK(element_order(Permutation::identity(4)) == 1);
    CHECK(is_p_regular(Permutation::identity(4), 2));
    auto four = cyc(4, {{0, 1, 2, 3}});
    CHECK(element_order(four) == 4);
    CHECK_FALSE(is_p_regular(four, 2));
    auto six = cyc(6, {{0, 1, 2, 3, 4, 5}});
    CHECK(element_order(six) == 6);
    CHECK_FALSE(is_p_regular(six, 3));
    CHECK_FALSE(is_p_regular(six, 2));
    CHECK(is_p_regular(six, 5));
}

TEST_CASE("enumeration cap raises a resource error naming the cap") {
    Caps caps;
    caps.enumeration = 5;
    auto s3 = PermGroup::from_generators(3, {cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})}, caps);
    CHECK(s3.order() == 6); // chain order needs no enumeration
    try {
        s3.elements();
        FAIL("expected resource_error");
    } catch (const resource_error& e) {
        CHECK(std::string(e.what()).find("5") != std::string::npos);
    }
}
