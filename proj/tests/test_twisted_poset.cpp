#include "twisted/twisted_poset.hpp"

#include <cstdlib>
#include <set>

#include "doctest.h"
#include "twisted/errors.hpp"

using twisted::GroupContext;
using twisted::GroupElement;
using twisted::Permutation;
using twisted::TwistedPoset;
using twisted::twist;

namespace {

GroupElement single(const std::string& s) { return GroupElement(*Permutation::parse(s)); }

}  // namespace

TEST_CASE("twist action") {
    auto ctx = GroupContext::symmetric_flip(4);
    CHECK(twist(ctx, ctx.identity(), ctx.generator(1)) == single("2143"));
    CHECK(twist(ctx, ctx.identity(), ctx.generator(2)) == ctx.identity());
    CHECK(twist(ctx, single("2143"), ctx.identity()) == single("2143"));

    SUBCASE("star is a right action") {
        auto all = ctx.all_elements();
        auto u = single("2143");
        for (const auto& v : all)
            for (const auto& w : all)
                CHECK(twist(ctx, twist(ctx, u, v), w) == twist(ctx, u, v.compose(w)));
    }
}

TEST_CASE("twisted identity membership") {
    auto ctx = GroupContext::symmetric_flip(4);
    CHECK(twisted::is_twisted_identity(ctx, ctx.identity()));
    CHECK(twisted::is_twisted_identity(ctx, single("2143")));
    CHECK(twisted::is_twisted_identity(ctx, single("3412")));
    // s2 is a twisted involution but not a twisted identity
    CHECK(twisted::is_twisted_involution(ctx, single("1324")));
    CHECK(!twisted::is_twisted_identity(ctx, single("1324")));
    CHECK(!twisted::is_twisted_involution(ctx, single("2134")));

    auto ti = twisted::make_twisted_identity(ctx, single("3412"));
    CHECK(ti.rank == 2);
    CHECK_THROWS_AS(twisted::make_twisted_identity(ctx, single("1324")), std::invalid_argument);
}

TEST_CASE("enumerate flip:4") {
    auto poset = TwistedPoset::enumerate(GroupContext::symmetric_flip(4));
    REQUIRE(poset.size() == 3);
    CHECK(poset.element(0) == single("1234"));
    CHECK(poset.element(1) == single("2143"));
    CHECK(poset.element(2) == single("3412"));
    CHECK(poset.rank(0) == 0);
    CHECK(poset.rank(1) == 1);
    CHECK(poset.rank(2) == 2);
    CHECK(poset.leq(0, 1));
    CHECK(poset.leq(1, 2));
    CHECK(poset.leq(0, 2));
    CHECK(!poset.leq(2, 1));
    CHECK(poset.rank_counts() == std::vector<int>{1, 1, 1});
    CHECK(poset.bottom() == 0);
    CHECK(poset.top() == 2);
    CHECK(poset.upper_covers(0) == std::vector<int>{1});
    CHECK(poset.upper_covers(1) == std::vector<int>{2});
    CHECK(poset.export_text() == "0\t1234\n1\t2143\n2\t3412\n\n0 1\n1 2\n");
}

TEST_CASE("enumeration equals the direct image of w -> theta(w^-1) w") {
    for (const auto& ctx : {GroupContext::symmetric_flip(4), GroupContext::symmetric_flip(6),
                            GroupContext::diagonal_product(3), GroupContext::diagonal_product(4)}) {
        auto poset = TwistedPoset::enumerate(ctx);
        std::set<GroupElement> direct;
        for (const auto& w : ctx.all_elements()) direct.insert(ctx.theta(w.inverse()).compose(w));
        REQUIRE(direct.size() == static_cast<size_t>(poset.size()));
        for (int i = 0; i < poset.size(); ++i) {
            CHECK(direct.count(poset.element(i)));
            CHECK(poset.element(i).length() % 2 == 0);
            CHECK(poset.rank(i) == poset.element(i).length() / 2);
            CHECK(twisted::is_twisted_identity(ctx, poset.element(i)));
        }
    }
}

TEST_CASE("cardinality is (2n-1)!! for the flip models") {
    CHECK(TwistedPoset::enumerate(GroupContext::symmetric_flip(2)).size() == 1);
    CHECK(TwistedPoset::enumerate(GroupContext::symmetric_flip(4)).size() == 3);
    CHECK(TwistedPoset::enumerate(GroupContext::symmetric_flip(6)).size() == 15);
    CHECK(TwistedPoset::enumerate(GroupContext::symmetric_flip(8)).size() == 105);
}

TEST_CASE("flip:6 rank counts") {
    auto poset = TwistedPoset::enumerate(GroupContext::symmetric_flip(6));
    CHECK(poset.rank_counts() == std::vector<int>{1, 2, 3, 3, 3, 2, 1});
    CHECK(poset.element(poset.top()) == single("563412"));
}

TEST_CASE("diagonal poset is the Bruhat order of the factor") {
    auto ctx = GroupContext::diagonal_product(3);
    auto poset = TwistedPoset::enumerate(ctx);
    REQUIRE(poset.size() == 6);
    for (int i = 0; i < poset.size(); ++i) {
        const auto& e = poset.element(i);
        CHECK(e.part(1) == e.part(0).inverse());
        CHECK(poset.rank(i) == e.part(0).length());
        for (int j = 0; j < poset.size(); ++j)
            CHECK(poset.leq(i, j) == bruhat_leq(poset.element(i).part(0), poset.element(j).part(0)));
    }
}

TEST_CASE("descents") {
    auto poset = TwistedPoset::enumerate(GroupContext::symmetric_flip(4));
    CHECK(poset.descents(0).empty());
    CHECK(poset.descents(1) == std::vector<int>{1, 3});
    CHECK(poset.descents(2) == std::vector<int>{2});

    SUBCASE("only the minimum has no descents") {
        for (const auto& ctx : {GroupContext::symmetric_flip(6), GroupContext::diagonal_product(4)}) {
            auto p = TwistedPoset::enumerate(ctx);
            for (int i = 1; i < p.size(); ++i) CHECK(!p.descents(i).empty());
        }
    }
}

TEST_CASE("intervals") {
    auto poset = TwistedPoset::enumerate(GroupContext::symmetric_flip(4));
    CHECK(poset.interval(0, 0) == std::vector<int>{0});
    CHECK(poset.interval(0, 2) == std::vector<int>{0, 1, 2});
    CHECK(poset.interval(2, 1).empty());
}

TEST_CASE("interval of the degree-fingerprint element in flip:6") {
    auto poset = TwistedPoset::enumerate(GroupContext::symmetric_flip(6));
    auto w = poset.index_of(single("426153"));
    REQUIRE(w);
    CHECK(poset.rank(*w) == 4);
    auto iv = poset.interval(poset.bottom(), *w);
    CHECK(iv.size() == 10);
    std::vector<int> n(5, 0);
    for (int z : iv) ++n[static_cast<size_t>(poset.rank(z))];
    CHECK(n == std::vector<int>{1, 2, 3, 3, 1});
}

TEST_CASE("full intervals") {
    auto poset = TwistedPoset::enumerate(GroupContext::symmetric_flip(4));
    CHECK(poset.is_full_interval(1, 1));
    CHECK(!poset.is_full_interval(0, 2));
    CHECK(poset.is_full_interval(0, 1));
    CHECK_THROWS_AS(poset.is_full_interval(2, 0), std::invalid_argument);
}

TEST_CASE("moebius function") {
    auto poset = TwistedPoset::enumerate(GroupContext::symmetric_flip(4));
    CHECK(poset.mobius_closed(1, 1) == 1);
    CHECK(poset.mobius_closed(0, 1) == -1);
    CHECK(poset.mobius_closed(0, 2) == 0);

    SUBCASE("closed form equals the poset recursion on every pair") {
        for (const auto& ctx : {GroupContext::symmetric_flip(4), GroupContext::symmetric_flip(6),
                                GroupContext::diagonal_product(3), GroupContext::diagonal_product(4)}) {
            auto p = TwistedPoset::enumerate(ctx);
            for (int u = 0; u < p.size(); ++u)
                for (int w = 0; w < p.size(); ++w) CHECK(p.mobius_closed(u, w) == p.mobius_recursive(u, w));
        }
    }
}

TEST_CASE("lifting property") {
    for (const auto& ctx : {GroupContext::symmetric_flip(4), GroupContext::symmetric_flip(6),
                            GroupContext::diagonal_product(3), GroupContext::diagonal_product(4)}) {
        auto p = TwistedPoset::enumerate(ctx);
        for (int v = 0; v < p.size(); ++v)
            for (int s : p.descents(v)) {
                int vs = p.star_generator(v, s);
                for (int u = 0; u < p.size(); ++u) {
                    if (u == v || !p.leq(u, v)) continue;
                    int us = p.star_generator(u, s);
                    if (p.rank(us) > p.rank(u)) CHECK(p.leq(u, vs));
                }
            }
    }
}

TEST_CASE("order matrix kernels agree") {
    for (const auto& ctx : {GroupContext::symmetric_flip(6), GroupContext::diagonal_product(4)}) {
        auto serial = TwistedPoset::enumerate(ctx, false);
        auto parallel = TwistedPoset::enumerate(ctx, true);
        REQUIRE(serial.size() == parallel.size());
        for (int u = 0; u < serial.size(); ++u)
            for (int w = 0; w < serial.size(); ++w) CHECK(serial.leq(u, w) == parallel.leq(u, w));
    }
}

TEST_CASE("capacity bounds") {
    unsetenv("TWISTED_MAX_N");
    CHECK_THROWS_AS(TwistedPoset::enumerate(GroupContext::symmetric_flip(10)), twisted::capacity_error);
    CHECK_THROWS_AS(TwistedPoset::enumerate(GroupContext::diagonal_product(6)), twisted::capacity_error);

    SUBCASE("TWISTED_MAX_N overrides the cap in both directions") {
        setenv("TWISTED_MAX_N", "4", 1);
        CHECK_THROWS_AS(TwistedPoset::enumerate(GroupContext::symmetric_flip(6)), twisted::capacity_error);
        CHECK_NOTHROW(TwistedPoset::enumerate(GroupContext::symmetric_flip(4)));
        setenv("TWISTED_MAX_N", "6", 1);
        CHECK_NOTHROW(TwistedPoset::enumerate(GroupContext::symmetric_flip(6)));
        unsetenv("TWISTED_MAX_N");
    }
}

TEST_CASE("twisted involutions by filtering W") {
    auto ctx = GroupContext::symmetric_flip(4);
    auto inv = twisted::twisted_involutions(ctx);
    std::set<GroupElement> got(inv.begin(), inv.end());
    std::set<GroupElement> expect;
    for (const auto& x : ctx.all_elements())
        if (ctx.theta(x) == x.inverse()) expect.insert(x);
    CHECK(got == expect);
    CHECK(got.count(single("1324")));

    auto diag = twisted::twisted_involutions(GroupContext::diagonal_product(3));
    CHECK(diag.size() == 6);
}
