#include "twisted/fpf.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "twisted/bruhat_graph.hpp"
#include "twisted/errors.hpp"
#include "twisted/twisted_poset.hpp"

using twisted::FpfInvolution;
using twisted::GroupContext;
using twisted::GroupElement;
using twisted::Permutation;
using twisted::Transposition;

namespace {

FpfInvolution fpf(const std::string& s) { return FpfInvolution(*Permutation::parse(s)); }

}  // namespace

TEST_CASE("fixed point free involutions validate") {
    CHECK_NOTHROW(fpf("2143"));
    CHECK_NOTHROW(fpf("4321"));
    CHECK_THROWS_AS(fpf("1234"), std::invalid_argument);  // fixed points
    CHECK_THROWS_AS(fpf("2134"), std::invalid_argument);  // fixed points
    CHECK_THROWS_AS(fpf("2341"), std::invalid_argument);  // not an involution
    CHECK(fpf("4321").cycle_form() == "(1 4)(2 3)");
    CHECK(fpf("2143").cycle_form() == "(1 2)(3 4)");
}

TEST_CASE("cycle parsing") {
    auto p = FpfInvolution::parse_cycles("(1 2)(3 4)", 4);
    REQUIRE(p);
    CHECK(*p == fpf("2143"));
    CHECK(*FpfInvolution::parse_cycles("(2 3)(1 4)", 4) == fpf("4321"));
    CHECK(!FpfInvolution::parse_cycles("(1 2)", 4));          // incomplete
    CHECK(!FpfInvolution::parse_cycles("(1 2)(2 3)", 4));     // reused point
    CHECK(!FpfInvolution::parse_cycles("(1 2)(3 5)", 4));     // out of range
    CHECK(!FpfInvolution::parse_cycles("1 2 3 4", 4));        // not cycle form
    CHECK(!FpfInvolution::parse_cycles("(1 2)(3 4)", 5));     // odd ground set

    SUBCASE("round trip over all of F_6") {
        for (const auto& u : twisted::all_fpf(6))
            CHECK(*FpfInvolution::parse_cycles(u.cycle_form(), 6) == u);
    }
}

TEST_CASE("star action") {
    CHECK(fpf_star(fpf("2143"), {1, 2}) == fpf("2143"));
    CHECK(fpf_star(fpf("4321"), {1, 2}) == fpf("3412"));
    CHECK(fpf_star(fpf("4321"), {1, 3}) == fpf("2143"));
    CHECK_THROWS_AS(fpf_star(fpf("2143"), {1, 9}), std::invalid_argument);

    SUBCASE("fixes u exactly at its own 2-cycles") {
        for (const auto& u : twisted::all_fpf(6))
            for (int a = 1; a <= 6; ++a)
                for (int b = a + 1; b <= 6; ++b)
                    CHECK((fpf_star(u, {a, b}) == u) == (u(a) == b));
    }
}

TEST_CASE("dual order") {
    auto w0 = fpf("4321");
    CHECK(fpf_preceq(w0, fpf("2143")));
    CHECK(fpf_preceq(w0, fpf("3412")));
    CHECK(fpf_preceq(w0, w0));
    CHECK(!fpf_preceq(fpf("2143"), w0));
    CHECK(fpf_preceq(w0, fpf("2143")));
    CHECK(!fpf_preceq(fpf("2143"), fpf("3412")));

    SUBCASE("is reversed Bruhat order") {
        for (const auto& u : twisted::all_fpf(6))
            for (const auto& w : twisted::all_fpf(6))
                CHECK(fpf_preceq(u, w) == bruhat_leq(w.permutation(), u.permutation()));
    }
}

TEST_CASE("counts of F_2n") {
    CHECK(twisted::all_fpf(2).size() == 1);
    CHECK(twisted::all_fpf(4).size() == 3);
    CHECK(twisted::all_fpf(6).size() == 15);
    CHECK(twisted::all_fpf(8).size() == 105);
    CHECK_THROWS_AS(twisted::all_fpf(5), std::invalid_argument);
}

TEST_CASE("bridge to the twisted identities") {
    auto ctx = GroupContext::symmetric_flip(4);
    CHECK(to_fpf(ctx, ctx.identity()) == fpf("4321"));
    CHECK(to_fpf(ctx, GroupElement(*Permutation::parse("2143"))) == fpf("3412"));
    CHECK(to_fpf(ctx, GroupElement(*Permutation::parse("3412"))) == fpf("2143"));
    CHECK(to_iota(ctx, fpf("4321")) == ctx.identity());
    CHECK(to_iota(ctx, fpf("2143")) == GroupElement(*Permutation::parse("3412")));
    CHECK_THROWS_AS(to_fpf(ctx, GroupElement(*Permutation::parse("1324"))), std::invalid_argument);
    CHECK_THROWS_AS(to_fpf(GroupContext::diagonal_product(3), GroupContext::diagonal_product(3).identity()),
                    twisted::unsupported_model_error);

    SUBCASE("poset isomorphism") {
        for (int two_n : {4, 6}) {
            auto c = GroupContext::symmetric_flip(two_n);
            auto poset = twisted::TwistedPoset::enumerate(c);
            for (int i = 0; i < poset.size(); ++i) {
                auto fi = to_fpf(c, poset.element(i));
                CHECK(to_iota(c, fi) == poset.element(i));
                for (int j = 0; j < poset.size(); ++j)
                    CHECK(poset.leq(i, j) == fpf_preceq(fi, to_fpf(c, poset.element(j))));
            }
        }
    }

    SUBCASE("graph isomorphism") {
        for (int two_n : {4, 6}) {
            auto c = GroupContext::symmetric_flip(two_n);
            auto poset = twisted::TwistedPoset::enumerate(c);
            for (int w = 0; w < poset.size(); ++w) {
                auto fw = to_fpf(c, poset.element(w));
                auto graph = twisted::BruhatGraph::build(c, poset, w);
                for (int u : graph.vertices()) {
                    std::set<FpfInvolution> through_bridge;
                    for (int e : graph.incident(u))
                        through_bridge.insert(
                            to_fpf(c, poset.element(graph.other_endpoint(e, u))));
                    auto native = fpf_neighbours(to_fpf(c, poset.element(u)), fw);
                    CHECK(std::set<FpfInvolution>(native.begin(), native.end()) == through_bridge);
                }
            }
        }
    }
}

TEST_CASE("every moved edge has exactly one partner") {
    for (const auto& u : twisted::all_fpf(6))
        for (int a = 1; a <= 6; ++a)
            for (int b = a + 1; b <= 6; ++b) {
                Transposition t{a, b};
                if (u(a) == b) {
                    CHECK_THROWS_AS(edge_partner(u, t), std::invalid_argument);
                    continue;
                }
                auto partner = edge_partner(u, t);
                CHECK(partner == Transposition{u(a), u(b)});
                int count = 0;
                for (int x = 1; x <= 6; ++x)
                    for (int y = x + 1; y <= 6; ++y) {
                        Transposition s{x, y};
                        if (!(s == t) && fpf_star(u, s) == fpf_star(u, t)) {
                            ++count;
                            CHECK(s == partner);
                        }
                    }
                CHECK(count == 1);
            }
}

TEST_CASE("compatibility") {
    auto u = fpf("3412");
    Transposition r{1, 2};
    CHECK(is_compatible(u, r, {2, 3}));
    CHECK(!is_compatible(u, r, {3, 4}));
    CHECK(is_compatible(u, r, {1, 2}));
    // moving u up or fixing it disqualifies r
    CHECK_THROWS_AS(is_compatible(fpf("4321"), {1, 2}, {2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(is_compatible(fpf("2143"), {1, 2}, {2, 3}), std::invalid_argument);

    SUBCASE("support disjoint from all four points is always compatible") {
        auto v = fpf("341265");
        Transposition rr{1, 2};
        REQUIRE(fpf_preceq(fpf_star(v, rr), v));
        CHECK(is_compatible(v, rr, {5, 6}));
    }
}

TEST_CASE("epsilon on the smallest example") {
    auto u = fpf("3412");
    auto w = fpf("2143");
    Transposition r{1, 2};

    // both transpositions of the edge {3412, 2143} are compatible with r, so
    // this exercises the agreement assertion inside epsilon
    auto first = epsilon(u, r, w, fpf("2143"));
    CHECK(first.t_e == Transposition{1, 4});
    CHECK(first.tau_e == Transposition{2, 4});
    CHECK(first.image_edge.first == fpf("2143"));
    CHECK(first.image_edge.second == fpf("4321"));

    auto second = epsilon(u, r, w, fpf("4321"));
    CHECK(second.t_e == Transposition{1, 2});
    CHECK(second.tau_e == Transposition{1, 2});
    CHECK(second.image_edge.first == fpf("3412"));
    CHECK(second.image_edge.second == fpf("4321"));

    CHECK(first.image_edge != second.image_edge);  // injective here

    SUBCASE("precondition violations") {
        CHECK_THROWS_AS(epsilon(u, r, w, u), std::invalid_argument);
        CHECK_THROWS_AS(epsilon(u, Transposition{1, 3}, w, fpf("2143")), std::invalid_argument);
        CHECK_THROWS_AS(epsilon(fpf("4321"), r, w, fpf("2143")), std::invalid_argument);
    }
}

TEST_CASE("edge injection exhaustively") {
    for (int two_n : {4, 6}) {
        auto all = twisted::all_fpf(two_n);
        for (const auto& w : all)
            for (const auto& u : all) {
                if (!fpf_preceq(u, w)) continue;
                auto out_u = fpf_neighbours(u, w);
                for (int i = 1; i <= two_n; ++i)
                    for (int j = i + 1; j <= two_n; ++j) {
                        Transposition r{i, j};
                        auto ur = fpf_star(u, r);
                        if (ur == u || !fpf_preceq(ur, u)) continue;
                        auto out_ur = fpf_neighbours(ur, w);
                        std::set<std::pair<FpfInvolution, FpfInvolution>> images;
                        for (const auto& v : out_u) {
                            auto choice = epsilon(u, r, w, v);
                            bool incident = choice.image_edge.first == ur ||
                                            choice.image_edge.second == ur;
                            CHECK(incident);
                            const auto& target = choice.image_edge.first == ur
                                                     ? choice.image_edge.second
                                                     : choice.image_edge.first;
                            CHECK(std::binary_search(out_ur.begin(), out_ur.end(), target));
                            images.insert(choice.image_edge);
                        }
                        CHECK(images.size() == out_u.size());   // injective
                        CHECK(out_ur.size() >= out_u.size());   // degrees grow downward
                    }
            }
    }
}

TEST_CASE("six element star orbits") {
    auto u = fpf("214365");  // (1 2)(3 4)(5 6)
    // three points 1,2,3 with partners 2,1,4: not all outside, orbit collapses
    CHECK_THROWS_AS(orbit6_check(u, {1, 2}, {2, 3}, u), std::invalid_argument);
    // disjoint supports never span a six orbit
    CHECK_THROWS_AS(orbit6_check(u, {1, 2}, {3, 4}, u), std::invalid_argument);

    auto v = fpf("456123");  // (1 4)(2 5)(3 6): partners of 1,2,3 all above 3
    std::set<FpfInvolution> orbit{v};
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& x : std::vector<FpfInvolution>(orbit.begin(), orbit.end()))
            for (Transposition t : {Transposition{1, 2}, Transposition{2, 3}})
                if (orbit.insert(fpf_star(x, t)).second) grew = true;
    }
    CHECK(orbit.size() == 6);
    CHECK(orbit6_check(v, {1, 2}, {2, 3}, fpf("654321")));

    SUBCASE("no forbidden five-in configuration exists in F_6") {
        auto all = twisted::all_fpf(6);
        int six_orbits = 0;
        for (const auto& x : all)
            for (int a = 1; a <= 6; ++a)
                for (int b = a + 1; b <= 6; ++b)
                    for (int c = 1; c <= 6; ++c)
                        for (int d = c + 1; d <= 6; ++d) {
                            Transposition t1{a, b}, t2{c, d};
                            if (!(t1 < t2)) continue;
                            int shared = static_cast<int>(t1.moves(c)) + static_cast<int>(t1.moves(d));
                            if (shared != 1) continue;
                            std::set<FpfInvolution> orb{x};
                            for (bool grew = true; grew;) {
                                grew = false;
                                for (const auto& y : std::vector<FpfInvolution>(orb.begin(), orb.end()))
                                    for (const auto& t : {t1, t2})
                                        if (orb.insert(fpf_star(y, t)).second) grew = true;
                            }
                            if (orb.size() != 6) {
                                CHECK_THROWS_AS(orbit6_check(x, t1, t2, all.front()),
                                                std::invalid_argument);
                                continue;
                            }
                            ++six_orbits;
                            for (const auto& w : all) CHECK(orbit6_check(x, t1, t2, w));
                        }
        CHECK(six_orbits > 0);
    }
}
