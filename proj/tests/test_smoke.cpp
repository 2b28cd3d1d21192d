#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "../src/factorization.hpp"
#include "../src/loc.hpp"
#include "../src/weq.hpp"
#include "fixtures.hpp"

using namespace ceq;
using fixtures::examples;

TEST_CASE("fixture lift counts") {
    const auto& p = examples();
    CHECK(fib::enumerate_lifts(p.dc11, p.c11).size() == 4);
    CHECK(fib::enumerate_lifts(p.dc1, p.c11).size() == 2);
}

TEST_CASE("initiality of the walking-arrow functors") {
    const auto& p = examples();
    auto r = comma::is_initial(p.r0);
    CHECK_FALSE(r.initial);
    CHECK(r.witness_object == 1);
    CHECK(comma::is_initial(p.s0).initial);
    CHECK(comma::is_initial(core::compose_functors(p.r0, p.s0)).initial);
}

TEST_CASE("relative initiality and Diag-> weak equivalence of (R0, id)") {
    const auto& p = examples();
    CHECK(comma::is_relatively_initial(p.m_r0).initial);
    CHECK(weq::is_weak_equivalence_right_pseudo(p.m_r0));
}

TEST_CASE("(u, id) is not a weak equivalence") {
    const auto& p = examples();
    auto r = weq::is_weak_equivalence_left(p.m_u);
    CHECK_FALSE(r.weq);
    CHECK(r.witness_is_target);
    CHECK(r.lifts_of_source == 2);
    CHECK(r.lifts_of_target == 4);

    auto oracle = weq::brute_force_weak_equivalence(p.m_u, 2);
    CHECK_FALSE(oracle.weq);
    CHECK(oracle.witness == "P_E");
}

TEST_CASE("factorization of c1") {
    const auto& p = examples();
    auto f = fact::comprehensive_factorize(p.dc1);
    CHECK(f.copresheaf.at[0].size() == 0);
    CHECK(f.copresheaf.at[1].size() == 1);
    CHECK(comma::is_initial(f.initial_part).initial);
    CHECK(fib::is_discrete_opfibration(f.opfibration_part).ok);
}

TEST_CASE("localized hom sets of the fixture diagrams") {
    const auto& p = examples();
    CHECK(loc::loc_hom_set(p.dc1, p.dc1).size() == 1);
    CHECK(loc::loc_hom_set(p.dc1, p.dc11).size() == 1);
    CHECK(loc::loc_hom_set(p.dc11, p.dc1).size() == 2);
}

TEST_CASE("zigzag round trip on fixture hom sets") {
    const auto& p = examples();
    for (const auto& pair : {std::pair{p.dc1, p.dc11}, {p.dc11, p.dc1}, {p.dc1, p.dc1}, {p.dc11, p.dc11}})
        for (const auto& h : loc::loc_hom_set(pair.first, pair.second)) {
            auto z = loc::loc_to_zigzag(h);
            auto back = loc::loc_from_zigzag(z);
            CHECK(back.map.components == h.map.components);
        }
}

TEST_CASE("strictification zigzag recovers the localized morphism") {
    const auto& p = examples();
    auto s = comma::strictify(p.m_u);
    loc::Zigzag z;
    z.source = p.m_u.source;
    z.target = p.m_u.target;
    z.apex = s.apex;
    z.backward = comma::coslice(p.m_u.source).iota;
    z.forward = s.strict_leg.r;
    auto via_zigzag = loc::loc_from_zigzag(z);
    auto direct = loc::loc_from_diag_morphism(p.m_u);
    CHECK(via_zigzag.map.components == direct.map.components);
}

TEST_CASE("weak equivalence over the point") {
    const auto& p = examples();
    auto du = comma::Diagram{core::constant_functor(p.d2, p.one, 0)};
    auto done = comma::Diagram{core::identity_functor(p.one)};
    auto m = comma::make_diag_morphism_left(done, du, p.u, core::identity_nat_trans(p.u));
    CHECK_FALSE(weq::weak_equivalence_over_point(m));
    CHECK_FALSE(weq::is_weak_equivalence_left(m).weq);
}
