#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "../src/weq.hpp"
#include "fixtures.hpp"
#include "gen.hpp"

using namespace ceq;
using comma::DiagMorphismLeft;
using comma::Diagram;
using core::FinFunctor;
using fixtures::examples;

static ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const CeqError& e) {
        return e.code();
    }
    return ErrorCode::InternalInvariantViolation;
}

TEST_CASE("mate is an involution on pseudo morphisms") {
    const auto& p = examples();
    auto left = weq::mate(p.m_r0);
    CHECK(left.source == p.m_r0.target);
    CHECK(left.target == p.m_r0.source);
    auto back = weq::mate(left);
    CHECK(back.r == p.m_r0.r);
    CHECK(back.rho == p.m_r0.rho);
    CHECK(back.source == p.m_r0.source);

    auto right = weq::mate(p.m_u);
    CHECK(weq::mate(right).rho == p.m_u.rho);

    // a non-invertible component cannot be mated
    auto c0 = core::constant_functor(p.one, p.i2, 0);
    auto skew = comma::make_diag_morphism_left(Diagram{c0}, p.dc1, core::identity_functor(p.one),
                                               core::make_nat_trans(c0, p.c1, {p.i2->find_morphism("a")}));
    CHECK(code_of([&] { weq::mate(skew); }) == ErrorCode::NotPseudo);
}

TEST_CASE("induced copresheaf map of (u, id)") {
    const auto& p = examples();
    auto m = weq::induced_copresheaf_map(p.m_u);
    // P_E(1) has one block per object of D2; P_D(1) is a single block
    CHECK(m.source.at[0].size() == 0);
    CHECK(m.source.at[1].size() == 2);
    CHECK(m.target.at[0].size() == 0);
    CHECK(m.target.at[1].size() == 1);
    CHECK(m.components[1] == std::vector<int>{0, 0});
    CHECK_FALSE(fib::is_copresheaf_iso(m));

    auto w = weq::is_weak_equivalence_left(p.m_u);
    CHECK_FALSE(w.weq);
    CHECK(w.witness_is_target);
    CHECK(w.lifts_of_source == 2);
    CHECK(w.lifts_of_target == 4);

    CHECK(weq::is_weak_equivalence_right_pseudo(p.m_r0));
    CHECK(weq::is_weak_equivalence_left(weq::mate(p.m_r0)).weq);
}

TEST_CASE("representable copresheaves do not distinguish (u, id)") {
    const auto& p = examples();
    int a = p.i2->find_morphism("a");
    std::vector<fib::Copresheaf> representables;
    {
        // Hom(0, -): singleton fibres
        std::vector<fib::FinSetObj> at(2);
        at[0].elements = {"id0"};
        at[1].elements = {"a"};
        std::vector<std::vector<int>> act(p.i2->num_morphisms());
        act[p.i2->identity(0)] = {0};
        act[p.i2->identity(1)] = {0};
        act[a] = {0};
        representables.push_back(fib::make_copresheaf(p.i2, std::move(at), std::move(act)));
    }
    {
        // Hom(1, -): empty over 0
        std::vector<fib::FinSetObj> at(2);
        at[1].elements = {"id1"};
        std::vector<std::vector<int>> act(p.i2->num_morphisms());
        act[p.i2->identity(1)] = {0};
        act[a] = {};
        representables.push_back(fib::make_copresheaf(p.i2, std::move(at), std::move(act)));
    }
    for (const auto& rep : representables) {
        auto gro = fib::grothendieck(rep);
        CHECK(fib::enumerate_lifts(p.dc1, gro.projection).size() ==
              fib::enumerate_lifts(p.dc11, gro.projection).size());
    }
    // but lift counts along El(P_E) differ
    auto pe = fact::comprehensive_factorize(p.dc11);
    CHECK(fib::enumerate_lifts(p.dc1, pe.opfibration_part).size() !=
          fib::enumerate_lifts(p.dc11, pe.opfibration_part).size());
}

TEST_CASE("decision procedure agrees with the brute-force oracle") {
    gen::Rng rng(59);
    const auto& p = examples();
    int agree = 0, weqs = 0;
    for (int trial = 0; trial < 60; ++trial) {
        gen::FreeCat x = gen::random_free_cat(rng, 3, 3);
        gen::FreeCat j = gen::random_free_cat(rng, 3, 3);
        gen::FreeCat k = gen::random_free_cat(rng, 3, 3);
        FinFunctor d = gen::random_functor(rng, j, x.cat);
        FinFunctor r = gen::random_functor(rng, k, j.cat);
        auto m = gen::strict_left(Diagram{d}, r);
        bool fast = weq::is_weak_equivalence_left(m).weq;
        auto oracle = weq::brute_force_weak_equivalence(m, 2);
        CHECK(fast == oracle.weq);
        if (!oracle.weq) CHECK(!oracle.witness.empty());
        ++agree;
        if (fast) ++weqs;

        // a non-strict variant through the coslice
        auto s = comma::strictify(m);
        CHECK(weq::is_weak_equivalence_left(s.coslice_leg).weq ==
              weq::brute_force_weak_equivalence(s.coslice_leg, 2).weq);
    }
    CHECK(agree == 60);
    CHECK(weqs > 0);

    auto mu = weq::brute_force_weak_equivalence(p.m_u, 2);
    CHECK_FALSE(mu.weq);
    CHECK(mu.witness == "P_E");
}

TEST_CASE("oracle refuses bounds that blow the work limit") {
    const auto& p = examples();
    auto idm = comma::identity_diag_morphism_left(p.dc1);
    CHECK(code_of([&] { weq::brute_force_weak_equivalence(idm, 6, 10); }) == ErrorCode::BoundTooLargeForBase);
}

TEST_CASE("weak equivalences satisfy two out of three") {
    gen::Rng rng(61);
    int pairs = 0;
    while (pairs < 100) {
        gen::FreeCat x = gen::random_free_cat(rng, 3, 3);
        gen::FreeCat j = gen::random_free_cat(rng, 3, 3);
        gen::FreeCat k = gen::random_free_cat(rng, 3, 3);
        gen::FreeCat l = gen::random_free_cat(rng, 3, 3);
        FinFunctor d = gen::random_functor(rng, j, x.cat);
        FinFunctor r1 = gen::random_functor(rng, k, j.cat);
        auto m1 = gen::strict_left(Diagram{d}, r1);
        FinFunctor r2 = gen::random_functor(rng, l, k.cat);
        auto m2 = gen::strict_left(m1.target, r2);
        auto both = comma::diag_compose_left(m1, m2);
        bool w1 = weq::is_weak_equivalence_left(m1).weq;
        bool w2 = weq::is_weak_equivalence_left(m2).weq;
        bool w12 = weq::is_weak_equivalence_left(both).weq;
        if (w1 && w2) CHECK(w12);
        if (w1 && w12) CHECK(w2);
        if (w2 && w12) CHECK(w1);
        ++pairs;
    }
}

TEST_CASE("initiality is not stable under composition the way weq is") {
    const auto& p = examples();
    CHECK_FALSE(comma::is_initial(p.r0).initial);
    CHECK(comma::is_initial(p.s0).initial);
    CHECK(comma::is_initial(core::compose_functors(p.r0, p.s0)).initial);
}

TEST_CASE("weak equivalence over the point") {
    const auto& p = examples();
    CHECK(code_of([&] { weq::weak_equivalence_over_point(p.m_u); }) == ErrorCode::WrongBase);

    gen::Rng rng(67);
    for (int trial = 0; trial < 40; ++trial) {
        gen::FreeCat j = gen::random_free_cat(rng, 3, 3);
        gen::FreeCat k = gen::random_free_cat(rng, 3, 3);
        FinFunctor r = gen::random_functor(rng, k, j.cat);
        auto m = gen::strict_left(Diagram{core::constant_functor(j.cat, p.one, 0)}, r);
        CHECK(weq::weak_equivalence_over_point(m) == weq::is_weak_equivalence_left(m).weq);
    }
}
