#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "../src/loc.hpp"
#include "../src/weq.hpp"
#include "fixtures.hpp"
#include "gen.hpp"

using namespace ceq;
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

TEST_CASE("hom sets match functor enumeration between the element categories") {
    const auto& p = examples();
    gen::Rng rng(71);
    std::vector<Diagram> diagrams = {p.dc1, p.dc11, p.d_idi2, p.d_s0};
    for (int trial = 0; trial < 10; ++trial) {
        gen::FreeCat j = gen::random_free_cat(rng, 3, 3);
        diagrams.push_back(Diagram{gen::random_functor(rng, j, p.i2)});
    }
    for (const auto& d : diagrams)
        for (const auto& e : diagrams) {
            auto homs = loc::loc_hom_set(d, e);
            auto fd = fact::comprehensive_factorize(d);
            auto fe = fact::comprehensive_factorize(e);
            auto functors = gen::enumerate_functors(fe.elements.category, fd.elements.category,
                                                    gen::OverConstraint{fd.opfibration_part, fe.opfibration_part});
            CHECK(homs.size() == functors.size());
        }
}

TEST_CASE("hom sets reject diagrams over different bases") {
    const auto& p = examples();
    CHECK(code_of([&] { loc::loc_hom_set(p.dc1, Diagram{p.u}); }) == ErrorCode::BaseMismatch);
}

TEST_CASE("localization is functorial") {
    const auto& p = examples();
    CHECK(loc::loc_from_diag_morphism(comma::identity_diag_morphism_left(p.dc1)).map ==
          loc::loc_identity(p.dc1).map);

    gen::Rng rng(73);
    for (int trial = 0; trial < 30; ++trial) {
        gen::FreeCat x = gen::random_free_cat(rng, 3, 3);
        gen::FreeCat j = gen::random_free_cat(rng, 3, 3);
        gen::FreeCat k = gen::random_free_cat(rng, 3, 3);
        gen::FreeCat l = gen::random_free_cat(rng, 3, 3);
        FinFunctor d = gen::random_functor(rng, j, x.cat);
        auto m1 = gen::strict_left(Diagram{d}, gen::random_functor(rng, k, j.cat));
        auto m2 = gen::strict_left(m1.target, gen::random_functor(rng, l, k.cat));
        auto lhs = loc::loc_from_diag_morphism(comma::diag_compose_left(m1, m2));
        auto rhs = loc::loc_compose(loc::loc_from_diag_morphism(m1), loc::loc_from_diag_morphism(m2));
        CHECK(lhs.map == rhs.map);
    }
}

TEST_CASE("composition is associative and unital on the fixture hom sets") {
    const auto& p = examples();
    std::vector<Diagram> ds = {p.dc1, p.dc11, p.d_s0};
    for (const auto& a : ds)
        for (const auto& b : ds)
            for (const auto& c : ds)
                for (const auto& f : loc::loc_hom_set(a, b))
                    for (const auto& g : loc::loc_hom_set(b, c)) {
                        CHECK(loc::loc_compose(loc::loc_identity(a), f).map == f.map);
                        CHECK(loc::loc_compose(f, loc::loc_identity(b)).map == f.map);
                        for (const auto& d : ds)
                            for (const auto& h : loc::loc_hom_set(c, d))
                                CHECK(loc::loc_compose(loc::loc_compose(f, g), h).map ==
                                      loc::loc_compose(f, loc::loc_compose(g, h)).map);
                    }
    CHECK(code_of([&] {
              loc::loc_compose(loc::loc_hom_set(p.dc1, p.dc11)[0], loc::loc_hom_set(p.dc1, p.dc11)[0]);
          }) == ErrorCode::EndpointMismatch);
}

TEST_CASE("a morphism becomes invertible exactly when it is a weak equivalence") {
    gen::Rng rng(79);
    int isos = 0;
    for (int trial = 0; trial < 40; ++trial) {
        gen::FreeCat x = gen::random_free_cat(rng, 3, 3);
        gen::FreeCat j = gen::random_free_cat(rng, 3, 3);
        gen::FreeCat k = gen::random_free_cat(rng, 3, 3);
        FinFunctor d = gen::random_functor(rng, j, x.cat);
        auto m = gen::strict_left(Diagram{d}, gen::random_functor(rng, k, j.cat));
        auto a = loc::loc_from_diag_morphism(m);
        bool w = weq::is_weak_equivalence_left(m).weq;
        CHECK(loc::loc_is_iso(a) == w);
        if (w) {
            ++isos;
            auto inv = loc::loc_invert(a);
            CHECK(loc::loc_compose(a, inv).map == loc::loc_identity(a.source).map);
            CHECK(loc::loc_compose(inv, a).map == loc::loc_identity(a.target).map);
        } else {
            CHECK(code_of([&] { loc::loc_invert(a); }) == ErrorCode::NotPseudo);
        }
    }
    CHECK(isos > 0);
}

TEST_CASE("zigzag presentations round trip") {
    const auto& p = examples();
    gen::Rng rng(83);
    std::vector<Diagram> diagrams = {p.dc1, p.dc11, p.d_idi2, p.d_s0};
    for (int trial = 0; trial < 6; ++trial) {
        gen::FreeCat j = gen::random_free_cat(rng, 3, 3);
        diagrams.push_back(Diagram{gen::random_functor(rng, j, p.i2)});
    }
    for (const auto& d : diagrams)
        for (const auto& e : diagrams)
            for (const auto& a : loc::loc_hom_set(d, e)) {
                auto z = loc::loc_to_zigzag(a);
                CHECK(comma::is_initial(z.backward).initial);
                CHECK(core::compose_functors(z.backward, z.apex.functor) == z.source.functor);
                CHECK(core::compose_functors(z.forward, z.apex.functor) == z.target.functor);
                CHECK(loc::loc_from_zigzag(z).map == a.map);
            }
}

TEST_CASE("zigzag guards") {
    const auto& p = examples();
    loc::Zigzag bad;
    bad.source = p.dc11;
    bad.target = p.dc11;
    bad.apex = p.dc11;
    bad.backward = core::constant_functor(p.d2, p.d2, 0);
    bad.forward = core::identity_functor(p.d2);
    CHECK(code_of([&] { loc::loc_from_zigzag(bad); }) == ErrorCode::BackwardNotInitial);

    loc::Zigzag skew;
    skew.source = p.dc1;
    skew.target = p.d_idi2;
    skew.apex = p.dc1;
    skew.backward = core::identity_functor(p.one);
    skew.forward = core::constant_functor(p.i2, p.one, 0);
    CHECK(code_of([&] { loc::loc_from_zigzag(skew); }) == ErrorCode::NotOverX);
}
