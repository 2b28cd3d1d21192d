#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "../src/factorization.hpp"
#include "fixtures.hpp"
#include "gen.hpp"

using namespace ceq;
using comma::Diagram;
using core::CatPtr;
using core::FinFunctor;
using fixtures::examples;

static void check_invariants(const fact::Factorization& f) {
    CHECK(core::compose_functors(f.initial_part, f.opfibration_part) == f.input.functor);
    CHECK(comma::is_initial(f.initial_part).initial);
    CHECK(fib::is_discrete_opfibration(f.opfibration_part).ok);
    CHECK(f.opfibration_part == f.elements.projection);
}

static bool is_permutation(const std::vector<int>& v) {
    std::set<int> seen(v.begin(), v.end());
    return seen.size() == v.size() && (v.empty() || (*seen.begin() == 0 && *seen.rbegin() == static_cast<int>(v.size()) - 1));
}

TEST_CASE("factorization of the fixture diagrams") {
    const auto& p = examples();
    auto f = fact::comprehensive_factorize(p.dc1);
    check_invariants(f);
    CHECK(f.copresheaf.at[0].size() == 0);
    CHECK(f.copresheaf.at[1].size() == 1);
    CHECK(f.elements.category->num_objects() == 1);
    CHECK(f.block_index(1, 0, p.i2->identity(1)) == 0);

    auto g = fact::comprehensive_factorize(p.d_idi2);
    check_invariants(g);
    CHECK(g.copresheaf.at[0].size() == 1);
    CHECK(g.copresheaf.at[1].size() == 1);
    CHECK(g.elements.category->num_objects() == 2);
    // the identity diagram factors through an isomorphic copy of its shape
    CHECK(is_permutation(g.initial_part.obj_map));
    CHECK(is_permutation(g.initial_part.mor_map));

    auto h = fact::comprehensive_factorize(p.d_s0);
    check_invariants(h);
    CHECK(h.copresheaf.at[0].size() == 1);
    CHECK(h.copresheaf.at[1].size() == 1);
}

TEST_CASE("factorization invariants hold on random diagrams") {
    gen::Rng rng(41);
    int done = 0;
    while (done < 60) {
        gen::FreeCat x = gen::random_free_cat(rng, 4, 5);
        gen::FreeCat j = gen::random_free_cat(rng, 4, 5);
        FinFunctor d = gen::random_functor(rng, j, x.cat);
        auto f = fact::comprehensive_factorize(Diagram{d});
        check_invariants(f);
        ++done;
    }
}

TEST_CASE("factoring a discrete opfibration gives an isomorphic initial part") {
    gen::Rng rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        gen::FreeCat x = gen::random_free_cat(rng, 4, 4);
        auto gro = fib::grothendieck(gen::random_copresheaf(rng, x, 3));
        auto f = fact::comprehensive_factorize(Diagram{gro.projection});
        check_invariants(f);
        CHECK(is_permutation(f.initial_part.obj_map));
        CHECK(is_permutation(f.initial_part.mor_map));
    }
}

TEST_CASE("extending lifts across the initial part is a bijection") {
    gen::Rng rng(47);
    int done = 0;
    while (done < 30) {
        gen::FreeCat x = gen::random_free_cat(rng, 3, 3);
        gen::FreeCat j = gen::random_free_cat(rng, 3, 3);
        FinFunctor d = gen::random_functor(rng, j, x.cat);
        auto f = fact::comprehensive_factorize(Diagram{d});
        auto target = gen::random_copresheaf(rng, x, 2);
        auto gro = fib::grothendieck(target);

        auto lifts = fib::enumerate_lifts(Diagram{d}, gro.projection);
        auto el_lifts = fib::enumerate_lifts(Diagram{f.opfibration_part}, gro.projection);
        CHECK(lifts.size() == el_lifts.size());

        std::set<std::pair<std::vector<int>, std::vector<int>>> images;
        for (const auto& l : lifts) {
            FinFunctor ext = fact::extend_lift_along_initial(f, target, gro, l);
            CHECK(core::compose_functors(f.initial_part, ext) == l.total);
            CHECK(core::compose_functors(ext, gro.projection) == f.opfibration_part);
            images.insert({ext.obj_map, ext.mor_map});
        }
        CHECK(images.size() == lifts.size());
        ++done;
    }
}

TEST_CASE("the factorization is essentially unique") {
    gen::Rng rng(53);
    int done = 0;
    while (done < 20) {
        gen::FreeCat x = gen::random_free_cat(rng, 3, 4);
        gen::FreeCat j = gen::random_free_cat(rng, 3, 4);
        FinFunctor d = gen::random_functor(rng, j, x.cat);
        auto f = fact::comprehensive_factorize(Diagram{d});

        // an independently presented initial/opfibration factorization of the
        // same diagram: the same structure with relabeled indices
        auto sh = gen::shuffle_cat(rng, f.elements.category);
        std::vector<int> iobj(j.cat->num_objects()), imor(j.cat->num_morphisms());
        for (int o = 0; o < j.cat->num_objects(); ++o) iobj[o] = sh.obj_perm[f.initial_part.obj_map[o]];
        for (int m = 0; m < j.cat->num_morphisms(); ++m) imor[m] = sh.mor_perm[f.initial_part.mor_map[m]];
        FinFunctor init2 = core::make_functor(j.cat, sh.cat, std::move(iobj), std::move(imor));
        std::vector<int> pobj(sh.cat->num_objects()), pmor(sh.cat->num_morphisms());
        for (int o = 0; o < f.elements.category->num_objects(); ++o)
            pobj[sh.obj_perm[o]] = f.opfibration_part.obj_map[o];
        for (int m = 0; m < f.elements.category->num_morphisms(); ++m)
            pmor[sh.mor_perm[m]] = f.opfibration_part.mor_map[m];
        FinFunctor proj2 = core::make_functor(sh.cat, x.cat, std::move(pobj), std::move(pmor));
        CHECK(comma::is_initial(init2).initial);
        CHECK(fib::is_discrete_opfibration(proj2).ok);
        CHECK(core::compose_functors(init2, proj2) == d);

        // exactly one comparison functor over X matching both triangles, and
        // it is an isomorphism
        auto candidates = gen::enumerate_functors(f.elements.category, sh.cat, gen::OverConstraint{proj2, f.opfibration_part});
        int found = 0;
        for (const auto& phi : candidates) {
            if (core::compose_functors(f.initial_part, phi) != init2) continue;
            ++found;
            CHECK(is_permutation(phi.obj_map));
            CHECK(is_permutation(phi.mor_map));
        }
        CHECK(found == 1);
        ++done;
    }
}
