#ifndef CEQ_TESTS_FIXTURES_HPP
#define CEQ_TESTS_FIXTURES_HPP

#include "../src/comma.hpp"
#include "../src/fincat.hpp"

namespace ceq::fixtures {

using comma::DiagMorphismLeft;
using comma::DiagMorphismRight;
using comma::Diagram;
using core::CatPtr;
using core::FinFunctor;
using core::RawCategory;
using core::RawFunctor;

// The running fixtures: the terminal category One, the walking arrow
// I2 (0 -> 1 via a), the parallel pair PP (alpha, beta : 0 -> 1), the
// discrete two-object category D2, and the functors between them.
struct Examples {
    CatPtr one, i2, pp, d2;
    FinFunctor r0;   // I2 -> PP, a |-> alpha
    FinFunctor s0;   // PP -> I2, alpha, beta |-> a
    FinFunctor c1;   // One -> I2 at 1
    FinFunctor c11;  // D2 -> I2, constant 1
    FinFunctor u;    // D2 -> One
    Diagram dc1, dc11;       // diagrams over I2
    DiagMorphismLeft m_u;    // (u, id) : dc1 -> dc11
    Diagram d_idi2, d_s0;    // diagrams over I2
    DiagMorphismRight m_r0;  // (R0, id) : (I2, id) -> (PP, S0)

    Examples() {
        RawCategory raw;
        raw.objects = {"*"};
        raw.morphisms = {{"id_*", "*", "*"}};
        raw.identities = {{"*", "id_*"}};
        one = core::validate_category(raw);

        raw = {};
        raw.objects = {"0", "1"};
        raw.morphisms = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"a", "0", "1"}};
        raw.identities = {{"0", "id0"}, {"1", "id1"}};
        i2 = core::validate_category(raw);

        raw = {};
        raw.objects = {"0", "1"};
        raw.morphisms = {{"id0", "0", "0"}, {"id1", "1", "1"}, {"alpha", "0", "1"}, {"beta", "0", "1"}};
        raw.identities = {{"0", "id0"}, {"1", "id1"}};
        pp = core::validate_category(raw);

        raw = {};
        raw.objects = {"0", "1"};
        raw.morphisms = {{"id0", "0", "0"}, {"id1", "1", "1"}};
        raw.identities = {{"0", "id0"}, {"1", "id1"}};
        d2 = core::validate_category(raw);

        RawFunctor rf;
        rf.objects = {{"0", "0"}, {"1", "1"}};
        rf.morphisms = {{"a", "alpha"}};
        r0 = core::validate_functor(rf, i2, pp);

        rf = {};
        rf.objects = {{"0", "0"}, {"1", "1"}};
        rf.morphisms = {{"alpha", "a"}, {"beta", "a"}};
        s0 = core::validate_functor(rf, pp, i2);

        c1 = core::constant_functor(one, i2, 1);
        c11 = core::constant_functor(d2, i2, 1);
        u = core::constant_functor(d2, one, 0);

        dc1 = Diagram{c1};
        dc11 = Diagram{c11};
        m_u = comma::make_diag_morphism_left(dc1, dc11, u,
                                             core::identity_nat_trans(c11));

        d_idi2 = Diagram{core::identity_functor(i2)};
        d_s0 = Diagram{s0};
        m_r0 = comma::make_diag_morphism_right(d_idi2, d_s0, r0, core::identity_nat_trans(d_idi2.functor));
    }
};

inline const Examples& examples() {
    static Examples p;
    return p;
}

}  // namespace ceq::fixtures

#endif
