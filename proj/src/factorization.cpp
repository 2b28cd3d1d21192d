#include "factorization.hpp"

namespace ceq::fact {

using ceq::ErrorCode;
using ceq::fail;
using core::compose_functors;
using core::FinCat;
using core::make_functor;

int Factorization::block_index(int x, int j, int f) const {
    int obj = comma_at[x].object_index(j, 0, f);
    if (obj < 0) fail(ErrorCode::InternalInvariantViolation, "comma object not found");
    return pi0_at[x].block_of[obj];
}

Factorization comprehensive_factorize(const Diagram& d) {
    const FinCat& x = *d.base();
    const FinCat& j_cat = *d.shape();
    Factorization result;
    result.input = d;

    std::vector<fib::FinSetObj> at(x.num_objects());
    for (int o = 0; o < x.num_objects(); ++o) {
        CommaResult cm = comma::comma_category(d.functor, core::constant_functor(comma::terminal_category(), d.base(), o));
        Partition p = comma::pi0(*cm.category);
        for (int b = 0; b < p.num_blocks(); ++b) {
            // block id: canonical encoding of the least member (j, f)
            auto [j, unused, f] = cm.objects[p.representative(b)];
            at[o].elements.push_back("[" + j_cat.objects[j] + "," + x.morphisms[f].id + "]");
        }
        result.comma_at.push_back(std::move(cm));
        result.pi0_at.push_back(std::move(p));
    }
    std::vector<std::vector<int>> act(x.num_morphisms());
    for (int g = 0; g < x.num_morphisms(); ++g) {
        int xd = x.dom(g), xc = x.cod(g);
        act[g].resize(result.pi0_at[xd].num_blocks());
        for (int b = 0; b < result.pi0_at[xd].num_blocks(); ++b) {
            auto [j, unused, f] = result.comma_at[xd].objects[result.pi0_at[xd].representative(b)];
            act[g][b] = result.block_index(xc, j, x.compose(f, g));
        }
    }
    result.copresheaf = fib::make_copresheaf(d.base(), std::move(at), std::move(act));
    result.elements = fib::grothendieck(result.copresheaf);
    result.opfibration_part = result.elements.projection;

    std::vector<int> obj(j_cat.num_objects()), mor(j_cat.num_morphisms());
    for (int j = 0; j < j_cat.num_objects(); ++j) {
        int dj = d.functor.obj_map[j];
        obj[j] = result.elements.object_index(dj, result.block_index(dj, j, x.identities[dj]));
    }
    for (int h = 0; h < j_cat.num_morphisms(); ++h)
        mor[h] = result.elements.morphism_index(d.functor.mor_map[h],
                                                result.elements.objects[obj[j_cat.dom(h)]].second);
    result.initial_part = make_functor(d.shape(), result.elements.category, std::move(obj), std::move(mor));

    if (!(compose_functors(result.initial_part, result.opfibration_part) == d.functor))
        fail(ErrorCode::InternalInvariantViolation, "factorization does not recompose to the diagram");
    if (!comma::is_initial(result.initial_part).initial)
        fail(ErrorCode::InternalInvariantViolation, "initial part failed the initiality check");
    if (!fib::is_discrete_opfibration(result.opfibration_part).ok)
        fail(ErrorCode::InternalInvariantViolation, "projection failed the opfibration check");
    return result;
}

FinFunctor extend_lift_along_initial(const Factorization& fact, const fib::Copresheaf& f,
                                     const fib::Grothendieck& gro, const fib::Lift& lift) {
    if (!(lift.over == gro.projection) || !(lift.diagram == fact.input) ||
        !(compose_functors(lift.total, lift.over) == fact.input.functor))
        fail(ErrorCode::NotALift, "given functor is not a lift of the diagram along the opfibration");
    const FinCat& x = *fact.input.base();
    const FinCat& el = *fact.elements.category;

    std::vector<int> obj(el.num_objects(), -1);
    for (int o = 0; o < el.num_objects(); ++o) {
        auto [base_obj, block] = fact.elements.objects[o];
        // Map every member (j, g : D j -> base_obj) of the block; the results
        // must agree, which re-verifies well-definedness.
        for (int member : fact.pi0_at[base_obj].blocks[block]) {
            auto [j, unused, g] = fact.comma_at[base_obj].objects[member];
            int elem = gro.objects[lift.total.obj_map[j]].second;
            int image = gro.object_index(base_obj, f.act[g][elem]);
            if (obj[o] == -1)
                obj[o] = image;
            else if (obj[o] != image)
                fail(ErrorCode::InternalInvariantViolation, "extension is not well defined on a pi0 block");
        }
    }
    std::vector<int> mor(el.num_morphisms());
    for (int m = 0; m < el.num_morphisms(); ++m)
        mor[m] = gro.morphism_index(fact.elements.morphism_data[m].first,
                                    gro.objects[obj[el.dom(m)]].second);
    FinFunctor ext = make_functor(fact.elements.category, gro.category, std::move(obj), std::move(mor));
    if (!(compose_functors(fact.initial_part, ext) == lift.total))
        fail(ErrorCode::InternalInvariantViolation, "extension does not restrict to the lift");
    if (!(compose_functors(ext, gro.projection) == fact.opfibration_part))
        fail(ErrorCode::InternalInvariantViolation, "extension does not lie over the base");
    return ext;
}

}  // namespace ceq::fact
