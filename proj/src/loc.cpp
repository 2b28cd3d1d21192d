#include "loc.hpp"

#include "weq.hpp"

namespace ceq::loc {

using ceq::ErrorCode;
using ceq::fail;
using core::compose_functors;

static std::shared_ptr<const fact::Factorization> factorize_shared(const Diagram& d) {
    return std::make_shared<const fact::Factorization>(fact::comprehensive_factorize(d));
}

std::vector<LocHom> loc_hom_set(const Diagram& d, const Diagram& d2) {
    if (!(*d.base() == *d2.base())) fail(ErrorCode::BaseMismatch, "diagrams live over different categories");
    auto fs = factorize_shared(d);
    auto ft = factorize_shared(d2);
    std::vector<LocHom> result;
    for (auto& m : fib::enumerate_nat_trans(ft->copresheaf, fs->copresheaf))
        result.push_back(LocHom{d, d2, std::move(m), fs, ft});
    return result;
}

LocHom loc_from_diag_morphism(const DiagMorphismLeft& m) {
    auto fs = factorize_shared(m.source);
    auto ft = factorize_shared(m.target);
    fib::CopresheafMap map = weq::induced_copresheaf_map(m, *fs, *ft);
    return LocHom{m.source, m.target, std::move(map), std::move(fs), std::move(ft)};
}

LocHom loc_identity(const Diagram& d) {
    auto f = factorize_shared(d);
    return LocHom{d, d, fib::identity_copresheaf_map(f->copresheaf), f, f};
}

LocHom loc_compose(const LocHom& a, const LocHom& b) {
    if (!(a.target == b.source)) fail(ErrorCode::EndpointMismatch, "localized morphisms are not composable");
    return LocHom{a.source, b.target, fib::compose_copresheaf_maps(b.map, a.map), a.source_fact, b.target_fact};
}

bool loc_is_iso(const LocHom& a) { return fib::is_copresheaf_iso(a.map); }

LocHom loc_invert(const LocHom& a) {
    return LocHom{a.target, a.source, fib::invert_copresheaf_map(a.map), a.target_fact, a.source_fact};
}

Zigzag loc_to_zigzag(const LocHom& a) {
    const fact::Factorization& fs = *a.source_fact;
    const fact::Factorization& ft = *a.target_fact;
    Zigzag z;
    z.source = a.source;
    z.target = a.target;
    z.apex = Diagram{fs.opfibration_part};
    z.backward = fs.initial_part;
    z.forward = compose_functors(ft.initial_part, fib::grothendieck_functor(a.map, ft.elements, fs.elements));
    return z;
}

LocHom loc_from_zigzag(const Zigzag& z) {
    if (!(compose_functors(z.backward, z.apex.functor) == z.source.functor) ||
        !(compose_functors(z.forward, z.apex.functor) == z.target.functor))
        fail(ErrorCode::NotOverX, "zigzag legs do not commute with the diagrams");
    if (!comma::is_initial(z.backward).initial)
        fail(ErrorCode::BackwardNotInitial, "backward leg of the zigzag is not initial");

    auto fs = factorize_shared(z.source);
    auto ft = factorize_shared(z.target);
    auto fa = factorize_shared(z.apex);
    DiagMorphismLeft back = comma::make_diag_morphism_left(z.apex, z.source, z.backward,
                                                           core::identity_nat_trans(z.source.functor));
    DiagMorphismLeft fwd = comma::make_diag_morphism_left(z.apex, z.target, z.forward,
                                                          core::identity_nat_trans(z.target.functor));
    fib::CopresheafMap induced_back = weq::induced_copresheaf_map(back, *fa, *fs);  // P_source -> P_apex
    fib::CopresheafMap induced_fwd = weq::induced_copresheaf_map(fwd, *fa, *ft);    // P_target -> P_apex
    if (!fib::is_copresheaf_iso(induced_back))
        fail(ErrorCode::InternalInvariantViolation, "initial backward leg induced a non-invertible map");
    fib::CopresheafMap map = fib::compose_copresheaf_maps(induced_fwd, fib::invert_copresheaf_map(induced_back));
    return LocHom{z.source, z.target, std::move(map), std::move(fs), std::move(ft)};
}

}  // namespace ceq::loc
