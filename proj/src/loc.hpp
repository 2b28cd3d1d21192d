#ifndef CEQ_LOC_HPP
#define CEQ_LOC_HPP

#include <memory>
#include <vector>

#include "comma.hpp"
#include "copresheaf.hpp"
#include "factorization.hpp"

namespace ceq::loc {

using comma::DiagMorphismLeft;
using comma::Diagram;
using core::FinFunctor;

/// A morphism D -> D' of the localized diagram category, stored canonically
/// as a copresheaf map P_{D'} -> P_D (the hom-sets are contravariant in the
/// shapes). Factorizations of the endpoints are cached alongside.
struct LocHom {
    Diagram source, target;
    fib::CopresheafMap map;  // P_target -> P_source
    std::shared_ptr<const fact::Factorization> source_fact, target_fact;
};

/// Zigzag presentation D <= apex -> D': the backward leg carries the source
/// shape into the apex and is initial (hence a weak equivalence, inverted in
/// the localization); the forward leg carries the target shape. Both commute
/// with the diagrams over X.
struct Zigzag {
    Diagram source, target, apex;
    FinFunctor backward;  // shape(source) -> shape(apex), initial
    FinFunctor forward;   // shape(target) -> shape(apex)
};

std::vector<LocHom> loc_hom_set(const Diagram& d, const Diagram& d2);
LocHom loc_from_diag_morphism(const DiagMorphismLeft& m);
LocHom loc_identity(const Diagram& d);
LocHom loc_compose(const LocHom& a, const LocHom& b);  // b after a
bool loc_is_iso(const LocHom& a);
LocHom loc_invert(const LocHom& a);

Zigzag loc_to_zigzag(const LocHom& a);
LocHom loc_from_zigzag(const Zigzag& z);

}  // namespace ceq::loc

#endif
