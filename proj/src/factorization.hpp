#ifndef CEQ_FACTORIZATION_HPP
#define CEQ_FACTORIZATION_HPP

#include <vector>

#include "comma.hpp"
#include "copresheaf.hpp"
#include "fincat.hpp"

namespace ceq::fact {

using comma::CommaResult;
using comma::Diagram;
using comma::Partition;
using core::FinFunctor;

/// Comprehensive factorization of a diagram D : J -> X as an initial functor
/// into the category of elements of P_D followed by a discrete opfibration.
struct Factorization {
    Diagram input;
    fib::Copresheaf copresheaf;     // P_D, with P_D(x) = pi0(D/x)
    fib::Grothendieck elements;     // El(P_D)
    FinFunctor initial_part;        // J -> El(P_D)
    FinFunctor opfibration_part;    // El(P_D) -> X, the projection

    std::vector<CommaResult> comma_at;  // D/x per base object
    std::vector<Partition> pi0_at;

    /// Element of P_D(x) holding the comma object (j, f : D j -> x).
    int block_index(int x, int j, int f) const;
};

Factorization comprehensive_factorize(const Diagram& d);

/// The unique functor over X extending a lift of D along grothendieck(f)
/// across the initial part, El(P_D) -> El(F).
FinFunctor extend_lift_along_initial(const Factorization& fact, const fib::Copresheaf& f,
                                     const fib::Grothendieck& gro, const fib::Lift& lift);

}  // namespace ceq::fact

#endif
