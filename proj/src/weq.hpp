#ifndef CEQ_WEQ_HPP
#define CEQ_WEQ_HPP

#include <cstdint>
#include <string>

#include "comma.hpp"
#include "copresheaf.hpp"
#include "factorization.hpp"

namespace ceq::weq {

using comma::DiagMorphismLeft;
using comma::DiagMorphismRight;

/// Mates swap orientation and endpoints: the mate of (R, rho) : D -> E is
/// (R, rho^{-1}) : E -> D on the other side.
DiagMorphismLeft mate(const DiagMorphismRight& m);
DiagMorphismRight mate(const DiagMorphismLeft& m);

/// The map P_E -> P_D induced by m : (J, D) -> (K, E), sending the block of
/// (k, f : E k -> x) to the block of (R k, f . rho_k).
fib::CopresheafMap induced_copresheaf_map(const DiagMorphismLeft& m, const fact::Factorization& source_fact,
                                          const fact::Factorization& target_fact);
fib::CopresheafMap induced_copresheaf_map(const DiagMorphismLeft& m);

struct WeqResult {
    bool weq = true;
    int witness_object = -1;        // base object with a non-bijective component
    bool witness_is_target = false; // witnessing dopf: grothendieck(P_E) if true, else grothendieck(P_D)
    int lifts_of_source = 0;        // lift counts along the witnessing dopf
    int lifts_of_target = 0;
};

WeqResult is_weak_equivalence_left(const DiagMorphismLeft& m);
bool is_weak_equivalence_right_pseudo(const DiagMorphismRight& m);

/// True iff pi0 of the shape functor is a bijection; only over the terminal
/// base category.
bool weak_equivalence_over_point(const DiagMorphismLeft& m);

struct OracleResult {
    bool weq = true;
    std::int64_t copresheaves_tested = 0;
    std::string witness;  // description of the failing copresheaf, if any
};

OracleResult brute_force_weak_equivalence(const DiagMorphismLeft& m, int fibre_bound = 2,
                                          std::int64_t work_limit = 10000000);

}  // namespace ceq::weq

#endif
