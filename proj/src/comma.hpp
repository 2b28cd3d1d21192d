#ifndef CEQ_COMMA_HPP
#define CEQ_COMMA_HPP

#include <array>
#include <utility>
#include <vector>

#include "fincat.hpp"

namespace ceq::comma {

using core::CatPtr;
using core::FinCat;
using core::FinFunctor;
using core::NatTransform;

/// The comma category F/G of a cospan F: A -> C <- B : G, materialized as an
/// explicit FinCat together with its projections and canonical 2-cell.
struct CommaResult {
    CatPtr category;
    FinFunctor proj_left;   // F/G -> A
    FinFunctor proj_right;  // F/G -> B
    NatTransform canonical_2cell;
    std::vector<std::array<int, 3>> objects;            // (a, b, gamma)
    std::vector<std::pair<int, int>> morphism_data;     // (h, k)

    int object_index(int a, int b, int gamma) const;
};

CommaResult comma_category(const FinFunctor& f, const FinFunctor& g);

/// The one-object one-morphism category, shared across call sites.
CatPtr terminal_category();

/// Partition of a category's objects by zigzag connectivity. Blocks are
/// ordered by least member; the representative is the least member.
struct Partition {
    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of;  // object -> block index

    int num_blocks() const { return static_cast<int>(blocks.size()); }
    int representative(int block) const { return blocks[block][0]; }
};

Partition pi0(const FinCat& c);

/// A zigzag witness that objects a and b are connected: alternating list of
/// (morphism, forward?) steps.
std::vector<std::pair<int, bool>> zigzag_witness(const FinCat& c, int a, int b);

struct Diagram {
    FinFunctor functor;  // D : J -> X

    const CatPtr& shape() const { return functor.source; }
    const CatPtr& base() const { return functor.target; }
    bool operator==(const Diagram& other) const { return functor == other.functor; }
};

/// Morphism (R, rho) : (J, D) -> (K, E) with R : J -> K and rho : D => E.R.
struct DiagMorphismRight {
    Diagram source, target;
    FinFunctor r;
    NatTransform rho;
};

/// Morphism (R, rho) : (J, D) -> (K, E) with R : K -> J and rho : D.R => E.
struct DiagMorphismLeft {
    Diagram source, target;
    FinFunctor r;
    NatTransform rho;
    bool is_strict = false;
    bool is_pseudo = false;
};

DiagMorphismRight make_diag_morphism_right(Diagram source, Diagram target, FinFunctor r, NatTransform rho);
DiagMorphismLeft make_diag_morphism_left(Diagram source, Diagram target, FinFunctor r, NatTransform rho);
DiagMorphismLeft identity_diag_morphism_left(const Diagram& d);
DiagMorphismLeft diag_compose_left(const DiagMorphismLeft& m1, const DiagMorphismLeft& m2);  // m2 after m1
DiagMorphismRight diag_compose_right(const DiagMorphismRight& m1, const DiagMorphismRight& m2);

struct InitialityResult {
    bool initial = false;
    int witness_object = -1;  // target object where the check fails
    bool witness_empty = false;  // failing condition: empty (else disconnected)
};

InitialityResult is_initial(const FinFunctor& r);

struct RelativeComma {
    CatPtr category;
    std::vector<std::pair<int, int>> objects;  // (j, f : Rj -> k)
};

RelativeComma relative_comma(const DiagMorphismRight& m, int k);
InitialityResult is_relatively_initial(const DiagMorphismRight& m);

struct Coslice {
    CommaResult comma;   // D/X
    FinFunctor iota;     // J -> D/X, splits proj_left
};

Coslice coslice(const Diagram& d);

/// Factorization of a Diag<- morphism through the coslice of its source:
/// m = strict_leg . coslice_leg, with strict_leg carried by a functor into
/// D/X and an identity transformation.
struct Strictification {
    Diagram apex;                 // (D/X, proj_right)
    DiagMorphismLeft coslice_leg; // (J, D) -> apex, carried by proj_left with the canonical 2-cell
    DiagMorphismLeft strict_leg;  // apex -> (K, E), carried by rho-hat, identity transformation
};

Strictification strictify(const DiagMorphismLeft& m);

}  // namespace ceq::comma

#endif
