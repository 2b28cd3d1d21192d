#ifndef CEQ_COPRESHEAF_HPP
#define CEQ_COPRESHEAF_HPP

#include <string>
#include <utility>
#include <vector>

#include "comma.hpp"
#include "fincat.hpp"

namespace ceq::fib {

using comma::DiagMorphismLeft;
using comma::Diagram;
using core::CatPtr;
using core::FinCat;
using core::FinFunctor;
using core::NatTransform;

struct FinSetObj {
    std::vector<std::string> elements;

    int size() const { return static_cast<int>(elements.size()); }
    int find(const std::string& id) const;
};

/// A finite-set-valued functor on a finite base category.
struct Copresheaf {
    CatPtr base;
    std::vector<FinSetObj> at;              // object -> set
    std::vector<std::vector<int>> act;      // morphism -> function at(dom) -> at(cod)

    bool operator==(const Copresheaf& other) const {
        if (!(*base == *other.base) || act != other.act) return false;
        for (size_t o = 0; o < at.size(); ++o)
            if (at[o].elements != other.at[o].elements) return false;
        return true;
    }
};

Copresheaf make_copresheaf(CatPtr base, std::vector<FinSetObj> at, std::vector<std::vector<int>> act);
Copresheaf constant_singleton(CatPtr base);

struct CopresheafMap {
    Copresheaf source, target;
    std::vector<std::vector<int>> components;  // object -> function source.at -> target.at

    bool operator==(const CopresheafMap& other) const {
        return source == other.source && target == other.target && components == other.components;
    }
};

CopresheafMap make_copresheaf_map(Copresheaf source, Copresheaf target, std::vector<std::vector<int>> components);
CopresheafMap identity_copresheaf_map(const Copresheaf& f);
CopresheafMap compose_copresheaf_maps(const CopresheafMap& a, const CopresheafMap& b);  // b after a
bool is_copresheaf_iso(const CopresheafMap& m);
CopresheafMap invert_copresheaf_map(const CopresheafMap& m);

std::vector<CopresheafMap> enumerate_nat_trans(const Copresheaf& f, const Copresheaf& g);

// ---- discrete (op)fibrations ----

struct DopfCertificate {
    bool ok = true;
    int witness_morphism = -1;  // target morphism f
    int witness_object = -1;    // fibre object e over dom(f)
    int lift_count = 0;         // number of lifts of f with domain e
};

DopfCertificate is_discrete_opfibration(const FinFunctor& p);
bool is_discrete_opfibration_at(const FinFunctor& p, int f);
bool is_discrete_fibration(const FinFunctor& p);
bool is_discrete_fibration_at(const FinFunctor& p, int f);

/// The unique lift of (e, f) along a discrete opfibration: returns the lifted
/// morphism and its codomain.
std::pair<int, int> transport(const FinFunctor& p, int e, int f);

struct Grothendieck {
    CatPtr category;   // El(F)
    FinFunctor projection;
    std::vector<std::pair<int, int>> objects;        // (base object, element)
    std::vector<std::pair<int, int>> morphism_data;  // (base morphism, element at dom)

    int object_index(int base_obj, int element) const;
    int morphism_index(int base_mor, int element) const;
};

Grothendieck grothendieck(const Copresheaf& f);

/// Functor El(F) -> El(G) induced by a copresheaf map F -> G.
FinFunctor grothendieck_functor(const CopresheafMap& m, const Grothendieck& source, const Grothendieck& target);

Copresheaf fibres_copresheaf(const FinFunctor& p);

struct Lift {
    Diagram diagram;    // D : J -> X
    FinFunctor total;   // J -> E
    FinFunctor over;    // E -> X

    bool operator==(const Lift& other) const {
        return diagram == other.diagram && total == other.total && over == other.over;
    }
};

std::vector<Lift> enumerate_lifts(const Diagram& d, const FinFunctor& p);

struct Pushforward {
    Lift target_lift;
    NatTransform rho_bar;          // total(R k) => target total, over rho
    DiagMorphismLeft over_morphism;  // (R, rho_bar) in Diag<- of the total category
};

Pushforward pushforward_lift(const DiagMorphismLeft& m, const Lift& lift_of_source);

// ---- limits of set-valued diagrams ----

struct LimitResult {
    FinSetObj set;
    std::vector<std::vector<int>> families;  // family -> element index per shape object
};

LimitResult limit_finset(const Copresheaf& f);

/// A Diag<- morphism between set-valued diagrams: D : J -> Set and E : K -> Set
/// as copresheaves on the shapes, r : K -> J, and components rho_k : D(R k) -> E(k).
struct SetDiagMorphism {
    Copresheaf source;  // on J
    Copresheaf target;  // on K
    FinFunctor r;       // K -> J
    std::vector<std::vector<int>> components;
};

SetDiagMorphism make_set_diag_morphism(Copresheaf source, Copresheaf target, FinFunctor r,
                                       std::vector<std::vector<int>> components);

/// Function between limit families induced by a set-valued diagram morphism;
/// entry i is the index in the target limit of the image of source family i.
std::vector<int> limit_map(const SetDiagMorphism& m, const LimitResult& source_limit,
                           const LimitResult& target_limit);

}  // namespace ceq::fib

#endif
