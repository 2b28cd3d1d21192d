#ifndef CEQ_FINCAT_HPP
#define CEQ_FINCAT_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ceq::core {

/// A finite category given by explicit tables. Objects and morphisms carry
/// symbolic identifiers; all internal references are dense indices in
/// declaration order.
struct FinCat {
    struct Morphism {
        std::string id;
        int dom = -1;
        int cod = -1;
        bool operator==(const Morphism&) const = default;
    };

    std::vector<std::string> objects;
    std::vector<Morphism> morphisms;
    std::vector<int> identities;   // object index -> morphism index
    std::vector<int> compose_tab;  // [f * |mor| + g] = g after f, or -1

    int num_objects() const { return static_cast<int>(objects.size()); }
    int num_morphisms() const { return static_cast<int>(morphisms.size()); }

    // g after f; requires cod(f) == dom(g).
    int compose(int f, int g) const { return compose_tab[static_cast<size_t>(f) * morphisms.size() + g]; }

    int dom(int m) const { return morphisms[m].dom; }
    int cod(int m) const { return morphisms[m].cod; }
    int identity(int obj) const { return identities[obj]; }
    bool is_identity(int m) const { return identities[morphisms[m].dom] == m && morphisms[m].dom == morphisms[m].cod; }

    int find_object(const std::string& id) const;
    int find_morphism(const std::string& id) const;

    bool operator==(const FinCat&) const = default;
};

using CatPtr = std::shared_ptr<const FinCat>;

/// Unchecked category tables, as parsed from user input.
struct RawCategory {
    struct RawMorphism {
        std::string id, dom, cod;
    };
    struct RawComposite {
        std::string f, g, gf;  // gf = g after f
    };
    std::vector<std::string> objects;
    std::vector<RawMorphism> morphisms;
    std::vector<std::pair<std::string, std::string>> identities;  // (object, morphism)
    std::vector<RawComposite> composites;
};

struct GraphPresentation {
    struct Edge {
        std::string id, src, dst;
    };
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
};

struct FinFunctor {
    CatPtr source, target;
    std::vector<int> obj_map;  // source object -> target object
    std::vector<int> mor_map;  // source morphism -> target morphism

    int on_object(int o) const { return obj_map[o]; }
    int on_morphism(int m) const { return mor_map[m]; }

    bool operator==(const FinFunctor& other) const {
        return *source == *other.source && *target == *other.target && obj_map == other.obj_map &&
               mor_map == other.mor_map;
    }
};

struct NatTransform {
    FinFunctor source_functor, target_functor;
    std::vector<int> components;  // source object -> morphism of target category

    bool is_identity() const;
    bool is_iso() const;

    bool operator==(const NatTransform& other) const {
        return source_functor == other.source_functor && target_functor == other.target_functor &&
               components == other.components;
    }
};

// ---- categories ----

/// Checks all category laws on resolved tables; throws CeqError naming the
/// first violated law. Composites of identity morphisms may be omitted from
/// the raw tables and are filled in.
CatPtr validate_category(const RawCategory& raw);

/// Law check for internally constructed categories.
void verify_category(const FinCat& c);

CatPtr free_category_on_acyclic_graph(const GraphPresentation& g);
CatPtr opposite(const FinCat& c);

struct Coproduct {
    CatPtr category;
    FinFunctor inject_left, inject_right;
};
Coproduct coproduct_categories(CatPtr c, CatPtr d);

/// True when m is invertible in its category.
bool is_iso_morphism(const FinCat& c, int m);
int inverse_morphism(const FinCat& c, int m);  // -1 when not invertible

// ---- functors ----

struct RawFunctor {
    std::vector<std::pair<std::string, std::string>> objects;
    std::vector<std::pair<std::string, std::string>> morphisms;
};

FinFunctor validate_functor(const RawFunctor& raw, CatPtr source, CatPtr target);
FinFunctor make_functor(CatPtr source, CatPtr target, std::vector<int> obj_map, std::vector<int> mor_map);
FinFunctor identity_functor(CatPtr c);
FinFunctor constant_functor(CatPtr source, CatPtr target, int target_obj);
FinFunctor compose_functors(const FinFunctor& f, const FinFunctor& g);  // g after f

/// Image of a functor under op: same maps between the opposite categories.
FinFunctor opposite_functor(const FinFunctor& f);

// ---- natural transformations ----

NatTransform validate_nat_trans(const std::vector<std::pair<std::string, std::string>>& raw_components,
                                const FinFunctor& f, const FinFunctor& g);
NatTransform make_nat_trans(FinFunctor f, FinFunctor g, std::vector<int> components);
NatTransform identity_nat_trans(const FinFunctor& f);
NatTransform nat_vertical_compose(const NatTransform& sigma, const NatTransform& tau);  // tau after sigma

enum class WhiskerSide { Pre, Post };
/// Post: components h(tau_a) for h out of the transformation's target category.
/// Pre: components tau_{h(c)} for h into the transformation's source category.
NatTransform nat_whisker(const FinFunctor& h, const NatTransform& tau, WhiskerSide side);

}  // namespace ceq::core

#endif
