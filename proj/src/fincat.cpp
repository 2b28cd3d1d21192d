#include "fincat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace ceq {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MissingComposite: return "MissingComposite";
        case ErrorCode::NonAssociative: return "NonAssociative";
        case ErrorCode::BadIdentity: return "BadIdentity";
        case ErrorCode::DanglingReference: return "DanglingReference";
        case ErrorCode::CyclicGraph: return "CyclicGraph";
        case ErrorCode::NotFunctorial: return "NotFunctorial";
        case ErrorCode::SourceTargetMismatch: return "SourceTargetMismatch";
        case ErrorCode::NotNatural: return "NotNatural";
        case ErrorCode::BadComponentTyping: return "BadComponentTyping";
        case ErrorCode::TypingMismatch: return "TypingMismatch";
        case ErrorCode::TargetMismatch: return "TargetMismatch";
        case ErrorCode::UnknownObject: return "UnknownObject";
        case ErrorCode::NotOpfibration: return "NotOpfibration";
        case ErrorCode::NotOpfibrationAt: return "NotOpfibrationAt";
        case ErrorCode::NotPseudo: return "NotPseudo";
        case ErrorCode::NotALift: return "NotALift";
        case ErrorCode::BaseMismatch: return "BaseMismatch";
        case ErrorCode::EndpointMismatch: return "EndpointMismatch";
        case ErrorCode::BackwardNotInitial: return "BackwardNotInitial";
        case ErrorCode::NotOverX: return "NotOverX";
        case ErrorCode::WrongBase: return "WrongBase";
        case ErrorCode::BoundTooLargeForBase: return "BoundTooLargeForBase";
        case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnresolvedReference: return "UnresolvedReference";
        case ErrorCode::ValidationError: return "ValidationError";
    }
    return "UnknownError";
}

}  // namespace ceq

namespace ceq::core {

int FinCat::find_object(const std::string& id) const {
    for (int i = 0; i < num_objects(); ++i)
        if (objects[i] == id) return i;
    return -1;
}

int FinCat::find_morphism(const std::string& id) const {
    for (int i = 0; i < num_morphisms(); ++i)
        if (morphisms[i].id == id) return i;
    return -1;
}

bool NatTransform::is_identity() const {
    const FinCat& t = *source_functor.target;
    for (size_t j = 0; j < components.size(); ++j)
        if (!t.is_identity(components[j])) return false;
    return true;
}

bool NatTransform::is_iso() const {
    const FinCat& t = *source_functor.target;
    for (int c : components)
        if (!is_iso_morphism(t, c)) return false;
    return true;
}

void verify_category(const FinCat& c) {
    const int n_obj = c.num_objects();
    const int n_mor = c.num_morphisms();

    {
        std::set<std::string> seen;
        for (const auto& o : c.objects)
            if (!seen.insert(o).second) fail(ErrorCode::DanglingReference, "duplicate object id '" + o + "'");
        seen.clear();
        for (const auto& m : c.morphisms)
            if (!seen.insert(m.id).second) fail(ErrorCode::DanglingReference, "duplicate morphism id '" + m.id + "'");
    }
    for (const auto& m : c.morphisms)
        if (m.dom < 0 || m.dom >= n_obj || m.cod < 0 || m.cod >= n_obj)
            fail(ErrorCode::DanglingReference, "morphism '" + m.id + "' references an undeclared object");
    if (static_cast<int>(c.identities.size()) != n_obj)
        fail(ErrorCode::BadIdentity, "identity table does not cover all objects");
    for (int o = 0; o < n_obj; ++o) {
        int e = c.identities[o];
        if (e < 0 || e >= n_mor) fail(ErrorCode::BadIdentity, "no identity declared for object '" + c.objects[o] + "'");
        if (c.dom(e) != o || c.cod(e) != o)
            fail(ErrorCode::BadIdentity,
                 "identity of '" + c.objects[o] + "' is not an endomorphism of that object");
    }
    if (c.compose_tab.size() != static_cast<size_t>(n_mor) * n_mor)
        fail(ErrorCode::MissingComposite, "composition table has wrong shape");

    for (int f = 0; f < n_mor; ++f) {
        for (int g = 0; g < n_mor; ++g) {
            int gf = c.compose(f, g);
            bool composable = c.cod(f) == c.dom(g);
            if (!composable) {
                if (gf != -1)
                    fail(ErrorCode::DanglingReference, "composite declared for non-composable pair ('" +
                                                           c.morphisms[f].id + "', '" + c.morphisms[g].id + "')");
                continue;
            }
            if (gf < 0 || gf >= n_mor)
                fail(ErrorCode::MissingComposite,
                     "no composite for ('" + c.morphisms[f].id + "', '" + c.morphisms[g].id + "')");
            if (c.dom(gf) != c.dom(f) || c.cod(gf) != c.cod(g))
                fail(ErrorCode::MissingComposite, "composite of ('" + c.morphisms[f].id + "', '" +
                                                      c.morphisms[g].id + "') has mismatched endpoints");
        }
    }
    for (int f = 0; f < n_mor; ++f) {
        if (c.compose(c.identities[c.dom(f)], f) != f || c.compose(f, c.identities[c.cod(f)]) != f)
            fail(ErrorCode::BadIdentity, "identity law fails at morphism '" + c.morphisms[f].id + "'");
    }
    for (int f = 0; f < n_mor; ++f)
        for (int g = 0; g < n_mor; ++g) {
            if (c.cod(f) != c.dom(g)) continue;
            for (int h = 0; h < n_mor; ++h) {
                if (c.cod(g) != c.dom(h)) continue;
                if (c.compose(c.compose(f, g), h) != c.compose(f, c.compose(g, h)))
                    fail(ErrorCode::NonAssociative, "associativity fails on ('" + c.morphisms[f].id + "', '" +
                                                        c.morphisms[g].id + "', '" + c.morphisms[h].id + "')");
            }
        }
}

CatPtr validate_category(const RawCategory& raw) {
    auto cat = std::make_shared<FinCat>();
    cat->objects = raw.objects;
    for (const auto& m : raw.morphisms) {
        int dom = cat->find_object(m.dom);
        int cod = cat->find_object(m.cod);
        if (dom < 0) fail(ErrorCode::DanglingReference, "morphism '" + m.id + "' has undeclared domain '" + m.dom + "'");
        if (cod < 0)
            fail(ErrorCode::DanglingReference, "morphism '" + m.id + "' has undeclared codomain '" + m.cod + "'");
        cat->morphisms.push_back({m.id, dom, cod});
    }
    cat->identities.assign(cat->num_objects(), -1);
    for (const auto& [obj, mor] : raw.identities) {
        int o = cat->find_object(obj);
        int m = cat->find_morphism(mor);
        if (o < 0) fail(ErrorCode::DanglingReference, "identity declared for undeclared object '" + obj + "'");
        if (m < 0) fail(ErrorCode::DanglingReference, "identity '" + mor + "' is not a declared morphism");
        cat->identities[o] = m;
    }
    const int n_mor = cat->num_morphisms();
    cat->compose_tab.assign(static_cast<size_t>(n_mor) * n_mor, -1);
    for (const auto& comp : raw.composites) {
        int f = cat->find_morphism(comp.f);
        int g = cat->find_morphism(comp.g);
        int gf = cat->find_morphism(comp.gf);
        if (f < 0 || g < 0 || gf < 0)
            fail(ErrorCode::DanglingReference,
                 "composition entry ('" + comp.f + "', '" + comp.g + "', '" + comp.gf + "') references undeclared morphisms");
        int& slot = cat->compose_tab[static_cast<size_t>(f) * n_mor + g];
        if (slot != -1 && slot != gf)
            fail(ErrorCode::MissingComposite,
                 "conflicting composites declared for ('" + comp.f + "', '" + comp.g + "')");
        slot = gf;
    }
    // Composites with an identity are forced; fill the ones left implicit.
    for (int o = 0; o < cat->num_objects(); ++o) {
        int e = cat->identities[o];
        if (e < 0 || cat->dom(e) != o || cat->cod(e) != o) continue;
        for (int f = 0; f < n_mor; ++f) {
            if (cat->dom(f) == o) {
                int& slot = cat->compose_tab[static_cast<size_t>(e) * n_mor + f];
                if (slot == -1) slot = f;
            }
            if (cat->cod(f) == o) {
                int& slot = cat->compose_tab[static_cast<size_t>(f) * n_mor + e];
                if (slot == -1) slot = f;
            }
        }
    }
    verify_category(*cat);
    return cat;
}

CatPtr free_category_on_acyclic_graph(const GraphPresentation& g) {
    const int n = static_cast<int>(g.vertices.size());
    std::vector<int> src(g.edges.size()), dst(g.edges.size());
    {
        std::set<std::string> seen(g.vertices.begin(), g.vertices.end());
        if (static_cast<int>(seen.size()) != n) fail(ErrorCode::DanglingReference, "duplicate vertex id");
        std::set<std::string> eids;
        for (size_t i = 0; i < g.edges.size(); ++i) {
            if (!eids.insert(g.edges[i].id).second)
                fail(ErrorCode::DanglingReference, "duplicate edge id '" + g.edges[i].id + "'");
            auto find = [&](const std::string& v) {
                for (int j = 0; j < n; ++j)
                    if (g.vertices[j] == v) return j;
                fail(ErrorCode::DanglingReference, "edge '" + g.edges[i].id + "' references undeclared vertex '" + v + "'");
            };
            src[i] = find(g.edges[i].src);
            dst[i] = find(g.edges[i].dst);
        }
    }
    // Cycle detection: DFS colouring over vertices.
    {
        std::vector<int> colour(n, 0);
        auto dfs = [&](auto&& self, int v) -> void {
            colour[v] = 1;
            for (size_t e = 0; e < g.edges.size(); ++e) {
                if (src[e] != v) continue;
                if (colour[dst[e]] == 1) fail(ErrorCode::CyclicGraph, "directed cycle through vertex '" + g.vertices[dst[e]] + "'");
                if (colour[dst[e]] == 0) self(self, dst[e]);
            }
            colour[v] = 2;
        };
        for (int v = 0; v < n; ++v)
            if (colour[v] == 0) dfs(dfs, v);
    }

    // Morphisms are directed paths: identities first, then by length, source
    // order, and edge order.
    struct Path {
        int src;
        std::vector<int> edges;
    };
    std::vector<Path> paths;
    for (int v = 0; v < n; ++v) paths.push_back({v, {}});
    size_t level_begin = 0;
    while (level_begin < paths.size()) {
        size_t level_end = paths.size();
        for (size_t p = level_begin; p < level_end; ++p) {
            int tail = paths[p].edges.empty() ? paths[p].src : dst[paths[p].edges.back()];
            for (size_t e = 0; e < g.edges.size(); ++e) {
                if (src[e] != tail) continue;
                Path ext = paths[p];
                ext.edges.push_back(static_cast<int>(e));
                paths.push_back(std::move(ext));
            }
        }
        level_begin = level_end;
    }
    std::stable_sort(paths.begin(), paths.end(), [](const Path& a, const Path& b) {
        if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
        if (a.src != b.src) return a.src < b.src;
        return a.edges < b.edges;
    });

    auto cat = std::make_shared<FinCat>();
    cat->objects = g.vertices;
    std::map<std::pair<int, std::vector<int>>, int> path_index;
    for (size_t p = 0; p < paths.size(); ++p) {
        const Path& path = paths[p];
        std::string id;
        if (path.edges.empty()) {
            id = "id_" + g.vertices[path.src];
        } else {
            for (auto it = path.edges.rbegin(); it != path.edges.rend(); ++it) {
                if (!id.empty()) id += "*";
                id += g.edges[*it].id;
            }
        }
        int tail = path.edges.empty() ? path.src : dst[path.edges.back()];
        cat->morphisms.push_back({id, path.src, tail});
        path_index[{path.src, path.edges}] = static_cast<int>(p);
    }
    cat->identities.resize(n);
    for (int v = 0; v < n; ++v) cat->identities[v] = path_index.at({v, {}});
    const int n_mor = cat->num_morphisms();
    cat->compose_tab.assign(static_cast<size_t>(n_mor) * n_mor, -1);
    for (int f = 0; f < n_mor; ++f)
        for (int gm = 0; gm < n_mor; ++gm) {
            if (cat->cod(f) != cat->dom(gm)) continue;
            std::vector<int> cat_edges = paths[f].edges;
            cat_edges.insert(cat_edges.end(), paths[gm].edges.begin(), paths[gm].edges.end());
            cat->compose_tab[static_cast<size_t>(f) * n_mor + gm] = path_index.at({paths[f].src, cat_edges});
        }
    verify_category(*cat);
    return cat;
}

CatPtr opposite(const FinCat& c) {
    auto op = std::make_shared<FinCat>();
    op->objects = c.objects;
    op->identities = c.identities;
    for (const auto& m : c.morphisms) op->morphisms.push_back({m.id, m.cod, m.dom});
    const int n = c.num_morphisms();
    op->compose_tab.assign(static_cast<size_t>(n) * n, -1);
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g) op->compose_tab[static_cast<size_t>(f) * n + g] = c.compose(g, f);
    verify_category(*op);
    return op;
}

Coproduct coproduct_categories(CatPtr c, CatPtr d) {
    auto sum = std::make_shared<FinCat>();
    auto lname = [](const std::string& s) { return "l:" + s; };
    auto rname = [](const std::string& s) { return "r:" + s; };
    for (const auto& o : c->objects) sum->objects.push_back(lname(o));
    for (const auto& o : d->objects) sum->objects.push_back(rname(o));
    for (const auto& m : c->morphisms) sum->morphisms.push_back({lname(m.id), m.dom, m.cod});
    const int obj_off = c->num_objects();
    const int mor_off = c->num_morphisms();
    for (const auto& m : d->morphisms) sum->morphisms.push_back({rname(m.id), m.dom + obj_off, m.cod + obj_off});
    for (int o = 0; o < c->num_objects(); ++o) sum->identities.push_back(c->identities[o]);
    for (int o = 0; o < d->num_objects(); ++o) sum->identities.push_back(d->identities[o] + mor_off);
    const int n = sum->num_morphisms();
    sum->compose_tab.assign(static_cast<size_t>(n) * n, -1);
    for (int f = 0; f < c->num_morphisms(); ++f)
        for (int g = 0; g < c->num_morphisms(); ++g)
            sum->compose_tab[static_cast<size_t>(f) * n + g] = c->compose(f, g);
    for (int f = 0; f < d->num_morphisms(); ++f)
        for (int g = 0; g < d->num_morphisms(); ++g) {
            int fg = d->compose(f, g);
            sum->compose_tab[static_cast<size_t>(f + mor_off) * n + (g + mor_off)] = fg < 0 ? -1 : fg + mor_off;
        }
    verify_category(*sum);

    Coproduct result;
    result.category = sum;
    std::vector<int> lobj(c->num_objects()), lmor(c->num_morphisms());
    for (int o = 0; o < c->num_objects(); ++o) lobj[o] = o;
    for (int m = 0; m < c->num_morphisms(); ++m) lmor[m] = m;
    result.inject_left = make_functor(c, sum, std::move(lobj), std::move(lmor));
    std::vector<int> robj(d->num_objects()), rmor(d->num_morphisms());
    for (int o = 0; o < d->num_objects(); ++o) robj[o] = o + obj_off;
    for (int m = 0; m < d->num_morphisms(); ++m) rmor[m] = m + mor_off;
    result.inject_right = make_functor(d, sum, std::move(robj), std::move(rmor));
    return result;
}

int inverse_morphism(const FinCat& c, int m) {
    for (int g = 0; g < c.num_morphisms(); ++g) {
        if (c.dom(g) != c.cod(m) || c.cod(g) != c.dom(m)) continue;
        if (c.compose(m, g) == c.identities[c.dom(m)] && c.compose(g, m) == c.identities[c.cod(m)]) return g;
    }
    return -1;
}

bool is_iso_morphism(const FinCat& c, int m) { return inverse_morphism(c, m) != -1; }

static void verify_functor(const FinFunctor& f) {
    const FinCat& s = *f.source;
    const FinCat& t = *f.target;
    if (static_cast<int>(f.obj_map.size()) != s.num_objects() ||
        static_cast<int>(f.mor_map.size()) != s.num_morphisms())
        fail(ErrorCode::NotFunctorial, "object/morphism maps are not total");
    for (int o : f.obj_map)
        if (o < 0 || o >= t.num_objects()) fail(ErrorCode::NotFunctorial, "object map leaves the target category");
    for (int m : f.mor_map)
        if (m < 0 || m >= t.num_morphisms()) fail(ErrorCode::NotFunctorial, "morphism map leaves the target category");
    for (int m = 0; m < s.num_morphisms(); ++m) {
        int im = f.mor_map[m];
        if (t.dom(im) != f.obj_map[s.dom(m)])
            fail(ErrorCode::NotFunctorial, "dom not preserved at morphism '" + s.morphisms[m].id + "'");
        if (t.cod(im) != f.obj_map[s.cod(m)])
            fail(ErrorCode::NotFunctorial, "cod not preserved at morphism '" + s.morphisms[m].id + "'");
    }
    for (int o = 0; o < s.num_objects(); ++o)
        if (f.mor_map[s.identities[o]] != t.identities[f.obj_map[o]])
            fail(ErrorCode::NotFunctorial, "identity not preserved at object '" + s.objects[o] + "'");
    for (int m1 = 0; m1 < s.num_morphisms(); ++m1)
        for (int m2 = 0; m2 < s.num_morphisms(); ++m2) {
            if (s.cod(m1) != s.dom(m2)) continue;
            if (f.mor_map[s.compose(m1, m2)] != t.compose(f.mor_map[m1], f.mor_map[m2]))
                fail(ErrorCode::NotFunctorial, "composition not preserved on ('" + s.morphisms[m1].id + "', '" +
                                                   s.morphisms[m2].id + "')");
        }
}

FinFunctor make_functor(CatPtr source, CatPtr target, std::vector<int> obj_map, std::vector<int> mor_map) {
    FinFunctor f{std::move(source), std::move(target), std::move(obj_map), std::move(mor_map)};
    verify_functor(f);
    return f;
}

FinFunctor validate_functor(const RawFunctor& raw, CatPtr source, CatPtr target) {
    std::vector<int> obj_map(source->num_objects(), -1);
    std::vector<int> mor_map(source->num_morphisms(), -1);
    for (const auto& [a, b] : raw.objects) {
        int sa = source->find_object(a);
        int tb = target->find_object(b);
        if (sa < 0) fail(ErrorCode::DanglingReference, "'" + a + "' is not an object of the source category");
        if (tb < 0) fail(ErrorCode::DanglingReference, "'" + b + "' is not an object of the target category");
        obj_map[sa] = tb;
    }
    for (const auto& [a, b] : raw.morphisms) {
        int sa = source->find_morphism(a);
        int tb = target->find_morphism(b);
        if (sa < 0) fail(ErrorCode::DanglingReference, "'" + a + "' is not a morphism of the source category");
        if (tb < 0) fail(ErrorCode::DanglingReference, "'" + b + "' is not a morphism of the target category");
        mor_map[sa] = tb;
    }
    // Unspecified identity images default to the identity of the image object.
    for (int o = 0; o < source->num_objects(); ++o)
        if (mor_map[source->identities[o]] == -1 && obj_map[o] != -1)
            mor_map[source->identities[o]] = target->identities[obj_map[o]];
    for (int o = 0; o < source->num_objects(); ++o)
        if (obj_map[o] == -1) fail(ErrorCode::NotFunctorial, "no image for object '" + source->objects[o] + "'");
    for (int m = 0; m < source->num_morphisms(); ++m)
        if (mor_map[m] == -1) fail(ErrorCode::NotFunctorial, "no image for morphism '" + source->morphisms[m].id + "'");
    return make_functor(std::move(source), std::move(target), std::move(obj_map), std::move(mor_map));
}

FinFunctor identity_functor(CatPtr c) {
    std::vector<int> obj(c->num_objects()), mor(c->num_morphisms());
    for (int o = 0; o < c->num_objects(); ++o) obj[o] = o;
    for (int m = 0; m < c->num_morphisms(); ++m) mor[m] = m;
    return FinFunctor{c, c, std::move(obj), std::move(mor)};
}

FinFunctor constant_functor(CatPtr source, CatPtr target, int target_obj) {
    std::vector<int> obj(source->num_objects(), target_obj);
    std::vector<int> mor(source->num_morphisms(), target->identities[target_obj]);
    return FinFunctor{std::move(source), std::move(target), std::move(obj), std::move(mor)};
}

FinFunctor compose_functors(const FinFunctor& f, const FinFunctor& g) {
    if (!(*f.target == *g.source)) fail(ErrorCode::SourceTargetMismatch, "target of f differs from source of g");
    std::vector<int> obj(f.obj_map.size()), mor(f.mor_map.size());
    for (size_t o = 0; o < obj.size(); ++o) obj[o] = g.obj_map[f.obj_map[o]];
    for (size_t m = 0; m < mor.size(); ++m) mor[m] = g.mor_map[f.mor_map[m]];
    return make_functor(f.source, g.target, std::move(obj), std::move(mor));
}

FinFunctor opposite_functor(const FinFunctor& f) {
    return make_functor(opposite(*f.source), opposite(*f.target), f.obj_map, f.mor_map);
}

static void verify_nat_trans(const NatTransform& n) {
    const FinFunctor& f = n.source_functor;
    const FinFunctor& g = n.target_functor;
    if (!(*f.source == *g.source) || !(*f.target == *g.target))
        fail(ErrorCode::TypingMismatch, "transformation requires parallel functors");
    const FinCat& s = *f.source;
    const FinCat& t = *f.target;
    if (n.components.size() != static_cast<size_t>(s.num_objects()))
        fail(ErrorCode::BadComponentTyping, "component family is not total");
    for (int j = 0; j < s.num_objects(); ++j) {
        int c = n.components[j];
        if (c < 0 || c >= t.num_morphisms() || t.dom(c) != f.obj_map[j] || t.cod(c) != g.obj_map[j])
            fail(ErrorCode::BadComponentTyping, "component at '" + s.objects[j] + "' has wrong endpoints");
    }
    for (int m = 0; m < s.num_morphisms(); ++m) {
        int j = s.dom(m), j2 = s.cod(m);
        // g(m) . comp_j  vs  comp_j2 . f(m)
        if (t.compose(n.components[j], g.mor_map[m]) != t.compose(f.mor_map[m], n.components[j2]))
            fail(ErrorCode::NotNatural, "naturality fails at morphism '" + s.morphisms[m].id + "'");
    }
}

NatTransform make_nat_trans(FinFunctor f, FinFunctor g, std::vector<int> components) {
    NatTransform n{std::move(f), std::move(g), std::move(components)};
    verify_nat_trans(n);
    return n;
}

NatTransform validate_nat_trans(const std::vector<std::pair<std::string, std::string>>& raw_components,
                                const FinFunctor& f, const FinFunctor& g) {
    std::vector<int> components(f.source->num_objects(), -1);
    for (const auto& [obj, mor] : raw_components) {
        int o = f.source->find_object(obj);
        int m = f.target->find_morphism(mor);
        if (o < 0) fail(ErrorCode::DanglingReference, "'" + obj + "' is not an object of the source category");
        if (m < 0) fail(ErrorCode::DanglingReference, "'" + mor + "' is not a morphism of the target category");
        components[o] = m;
    }
    for (int o = 0; o < f.source->num_objects(); ++o)
        if (components[o] == -1) fail(ErrorCode::BadComponentTyping, "no component at object '" + f.source->objects[o] + "'");
    return make_nat_trans(f, g, std::move(components));
}

NatTransform identity_nat_trans(const FinFunctor& f) {
    std::vector<int> components(f.source->num_objects());
    for (int o = 0; o < f.source->num_objects(); ++o) components[o] = f.target->identities[f.obj_map[o]];
    return NatTransform{f, f, std::move(components)};
}

NatTransform nat_vertical_compose(const NatTransform& sigma, const NatTransform& tau) {
    if (!(sigma.target_functor == tau.source_functor))
        fail(ErrorCode::TypingMismatch, "vertical composite requires matching middle functor");
    const FinCat& t = *sigma.source_functor.target;
    std::vector<int> components(sigma.components.size());
    for (size_t j = 0; j < components.size(); ++j) components[j] = t.compose(sigma.components[j], tau.components[j]);
    return make_nat_trans(sigma.source_functor, tau.target_functor, std::move(components));
}

NatTransform nat_whisker(const FinFunctor& h, const NatTransform& tau, WhiskerSide side) {
    if (side == WhiskerSide::Post) {
        if (!(*h.source == *tau.source_functor.target))
            fail(ErrorCode::TypingMismatch, "post-whiskering requires h out of the transformation's target category");
        std::vector<int> components(tau.components.size());
        for (size_t j = 0; j < components.size(); ++j) components[j] = h.mor_map[tau.components[j]];
        return make_nat_trans(compose_functors(tau.source_functor, h), compose_functors(tau.target_functor, h),
                              std::move(components));
    }
    if (!(*h.target == *tau.source_functor.source))
        fail(ErrorCode::TypingMismatch, "pre-whiskering requires h into the transformation's source category");
    std::vector<int> components(h.obj_map.size());
    for (size_t c = 0; c < components.size(); ++c) components[c] = tau.components[h.obj_map[c]];
    return make_nat_trans(compose_functors(h, tau.source_functor), compose_functors(h, tau.target_functor),
                          std::move(components));
}

}  // namespace ceq::core
