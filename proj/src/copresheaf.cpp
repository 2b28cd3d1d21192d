#include "copresheaf.hpp"

#include <algorithm>
#include <set>

namespace ceq::fib {

using ceq::ErrorCode;
using ceq::fail;
using core::compose_functors;
using core::make_functor;
using core::make_nat_trans;

int FinSetObj::find(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (elements[i] == id) return i;
    return -1;
}

Copresheaf make_copresheaf(CatPtr base, std::vector<FinSetObj> at, std::vector<std::vector<int>> act) {
    Copresheaf f{std::move(base), std::move(at), std::move(act)};
    const FinCat& x = *f.base;
    if (f.at.size() != static_cast<size_t>(x.num_objects()) || f.act.size() != static_cast<size_t>(x.num_morphisms()))
        fail(ErrorCode::ValidationError, "copresheaf tables are not total");
    for (const auto& set : f.at) {
        std::set<std::string> seen;
        for (const auto& e : set.elements)
            if (!seen.insert(e).second) fail(ErrorCode::ValidationError, "duplicate element id '" + e + "'");
    }
    for (int m = 0; m < x.num_morphisms(); ++m) {
        if (f.act[m].size() != static_cast<size_t>(f.at[x.dom(m)].size()))
            fail(ErrorCode::ValidationError, "action of '" + x.morphisms[m].id + "' is not total");
        for (int v : f.act[m])
            if (v < 0 || v >= f.at[x.cod(m)].size())
                fail(ErrorCode::ValidationError, "action of '" + x.morphisms[m].id + "' leaves its codomain set");
    }
    for (int o = 0; o < x.num_objects(); ++o)
        for (int s = 0; s < f.at[o].size(); ++s)
            if (f.act[x.identities[o]][s] != s)
                fail(ErrorCode::ValidationError, "action of identity at '" + x.objects[o] + "' is not the identity");
    for (int m1 = 0; m1 < x.num_morphisms(); ++m1)
        for (int m2 = 0; m2 < x.num_morphisms(); ++m2) {
            if (x.cod(m1) != x.dom(m2)) continue;
            int m21 = x.compose(m1, m2);
            for (int s = 0; s < f.at[x.dom(m1)].size(); ++s)
                if (f.act[m21][s] != f.act[m2][f.act[m1][s]])
                    fail(ErrorCode::ValidationError, "action is not functorial on ('" + x.morphisms[m1].id + "', '" +
                                                         x.morphisms[m2].id + "')");
        }
    return f;
}

Copresheaf constant_singleton(CatPtr base) {
    std::vector<FinSetObj> at(base->num_objects(), FinSetObj{{"*"}});
    std::vector<std::vector<int>> act(base->num_morphisms(), {0});
    return Copresheaf{std::move(base), std::move(at), std::move(act)};
}

CopresheafMap make_copresheaf_map(Copresheaf source, Copresheaf target, std::vector<std::vector<int>> components) {
    if (!(*source.base == *target.base)) fail(ErrorCode::BaseMismatch, "copresheaf map requires a common base");
    CopresheafMap m{std::move(source), std::move(target), std::move(components)};
    const FinCat& x = *m.source.base;
    if (m.components.size() != static_cast<size_t>(x.num_objects()))
        fail(ErrorCode::BadComponentTyping, "component family is not total");
    for (int o = 0; o < x.num_objects(); ++o) {
        if (m.components[o].size() != static_cast<size_t>(m.source.at[o].size()))
            fail(ErrorCode::BadComponentTyping, "component at '" + x.objects[o] + "' is not total");
        for (int v : m.components[o])
            if (v < 0 || v >= m.target.at[o].size())
                fail(ErrorCode::BadComponentTyping, "component at '" + x.objects[o] + "' leaves the target set");
    }
    for (int f = 0; f < x.num_morphisms(); ++f)
        for (int s = 0; s < m.source.at[x.dom(f)].size(); ++s)
            if (m.target.act[f][m.components[x.dom(f)][s]] != m.components[x.cod(f)][m.source.act[f][s]])
                fail(ErrorCode::NotNatural, "naturality fails at morphism '" + x.morphisms[f].id + "'");
    return m;
}

CopresheafMap identity_copresheaf_map(const Copresheaf& f) {
    std::vector<std::vector<int>> components(f.at.size());
    for (size_t o = 0; o < f.at.size(); ++o) {
        components[o].resize(f.at[o].size());
        for (int s = 0; s < f.at[o].size(); ++s) components[o][s] = s;
    }
    return CopresheafMap{f, f, std::move(components)};
}

CopresheafMap compose_copresheaf_maps(const CopresheafMap& a, const CopresheafMap& b) {
    if (!(a.target == b.source)) fail(ErrorCode::EndpointMismatch, "copresheaf maps are not composable");
    std::vector<std::vector<int>> components(a.components.size());
    for (size_t o = 0; o < components.size(); ++o) {
        components[o].resize(a.components[o].size());
        for (size_t s = 0; s < a.components[o].size(); ++s) components[o][s] = b.components[o][a.components[o][s]];
    }
    return make_copresheaf_map(a.source, b.target, std::move(components));
}

bool is_copresheaf_iso(const CopresheafMap& m) {
    for (size_t o = 0; o < m.components.size(); ++o) {
        if (m.components[o].size() != static_cast<size_t>(m.target.at[o].size())) return false;
        std::vector<bool> hit(m.target.at[o].size(), false);
        for (int v : m.components[o]) {
            if (hit[v]) return false;
            hit[v] = true;
        }
    }
    return true;
}

CopresheafMap invert_copresheaf_map(const CopresheafMap& m) {
    if (!is_copresheaf_iso(m)) fail(ErrorCode::NotPseudo, "copresheaf map is not invertible");
    std::vector<std::vector<int>> components(m.components.size());
    for (size_t o = 0; o < components.size(); ++o) {
        components[o].resize(m.components[o].size());
        for (size_t s = 0; s < m.components[o].size(); ++s) components[o][m.components[o][s]] = static_cast<int>(s);
    }
    return make_copresheaf_map(m.target, m.source, std::move(components));
}

std::vector<CopresheafMap> enumerate_nat_trans(const Copresheaf& f, const Copresheaf& g) {
    if (!(*f.base == *g.base)) fail(ErrorCode::BaseMismatch, "copresheaves live over different bases");
    const FinCat& x = *f.base;
    const int n_obj = x.num_objects();
    std::vector<CopresheafMap> result;
    std::vector<std::vector<int>> components(n_obj);

    // Component functions are chosen object by object in declaration order;
    // naturality is pruned as soon as both endpoints of a morphism are fixed.
    auto consistent_through = [&](int upto) {
        for (int m = 0; m < x.num_morphisms(); ++m) {
            int d = x.dom(m), c = x.cod(m);
            if (d > upto || c > upto) continue;
            for (int s = 0; s < f.at[d].size(); ++s)
                if (g.act[m][components[d][s]] != components[c][f.act[m][s]]) return false;
        }
        return true;
    };
    auto recurse = [&](auto&& self, int obj) -> void {
        if (obj == n_obj) {
            result.push_back(make_copresheaf_map(f, g, components));
            return;
        }
        const int k = f.at[obj].size();
        const int n = g.at[obj].size();
        if (k > 0 && n == 0) return;
        std::vector<int> choice(k, 0);
        while (true) {
            components[obj] = choice;
            if (consistent_through(obj)) self(self, obj + 1);
            int i = 0;
            for (; i < k; ++i) {
                if (++choice[i] < n) break;
                choice[i] = 0;
            }
            if (i == k) break;
        }
        components[obj].clear();
    };
    recurse(recurse, 0);
    return result;
}

DopfCertificate is_discrete_opfibration(const FinFunctor& p) {
    const FinCat& e_cat = *p.source;
    const FinCat& x = *p.target;
    for (int f = 0; f < x.num_morphisms(); ++f)
        for (int e = 0; e < e_cat.num_objects(); ++e) {
            if (p.obj_map[e] != x.dom(f)) continue;
            int count = 0;
            for (int m = 0; m < e_cat.num_morphisms(); ++m)
                if (e_cat.dom(m) == e && p.mor_map[m] == f) ++count;
            if (count != 1) return {false, f, e, count};
        }
    return {};
}

bool is_discrete_opfibration_at(const FinFunctor& p, int f) {
    const FinCat& e_cat = *p.source;
    const FinCat& x = *p.target;
    for (int e = 0; e < e_cat.num_objects(); ++e) {
        if (p.obj_map[e] != x.dom(f)) continue;
        int count = 0;
        for (int m = 0; m < e_cat.num_morphisms(); ++m)
            if (e_cat.dom(m) == e && p.mor_map[m] == f) ++count;
        if (count != 1) return false;
    }
    return true;
}

bool is_discrete_fibration_at(const FinFunctor& p, int f) {
    const FinCat& e_cat = *p.source;
    const FinCat& x = *p.target;
    for (int e = 0; e < e_cat.num_objects(); ++e) {
        if (p.obj_map[e] != x.cod(f)) continue;
        int count = 0;
        for (int m = 0; m < e_cat.num_morphisms(); ++m)
            if (e_cat.cod(m) == e && p.mor_map[m] == f) ++count;
        if (count != 1) return false;
    }
    return true;
}

bool is_discrete_fibration(const FinFunctor& p) {
    for (int f = 0; f < p.target->num_morphisms(); ++f)
        if (!is_discrete_fibration_at(p, f)) return false;
    return true;
}

std::pair<int, int> transport(const FinFunctor& p, int e, int f) {
    if (!is_discrete_opfibration_at(p, f))
        fail(ErrorCode::NotOpfibrationAt, "functor is not a discrete opfibration at '" + p.target->morphisms[f].id + "'");
    if (p.obj_map[e] != p.target->dom(f))
        fail(ErrorCode::TypingMismatch, "object does not lie in the fibre over the domain");
    const FinCat& e_cat = *p.source;
    for (int m = 0; m < e_cat.num_morphisms(); ++m)
        if (e_cat.dom(m) == e && p.mor_map[m] == f) return {m, e_cat.cod(m)};
    fail(ErrorCode::InternalInvariantViolation, "unique lift not found");
}

int Grothendieck::object_index(int base_obj, int element) const {
    for (size_t i = 0; i < objects.size(); ++i)
        if (objects[i].first == base_obj && objects[i].second == element) return static_cast<int>(i);
    return -1;
}

int Grothendieck::morphism_index(int base_mor, int element) const {
    for (size_t i = 0; i < morphism_data.size(); ++i)
        if (morphism_data[i].first == base_mor && morphism_data[i].second == element) return static_cast<int>(i);
    return -1;
}

Grothendieck grothendieck(const Copresheaf& f) {
    const FinCat& x = *f.base;
    Grothendieck result;
    auto cat = std::make_shared<FinCat>();
    for (int o = 0; o < x.num_objects(); ++o)
        for (int s = 0; s < f.at[o].size(); ++s) {
            result.objects.push_back({o, s});
            cat->objects.push_back("(" + x.objects[o] + "," + f.at[o].elements[s] + ")");
        }
    for (int g = 0; g < x.num_morphisms(); ++g)
        for (int s = 0; s < f.at[x.dom(g)].size(); ++s) {
            result.morphism_data.push_back({g, s});
            cat->morphisms.push_back({"(" + x.morphisms[g].id + "," + f.at[x.dom(g)].elements[s] + ")",
                                      result.object_index(x.dom(g), s), result.object_index(x.cod(g), f.act[g][s])});
        }
    cat->identities.resize(cat->num_objects());
    for (size_t o = 0; o < result.objects.size(); ++o)
        cat->identities[o] = result.morphism_index(x.identities[result.objects[o].first], result.objects[o].second);
    const int n = cat->num_morphisms();
    cat->compose_tab.assign(static_cast<size_t>(n) * n, -1);
    for (int m1 = 0; m1 < n; ++m1)
        for (int m2 = 0; m2 < n; ++m2) {
            if (cat->cod(m1) != cat->dom(m2)) continue;
            cat->compose_tab[static_cast<size_t>(m1) * n + m2] = result.morphism_index(
                x.compose(result.morphism_data[m1].first, result.morphism_data[m2].first), result.morphism_data[m1].second);
        }
    core::verify_category(*cat);
    result.category = cat;

    std::vector<int> po(cat->num_objects()), pm(n);
    for (int o = 0; o < cat->num_objects(); ++o) po[o] = result.objects[o].first;
    for (int m = 0; m < n; ++m) pm[m] = result.morphism_data[m].first;
    result.projection = core::FinFunctor{cat, f.base, std::move(po), std::move(pm)};
    return result;
}

FinFunctor grothendieck_functor(const CopresheafMap& m, const Grothendieck& source, const Grothendieck& target) {
    std::vector<int> obj(source.objects.size()), mor(source.morphism_data.size());
    for (size_t o = 0; o < source.objects.size(); ++o) {
        auto [x, s] = source.objects[o];
        obj[o] = target.object_index(x, m.components[x][s]);
    }
    const FinCat& base = *m.source.base;
    for (size_t i = 0; i < source.morphism_data.size(); ++i) {
        auto [g, s] = source.morphism_data[i];
        mor[i] = target.morphism_index(g, m.components[base.dom(g)][s]);
    }
    return make_functor(source.category, target.category, std::move(obj), std::move(mor));
}

Copresheaf fibres_copresheaf(const FinFunctor& p) {
    if (!is_discrete_opfibration(p).ok)
        fail(ErrorCode::NotOpfibration, "fibres form a copresheaf only for discrete opfibrations");
    const FinCat& e_cat = *p.source;
    const FinCat& x = *p.target;
    std::vector<std::vector<int>> fibre(x.num_objects());  // fibre object lists, by source object order
    std::vector<int> pos(e_cat.num_objects(), -1);
    for (int e = 0; e < e_cat.num_objects(); ++e) {
        pos[e] = static_cast<int>(fibre[p.obj_map[e]].size());
        fibre[p.obj_map[e]].push_back(e);
    }
    std::vector<FinSetObj> at(x.num_objects());
    for (int o = 0; o < x.num_objects(); ++o)
        for (int e : fibre[o]) at[o].elements.push_back(e_cat.objects[e]);
    std::vector<std::vector<int>> act(x.num_morphisms());
    for (int f = 0; f < x.num_morphisms(); ++f) {
        act[f].resize(fibre[x.dom(f)].size());
        for (size_t s = 0; s < fibre[x.dom(f)].size(); ++s)
            act[f][s] = pos[transport(p, fibre[x.dom(f)][s], f).second];
    }
    return make_copresheaf(p.target, std::move(at), std::move(act));
}

LimitResult limit_finset(const Copresheaf& f) {
    const FinCat& j_cat = *f.base;
    const int n_obj = j_cat.num_objects();
    LimitResult result;
    std::vector<int> family(n_obj, -1);
    auto consistent_through = [&](int upto) {
        for (int m = 0; m < j_cat.num_morphisms(); ++m) {
            int d = j_cat.dom(m), c = j_cat.cod(m);
            if (d > upto || c > upto) continue;
            if (f.act[m][family[d]] != family[c]) return false;
        }
        return true;
    };
    auto recurse = [&](auto&& self, int obj) -> void {
        if (obj == n_obj) {
            std::string id = "(";
            for (int o = 0; o < n_obj; ++o) {
                if (o) id += ",";
                id += f.at[o].elements[family[o]];
            }
            id += ")";
            result.set.elements.push_back(id);
            result.families.push_back(family);
            return;
        }
        for (int s = 0; s < f.at[obj].size(); ++s) {
            family[obj] = s;
            if (consistent_through(obj)) self(self, obj + 1);
        }
        family[obj] = -1;
    };
    if (n_obj == 0) {
        result.set.elements.push_back("()");
        result.families.push_back({});
    } else {
        recurse(recurse, 0);
    }
    return result;
}

std::vector<Lift> enumerate_lifts(const Diagram& d, const FinFunctor& p) {
    if (!is_discrete_opfibration(p).ok) fail(ErrorCode::NotOpfibration, "lifts are enumerated along discrete opfibrations");
    if (!(*d.base() == *p.target)) fail(ErrorCode::BaseMismatch, "diagram and opfibration have different bases");
    const FinCat& j_cat = *d.shape();
    const FinCat& e_cat = *p.source;

    // Fibres of p pulled back along D, as a copresheaf on J; lifts are the
    // compatible families, i.e. the limit.
    std::vector<std::vector<int>> fibre(j_cat.num_objects());
    std::vector<FinSetObj> at(j_cat.num_objects());
    for (int j = 0; j < j_cat.num_objects(); ++j)
        for (int e = 0; e < e_cat.num_objects(); ++e)
            if (p.obj_map[e] == d.functor.obj_map[j]) {
                fibre[j].push_back(e);
                at[j].elements.push_back(e_cat.objects[e]);
            }
    std::vector<std::vector<int>> act(j_cat.num_morphisms());
    for (int h = 0; h < j_cat.num_morphisms(); ++h) {
        int f = d.functor.mor_map[h];
        act[h].resize(fibre[j_cat.dom(h)].size());
        for (size_t s = 0; s < fibre[j_cat.dom(h)].size(); ++s) {
            int target_obj = transport(p, fibre[j_cat.dom(h)][s], f).second;
            const auto& cod_fibre = fibre[j_cat.cod(h)];
            act[h][s] = static_cast<int>(std::find(cod_fibre.begin(), cod_fibre.end(), target_obj) - cod_fibre.begin());
        }
    }
    LimitResult families = limit_finset(make_copresheaf(d.shape(), std::move(at), std::move(act)));

    std::vector<Lift> lifts;
    for (const auto& family : families.families) {
        std::vector<int> obj(j_cat.num_objects()), mor(j_cat.num_morphisms());
        for (int j = 0; j < j_cat.num_objects(); ++j) obj[j] = fibre[j][family[j]];
        for (int h = 0; h < j_cat.num_morphisms(); ++h)
            mor[h] = transport(p, obj[j_cat.dom(h)], d.functor.mor_map[h]).first;
        lifts.push_back(Lift{d, make_functor(d.shape(), p.source, std::move(obj), std::move(mor)), p});
    }
    return lifts;
}

Pushforward pushforward_lift(const DiagMorphismLeft& m, const Lift& lift_of_source) {
    const FinFunctor& p = lift_of_source.over;
    if (!is_discrete_opfibration(p).ok) fail(ErrorCode::NotOpfibration, "pushforward requires a discrete opfibration");
    if (!(compose_functors(lift_of_source.total, p) == m.source.functor) || !(lift_of_source.diagram == m.source))
        fail(ErrorCode::NotALift, "given lift does not lift the source diagram");
    const FinCat& k_cat = *m.target.shape();
    const FinFunctor& e = m.target.functor;
    const FinFunctor& total = lift_of_source.total;

    std::vector<int> obj(k_cat.num_objects()), rho_bar(k_cat.num_objects());
    for (int k = 0; k < k_cat.num_objects(); ++k) {
        auto [lifted, cod] = transport(p, total.obj_map[m.r.obj_map[k]], m.rho.components[k]);
        rho_bar[k] = lifted;
        obj[k] = cod;
    }
    std::vector<int> mor(k_cat.num_morphisms());
    for (int g = 0; g < k_cat.num_morphisms(); ++g) mor[g] = transport(p, obj[k_cat.dom(g)], e.mor_map[g]).first;
    FinFunctor target_total = make_functor(m.target.shape(), p.source, std::move(obj), std::move(mor));
    if (!(compose_functors(target_total, p) == e))
        fail(ErrorCode::InternalInvariantViolation, "pushforward does not lie over the target diagram");

    Pushforward result;
    result.target_lift = Lift{m.target, target_total, p};
    result.rho_bar = make_nat_trans(compose_functors(m.r, total), target_total, std::move(rho_bar));
    result.over_morphism = comma::make_diag_morphism_left(Diagram{total}, Diagram{target_total}, m.r, result.rho_bar);
    return result;
}

SetDiagMorphism make_set_diag_morphism(Copresheaf source, Copresheaf target, FinFunctor r,
                                       std::vector<std::vector<int>> components) {
    if (!(*r.source == *target.base) || !(*r.target == *source.base))
        fail(ErrorCode::TypingMismatch, "reindexing functor must map the target shape to the source shape");
    SetDiagMorphism m{std::move(source), std::move(target), std::move(r), std::move(components)};
    const FinCat& k_cat = *m.target.base;
    if (m.components.size() != static_cast<size_t>(k_cat.num_objects()))
        fail(ErrorCode::TypingMismatch, "component family is not total");
    for (int k = 0; k < k_cat.num_objects(); ++k)
        if (m.components[k].size() != static_cast<size_t>(m.source.at[m.r.obj_map[k]].size()))
            fail(ErrorCode::TypingMismatch, "component at '" + k_cat.objects[k] + "' has wrong arity");
    for (int g = 0; g < k_cat.num_morphisms(); ++g) {
        int kd = k_cat.dom(g), kc = k_cat.cod(g);
        for (size_t s = 0; s < m.components[kd].size(); ++s)
            if (m.target.act[g][m.components[kd][s]] != m.components[kc][m.source.act[m.r.mor_map[g]][s]])
                fail(ErrorCode::NotNatural, "naturality fails at morphism '" + k_cat.morphisms[g].id + "'");
    }
    return m;
}

std::vector<int> limit_map(const SetDiagMorphism& m, const LimitResult& source_limit,
                           const LimitResult& target_limit) {
    const FinCat& k_cat = *m.target.base;
    std::vector<int> result(source_limit.families.size(), -1);
    for (size_t i = 0; i < source_limit.families.size(); ++i) {
        std::vector<int> image(k_cat.num_objects());
        for (int k = 0; k < k_cat.num_objects(); ++k)
            image[k] = m.components[k][source_limit.families[i][m.r.obj_map[k]]];
        auto it = std::find(target_limit.families.begin(), target_limit.families.end(), image);
        if (it == target_limit.families.end())
            fail(ErrorCode::InternalInvariantViolation, "image family is not compatible");
        result[i] = static_cast<int>(it - target_limit.families.begin());
    }
    return result;
}

}  // namespace ceq::fib
