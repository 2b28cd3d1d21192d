#include "comma.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace ceq::comma {

using core::make_functor;
using core::make_nat_trans;
using core::compose_functors;
using core::identity_nat_trans;
using ceq::ErrorCode;
using ceq::fail;

int CommaResult::object_index(int a, int b, int gamma) const {
    for (size_t i = 0; i < objects.size(); ++i)
        if (objects[i][0] == a && objects[i][1] == b && objects[i][2] == gamma) return static_cast<int>(i);
    return -1;
}

CommaResult comma_category(const FinFunctor& f, const FinFunctor& g) {
    if (!(*f.target == *g.target)) fail(ErrorCode::TargetMismatch, "comma requires a cospan");
    const FinCat& a = *f.source;
    const FinCat& b = *g.source;
    const FinCat& c = *f.target;

    CommaResult result;
    auto cat = std::make_shared<FinCat>();

    for (int oa = 0; oa < a.num_objects(); ++oa)
        for (int ob = 0; ob < b.num_objects(); ++ob)
            for (int gm = 0; gm < c.num_morphisms(); ++gm) {
                if (c.dom(gm) != f.obj_map[oa] || c.cod(gm) != g.obj_map[ob]) continue;
                result.objects.push_back({oa, ob, gm});
                cat->objects.push_back("(" + a.objects[oa] + "," + b.objects[ob] + "," + c.morphisms[gm].id + ")");
            }

    struct MorRec {
        int h, k, src, dst;
    };
    std::vector<MorRec> mors;
    for (size_t src = 0; src < result.objects.size(); ++src)
        for (size_t dst = 0; dst < result.objects.size(); ++dst) {
            auto [a1, b1, g1] = result.objects[src];
            auto [a2, b2, g2] = result.objects[dst];
            for (int h = 0; h < a.num_morphisms(); ++h) {
                if (a.dom(h) != a1 || a.cod(h) != a2) continue;
                for (int k = 0; k < b.num_morphisms(); ++k) {
                    if (b.dom(k) != b1 || b.cod(k) != b2) continue;
                    // G k . gamma1  ==  gamma2 . F h
                    if (c.compose(g1, g.mor_map[k]) != c.compose(f.mor_map[h], g2)) continue;
                    mors.push_back({h, k, static_cast<int>(src), static_cast<int>(dst)});
                    cat->morphisms.push_back({"(" + a.morphisms[h].id + "," + b.morphisms[k].id + "):" +
                                                  cat->objects[src] + "->" + cat->objects[dst],
                                              static_cast<int>(src), static_cast<int>(dst)});
                }
            }
        }

    auto find_mor = [&](int h, int k, int src, int dst) {
        for (size_t i = 0; i < mors.size(); ++i)
            if (mors[i].h == h && mors[i].k == k && mors[i].src == src && mors[i].dst == dst)
                return static_cast<int>(i);
        fail(ErrorCode::InternalInvariantViolation, "comma category not closed under composition");
    };

    cat->identities.resize(cat->num_objects());
    for (size_t o = 0; o < result.objects.size(); ++o)
        cat->identities[o] = find_mor(a.identities[result.objects[o][0]], b.identities[result.objects[o][1]],
                                      static_cast<int>(o), static_cast<int>(o));
    const int n = cat->num_morphisms();
    cat->compose_tab.assign(static_cast<size_t>(n) * n, -1);
    for (int m1 = 0; m1 < n; ++m1)
        for (int m2 = 0; m2 < n; ++m2) {
            if (mors[m1].dst != mors[m2].src) continue;
            cat->compose_tab[static_cast<size_t>(m1) * n + m2] =
                find_mor(a.compose(mors[m1].h, mors[m2].h), b.compose(mors[m1].k, mors[m2].k), mors[m1].src,
                         mors[m2].dst);
        }
    core::verify_category(*cat);

    result.category = cat;
    for (const auto& m : mors) result.morphism_data.push_back({m.h, m.k});

    std::vector<int> lo(cat->num_objects()), lm(n), ro(cat->num_objects()), rm(n);
    for (int o = 0; o < cat->num_objects(); ++o) {
        lo[o] = result.objects[o][0];
        ro[o] = result.objects[o][1];
    }
    for (int m = 0; m < n; ++m) {
        lm[m] = mors[m].h;
        rm[m] = mors[m].k;
    }
    result.proj_left = core::FinFunctor{cat, f.source, lo, lm};
    result.proj_right = core::FinFunctor{cat, g.source, ro, rm};

    std::vector<int> cell(cat->num_objects());
    for (int o = 0; o < cat->num_objects(); ++o) cell[o] = result.objects[o][2];
    result.canonical_2cell =
        make_nat_trans(compose_functors(result.proj_left, f), compose_functors(result.proj_right, g), std::move(cell));
    return result;
}

Partition pi0(const FinCat& c) {
    std::vector<int> parent(c.num_objects());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int m = 0; m < c.num_morphisms(); ++m) {
        int a = find(c.dom(m)), b = find(c.cod(m));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    Partition p;
    p.block_of.assign(c.num_objects(), -1);
    for (int o = 0; o < c.num_objects(); ++o) {
        int root = find(o);
        if (p.block_of[root] == -1) {
            p.block_of[root] = static_cast<int>(p.blocks.size());
            p.blocks.push_back({});
        }
        p.block_of[o] = p.block_of[root];
        p.blocks[p.block_of[o]].push_back(o);
    }
    return p;
}

std::vector<std::pair<int, bool>> zigzag_witness(const FinCat& c, int a, int b) {
    // BFS over the undirected morphism graph.
    std::vector<std::pair<int, bool>> via(c.num_objects(), {-1, false});
    std::vector<int> prev(c.num_objects(), -1);
    std::deque<int> queue{a};
    prev[a] = a;
    while (!queue.empty()) {
        int o = queue.front();
        queue.pop_front();
        if (o == b) break;
        for (int m = 0; m < c.num_morphisms(); ++m) {
            if (c.dom(m) == o && prev[c.cod(m)] == -1) {
                prev[c.cod(m)] = o;
                via[c.cod(m)] = {m, true};
                queue.push_back(c.cod(m));
            }
            if (c.cod(m) == o && prev[c.dom(m)] == -1) {
                prev[c.dom(m)] = o;
                via[c.dom(m)] = {m, false};
                queue.push_back(c.dom(m));
            }
        }
    }
    if (prev[b] == -1) fail(ErrorCode::InternalInvariantViolation, "objects are not connected");
    std::vector<std::pair<int, bool>> path;
    for (int o = b; o != a; o = prev[o]) path.push_back(via[o]);
    std::reverse(path.begin(), path.end());
    return path;
}

CatPtr terminal_category() {
    static CatPtr one = [] {
        auto c = std::make_shared<FinCat>();
        c->objects = {"*"};
        c->morphisms = {{"id_*", 0, 0}};
        c->identities = {0};
        c->compose_tab = {0};
        return c;
    }();
    return one;
}

DiagMorphismRight make_diag_morphism_right(Diagram source, Diagram target, FinFunctor r, NatTransform rho) {
    if (!(*source.base() == *target.base())) fail(ErrorCode::BaseMismatch, "diagrams live over different categories");
    if (!(*r.source == *source.shape()) || !(*r.target == *target.shape()))
        fail(ErrorCode::TypingMismatch, "functor of a Diag-> morphism must map source shape to target shape");
    if (!(rho.source_functor == source.functor) || !(rho.target_functor == compose_functors(r, target.functor)))
        fail(ErrorCode::TypingMismatch, "transformation must have type D => E.R");
    return DiagMorphismRight{std::move(source), std::move(target), std::move(r), std::move(rho)};
}

DiagMorphismLeft make_diag_morphism_left(Diagram source, Diagram target, FinFunctor r, NatTransform rho) {
    if (!(*source.base() == *target.base())) fail(ErrorCode::BaseMismatch, "diagrams live over different categories");
    if (!(*r.source == *target.shape()) || !(*r.target == *source.shape()))
        fail(ErrorCode::TypingMismatch, "functor of a Diag<- morphism must map target shape to source shape");
    if (!(rho.source_functor == compose_functors(r, source.functor)) || !(rho.target_functor == target.functor))
        fail(ErrorCode::TypingMismatch, "transformation must have type D.R => E");
    DiagMorphismLeft m{std::move(source), std::move(target), std::move(r), std::move(rho)};
    m.is_strict = m.rho.is_identity() && compose_functors(m.r, m.source.functor) == m.target.functor;
    m.is_pseudo = m.rho.is_iso();
    return m;
}

DiagMorphismLeft identity_diag_morphism_left(const Diagram& d) {
    FinFunctor id = core::identity_functor(d.shape());
    return make_diag_morphism_left(d, d, id, identity_nat_trans(d.functor));
}

DiagMorphismLeft diag_compose_left(const DiagMorphismLeft& m1, const DiagMorphismLeft& m2) {
    if (!(m1.target == m2.source)) fail(ErrorCode::EndpointMismatch, "morphisms are not composable");
    FinFunctor r = compose_functors(m2.r, m1.r);  // shape(C) -> shape(B) -> shape(A)
    const FinCat& x = *m1.source.base();
    std::vector<int> components(m2.r.source->num_objects());
    for (size_t c = 0; c < components.size(); ++c)
        components[c] = x.compose(m1.rho.components[m2.r.obj_map[c]], m2.rho.components[c]);
    NatTransform rho = make_nat_trans(compose_functors(r, m1.source.functor), m2.target.functor, std::move(components));
    return make_diag_morphism_left(m1.source, m2.target, std::move(r), std::move(rho));
}

DiagMorphismRight diag_compose_right(const DiagMorphismRight& m1, const DiagMorphismRight& m2) {
    if (!(m1.target.functor == m2.source.functor)) fail(ErrorCode::EndpointMismatch, "morphisms are not composable");
    FinFunctor r = compose_functors(m1.r, m2.r);
    const FinCat& x = *m1.source.base();
    std::vector<int> components(m1.r.source->num_objects());
    for (size_t j = 0; j < components.size(); ++j)
        components[j] = x.compose(m1.rho.components[j], m2.rho.components[m1.r.obj_map[j]]);
    NatTransform rho = make_nat_trans(m1.source.functor, compose_functors(r, m2.target.functor), std::move(components));
    return make_diag_morphism_right(m1.source, m2.target, std::move(r), std::move(rho));
}

InitialityResult is_initial(const FinFunctor& r) {
    for (int k = 0; k < r.target->num_objects(); ++k) {
        FinFunctor const_k = core::constant_functor(terminal_category(), r.target, k);
        CommaResult slice = comma_category(r, const_k);
        if (slice.category->num_objects() == 0) return {false, k, true};
        if (pi0(*slice.category).num_blocks() != 1) return {false, k, false};
    }
    return {true, -1, false};
}

RelativeComma relative_comma(const DiagMorphismRight& m, int k) {
    const FinCat& j_cat = *m.source.shape();
    const FinCat& k_cat = *m.target.shape();
    const FinCat& x = *m.source.base();
    if (k < 0 || k >= k_cat.num_objects()) fail(ErrorCode::UnknownObject, "no such object in the target shape");
    const FinFunctor& d = m.source.functor;
    const FinFunctor& e = m.target.functor;

    RelativeComma result;
    auto cat = std::make_shared<FinCat>();
    for (int j = 0; j < j_cat.num_objects(); ++j)
        for (int f = 0; f < k_cat.num_morphisms(); ++f) {
            if (k_cat.dom(f) != m.r.obj_map[j] || k_cat.cod(f) != k) continue;
            result.objects.push_back({j, f});
            cat->objects.push_back("(" + j_cat.objects[j] + "," + k_cat.morphisms[f].id + ")");
        }

    // E f . rho_j, the evaluation of the cone leg in X.
    auto leg = [&](int j, int f) { return x.compose(m.rho.components[j], e.mor_map[f]); };

    struct MorRec {
        int h, src, dst;
    };
    std::vector<MorRec> mors;
    for (size_t src = 0; src < result.objects.size(); ++src)
        for (size_t dst = 0; dst < result.objects.size(); ++dst) {
            auto [j1, f1] = result.objects[src];
            auto [j2, f2] = result.objects[dst];
            for (int h = 0; h < j_cat.num_morphisms(); ++h) {
                if (j_cat.dom(h) != j1 || j_cat.cod(h) != j2) continue;
                if (x.compose(d.mor_map[h], leg(j2, f2)) != leg(j1, f1)) continue;
                mors.push_back({h, static_cast<int>(src), static_cast<int>(dst)});
                cat->morphisms.push_back(
                    {j_cat.morphisms[h].id + ":" + cat->objects[src] + "->" + cat->objects[dst],
                     static_cast<int>(src), static_cast<int>(dst)});
            }
        }

    auto find_mor = [&](int h, int src, int dst) {
        for (size_t i = 0; i < mors.size(); ++i)
            if (mors[i].h == h && mors[i].src == src && mors[i].dst == dst) return static_cast<int>(i);
        fail(ErrorCode::InternalInvariantViolation, "relative comma not closed under composition");
    };
    cat->identities.resize(cat->num_objects());
    for (size_t o = 0; o < result.objects.size(); ++o)
        cat->identities[o] =
            find_mor(j_cat.identities[result.objects[o].first], static_cast<int>(o), static_cast<int>(o));
    const int n = cat->num_morphisms();
    cat->compose_tab.assign(static_cast<size_t>(n) * n, -1);
    for (int m1 = 0; m1 < n; ++m1)
        for (int m2 = 0; m2 < n; ++m2) {
            if (mors[m1].dst != mors[m2].src) continue;
            cat->compose_tab[static_cast<size_t>(m1) * n + m2] =
                find_mor(j_cat.compose(mors[m1].h, mors[m2].h), mors[m1].src, mors[m2].dst);
        }
    core::verify_category(*cat);
    result.category = cat;
    return result;
}

InitialityResult is_relatively_initial(const DiagMorphismRight& m) {
    for (int k = 0; k < m.target.shape()->num_objects(); ++k) {
        RelativeComma rc = relative_comma(m, k);
        if (rc.category->num_objects() == 0) return {false, k, true};
        if (pi0(*rc.category).num_blocks() != 1) return {false, k, false};
    }
    return {true, -1, false};
}

Coslice coslice(const Diagram& d) {
    Coslice result;
    result.comma = comma_category(d.functor, core::identity_functor(d.base()));
    const FinCat& j_cat = *d.shape();
    const FinCat& x = *d.base();
    std::vector<int> obj(j_cat.num_objects()), mor(j_cat.num_morphisms());
    for (int j = 0; j < j_cat.num_objects(); ++j) {
        obj[j] = result.comma.object_index(j, d.functor.obj_map[j], x.identities[d.functor.obj_map[j]]);
        if (obj[j] < 0) fail(ErrorCode::InternalInvariantViolation, "missing unit object in coslice");
    }
    for (int h = 0; h < j_cat.num_morphisms(); ++h) {
        int src = obj[j_cat.dom(h)], dst = obj[j_cat.cod(h)];
        int found = -1;
        for (size_t i = 0; i < result.comma.morphism_data.size(); ++i) {
            const auto& cm = result.comma.category->morphisms[i];
            if (cm.dom == src && cm.cod == dst && result.comma.morphism_data[i].first == h &&
                result.comma.morphism_data[i].second == d.functor.mor_map[h]) {
                found = static_cast<int>(i);
                break;
            }
        }
        if (found < 0) fail(ErrorCode::InternalInvariantViolation, "missing unit morphism in coslice");
        mor[h] = found;
    }
    result.iota = make_functor(d.shape(), result.comma.category, std::move(obj), std::move(mor));
    return result;
}

Strictification strictify(const DiagMorphismLeft& m) {
    Coslice cos = coslice(m.source);
    Strictification result;
    result.apex = Diagram{cos.comma.proj_right};

    result.coslice_leg =
        make_diag_morphism_left(m.source, result.apex, cos.comma.proj_left, cos.comma.canonical_2cell);

    // rho-hat : K -> D/X sends k to (R k, E k, rho_k).
    const FinCat& k_cat = *m.target.shape();
    const FinFunctor& e = m.target.functor;
    std::vector<int> obj(k_cat.num_objects()), mor(k_cat.num_morphisms());
    for (int k = 0; k < k_cat.num_objects(); ++k) {
        obj[k] = cos.comma.object_index(m.r.obj_map[k], e.obj_map[k], m.rho.components[k]);
        if (obj[k] < 0) fail(ErrorCode::InternalInvariantViolation, "strictification object missing from coslice");
    }
    for (int g = 0; g < k_cat.num_morphisms(); ++g) {
        int src = obj[k_cat.dom(g)], dst = obj[k_cat.cod(g)];
        int found = -1;
        for (size_t i = 0; i < cos.comma.morphism_data.size(); ++i) {
            const auto& cm = cos.comma.category->morphisms[i];
            if (cm.dom == src && cm.cod == dst && cos.comma.morphism_data[i].first == m.r.mor_map[g] &&
                cos.comma.morphism_data[i].second == e.mor_map[g]) {
                found = static_cast<int>(i);
                break;
            }
        }
        if (found < 0) fail(ErrorCode::InternalInvariantViolation, "strictification morphism missing from coslice");
        mor[g] = found;
    }
    FinFunctor rho_hat = make_functor(m.target.shape(), cos.comma.category, std::move(obj), std::move(mor));
    result.strict_leg = make_diag_morphism_left(result.apex, m.target, rho_hat,
                                                identity_nat_trans(compose_functors(rho_hat, result.apex.functor)));

    DiagMorphismLeft recomposed = diag_compose_left(result.coslice_leg, result.strict_leg);
    if (!(recomposed.r == m.r) || !(recomposed.rho == m.rho))
        fail(ErrorCode::InternalInvariantViolation, "strictification does not recompose to its input");
    return result;
}

}  // namespace ceq::comma
