#include "weq.hpp"

#include <algorithm>

namespace ceq::weq {

using ceq::ErrorCode;
using ceq::fail;
using comma::Diagram;
using core::FinCat;
using core::FinFunctor;
using core::NatTransform;

static std::vector<int> inverted_components(const NatTransform& rho) {
    const FinCat& x = *rho.source_functor.target;
    std::vector<int> inv(rho.components.size());
    for (size_t i = 0; i < rho.components.size(); ++i) {
        inv[i] = core::inverse_morphism(x, rho.components[i]);
        if (inv[i] < 0)
            fail(ErrorCode::NotPseudo, "component '" + x.morphisms[rho.components[i]].id + "' is not invertible");
    }
    return inv;
}

DiagMorphismLeft mate(const DiagMorphismRight& m) {
    std::vector<int> inv = inverted_components(m.rho);
    NatTransform rho = core::make_nat_trans(core::compose_functors(m.r, m.target.functor), m.source.functor,
                                            std::move(inv));
    return comma::make_diag_morphism_left(m.target, m.source, m.r, std::move(rho));
}

DiagMorphismRight mate(const DiagMorphismLeft& m) {
    std::vector<int> inv = inverted_components(m.rho);
    NatTransform rho = core::make_nat_trans(m.target.functor, core::compose_functors(m.r, m.source.functor),
                                            std::move(inv));
    return comma::make_diag_morphism_right(m.target, m.source, m.r, std::move(rho));
}

fib::CopresheafMap induced_copresheaf_map(const DiagMorphismLeft& m, const fact::Factorization& source_fact,
                                          const fact::Factorization& target_fact) {
    const FinCat& x = *m.source.base();
    std::vector<std::vector<int>> components(x.num_objects());
    for (int o = 0; o < x.num_objects(); ++o) {
        const auto& part = target_fact.pi0_at[o];
        components[o].assign(part.num_blocks(), -1);
        for (int b = 0; b < part.num_blocks(); ++b)
            for (int member : part.blocks[b]) {
                auto [k, unused, f] = target_fact.comma_at[o].objects[member];
                int image = source_fact.block_index(o, m.r.obj_map[k], x.compose(m.rho.components[k], f));
                if (components[o][b] == -1)
                    components[o][b] = image;
                else if (components[o][b] != image)
                    fail(ErrorCode::InternalInvariantViolation, "induced map is not well defined on a pi0 block");
            }
    }
    return fib::make_copresheaf_map(target_fact.copresheaf, source_fact.copresheaf, std::move(components));
}

fib::CopresheafMap induced_copresheaf_map(const DiagMorphismLeft& m) {
    return induced_copresheaf_map(m, fact::comprehensive_factorize(m.source), fact::comprehensive_factorize(m.target));
}

static bool r_star_bijective(const DiagMorphismLeft& m, const FinFunctor& proj, int* lifts_src, int* lifts_tgt) {
    std::vector<fib::Lift> source_lifts = fib::enumerate_lifts(m.source, proj);
    std::vector<fib::Lift> target_lifts = fib::enumerate_lifts(m.target, proj);
    if (lifts_src) *lifts_src = static_cast<int>(source_lifts.size());
    if (lifts_tgt) *lifts_tgt = static_cast<int>(target_lifts.size());
    if (source_lifts.size() != target_lifts.size()) return false;
    std::vector<bool> hit(target_lifts.size(), false);
    for (const auto& lift : source_lifts) {
        fib::Lift image = fib::pushforward_lift(m, lift).target_lift;
        auto it = std::find(target_lifts.begin(), target_lifts.end(), image);
        if (it == target_lifts.end()) fail(ErrorCode::InternalInvariantViolation, "pushforward is not a lift");
        size_t i = it - target_lifts.begin();
        if (hit[i]) return false;
        hit[i] = true;
    }
    return true;
}

WeqResult is_weak_equivalence_left(const DiagMorphismLeft& m) {
    fact::Factorization fs = fact::comprehensive_factorize(m.source);
    fact::Factorization ft = fact::comprehensive_factorize(m.target);
    fib::CopresheafMap phi = induced_copresheaf_map(m, fs, ft);
    if (fib::is_copresheaf_iso(phi)) return {};

    WeqResult result;
    result.weq = false;
    for (int o = 0; o < static_cast<int>(phi.components.size()); ++o) {
        std::vector<bool> hit(phi.target.at[o].size(), false);
        bool bijective = phi.components[o].size() == static_cast<size_t>(phi.target.at[o].size());
        for (int v : phi.components[o]) {
            if (hit[v]) bijective = false;
            hit[v] = true;
        }
        if (!bijective) {
            result.witness_object = o;
            break;
        }
    }
    // One of the two element projections must witness the failure on lifts.
    if (!r_star_bijective(m, fs.elements.projection, &result.lifts_of_source, &result.lifts_of_target)) {
        result.witness_is_target = false;
        return result;
    }
    if (!r_star_bijective(m, ft.elements.projection, &result.lifts_of_source, &result.lifts_of_target)) {
        result.witness_is_target = true;
        return result;
    }
    fail(ErrorCode::InternalInvariantViolation, "non-iso induced map with bijective lift maps");
}

bool is_weak_equivalence_right_pseudo(const DiagMorphismRight& m) {
    return is_weak_equivalence_left(mate(m)).weq;
}

bool weak_equivalence_over_point(const DiagMorphismLeft& m) {
    const FinCat& x = *m.source.base();
    if (x.num_objects() != 1 || x.num_morphisms() != 1)
        fail(ErrorCode::WrongBase, "decision by pi0 applies only over the terminal category");
    comma::Partition pj = comma::pi0(*m.source.shape());
    comma::Partition pk = comma::pi0(*m.target.shape());
    if (pj.num_blocks() != pk.num_blocks()) return false;
    std::vector<bool> hit(pj.num_blocks(), false);
    for (int b = 0; b < pk.num_blocks(); ++b) {
        int image = pj.block_of[m.r.obj_map[pk.representative(b)]];
        if (hit[image]) return false;
        hit[image] = true;
    }
    return true;
}

namespace {

struct CandidateEnumerator {
    const FinCat& x;
    int bound;
    std::int64_t work_limit;
    std::int64_t work = 0;
    std::vector<int> non_identity;  // morphisms with a free action choice

    CandidateEnumerator(const FinCat& base, int bound, std::int64_t limit) : x(base), bound(bound), work_limit(limit) {
        for (int m = 0; m < x.num_morphisms(); ++m)
            if (!x.is_identity(m)) non_identity.push_back(m);
    }

    void estimate() {
        long double total = 0;
        std::vector<int> sizes(x.num_objects(), 0);
        do {
            long double candidates = 1;
            for (int m : non_identity) {
                int nd = sizes[x.dom(m)], nc = sizes[x.cod(m)];
                if (nd > 0 && nc == 0) {
                    candidates = 0;
                    break;
                }
                for (int i = 0; i < nd; ++i) candidates *= nc;
            }
            total += candidates * (x.num_morphisms() + 1);
            if (total > static_cast<long double>(work_limit))
                fail(ErrorCode::BoundTooLargeForBase, "estimated copresheaf enumeration exceeds the work limit");
        } while (advance(sizes, bound));
    }

    static bool advance(std::vector<int>& v, int max) {
        for (auto& entry : v) {
            if (++entry <= max) return true;
            entry = 0;
        }
        return false;
    }

    template <typename Visit>
    void enumerate(Visit&& visit) {
        std::vector<int> sizes(x.num_objects(), 0);
        do {
            enumerate_actions(sizes, visit);
        } while (advance(sizes, bound));
    }

    template <typename Visit>
    void enumerate_actions(const std::vector<int>& sizes, Visit&& visit) {
        bool possible = true;
        for (int m : non_identity)
            if (sizes[x.dom(m)] > 0 && sizes[x.cod(m)] == 0) possible = false;
        if (!possible) return;

        std::vector<std::vector<int>> act(x.num_morphisms());
        for (int o = 0; o < x.num_objects(); ++o) {
            act[x.identities[o]].resize(sizes[o]);
            for (int s = 0; s < sizes[o]; ++s) act[x.identities[o]][s] = s;
        }
        for (int m : non_identity) act[m].assign(sizes[x.dom(m)], 0);

        while (true) {
            work += x.num_morphisms() + 1;
            if (work > work_limit)
                fail(ErrorCode::BoundTooLargeForBase, "copresheaf enumeration exceeded the work limit");
            if (functorial(act)) {
                std::vector<fib::FinSetObj> at(x.num_objects());
                for (int o = 0; o < x.num_objects(); ++o)
                    for (int s = 0; s < sizes[o]; ++s) at[o].elements.push_back(std::to_string(s + 1));
                if (!visit(fib::Copresheaf{nullptr, std::move(at), act})) return;
            }
            // odometer over the free action entries
            size_t mi = 0;
            for (; mi < non_identity.size(); ++mi) {
                int m = non_identity[mi];
                int nc = sizes[x.cod(m)];
                bool carried = true;
                for (auto& entry : act[m]) {
                    if (++entry < nc) {
                        carried = false;
                        break;
                    }
                    entry = 0;
                }
                if (!carried && !act[m].empty()) break;
            }
            if (mi == non_identity.size()) return;
        }
    }

    bool functorial(const std::vector<std::vector<int>>& act) const {
        for (int m1 = 0; m1 < x.num_morphisms(); ++m1)
            for (int m2 = 0; m2 < x.num_morphisms(); ++m2) {
                if (x.cod(m1) != x.dom(m2)) continue;
                int m21 = x.compose(m1, m2);
                for (size_t s = 0; s < act[m1].size(); ++s)
                    if (act[m21][s] != act[m2][act[m1][s]]) return false;
            }
        return true;
    }
};

std::string describe_copresheaf(const FinCat& x, const fib::Copresheaf& f) {
    std::string out;
    for (int o = 0; o < x.num_objects(); ++o) {
        if (o) out += " ";
        out += x.objects[o] + ":" + std::to_string(f.at[o].size());
    }
    for (int m = 0; m < x.num_morphisms(); ++m) {
        if (x.is_identity(m) || f.act[m].empty()) continue;
        out += " " + x.morphisms[m].id + ":[";
        for (size_t s = 0; s < f.act[m].size(); ++s) {
            if (s) out += ",";
            out += std::to_string(f.act[m][s] + 1);
        }
        out += "]";
    }
    return out;
}

}  // namespace

OracleResult brute_force_weak_equivalence(const DiagMorphismLeft& m, int fibre_bound, std::int64_t work_limit) {
    const FinCat& x = *m.source.base();
    OracleResult result;

    auto test = [&](const fib::Copresheaf& f, const std::string& name) {
        ++result.copresheaves_tested;
        FinFunctor proj = fib::grothendieck(f).projection;
        if (!r_star_bijective(m, proj, nullptr, nullptr)) {
            result.weq = false;
            result.witness = name;
            return false;
        }
        return true;
    };

    fact::Factorization fs = fact::comprehensive_factorize(m.source);
    fact::Factorization ft = fact::comprehensive_factorize(m.target);
    if (!test(fs.copresheaf, "P_D")) return result;
    if (!test(ft.copresheaf, "P_E")) return result;

    CandidateEnumerator en(x, fibre_bound, work_limit);
    en.estimate();
    en.enumerate([&](fib::Copresheaf f) {
        f.base = m.source.base();
        return test(f, describe_copresheaf(x, f));
    });
    return result;
}

}  // namespace ceq::weq
