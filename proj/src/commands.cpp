#include "commands.hpp"

#include <cstdint>
#include <sstream>

#include "factorization.hpp"
#include "loc.hpp"
#include "weq.hpp"

namespace ceq::cmd {

using ceq::CeqError;
using ceq::ErrorCode;
using ceq::fail;
using comma::DiagMorphismLeft;
using comma::DiagMorphismRight;
using comma::Diagram;
using core::FinCat;
using core::FinFunctor;
using ws::Bundle;

namespace {

struct Options {
    bool records = false;
    bool witness = false;
    int bound = 2;
    std::int64_t work_limit = 10000000;
};

struct Context {
    const Bundle& bundle;
    Options opt;
    std::vector<std::string> args;  // positionals after the command name
    std::ostringstream out;

    const std::string& arg(size_t i) {
        if (i >= args.size()) fail(ErrorCode::ParseError, "missing command argument");
        return args[i];
    }
    void expect_args(size_t n) {
        if (args.size() != n) fail(ErrorCode::ParseError, "wrong number of command arguments");
    }

    const DiagMorphismLeft& left_dmorph(const std::string& name) {
        const auto& m = bundle.dmorph(name);
        if (!std::holds_alternative<DiagMorphismLeft>(m))
            fail(ErrorCode::TypingMismatch, "'" + name + "' is not a Diag<- morphism");
        return std::get<DiagMorphismLeft>(m);
    }
};

std::string format_copresheaf_map(const fib::CopresheafMap& m) {
    std::ostringstream out;
    const FinCat& x = *m.source.base;
    for (int o = 0; o < x.num_objects(); ++o) {
        out << "  at " << x.objects[o] << ":";
        if (m.source.at[o].size() == 0) out << " (empty)";
        for (int s = 0; s < m.source.at[o].size(); ++s)
            out << " " << m.source.at[o].elements[s] << " -> " << m.target.at[o].elements[m.components[o][s]];
        out << "\n";
    }
    return out.str();
}

std::string format_functor_maps(const FinFunctor& f) {
    std::ostringstream out;
    for (int o = 0; o < f.source->num_objects(); ++o)
        out << "  obj " << f.source->objects[o] << " -> " << f.target->objects[f.obj_map[o]] << "\n";
    for (int m = 0; m < f.source->num_morphisms(); ++m)
        out << "  mor " << f.source->morphisms[m].id << " -> " << f.target->morphisms[f.mor_map[m]].id << "\n";
    return out.str();
}

int cmd_validate(Context& c) {
    c.expect_args(0);
    const Bundle& b = c.bundle;
    if (c.opt.records)
        c.out << "rec=validate categories=" << b.categories.size() << " functors=" << b.functors.size()
              << " nats=" << b.nats.size() << " diagrams=" << b.diagrams.size()
              << " copresheaves=" << b.copresheaves.size() << " dmorphs=" << b.dmorphs.size() << "\n";
    else
        c.out << "workspace ok: " << b.categories.size() << " categories, " << b.functors.size() << " functors, "
              << b.nats.size() << " transformations, " << b.diagrams.size() << " diagrams, "
              << b.copresheaves.size() << " copresheaves, " << b.dmorphs.size() << " diagram morphisms\n";
    return 0;
}

int report_initiality(Context& c, const comma::InitialityResult& r, const FinCat& target_cat, const char* rec) {
    if (c.opt.records) {
        c.out << "rec=" << rec << " value=" << (r.initial ? "true" : "false");
        if (!r.initial)
            c.out << " witness=" << target_cat.objects[r.witness_object]
                  << " reason=" << (r.witness_empty ? "empty" : "disconnected");
        c.out << "\n";
    } else if (r.initial) {
        c.out << "initial: true\n";
    } else {
        c.out << "initial: false (comma category at '" << target_cat.objects[r.witness_object] << "' is "
              << (r.witness_empty ? "empty" : "disconnected") << ")\n";
    }
    return r.initial ? 0 : 1;
}

int cmd_initial(Context& c) {
    c.expect_args(1);
    const FinFunctor& f = c.bundle.functor(c.arg(0));
    return report_initiality(c, comma::is_initial(f), *f.target, "initial");
}

int cmd_rel_initial(Context& c) {
    c.expect_args(1);
    const auto& m = c.bundle.dmorph(c.arg(0));
    if (!std::holds_alternative<DiagMorphismRight>(m))
        fail(ErrorCode::TypingMismatch, "'" + c.arg(0) + "' is not a Diag-> morphism");
    const auto& right = std::get<DiagMorphismRight>(m);
    return report_initiality(c, comma::is_relatively_initial(right), *right.target.shape(), "rel-initial");
}

int cmd_dopf(Context& c) {
    c.expect_args(1);
    const FinFunctor& f = c.bundle.functor(c.arg(0));
    fib::DopfCertificate r = fib::is_discrete_opfibration(f);
    if (c.opt.records) {
        c.out << "rec=dopf value=" << (r.ok ? "true" : "false");
        if (!r.ok)
            c.out << " witness_morphism=" << f.target->morphisms[r.witness_morphism].id
                  << " witness_object=" << f.source->objects[r.witness_object] << " lift_count=" << r.lift_count;
        c.out << "\n";
    } else if (r.ok) {
        c.out << "discrete opfibration: true\n";
    } else {
        c.out << "discrete opfibration: false ('" << f.target->morphisms[r.witness_morphism].id << "' has "
              << r.lift_count << " lifts at '" << f.source->objects[r.witness_object] << "')\n";
    }
    return r.ok ? 0 : 1;
}

int cmd_fibres(Context& c) {
    c.expect_args(1);
    fib::Copresheaf f = fib::fibres_copresheaf(c.bundle.functor(c.arg(0)));
    c.out << ws::serialize_copresheaf(c.bundle, f, c.arg(0) + "_fibres");
    return 0;
}

int cmd_grothendieck(Context& c) {
    c.expect_args(1);
    fib::Grothendieck g = fib::grothendieck(c.bundle.copresheaf(c.arg(0)));
    c.out << ws::serialize_category(*g.category, "El_" + c.arg(0));
    c.out << "projection:\n" << format_functor_maps(g.projection);
    return 0;
}

int cmd_lifts(Context& c) {
    c.expect_args(2);
    const Diagram& d = c.bundle.diagram(c.arg(0));
    const FinFunctor& p = c.bundle.functor(c.arg(1));
    std::vector<fib::Lift> lifts = fib::enumerate_lifts(d, p);
    if (c.opt.records)
        c.out << "rec=lifts count=" << lifts.size() << "\n";
    else
        c.out << "lifts: " << lifts.size() << "\n";
    for (size_t i = 0; i < lifts.size(); ++i) {
        c.out << (c.opt.records ? "rec=lift index=" + std::to_string(i) + " map=" : "lift " + std::to_string(i) + ":");
        for (int j = 0; j < d.shape()->num_objects(); ++j)
            c.out << (c.opt.records ? (j ? "," : "") : " ") << d.shape()->objects[j]
                  << (c.opt.records ? ":" : " -> ") << p.source->objects[lifts[i].total.obj_map[j]];
        c.out << "\n";
    }
    return 0;
}

int cmd_factorize(Context& c) {
    c.expect_args(1);
    fact::Factorization f = fact::comprehensive_factorize(c.bundle.diagram(c.arg(0)));
    if (c.opt.records) {
        c.out << "rec=factorization elements=" << f.elements.category->num_objects() << " p=";
        const FinCat& x = *f.input.base();
        for (int o = 0; o < x.num_objects(); ++o)
            c.out << (o ? "," : "") << x.objects[o] << ":" << f.copresheaf.at[o].size();
        c.out << "\n";
    } else {
        c.out << ws::serialize_copresheaf(c.bundle, f.copresheaf, c.arg(0) + "_P");
        c.out << ws::serialize_category(*f.elements.category, "El_" + c.arg(0));
        c.out << "initial part:\n" << format_functor_maps(f.initial_part);
        c.out << "opfibration part:\n" << format_functor_maps(f.opfibration_part);
    }
    return 0;
}

int report_weq(Context& c, const weq::WeqResult& r) {
    if (c.opt.records) {
        c.out << "rec=weq value=" << (r.weq ? "true" : "false");
        if (!r.weq)
            c.out << " dopf=" << (r.witness_is_target ? "P_E" : "P_D") << " lifts_source=" << r.lifts_of_source
                  << " lifts_target=" << r.lifts_of_target;
        c.out << "\n";
    } else if (r.weq) {
        c.out << "weak equivalence: true\n";
    } else {
        c.out << "weak equivalence: false (along the element projection of "
              << (r.witness_is_target ? "P_E" : "P_D") << ": " << r.lifts_of_source << " lifts of the source vs "
              << r.lifts_of_target << " lifts of the target)\n";
    }
    return r.weq ? 0 : 1;
}

int cmd_weq(Context& c) {
    c.expect_args(1);
    const auto& m = c.bundle.dmorph(c.arg(0));
    if (std::holds_alternative<DiagMorphismLeft>(m))
        return report_weq(c, weq::is_weak_equivalence_left(std::get<DiagMorphismLeft>(m)));
    return report_weq(c, weq::is_weak_equivalence_left(weq::mate(std::get<DiagMorphismRight>(m))));
}

int cmd_weq_oracle(Context& c) {
    c.expect_args(1);
    const auto& m = c.bundle.dmorph(c.arg(0));
    DiagMorphismLeft left = std::holds_alternative<DiagMorphismLeft>(m)
                                ? std::get<DiagMorphismLeft>(m)
                                : weq::mate(std::get<DiagMorphismRight>(m));
    weq::OracleResult r = weq::brute_force_weak_equivalence(left, c.opt.bound, c.opt.work_limit);
    if (c.opt.records) {
        c.out << "rec=weq-oracle value=" << (r.weq ? "true" : "false") << " tested=" << r.copresheaves_tested;
        if (!r.weq) c.out << " witness=" << r.witness;
        c.out << "\n";
    } else if (r.weq) {
        c.out << "weak equivalence (oracle, bound " << c.opt.bound << "): true after " << r.copresheaves_tested
              << " copresheaves\n";
    } else {
        c.out << "weak equivalence (oracle, bound " << c.opt.bound << "): false, witness " << r.witness << "\n";
    }
    return r.weq ? 0 : 1;
}

int cmd_limit(Context& c) {
    c.expect_args(1);
    fib::LimitResult r = fib::limit_finset(c.bundle.copresheaf(c.arg(0)));
    if (c.opt.records)
        c.out << "rec=limit size=" << r.set.size() << "\n";
    else
        c.out << "limit size: " << r.set.size() << "\n";
    for (const auto& e : r.set.elements)
        c.out << (c.opt.records ? "rec=family value=" : "  ") << e << "\n";
    return 0;
}

int cmd_pi0(Context& c) {
    c.expect_args(1);
    const FinCat& cat = *c.bundle.category(c.arg(0));
    comma::Partition p = comma::pi0(cat);
    if (c.opt.records)
        c.out << "rec=pi0 blocks=" << p.num_blocks() << "\n";
    else
        c.out << "connected components: " << p.num_blocks() << "\n";
    for (int b = 0; b < p.num_blocks(); ++b) {
        c.out << (c.opt.records ? "rec=block index=" + std::to_string(b) + " members=" : "  block " + std::to_string(b) + ":");
        for (size_t i = 0; i < p.blocks[b].size(); ++i)
            c.out << (c.opt.records ? (i ? "," : "") : " ") << cat.objects[p.blocks[b][i]];
        c.out << "\n";
    }
    return 0;
}

int cmd_loc_hom(Context& c) {
    c.expect_args(2);
    std::vector<loc::LocHom> homs = loc::loc_hom_set(c.bundle.diagram(c.arg(0)), c.bundle.diagram(c.arg(1)));
    if (c.opt.records)
        c.out << "rec=loc-hom count=" << homs.size() << "\n";
    else
        c.out << "localized hom set: " << homs.size() << " morphisms\n";
    for (size_t i = 0; i < homs.size(); ++i) {
        if (c.opt.records) {
            c.out << "rec=lochom index=" << i << " map=";
            for (size_t o = 0; o < homs[i].map.components.size(); ++o) {
                if (o) c.out << ";";
                for (size_t s = 0; s < homs[i].map.components[o].size(); ++s)
                    c.out << (s ? "," : "") << homs[i].map.components[o][s];
            }
            c.out << "\n";
        } else {
            c.out << "morphism " << i << " (as a map P_" << c.arg(1) << " -> P_" << c.arg(0) << "):\n"
                  << format_copresheaf_map(homs[i].map);
        }
    }
    return 0;
}

int cmd_loc_compose(Context& c) {
    c.expect_args(2);
    loc::LocHom a = loc::loc_from_diag_morphism(c.left_dmorph(c.arg(0)));
    loc::LocHom b = loc::loc_from_diag_morphism(c.left_dmorph(c.arg(1)));
    loc::LocHom ab = loc::loc_compose(a, b);
    if (c.opt.records) {
        c.out << "rec=loc-compose iso=" << (loc::loc_is_iso(ab) ? "true" : "false") << "\n";
    } else {
        c.out << "composite localized morphism (as a map P_target -> P_source):\n" << format_copresheaf_map(ab.map);
        c.out << "invertible: " << (loc::loc_is_iso(ab) ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_zigzag(Context& c) {
    c.expect_args(1);
    loc::LocHom a = loc::loc_from_diag_morphism(c.left_dmorph(c.arg(0)));
    loc::Zigzag z = loc::loc_to_zigzag(a);
    if (c.opt.records) {
        c.out << "rec=zigzag apex_objects=" << z.apex.shape()->num_objects()
              << " apex_morphisms=" << z.apex.shape()->num_morphisms() << "\n";
    } else {
        c.out << ws::serialize_category(*z.apex.shape(), "apex");
        c.out << "backward leg (initial, from the source shape):\n" << format_functor_maps(z.backward);
        c.out << "forward leg (from the target shape):\n" << format_functor_maps(z.forward);
    }
    return 0;
}

}  // namespace

RunResult run(const Bundle& bundle, const std::vector<std::string>& args) {
    Context c{bundle, {}, {}};
    RunResult result;
    try {
        std::string command;
        for (size_t i = 0; i < args.size(); ++i) {
            const std::string& a = args[i];
            auto flag_value = [&]() -> const std::string& {
                if (i + 1 >= args.size()) fail(ErrorCode::ParseError, "flag '" + a + "' needs a value");
                return args[++i];
            };
            if (a == "--format") {
                const std::string& v = flag_value();
                if (v != "human" && v != "records") fail(ErrorCode::ParseError, "unknown format '" + v + "'");
                c.opt.records = v == "records";
            } else if (a == "--bound") {
                c.opt.bound = std::stoi(flag_value());
            } else if (a == "--work-limit") {
                c.opt.work_limit = std::stoll(flag_value());
            } else if (a == "--witness") {
                c.opt.witness = true;
            } else if (command.empty()) {
                command = a;
            } else {
                c.args.push_back(a);
            }
        }
        if (command.empty()) fail(ErrorCode::ParseError, "no command given");

        if (command == "validate")
            result.exit_code = cmd_validate(c);
        else if (command == "initial")
            result.exit_code = cmd_initial(c);
        else if (command == "rel-initial")
            result.exit_code = cmd_rel_initial(c);
        else if (command == "dopf")
            result.exit_code = cmd_dopf(c);
        else if (command == "fibres")
            result.exit_code = cmd_fibres(c);
        else if (command == "grothendieck")
            result.exit_code = cmd_grothendieck(c);
        else if (command == "lifts")
            result.exit_code = cmd_lifts(c);
        else if (command == "factorize")
            result.exit_code = cmd_factorize(c);
        else if (command == "weq")
            result.exit_code = cmd_weq(c);
        else if (command == "weq-oracle")
            result.exit_code = cmd_weq_oracle(c);
        else if (command == "limit")
            result.exit_code = cmd_limit(c);
        else if (command == "pi0")
            result.exit_code = cmd_pi0(c);
        else if (command == "loc-hom")
            result.exit_code = cmd_loc_hom(c);
        else if (command == "loc-compose")
            result.exit_code = cmd_loc_compose(c);
        else if (command == "zigzag")
            result.exit_code = cmd_zigzag(c);
        else
            fail(ErrorCode::ParseError, "unknown command '" + command + "'");
    } catch (const CeqError& e) {
        result.exit_code = e.code() == ErrorCode::BoundTooLargeForBase ? 3 : 2;
        c.out << (c.opt.records ? std::string("rec=error code=") + error_code_name(e.code()) + " msg=" : "error: ")
              << e.what() << "\n";
    } catch (const std::exception& e) {
        result.exit_code = 2;
        c.out << "error: " << e.what() << "\n";
    }
    result.output = c.out.str();
    return result;
}

}  // namespace ceq::cmd
