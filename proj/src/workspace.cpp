#include "workspace.hpp"

#include <fstream>
#include <sstream>

namespace ceq::ws {

using ceq::CeqError;
using ceq::ErrorCode;
using ceq::fail;
using core::FinCat;
using core::RawCategory;
using core::RawFunctor;

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

struct Parser {
    Bundle& bundle;
    const std::string& context;
    std::vector<Line> lines;
    size_t pos = 0;

    [[noreturn]] void parse_fail(int line, const std::string& msg) {
        fail(ErrorCode::ParseError, context + ":" + std::to_string(line) + ": " + msg);
    }
    [[noreturn]] void unresolved(int line, const std::string& kind, const std::string& name) {
        fail(ErrorCode::UnresolvedReference,
             context + ":" + std::to_string(line) + ": unknown " + kind + " '" + name + "'");
    }

    void check_fresh(int line, const std::string& name) {
        if (bundle.categories.count(name) || bundle.functors.count(name) || bundle.nats.count(name) ||
            bundle.diagrams.count(name) || bundle.copresheaves.count(name) || bundle.dmorphs.count(name))
            parse_fail(line, "redefinition of '" + name + "'");
    }

    CatPtr lookup_category(int line, const std::string& name) {
        auto it = bundle.categories.find(name);
        if (it == bundle.categories.end()) unresolved(line, "category", name);
        return it->second;
    }
    const FinFunctor& lookup_functor(int line, const std::string& name) {
        auto it = bundle.functors.find(name);
        if (it == bundle.functors.end()) unresolved(line, "functor", name);
        return it->second;
    }
    const Diagram& lookup_diagram(int line, const std::string& name) {
        auto it = bundle.diagrams.find(name);
        if (it == bundle.diagrams.end()) unresolved(line, "diagram", name);
        return it->second;
    }

    /// Collects the body of a block up to the matching 'end'.
    std::vector<Line> block_body(int start_line) {
        std::vector<Line> body;
        while (pos < lines.size()) {
            if (lines[pos].tokens.size() == 1 && lines[pos].tokens[0] == "end") {
                ++pos;
                return body;
            }
            body.push_back(lines[pos++]);
        }
        parse_fail(start_line, "block is missing its 'end'");
    }

    template <typename Fn>
    auto validated(int line, Fn&& fn) {
        try {
            return fn();
        } catch (const CeqError& e) {
            if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::UnresolvedReference) throw;
            fail(ErrorCode::ValidationError, context + ":" + std::to_string(line) + ": " + e.what());
        }
    }

    void run() {
        while (pos < lines.size()) {
            const Line& head = lines[pos++];
            const std::string& kind = head.tokens[0];
            if (kind == "category")
                parse_category(head);
            else if (kind == "functor")
                parse_functor(head);
            else if (kind == "nat")
                parse_nat(head);
            else if (kind == "diagram")
                parse_diagram(head);
            else if (kind == "copresheaf")
                parse_copresheaf(head);
            else if (kind == "dmorph")
                parse_dmorph(head);
            else
                parse_fail(head.number, "unknown section '" + kind + "'");
        }
    }

    void parse_category(const Line& head) {
        if (head.tokens.size() != 2) parse_fail(head.number, "expected: category NAME");
        const std::string& name = head.tokens[1];
        check_fresh(head.number, name);
        RawCategory raw;
        std::vector<std::string> with_identity;
        for (const Line& line : block_body(head.number)) {
            const auto& t = line.tokens;
            if (t[0] == "objects") {
                raw.objects.insert(raw.objects.end(), t.begin() + 1, t.end());
            } else if (t[0] == "mor" && t.size() == 6 && t[2] == ":" && t[4] == "->") {
                raw.morphisms.push_back({t[1], t[3], t[5]});
            } else if (t[0] == "identity" && t.size() == 3) {
                raw.identities.push_back({t[1], t[2]});
                with_identity.push_back(t[1]);
            } else if (t[0] == "compose" && t.size() == 4) {
                raw.composites.push_back({t[1], t[2], t[3]});
            } else {
                parse_fail(line.number, "bad category entry");
            }
        }
        for (const auto& obj : raw.objects) {
            if (std::find(with_identity.begin(), with_identity.end(), obj) != with_identity.end()) continue;
            raw.morphisms.push_back({"id_" + obj, obj, obj});
            raw.identities.push_back({obj, "id_" + obj});
        }
        bundle.categories[name] = validated(head.number, [&] { return core::validate_category(raw); });
    }

    void parse_functor(const Line& head) {
        if (head.tokens.size() != 6 || head.tokens[2] != ":" || head.tokens[4] != "->")
            parse_fail(head.number, "expected: functor NAME : SOURCE -> TARGET");
        const std::string& name = head.tokens[1];
        check_fresh(head.number, name);
        CatPtr source = lookup_category(head.number, head.tokens[3]);
        CatPtr target = lookup_category(head.number, head.tokens[5]);
        RawFunctor raw;
        for (const Line& line : block_body(head.number)) {
            const auto& t = line.tokens;
            if (t[0] == "obj" && t.size() == 3)
                raw.objects.push_back({t[1], t[2]});
            else if (t[0] == "mor" && t.size() == 3)
                raw.morphisms.push_back({t[1], t[2]});
            else
                parse_fail(line.number, "bad functor entry");
        }
        bundle.functors[name] = validated(head.number, [&] { return core::validate_functor(raw, source, target); });
    }

    /// Reads 'at OBJ MOR' component lines for a transformation whose shape
    /// category is `shape` and whose components live in `ambient`.
    std::vector<int> component_lines(const std::vector<Line>& body, const FinCat& shape, const FinCat& ambient,
                                     std::vector<int> defaults) {
        for (const Line& line : body) {
            const auto& t = line.tokens;
            if (t[0] != "at" || t.size() != 3) parse_fail(line.number, "expected: at OBJECT MORPHISM");
            int obj = shape.find_object(t[1]);
            if (obj < 0) unresolved(line.number, "object", t[1]);
            int mor = ambient.find_morphism(t[2]);
            if (mor < 0) unresolved(line.number, "morphism", t[2]);
            defaults[obj] = mor;
        }
        return defaults;
    }

    void parse_nat(const Line& head) {
        if (head.tokens.size() != 6 || head.tokens[2] != ":" || head.tokens[4] != "=>")
            parse_fail(head.number, "expected: nat NAME : F => G");
        const std::string& name = head.tokens[1];
        check_fresh(head.number, name);
        FinFunctor f = lookup_functor(head.number, head.tokens[3]);
        FinFunctor g = lookup_functor(head.number, head.tokens[5]);
        std::vector<int> components =
            component_lines(block_body(head.number), *f.source, *f.target, std::vector<int>(f.source->num_objects(), -1));
        for (size_t o = 0; o < components.size(); ++o)
            if (components[o] < 0)
                parse_fail(head.number, "missing component at object '" + f.source->objects[o] + "'");
        bundle.nats[name] =
            validated(head.number, [&] { return core::make_nat_trans(std::move(f), std::move(g), std::move(components)); });
    }

    void parse_diagram(const Line& head) {
        if (head.tokens.size() != 3) parse_fail(head.number, "expected: diagram NAME FUNCTOR");
        const std::string& name = head.tokens[1];
        check_fresh(head.number, name);
        bundle.diagrams[name] = Diagram{lookup_functor(head.number, head.tokens[2])};
    }

    void parse_copresheaf(const Line& head) {
        if (head.tokens.size() != 4 || head.tokens[2] != "on")
            parse_fail(head.number, "expected: copresheaf NAME on CATEGORY");
        const std::string& name = head.tokens[1];
        check_fresh(head.number, name);
        CatPtr base = lookup_category(head.number, head.tokens[3]);
        std::vector<fib::FinSetObj> at(base->num_objects());
        std::vector<bool> seen(base->num_objects(), false);
        std::vector<Line> acts;
        for (const Line& line : block_body(head.number)) {
            const auto& t = line.tokens;
            if (t[0] == "at" && t.size() >= 2) {
                int obj = base->find_object(t[1]);
                if (obj < 0) unresolved(line.number, "object", t[1]);
                if (seen[obj]) parse_fail(line.number, "duplicate 'at' for object '" + t[1] + "'");
                seen[obj] = true;
                at[obj].elements.assign(t.begin() + 2, t.end());
            } else if (t[0] == "act" && t.size() == 4) {
                acts.push_back(line);
            } else {
                parse_fail(line.number, "bad copresheaf entry");
            }
        }
        std::vector<std::vector<int>> act(base->num_morphisms());
        for (int m = 0; m < base->num_morphisms(); ++m) {
            act[m].assign(at[base->dom(m)].size(), -1);
            if (base->is_identity(m))
                for (int s = 0; s < at[base->dom(m)].size(); ++s) act[m][s] = s;
        }
        for (const Line& line : acts) {
            const auto& t = line.tokens;
            int m = base->find_morphism(t[1]);
            if (m < 0) unresolved(line.number, "morphism", t[1]);
            int src = at[base->dom(m)].find(t[2]);
            if (src < 0) unresolved(line.number, "element", t[2]);
            int dst = at[base->cod(m)].find(t[3]);
            if (dst < 0) unresolved(line.number, "element", t[3]);
            act[m][src] = dst;
        }
        bundle.copresheaves[name] =
            validated(head.number, [&] { return fib::make_copresheaf(base, std::move(at), std::move(act)); });
    }

    void parse_dmorph(const Line& head) {
        if (head.tokens.size() != 7 || head.tokens[2] != ":" || head.tokens[4] != "->" ||
            (head.tokens[6] != "left" && head.tokens[6] != "right"))
            parse_fail(head.number, "expected: dmorph NAME : SOURCE -> TARGET left|right");
        const std::string& name = head.tokens[1];
        check_fresh(head.number, name);
        Diagram source = lookup_diagram(head.number, head.tokens[3]);
        Diagram target = lookup_diagram(head.number, head.tokens[5]);
        bool left = head.tokens[6] == "left";
        std::vector<Line> body = block_body(head.number);

        std::string functor_name;
        std::vector<Line> at_lines;
        for (const Line& line : body) {
            const auto& t = line.tokens;
            if (t[0] == "via" && t.size() == 2)
                functor_name = t[1];
            else if (t[0] == "at")
                at_lines.push_back(line);
            else
                parse_fail(line.number, "bad dmorph entry");
        }
        if (functor_name.empty()) parse_fail(head.number, "dmorph needs a 'via FUNCTOR' line");
        FinFunctor r = lookup_functor(head.number, functor_name);
        const FinCat& x = *source.base();

        // Default components are identities, giving a strict morphism.
        const Diagram& indexing = left ? target : source;
        std::vector<int> defaults(indexing.shape()->num_objects());
        validated(head.number, [&] {
            if (left) {
                for (int k = 0; k < indexing.shape()->num_objects(); ++k)
                    defaults[k] = x.identities[target.functor.obj_map[k]];
            } else {
                for (int j = 0; j < indexing.shape()->num_objects(); ++j)
                    defaults[j] = x.identities[source.functor.obj_map[j]];
            }
            std::vector<int> components = component_lines(at_lines, *indexing.shape(), x, std::move(defaults));
            if (left) {
                core::NatTransform rho = core::make_nat_trans(core::compose_functors(r, source.functor),
                                                              target.functor, std::move(components));
                bundle.dmorphs[name] = comma::make_diag_morphism_left(source, target, r, std::move(rho));
            } else {
                core::NatTransform rho = core::make_nat_trans(source.functor, core::compose_functors(r, target.functor),
                                                              std::move(components));
                bundle.dmorphs[name] = comma::make_diag_morphism_right(source, target, r, std::move(rho));
            }
            return 0;
        });
    }
};

}  // namespace

const CatPtr& Bundle::category(const std::string& name) const {
    auto it = categories.find(name);
    if (it == categories.end()) fail(ErrorCode::UnresolvedReference, "unknown category '" + name + "'");
    return it->second;
}
const FinFunctor& Bundle::functor(const std::string& name) const {
    auto it = functors.find(name);
    if (it == functors.end()) fail(ErrorCode::UnresolvedReference, "unknown functor '" + name + "'");
    return it->second;
}
const Diagram& Bundle::diagram(const std::string& name) const {
    auto it = diagrams.find(name);
    if (it == diagrams.end()) fail(ErrorCode::UnresolvedReference, "unknown diagram '" + name + "'");
    return it->second;
}
const fib::Copresheaf& Bundle::copresheaf(const std::string& name) const {
    auto it = copresheaves.find(name);
    if (it == copresheaves.end()) fail(ErrorCode::UnresolvedReference, "unknown copresheaf '" + name + "'");
    return it->second;
}
const DiagMorphism& Bundle::dmorph(const std::string& name) const {
    auto it = dmorphs.find(name);
    if (it == dmorphs.end()) fail(ErrorCode::UnresolvedReference, "unknown diagram morphism '" + name + "'");
    return it->second;
}

void load_string(Bundle& bundle, const std::string& text, const std::string& context) {
    Parser p{bundle, context, tokenize(text)};
    p.run();
}

void load_file(Bundle& bundle, const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    load_string(bundle, buf.str(), path);
}

std::string name_of_category(const Bundle& b, const FinCat& c) {
    for (const auto& [name, cat] : b.categories)
        if (*cat == c) return name;
    return "";
}
std::string name_of_functor(const Bundle& b, const FinFunctor& f) {
    for (const auto& [name, g] : b.functors)
        if (g == f) return name;
    return "";
}
std::string name_of_diagram(const Bundle& b, const Diagram& d) {
    for (const auto& [name, e] : b.diagrams)
        if (e == d) return name;
    return "";
}

std::string serialize_category(const FinCat& c, const std::string& name) {
    std::ostringstream out;
    out << "category " << name << "\n  objects";
    for (const auto& o : c.objects) out << " " << o;
    out << "\n";
    for (const auto& m : c.morphisms)
        out << "  mor " << m.id << " : " << c.objects[m.dom] << " -> " << c.objects[m.cod] << "\n";
    for (int o = 0; o < c.num_objects(); ++o)
        out << "  identity " << c.objects[o] << " " << c.morphisms[c.identities[o]].id << "\n";
    for (int f = 0; f < c.num_morphisms(); ++f)
        for (int g = 0; g < c.num_morphisms(); ++g) {
            if (c.cod(f) != c.dom(g) || c.is_identity(f) || c.is_identity(g)) continue;
            out << "  compose " << c.morphisms[f].id << " " << c.morphisms[g].id << " "
                << c.morphisms[c.compose(f, g)].id << "\n";
        }
    out << "end\n";
    return out.str();
}

std::string serialize_functor(const Bundle& b, const FinFunctor& f, const std::string& name) {
    std::ostringstream out;
    out << "functor " << name << " : " << name_of_category(b, *f.source) << " -> " << name_of_category(b, *f.target)
        << "\n";
    for (int o = 0; o < f.source->num_objects(); ++o)
        out << "  obj " << f.source->objects[o] << " " << f.target->objects[f.obj_map[o]] << "\n";
    for (int m = 0; m < f.source->num_morphisms(); ++m)
        out << "  mor " << f.source->morphisms[m].id << " " << f.target->morphisms[f.mor_map[m]].id << "\n";
    out << "end\n";
    return out.str();
}

std::string serialize_nat(const Bundle& b, const NatTransform& t, const std::string& name) {
    std::ostringstream out;
    out << "nat " << name << " : " << name_of_functor(b, t.source_functor) << " => "
        << name_of_functor(b, t.target_functor) << "\n";
    const FinCat& shape = *t.source_functor.source;
    const FinCat& ambient = *t.source_functor.target;
    for (int o = 0; o < shape.num_objects(); ++o)
        out << "  at " << shape.objects[o] << " " << ambient.morphisms[t.components[o]].id << "\n";
    out << "end\n";
    return out.str();
}

std::string serialize_diagram(const Bundle& b, const Diagram& d, const std::string& name) {
    return "diagram " + name + " " + name_of_functor(b, d.functor) + "\n";
}

std::string serialize_copresheaf(const Bundle& b, const fib::Copresheaf& f, const std::string& name) {
    std::ostringstream out;
    out << "copresheaf " << name << " on " << name_of_category(b, *f.base) << "\n";
    const FinCat& x = *f.base;
    for (int o = 0; o < x.num_objects(); ++o) {
        out << "  at " << x.objects[o];
        for (const auto& e : f.at[o].elements) out << " " << e;
        out << "\n";
    }
    for (int m = 0; m < x.num_morphisms(); ++m) {
        if (x.is_identity(m)) continue;
        for (int s = 0; s < f.at[x.dom(m)].size(); ++s)
            out << "  act " << x.morphisms[m].id << " " << f.at[x.dom(m)].elements[s] << " "
                << f.at[x.cod(m)].elements[f.act[m][s]] << "\n";
    }
    out << "end\n";
    return out.str();
}

std::string serialize_dmorph(const Bundle& b, const DiagMorphism& m, const std::string& name) {
    std::ostringstream out;
    const bool left = std::holds_alternative<DiagMorphismLeft>(m);
    const Diagram& source = left ? std::get<DiagMorphismLeft>(m).source : std::get<DiagMorphismRight>(m).source;
    const Diagram& target = left ? std::get<DiagMorphismLeft>(m).target : std::get<DiagMorphismRight>(m).target;
    const FinFunctor& r = left ? std::get<DiagMorphismLeft>(m).r : std::get<DiagMorphismRight>(m).r;
    const NatTransform& rho = left ? std::get<DiagMorphismLeft>(m).rho : std::get<DiagMorphismRight>(m).rho;
    out << "dmorph " << name << " : " << name_of_diagram(b, source) << " -> " << name_of_diagram(b, target) << " "
        << (left ? "left" : "right") << "\n";
    out << "  via " << name_of_functor(b, r) << "\n";
    const FinCat& shape = left ? *target.shape() : *source.shape();
    const FinCat& x = *source.base();
    for (int o = 0; o < shape.num_objects(); ++o)
        out << "  at " << shape.objects[o] << " " << x.morphisms[rho.components[o]].id << "\n";
    out << "end\n";
    return out.str();
}

std::string serialize_bundle(const Bundle& b) {
    std::string out;
    for (const auto& [name, c] : b.categories) out += serialize_category(*c, name);
    for (const auto& [name, f] : b.functors) out += serialize_functor(b, f, name);
    for (const auto& [name, t] : b.nats) out += serialize_nat(b, t, name);
    for (const auto& [name, d] : b.diagrams) out += serialize_diagram(b, d, name);
    for (const auto& [name, f] : b.copresheaves) out += serialize_copresheaf(b, f, name);
    for (const auto& [name, m] : b.dmorphs) out += serialize_dmorph(b, m, name);
    return out;
}

}  // namespace ceq::ws
