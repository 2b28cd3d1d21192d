#ifndef CEQ_WORKSPACE_HPP
#define CEQ_WORKSPACE_HPP

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "comma.hpp"
#include "copresheaf.hpp"
#include "fincat.hpp"

namespace ceq::ws {

using comma::DiagMorphismLeft;
using comma::DiagMorphismRight;
using comma::Diagram;
using core::CatPtr;
using core::FinFunctor;
using core::NatTransform;

using DiagMorphism = std::variant<DiagMorphismLeft, DiagMorphismRight>;

/// A validated workspace: every named value has passed its law checks and
/// every cross-reference resolves.
struct Bundle {
    std::map<std::string, CatPtr> categories;
    std::map<std::string, FinFunctor> functors;
    std::map<std::string, NatTransform> nats;
    std::map<std::string, Diagram> diagrams;
    std::map<std::string, fib::Copresheaf> copresheaves;
    std::map<std::string, DiagMorphism> dmorphs;

    const CatPtr& category(const std::string& name) const;
    const FinFunctor& functor(const std::string& name) const;
    const Diagram& diagram(const std::string& name) const;
    const fib::Copresheaf& copresheaf(const std::string& name) const;
    const DiagMorphism& dmorph(const std::string& name) const;
};

/// Parses and validates one workspace document into the bundle. The context
/// string (typically the file path) prefixes error locations.
void load_string(Bundle& bundle, const std::string& text, const std::string& context);
void load_file(Bundle& bundle, const std::string& path);

std::string serialize_category(const core::FinCat& c, const std::string& name);
std::string serialize_functor(const Bundle& b, const FinFunctor& f, const std::string& name);
std::string serialize_nat(const Bundle& b, const NatTransform& t, const std::string& name);
std::string serialize_diagram(const Bundle& b, const Diagram& d, const std::string& name);
std::string serialize_copresheaf(const Bundle& b, const fib::Copresheaf& f, const std::string& name);
std::string serialize_dmorph(const Bundle& b, const DiagMorphism& m, const std::string& name);
std::string serialize_bundle(const Bundle& b);

/// Name of a bundle entry equal to the given value, or empty.
std::string name_of_category(const Bundle& b, const core::FinCat& c);
std::string name_of_functor(const Bundle& b, const FinFunctor& f);
std::string name_of_diagram(const Bundle& b, const Diagram& d);

}  // namespace ceq::ws

#endif
