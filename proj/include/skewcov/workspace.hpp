#pragma once

// The batch front end's data model: a named collection of algebras, groups,
// actions, modules, morphism objects, functors and Brauer graphs parsed from
// the line-oriented stanza format.

#include <map>
#include <optional>

#include "skewcov/brauer.hpp"
#include "skewcov/functor.hpp"

namespace skewcov {

struct Workspace {
    FieldSpec field{32003};
    std::map<std::string, Quiver> quivers;
    std::vector<std::pair<std::string, BoundQuiverAlgebra>> algebras;
    std::map<std::string, FiniteAbelianGroup> groups;

    std::optional<std::string> action_name;
    std::optional<AlgebraAction> action;
    std::optional<SkewAlgebraBundle> bundle;

    std::vector<std::pair<std::string, FDModule>> modules;
    std::vector<std::pair<std::string, MorphismObject>> morphisms;
    std::vector<std::pair<std::string, FPFunctor>> functors;
    std::vector<std::pair<std::string, std::pair<SkewBrauerGraph, Grading>>> brauer_graphs;
    std::vector<std::string> universe_lambda, universe_skew;

    const BoundQuiverAlgebra* find_algebra(const std::string& name) const;
    const FDModule* find_module(const std::string& name) const;
    const MorphismObject* find_morphism(const std::string& name) const;

    // modules/morphisms attached to the action's source algebra or its skew
    std::vector<std::pair<std::string, const FDModule*>> lambda_modules() const;
    std::vector<std::pair<std::string, const FDModule*>> skew_modules() const;
    std::vector<std::pair<std::string, const MorphismObject*>> lambda_morphisms() const;
    std::vector<std::pair<std::string, const MorphismObject*>> skew_morphisms() const;
    std::vector<std::pair<std::string, const FPFunctor*>> lambda_functors() const;
};

// Parses and fully validates a workspace file; every type invariant is
// enforced during construction.  Throws ParseError with a line number or
// ValidationError naming the violated invariant.
Workspace parse_workspace(const std::string& path, std::optional<uint32_t> field_p = std::nullopt);
Workspace parse_workspace_text(const std::string& text, std::optional<uint32_t> field_p = std::nullopt);

} // namespace skewcov
