#pragma once

#include <span>
#include <string_view>

#include "onlinecolor/algorithms.hpp"

namespace onlinecolor {

/// Deliberately broken variants of the registered algorithms. Each keeps its
/// colorings proper but breaks the property the claims rely on:
///   first-fit         max neighbor color + 1 instead of the smallest free color
///   cbip              avoids the colors of both shores, not just the opposite one
///   advice-first-fit  colors isolated vertices 1 regardless of the advice
///   advice-cbip       colors isolated vertices 1 regardless of the advice
///   parity-first-fit  plain FirstFit, advice ignored
std::unique_ptr<OnlineColorer> make_mutant(std::string_view name);

/// Factory that substitutes the mutant for `mutated` and builds every other
/// algorithm normally. Throws ParameterError on unknown names.
ColorerFactory mutated_factory(std::string_view mutated);

}  // namespace onlinecolor
