#pragma once

#include <string>

#include "pathoverlap/model.hpp"

namespace pathoverlap {

/// Reads the plain SBML subset: species (@id, @name, @sboTerm), reactions
/// (@id, @sboTerm) with listOfReactants/listOfProducts/listOfModifiers
/// references, complex constituents and extra reaction terms via
/// `<annotation><constituents>` / `<annotation><terms>` children.
/// Throws XmlMalformed, MissingId, UnresolvedSpeciesReference.
PathwayGraph parse_sbml(const std::string& text);

} // namespace pathoverlap
