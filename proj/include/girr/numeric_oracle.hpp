#pragma once

// Floating-point Burnside method: eigenvectors of a random combination of
// class matrices, used only to cross-check the exact tables.

#include <complex>
#include <vector>

#include "girr/char_table.hpp"

namespace girr::reference {

using NumericTable = std::vector<std::vector<std::complex<double>>>;

NumericTable numeric_character_table(const PermGroup& g, const ClassStructure& cs);

/// True iff every numeric row matches a distinct exact row within `tol`.
bool matches_numeric(const CharacterTable& t, const NumericTable& numeric, double tol = 1e-8);

}  // namespace girr::reference
