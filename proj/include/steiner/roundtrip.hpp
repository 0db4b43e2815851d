#pragma once

// The linearisation of an enumerated omega-category, computed as a free
// quotient of the cell groups, and the round-trip check against the complex
// it was enumerated from.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "steiner/adc.hpp"
#include "steiner/nu.hpp"
#include "steiner/zlin.hpp"

namespace steiner {

struct QuotientLambda {
    EnumeratedOmegaCat source;
    /// names[q] labels cells[q]: atoms keep their generator name, other cells
    /// are "c<q>_<i>" in set order.
    std::vector<std::map<NuTable, Name>> names;
    std::vector<QuotientBasis> quotients;
    Adc complex;

    const Name& name_of(const NuTable& cell) const;
    /// Class of a cell in the quotient of degree cell.dim().
    IntVector class_of(const NuTable& cell) const;
};

/// Throws Error(torsion) if a quotient is not free and Error(not_closed) if a
/// face of an enumerated cell is missing from the enumeration.
QuotientLambda lambda_of_enumerated(const EnumeratedOmegaCat& e);

struct OmegaBasisCheck {
    bool ok = true;
    /// 1: generates, 2: injective classes, 3: Z-basis, 4: N-basis of the
    /// positive classes.
    std::optional<int> failing_bullet;
    std::string detail;
};

OmegaBasisCheck check_omega_basis(const QuotientLambda& lambda, const std::set<NuTable>& candidate,
                                  const EnumerationCaps& caps = {});

/// Atom tables of the source complex, in every enumerated dimension.
std::set<NuTable> atom_cells(const EnumeratedOmegaCat& e);

struct EquivalenceReport {
    bool ok = false;
    std::optional<Name> mismatch;
    std::string message;
};

/// Compares two complexes generator by generator under the identity on names.
EquivalenceReport compare_by_names(const Adc& expected, const Adc& actual);

/// Enumerates the omega-category of tables of C, linearises it and compares
/// the result with C by atom names. Requires a strong Steiner complex.
EquivalenceReport verify_equivalence(const Adc& complex, const EnumerationCaps& caps = {},
                                     Execution exec = Execution::parallel);

} // namespace steiner
