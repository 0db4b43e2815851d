#pragma once

// The omega-category of tables of a complex. Cells are tables; equality of
// cells is row-wise equality of tables.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "steiner/adc.hpp"

namespace steiner {

using NuTable = Table;

enum class Execution { serial, parallel };

struct TableCheck {
    bool valid = true;
    /// 1: non-negative chains of the right degree, 2: boundary rule,
    /// 3: augmentation 1, 4: equal top rows.
    std::optional<int> violated_condition;
    std::optional<int> at_degree;
};

TableCheck is_valid_table(const Adc& complex, const NuTable& t);

/// The 0-dimensional table on a degree-0 generator.
NuTable point(const Name& name);

/// p-dimensional source (minus) or target (plus) of t, 0 <= p < t.dim().
NuTable face(const NuTable& t, int p, Sign sign);

/// x *_p y in diagrammatic order: requires face(x, p, +) == face(y, p, -).
/// Throws Error(not_composable) otherwise.
NuTable compose(const NuTable& x, const NuTable& y, int p);
bool composable(const NuTable& x, const NuTable& y, int p);

NuTable identity(const NuTable& t);
/// Iterated identity up to dimension `dim` (>= t.dim()).
NuTable identity_to(const NuTable& t, int dim);

/// Trivial (identity) cells are exactly the positive-dimensional tables with a
/// zero top row.
bool is_identity(const NuTable& t);

struct EnumerationCaps {
    std::size_t max_cells = 10000;
    std::int64_t max_coeff = 8;
};

struct EnumeratedOmegaCat {
    Adc source;
    int max_dim = 0;
    /// cells[q] holds the q-cells.
    std::vector<std::set<NuTable>> cells;
    std::map<NuTable, Name> atom_names;

    std::size_t cell_count() const;
    std::size_t nontrivial_count(int q) const;
    bool contains(const NuTable& t) const;
    /// Atom tables of dimension q in basis order.
    std::vector<NuTable> atoms(int q) const;
};

/// Smallest set of cells of dimension <= max_dim containing `seeds` and closed
/// under identities (into dimensions <= max_dim) and all composites.
/// Throws Error(enum_cap) once a cap is exceeded.
std::vector<std::set<NuTable>> close_under_operations(const std::vector<NuTable>& seeds, int max_dim,
                                                      const EnumerationCaps& caps,
                                                      Execution exec = Execution::parallel);

/// Closure of the atoms of every generator of degree <= max_dim.
EnumeratedOmegaCat enumerate_nu(const Adc& complex, int max_dim, const EnumerationCaps& caps = {},
                                Execution exec = Execution::parallel);

/// Every valid q-table with all coefficients <= coeff_cap, by exhaustive
/// search over candidate rows. Independent of compose and the closure.
std::set<NuTable> brute_force_nu(const Adc& complex, int q, std::int64_t coeff_cap,
                                 Execution exec = Execution::parallel);

/// Non-identity cells t admitting no factorisation t = u *_p v with u != t and
/// v != t. Whiskers such as id(f) *_0 alpha are therefore decomposable.
std::vector<std::set<NuTable>> indecomposables(const EnumeratedOmegaCat& e);

} // namespace steiner
