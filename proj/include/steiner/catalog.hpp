#pragma once

// Named example families, as presentations and/or complexes.
//
//   disk n       globe with generators s<q>, t<q> (q < n) and top c
//   sphere n     boundary of disk n+1 (n >= -1, sphere -1 is empty)
//   ordinal m    the free category on x0 -> x1 -> ... -> xm
//   theta2 m k1..km
//                pasting of m columns, column i a chain of k_i 2-cells
//   oriental n   simplex faces "012..." with the alternating-sum boundary;
//                presentations are provided for n <= 3
//   loop, endo2cell, square, forestA
//                the small non-examples

#include <optional>
#include <string>
#include <vector>

#include "steiner/adc.hpp"
#include "steiner/polygraph.hpp"

namespace steiner {

struct ExpectedVerdict {
    bool strong_steiner = false;
    std::optional<bool> atomic;
    std::optional<bool> algebraic_loop_free;
    std::optional<bool> categorical_loop_free;
};

struct CatalogEntry {
    std::string name;
    std::vector<int> params;
    std::optional<Presentation> presentation;
    std::optional<Adc> complex;
    /// Named composite cells that come with the example.
    std::vector<std::pair<Name, CellExpr>> expressions;
    ExpectedVerdict expected;

    const CellExpr& expression(const Name& name) const;
};

std::vector<std::string> catalog_names();

/// Throws Error(bad_params) for an unknown name or invalid parameters.
CatalogEntry build(const std::string& name, const std::vector<int>& params = {});

/// A representative list of entries covering every family.
std::vector<CatalogEntry> catalog_instances();

} // namespace steiner
