#pragma once

// Exact integer linear algebra over named generators: sparse vectors, small
// dense matrices, Smith normal form and the two coordinate problems built on
// it (free quotients and N-combinations).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "steiner/error.hpp"

namespace steiner {

using Name = std::string;
using NameSet = std::set<Name>;

// Overflow-checked arithmetic; throws Error(overflow).
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Finite Z-combination of named generators. Zero coefficients are never
/// stored, so structural equality is equality of vectors.
class IntVector {
public:
    using Map = std::map<Name, std::int64_t>;

    IntVector() = default;
    IntVector(std::initializer_list<std::pair<const Name, std::int64_t>> init);

    static IntVector unit(const Name& name) { return IntVector{{name, 1}}; }

    std::int64_t operator[](const Name& name) const;
    void set(const Name& name, std::int64_t value);
    void add_to(const Name& name, std::int64_t delta);

    bool is_zero() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    bool is_nonnegative() const;
    std::int64_t l1_norm() const;
    std::int64_t max_abs() const;
    NameSet support() const;

    IntVector& operator+=(const IntVector& other);
    IntVector& operator-=(const IntVector& other);
    friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
    friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
    IntVector operator-() const;
    IntVector scaled(std::int64_t factor) const;

    const Map& entries() const { return entries_; }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    std::string to_string() const;

    friend bool operator==(const IntVector&, const IntVector&) = default;
    friend auto operator<=>(const IntVector&, const IntVector&) = default;

private:
    Map entries_;
};

/// Dense integer matrix with named rows and columns.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::vector<Name> rows, std::vector<Name> cols);
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(const std::vector<Name>& names);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rows() const { return row_names_.size(); }
    std::size_t cols() const { return col_names_.size(); }
    const std::vector<Name>& row_names() const { return row_names_; }
    const std::vector<Name>& col_names() const { return col_names_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }

    /// Non-zero entries keyed by (row name, column name).
    std::map<std::pair<Name, Name>, std::int64_t> entries() const;

    IntVector row_vector(std::size_t r) const;
    IntVector column_vector(std::size_t c) const;
    bool is_square() const { return rows() == cols(); }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    /// M * v for v indexed by column names; the result is indexed by row names.
    IntVector apply(const IntVector& v) const;

    /// Exact determinant by fraction-free (Bareiss) elimination.
    std::int64_t determinant() const;

    // Numeric equality; names are labels only.
    bool same_values(const IntMatrix& other) const;

private:
    std::vector<Name> row_names_;
    std::vector<Name> col_names_;
    std::vector<std::int64_t> data_;
};

/// U * A * V = D with U, V unimodular and D in Smith form.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    std::vector<std::int64_t> invariant_factors() const;
    std::size_t rank() const;
};

/// Pivoting is deterministic: smallest |entry|, ties broken row-major.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Diagonal of the Smith form only; skips U and V bookkeeping.
std::vector<std::int64_t> smith_diagonal(const IntMatrix& a);

/// Unique N-combination of `gens` (keyed by name) equal to v, if one exists.
/// Throws Error(ambiguous) when two distinct combinations exist.
std::optional<std::map<Name, std::int64_t>> monoid_coordinates(
    const IntVector& v, const std::vector<std::pair<Name, IntVector>>& gens);

/// Free part of Z[ambient] / <relations>.
struct QuotientBasis {
    std::vector<Name> basis;
    /// rows: basis, cols: ambient; column j is the class of ambient[j].
    IntMatrix projection;
    /// For each basis element, an ambient combination projecting onto it.
    std::vector<IntVector> section;

    IntVector project(const IntVector& v) const;
};

/// Basis names are ambient generators whose classes form a basis, picked
/// greedily in ambient order when such a choice exists; otherwise "q<i>".
/// Throws Error(torsion) if the quotient is not free.
QuotientBasis quotient_free_basis(const std::vector<Name>& ambient,
                                  const std::vector<IntVector>& relations);

} // namespace steiner
