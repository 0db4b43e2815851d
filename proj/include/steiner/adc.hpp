#pragma once

// Augmented directed complexes with basis. The positivity submonoid in each
// degree is N[basis], so only the basis, the differential on generators and
// the augmentation on degree-0 generators are stored.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "steiner/relation_graph.hpp"
#include "steiner/zlin.hpp"

namespace steiner {

enum class Sign { minus, plus };

inline Sign opposite(Sign s) { return s == Sign::minus ? Sign::plus : Sign::minus; }
inline char sign_char(Sign s) { return s == Sign::minus ? '-' : '+'; }

struct Chain {
    int degree = 0;
    IntVector vector;

    friend bool operator==(const Chain&, const Chain&) = default;
};

struct TableRow {
    IntVector minus;
    IntVector plus;

    const IntVector& operator[](Sign s) const { return s == Sign::minus ? minus : plus; }
    IntVector& operator[](Sign s) { return s == Sign::minus ? minus : plus; }

    friend bool operator==(const TableRow&, const TableRow&) = default;
    friend auto operator<=>(const TableRow&, const TableRow&) = default;
};

/// A table (x^-_p, x^+_p) for p = 0..dim; rows[p] is the degree-p pair.
/// Atoms of a complex and cells of its nu-category share this shape.
struct Table {
    std::vector<TableRow> rows;

    int dim() const { return static_cast<int>(rows.size()) - 1; }
    const TableRow& row(int p) const { return rows.at(static_cast<std::size_t>(p)); }
    const IntVector& top() const { return rows.back().minus; }

    std::string to_string() const;

    friend bool operator==(const Table&, const Table&) = default;
    friend auto operator<=>(const Table&, const Table&) = default;
};

using AtomTable = Table;

class Adc {
public:
    /// Generators must be added degree by degree: the boundary of a degree-q
    /// generator may only mention degree q-1 generators already present.
    /// Throws Error(schema) on duplicate or unknown names.
    void add_generator(const Name& name, int degree, const IntVector& boundary = {}, std::int64_t augmentation = 1);

    const std::vector<std::vector<Name>>& basis() const { return basis_; }
    const std::vector<Name>& basis(int degree) const;
    /// All generators ordered by (degree, declaration order).
    std::vector<Name> generators() const;
    /// -1 for the empty complex.
    int top_degree() const { return static_cast<int>(basis_.size()) - 1; }
    bool contains(const Name& name) const { return degree_.contains(name); }
    int degree_of(const Name& name) const;
    std::size_t size() const { return degree_.size(); }

    /// Zero for degree-0 generators.
    const IntVector& boundary(const Name& name) const;
    std::int64_t augmentation(const Name& name) const;

    /// Linear extension of the differential to a degree-`degree` chain.
    IntVector differential(const IntVector& c, int degree) const;
    Chain differential(const Chain& c) const { return {c.degree - 1, differential(c.vector, c.degree)}; }
    std::int64_t augment(const IntVector& c0) const;

    /// Every name in `c` is a degree-`degree` generator.
    bool is_chain_of_degree(const IntVector& c, int degree) const;

    friend bool operator==(const Adc& a, const Adc& b);

private:
    std::vector<std::vector<Name>> basis_;
    std::map<Name, int> degree_;
    std::map<Name, IntVector> boundary_;
    std::map<Name, std::int64_t> augmentation_;
};

struct ValidationReport {
    bool boundary_squared_zero = true;     // dd = 0
    bool augmentation_compatible = true;   // e d = 0
    std::optional<Name> dd_witness;
    std::optional<Name> augmentation_witness;

    bool ok() const { return boundary_squared_zero && augmentation_compatible; }
    std::string to_string() const;
};

ValidationReport validate_adc(const Adc& c);

struct Decomposition {
    IntVector pos;
    IntVector neg;
    NameSet supp_pos;
    NameSet supp_neg;
    NameSet supp;
};

Decomposition decompose(const IntVector& c);
inline Decomposition decompose(const Chain& c) { return decompose(c.vector); }

/// d^-(c) or d^+(c) for a degree-q chain, q > 0.
IntVector boundary_part(const Adc& complex, const IntVector& c, int degree, Sign sign);

/// Iterated positive and negative boundary parts of `c`, degrees 0..degree.
AtomTable atom_table(const Adc& complex, const IntVector& c, int degree);
AtomTable atom_table(const Adc& complex, const Name& generator);

struct UnitalityResult {
    bool unital = true;
    std::optional<Name> witness;
};

UnitalityResult is_unital(const Adc& complex);

struct LoopFreeReport {
    RelationGraph graph;
    bool is_partial_order = true;
    std::optional<std::vector<Name>> cycle_witness;
};

/// The generating relation of the preorder on the basis: a -> b when a lies
/// in supp(d^- b), and a -> b when b lies in supp(d^+ a).
LoopFreeReport loop_free_report(const Adc& complex);

/// Same preorder, generated from only one of the two clauses.
RelationGraph loop_free_graph_negative_clause(const Adc& complex);
RelationGraph loop_free_graph_positive_clause(const Adc& complex);

Adc truncate_adc(const Adc& complex, int n);

/// Unital and strongly loop-free basis.
bool is_strong_steiner_complex(const Adc& complex);

} // namespace steiner
