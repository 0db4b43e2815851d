#pragma once

// Finite polygraph presentations: generators attached along source/target
// cell expressions, the linearisation into a complex, supports, the two
// categorical preorders and the loop-freeness classifiers.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "steiner/adc.hpp"
#include "steiner/nu.hpp"
#include "steiner/relation_graph.hpp"

namespace steiner {

/// Immutable cell expression: a generator, an identity, or a binary
/// composite comp(p, l, r) = l *_p r in diagrammatic order (t_p(l) = s_p(r)).
class CellExpr {
public:
    enum class Kind { gen, id, comp };

    static CellExpr gen(const Name& name, int dim);
    static CellExpr id(const CellExpr& inner);
    /// Throws Error(dim) unless l.dim() == r.dim() > level >= 0.
    static CellExpr comp(int level, const CellExpr& left, const CellExpr& right);

    Kind kind() const;
    int dim() const;
    const Name& name() const;        // gen
    const CellExpr& inner() const;   // id
    int level() const;               // comp
    const CellExpr& left() const;    // comp
    const CellExpr& right() const;   // comp

    std::string to_string() const;

    friend bool operator==(const CellExpr& a, const CellExpr& b);

private:
    struct Node;
    explicit CellExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Iterated identity of e up to dimension `dim`.
CellExpr id_to(const CellExpr& e, int dim);

class Presentation {
public:
    void add_point(const Name& name);
    /// Adds a generator of dimension src.dim() + 1. Throws Error(schema) for
    /// unknown or duplicate names, Error(not_composable) for an ill-typed
    /// composite and Error(validation) when src and tgt are not parallel.
    void add_generator(const Name& name, const CellExpr& src, const CellExpr& tgt);

    bool contains(const Name& name) const;
    int dim_of(const Name& name) const;
    CellExpr gen(const Name& name) const;
    const CellExpr& boundary(const Name& name, Sign sign) const;

    const std::vector<std::vector<Name>>& generators() const { return generators_; }
    const std::vector<Name>& generators(int dim) const;
    /// Ordered by (dimension, declaration order).
    std::vector<Name> all_generators() const;
    int top_dim() const { return static_cast<int>(generators_.size()) - 1; }
    std::size_t size() const { return dims_.size(); }

    friend bool operator==(const Presentation& a, const Presentation& b);

private:
    struct Boundary {
        CellExpr src;
        CellExpr tgt;
    };
    void check_expr(const CellExpr& e) const;
    void record(const Name& name, int dim);

    std::vector<std::vector<Name>> generators_;
    std::map<Name, int> dims_;
    std::map<Name, Boundary> boundaries_;
};

/// Iterated source (minus) or target (plus) expression at level p < e.dim().
CellExpr face_expr(const Presentation& P, const CellExpr& e, int p, Sign sign);

/// Class of e in the linearisation: generators are unit vectors, identities
/// vanish and composites add.
IntVector linearize(const Presentation& P, const CellExpr& e);
Chain linearize_chain(const Presentation& P, const CellExpr& e);

/// Linearised faces ([s_p e], [t_p e]) for p < dim and [e] on top: the image
/// of e under the unit into the table category of the linearisation.
NuTable unit_table(const Presentation& P, const CellExpr& e);

/// 1-cells as words: the generators along the path, identities dropped.
std::vector<Name> path_word(const Presentation& P, const CellExpr& e);

/// Equality discipline for cells: exact by name in dimension 0 and by word
/// and endpoints in dimension 1 (free categories); equality of unit tables
/// above, which is exact on strong Steiner presentations.
bool cells_equal(const Presentation& P, const CellExpr& a, const CellExpr& b);

Adc lambda_presentation(const Presentation& P);

NameSet support_expr(const Presentation& P, const CellExpr& e);

struct AtomicityViolation {
    Name generator;
    int level = 0;
    NameSet intersection;
};

struct AtomicityResult {
    bool atomic = true;
    std::optional<AtomicityViolation> witness;
};

AtomicityResult is_atomic(const Presentation& P);

struct PreorderReport {
    RelationGraph codim1;  // faces in codimension one
    RelationGraph full;    // faces in every codimension
    bool codim1_antisymmetric = true;
    bool full_antisymmetric = true;
    std::optional<std::vector<Name>> codim1_cycle;
    std::optional<std::vector<Name>> full_cycle;
};

PreorderReport preorder_report(const Presentation& P);

bool is_algebraically_loop_free(const Presentation& P);

struct SteinerOrderResult {
    bool orderable = true;
    RelationGraph constraints;
    std::optional<std::vector<Name>> order;
    std::optional<std::vector<Name>> cycle;
};

/// Existence of a linear order on the generators with every element of
/// supp[s_q e] below every element of supp[t_q e], for q < dim e.
SteinerOrderResult is_steiner_orderable(const Presentation& P);

struct Verdict {
    bool is_polygraphic = true;
    bool is_atomic = false;
    std::optional<AtomicityViolation> atomicity_witness;
    RelationGraph preorder_codim1;
    RelationGraph preorder_full;
    bool codim1_antisymmetric = false;
    bool strongly_loop_free_categorical = false;
    bool strongly_loop_free_algebraic = false;
    bool lambda_unital = false;
    bool steiner_orderable = false;
    bool strong_steiner = false;
    std::optional<std::vector<Name>> categorical_cycle;
    std::optional<std::vector<Name>> algebraic_cycle;
    std::optional<std::vector<Name>> steiner_order;
    std::optional<std::vector<Name>> steiner_cycle;

    std::string to_string() const;
};

/// Assembles every verdict and checks the implications that hold for all
/// polygraphs; throws Error(inconsistent) if one fails.
Verdict classify(const Presentation& P);

/// Interprets generators as atoms of the linearisation, identities and
/// composites as the table operations. Throws Error(not_composable).
NuTable eval_table(const Presentation& P, const CellExpr& e);

} // namespace steiner
