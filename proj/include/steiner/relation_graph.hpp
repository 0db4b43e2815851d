#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "steiner/zlin.hpp"

namespace steiner {

/// Generating relation of a preorder on named generators. Node order is the
/// declaration order and drives every deterministic choice below.
class RelationGraph {
public:
    using Edge = std::pair<Name, Name>;

    void add_node(const Name& name);
    void add_edge(const Name& from, const Name& to);

    const std::vector<Name>& nodes() const { return nodes_; }
    const std::set<Edge>& edges() const { return edges_; }
    bool has_node(const Name& name) const { return index_.contains(name); }
    bool has_edge(const Name& from, const Name& to) const { return edges_.contains({from, to}); }

    /// Tarjan; components in reverse topological order of the condensation.
    std::vector<std::vector<Name>> strongly_connected_components() const;

    /// The generated preorder is a partial order iff every SCC is a single
    /// node. Self-loops are harmless (reflexivity) and are ignored.
    bool is_antisymmetric() const;

    /// Shortest cycle through the first node (in declaration order) that sits
    /// in a non-trivial SCC, as a closed walk [v0, v1, ..., v0].
    std::optional<std::vector<Name>> cycle_witness() const;

    /// Reflexive-transitive closure as a set of ordered pairs.
    std::set<Edge> closure() const;

    /// Kahn's algorithm with declaration-order tie breaking; nullopt on a cycle.
    std::optional<std::vector<Name>> topological_order() const;

    /// If the closure is a total order, the nodes from least to greatest.
    std::optional<std::vector<Name>> as_total_order() const;

private:
    std::size_t index_of(const Name& name) const;
    std::vector<std::vector<std::size_t>> adjacency() const;

    std::vector<Name> nodes_;
    std::map<Name, std::size_t> index_;
    std::set<Edge> edges_;
};

} // namespace steiner
