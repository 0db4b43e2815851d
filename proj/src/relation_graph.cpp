#include "steiner/relation_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace steiner {

void RelationGraph::add_node(const Name& name)
{
    if (index_.contains(name))
        return;
    index_.emplace(name, nodes_.size());
    nodes_.push_back(name);
}

void RelationGraph::add_edge(const Name& from, const Name& to)
{
    if (!index_.contains(from) || !index_.contains(to))
        throw Error(ErrorKind::schema, "edge " + from + " -> " + to + " references an unknown node");
    edges_.emplace(from, to);
}

std::size_t RelationGraph::index_of(const Name& name) const
{
    return index_.at(name);
}

std::vector<std::vector<std::size_t>> RelationGraph::adjacency() const
{
    std::vector<std::vector<std::size_t>> adj(nodes_.size());
    for (const auto& [from, to] : edges_)
        adj[index_of(from)].push_back(index_of(to));
    for (auto& succ : adj)
        std::sort(succ.begin(), succ.end());
    return adj;
}

std::vector<std::vector<Name>> RelationGraph::strongly_connected_components() const
{
    const auto adj = adjacency();
    const std::size_t n = nodes_.size();
    std::vector<int> number(n, -1), low(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    int counter = 0;
    std::vector<std::vector<Name>> out;

    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        number[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (std::size_t w : adj[v]) {
            if (number[w] == -1) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], number[w]);
            }
        }
        if (low[v] == number[v]) {
            std::vector<Name> component;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                component.push_back(nodes_[w]);
            } while (w != v);
            out.push_back(std::move(component));
        }
    };
    for (std::size_t v = 0; v < n; ++v)
        if (number[v] == -1)
            visit(v);
    return out;
}

bool RelationGraph::is_antisymmetric() const
{
    for (const auto& scc : strongly_connected_components())
        if (scc.size() > 1)
            return false;
    return true;
}

std::optional<std::vector<Name>> RelationGraph::cycle_witness() const
{
    std::vector<std::size_t> component_of(nodes_.size());
    std::vector<std::size_t> component_size;
    for (const auto& scc : strongly_connected_components()) {
        for (const auto& name : scc)
            component_of[index_of(name)] = component_size.size();
        component_size.push_back(scc.size());
    }
    const auto adj = adjacency();
    for (std::size_t start = 0; start < nodes_.size(); ++start) {
        if (component_size[component_of[start]] < 2)
            continue;
        // BFS back to start, staying inside the component
        std::vector<std::size_t> parent(nodes_.size(), nodes_.size());
        std::deque<std::size_t> queue{start};
        std::vector<bool> seen(nodes_.size(), false);
        seen[start] = true;
        while (!queue.empty()) {
            std::size_t v = queue.front();
            queue.pop_front();
            for (std::size_t w : adj[v]) {
                if (component_of[w] != component_of[start])
                    continue;
                if (w == start) {
                    std::vector<Name> walk{nodes_[start]};
                    for (std::size_t x = v; x != start; x = parent[x])
                        walk.push_back(nodes_[x]);
                    std::reverse(walk.begin() + 1, walk.end());
                    walk.push_back(nodes_[start]);
                    return walk;
                }
                if (!seen[w]) {
                    seen[w] = true;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
    }
    return std::nullopt;
}

std::set<RelationGraph::Edge> RelationGraph::closure() const
{
    const auto adj = adjacency();
    std::set<Edge> out;
    for (std::size_t s = 0; s < nodes_.size(); ++s) {
        std::vector<bool> seen(nodes_.size(), false);
        std::vector<std::size_t> todo{s};
        seen[s] = true;
        while (!todo.empty()) {
            std::size_t v = todo.back();
            todo.pop_back();
            out.emplace(nodes_[s], nodes_[v]);
            for (std::size_t w : adj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    todo.push_back(w);
                }
        }
    }
    return out;
}

std::optional<std::vector<Name>> RelationGraph::topological_order() const
{
    const auto adj = adjacency();
    std::vector<std::size_t> indegree(nodes_.size(), 0);
    for (const auto& succ : adj)
        for (std::size_t w : succ)
            ++indegree[w];
    std::set<std::size_t> ready;
    for (std::size_t v = 0; v < nodes_.size(); ++v)
        if (indegree[v] == 0)
            ready.insert(v);
    std::vector<Name> order;
    while (!ready.empty()) {
        std::size_t v = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(nodes_[v]);
        for (std::size_t w : adj[v])
            if (--indegree[w] == 0)
                ready.insert(w);
    }
    if (order.size() != nodes_.size())
        return std::nullopt;
    return order;
}

std::optional<std::vector<Name>> RelationGraph::as_total_order() const
{
    if (!is_antisymmetric())
        return std::nullopt;
    const auto rel = closure();
    const std::size_t n = nodes_.size();
    if (rel.size() != n * (n + 1) / 2)
        return std::nullopt;
    // in a total order the number of elements below x ranks x
    std::vector<std::pair<std::size_t, Name>> ranked;
    for (const auto& x : nodes_) {
        std::size_t below = 0;
        for (const auto& y : nodes_)
            below += rel.contains({y, x}) ? 1 : 0;
        ranked.emplace_back(below, x);
    }
    std::sort(ranked.begin(), ranked.end());
    std::vector<Name> out;
    for (auto& [rank, name] : ranked)
        out.push_back(name);
    return out;
}

} // namespace steiner
