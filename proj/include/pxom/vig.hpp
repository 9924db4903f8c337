#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pxom {

/// Variable interaction graph: symmetric boolean adjacency over n variables,
/// no self-loops. Used both for ground-truth graphs and for the empirical
/// graph accumulated by direct dependency checks.
class Vig {
public:
    Vig() = default;
    explicit Vig(std::size_t n) : n_(n), adj_(n * n, 0) {}

    /// Builds a graph from rows of '0'/'1' characters (whitespace ignored,
    /// diagonal characters such as 'X' ignored). Throws on asymmetry.
    static Vig from_rows(const std::vector<std::string_view>& rows);

    /// Adds a clique over the given indices.
    void add_clique(const std::vector<std::size_t>& members);

    std::size_t size() const { return n_; }
    bool has_edge(std::size_t g, std::size_t h) const { return adj_[g * n_ + h] != 0; }

    /// Returns true if the edge was not present before.
    bool add_edge(std::size_t g, std::size_t h);

    std::size_t edge_count() const;
    /// Fraction of unordered pairs that are connected.
    double density() const;
    std::vector<std::size_t> neighbours(std::size_t g) const;

    /// Number of edges with both ends inside `members`.
    std::size_t internal_edges(const std::vector<std::size_t>& members) const;

    /// True if every edge of *this is also an edge of `other`.
    bool is_subgraph_of(const Vig& other) const;

    std::string to_string() const;

    friend bool operator==(const Vig&, const Vig&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> adj_;
};

} // namespace pxom
