#pragma once

// Dependency structure matrices and linkage trees.

#include "pxom/core.hpp"

#include <array>
#include <iosfwd>
#include <optional>

namespace pxom {

/// Symmetric matrix of predicted dependency strengths in [0, 1]. The
/// diagonal is ignored and reads as 0.
class Dsm {
public:
    Dsm() = default;
    explicit Dsm(std::size_t n) : n_(n), values_(n * n, 0.0) {}

    /// Builds a DSM from the upper triangle of `rows` (row-major, full
    /// square rows given). Lower-triangle values are ignored.
    static Dsm from_upper(const std::vector<std::vector<double>>& rows);

    std::size_t size() const { return n_; }
    double at(std::size_t g, std::size_t h) const { return g == h ? 0.0 : values_[g * n_ + h]; }
    void set(std::size_t g, std::size_t h, double value);

    /// 1 - D, for clustering code that wants a distance.
    double distance(std::size_t g, std::size_t h) const { return 1.0 - at(g, h); }

    double max_abs_difference(const Dsm& other) const;

    /// Text dump: n, then the upper triangle row-major.
    void write(std::ostream& out) const;
    static Dsm read(std::istream& in);

private:
    std::size_t n_ = 0;
    std::vector<double> values_;
};

/// I(X,Y) / H(X,Y) from a 2x2 joint distribution indexed [x*2 + y]. Zero
/// when H(X,Y) = 0.
double normalized_information(const std::array<double, 4>& joint);

/// Pairwise value counts of a population; supports incremental insertion.
class PairCounts {
public:
    PairCounts() = default;
    explicit PairCounts(std::size_t n) : n_(n), counts_(n * n * 4, 0) {}

    void add(BitsView bits);
    std::size_t population() const { return population_; }
    Dsm to_dsm() const;

private:
    std::size_t n_ = 0;
    std::size_t population_ = 0;
    std::vector<std::uint32_t> counts_;
};

/// Normalized mutual information DSM of a non-empty population.
Dsm estimate_dsm(std::span<const Solution> population);

/// Agglomerative hierarchy. Leaves come first; every internal node records
/// its two children and the strength at which they were merged. The last
/// node is the root.
struct LinkageTree {
    struct Node {
        std::vector<std::size_t> members; // sorted
        std::optional<std::pair<std::size_t, std::size_t>> children;
        double strength = 0.0;

        bool leaf() const { return !children.has_value(); }
    };

    std::vector<Node> nodes;

    bool empty() const { return nodes.empty(); }
    std::size_t root() const { return nodes.size() - 1; }
    bool contains(const std::vector<std::size_t>& members) const;

    /// One line per node: id, children ("-" for leaves), strength, members.
    void write(std::ostream& out) const;
};

enum class Linkage {
    /// Mean of D over all cross pairs.
    average,
    /// Maximum of D over all cross pairs.
    maximum,
};

/// Repeatedly merges the pair of current nodes with the highest strength
/// until one node remains. Ties go to the lexicographically smallest merged
/// index set.
LinkageTree agglomerate(const Dsm& dsm, const std::vector<std::size_t>& leaves, Linkage linkage);

/// Standard linkage tree over all variables (average linkage).
LinkageTree build_lt(const Dsm& dsm);

/// A threshold separating dependent from independent pairs, or nothing when
/// the DSM is not perfect for `vig`. If one side is empty the other side's
/// extreme still yields a usable threshold.
std::optional<double> is_perfect(const Dsm& dsm, const Vig& vig);

} // namespace pxom
