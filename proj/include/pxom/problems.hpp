#pragma once

#include "pxom/core.hpp"

#include <filesystem>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace pxom {

/// Standard deceptive trap: k if u == k, otherwise k - 1 - u.
double dec(std::size_t u, std::size_t k);

/// Bimodal deceptive trap of even order k: k/2 at u in {0, k},
/// otherwise k/2 - |u - k/2| - 1.
double bim(std::size_t u, std::size_t k);

/// Unitation-based block function used by the trap families.
struct BlockFunction {
    enum class Kind { dec, bim };
    Kind kind = Kind::dec;
    std::size_t order = 5;

    double operator()(std::size_t u) const { return kind == Kind::dec ? dec(u, order) : bim(u, order); }
    double max_value() const;
    /// Best value of a block sitting in its deceptive local optimum.
    double attractor_value() const;
    /// Mean over a uniformly random block.
    double random_mean() const;
};

/// Variable subsets of an overlapping block problem.
class OverlapLayout {
public:
    /// `count` blocks of `order` variables, consecutive blocks sharing
    /// `overlap` variables. A cyclic layout wraps the last block onto the
    /// first, giving n = count * (order - overlap); otherwise
    /// n = count * (order - overlap) + overlap.
    static OverlapLayout regular(std::size_t order, std::size_t overlap, std::size_t count, bool cyclic);

    /// Number of blocks needed for a regular layout of total size n, or throws
    /// when n is inconsistent with order/overlap.
    static std::size_t blocks_for_size(std::size_t n, std::size_t order, std::size_t overlap, bool cyclic);

    /// Arbitrary blocks over n variables (0-based indices).
    static OverlapLayout custom(std::size_t n, std::vector<std::vector<std::size_t>> blocks);

    std::size_t size() const { return n_; }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    bool cyclic() const { return cyclic_; }
    std::size_t overlap() const { return overlap_; }

    Vig interaction_graph() const;

private:
    std::size_t n_ = 0;
    std::size_t overlap_ = 0;
    bool cyclic_ = false;
    std::vector<std::vector<std::size_t>> blocks_;
};

double evaluate_overlapping_sum(const OverlapLayout& layout, const BlockFunction& base, BitsView x);
/// Product of (base + 1) factors.
double evaluate_overlapping_product(const OverlapLayout& layout, const BlockFunction& base, BitsView x);

/// Sum of block functions over a (possibly overlapping) layout: covers the
/// trap-concat, cyclic-trap, bimodal-concat and bimodal-cyclic kinds.
class BlockSumProblem final : public Problem {
public:
    BlockSumProblem(std::string name, OverlapLayout layout, BlockFunction base);

    std::size_t size() const override { return layout_.size(); }
    double value(BitsView x) const override;
    std::string name() const override { return name_; }
    std::optional<double> optimum() const override;
    std::optional<Vig> interaction_graph() const override { return layout_.interaction_graph(); }
    std::optional<double> attractor_value() const override;
    std::optional<double> random_mean() const override;

    const OverlapLayout& layout() const { return layout_; }
    const BlockFunction& base() const { return base_; }

private:
    std::string name_;
    OverlapLayout layout_;
    BlockFunction base_;
};

class BlockProductProblem final : public Problem {
public:
    BlockProductProblem(std::string name, OverlapLayout layout, BlockFunction base);

    std::size_t size() const override { return layout_.size(); }
    double value(BitsView x) const override;
    std::string name() const override { return name_; }
    std::optional<double> optimum() const override;
    std::optional<Vig> interaction_graph() const override { return layout_.interaction_graph(); }

private:
    std::string name_;
    OverlapLayout layout_;
    BlockFunction base_;
};

/// Wraps an arbitrary function; used for the small illustrative fixtures.
class FunctionProblem final : public Problem {
public:
    using Fn = std::function<double(BitsView)>;

    FunctionProblem(std::string name, std::size_t n, Fn fn, std::optional<double> optimum = std::nullopt,
                    std::optional<Vig> vig = std::nullopt);

    std::size_t size() const override { return n_; }
    double value(BitsView x) const override { return fn_(x); }
    std::string name() const override { return name_; }
    std::optional<double> optimum() const override { return optimum_; }
    std::optional<Vig> interaction_graph() const override { return vig_; }

private:
    std::string name_;
    std::size_t n_;
    Fn fn_;
    std::optional<double> optimum_;
    std::optional<Vig> vig_;
};

/// NK landscape with k random distinct neighbours per position and tables
/// of 2^(k+1) values uniform in [0, 1). The table index of position i is
/// x_i * 2^k + sum_j x_{nb_j} * 2^(k-1-j).
class NkLandscape final : public Problem {
public:
    NkLandscape(std::size_t n, std::size_t k, std::uint64_t seed, std::vector<std::vector<std::size_t>> neighbours,
                std::vector<std::vector<double>> tables);

    static NkLandscape generate(std::size_t n, std::size_t k, std::uint64_t seed);
    static NkLandscape load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    std::size_t size() const override { return n_; }
    double value(BitsView x) const override;
    std::string name() const override;
    std::optional<Vig> interaction_graph() const override;

    std::size_t k() const { return k_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<std::vector<std::size_t>>& neighbours() const { return neighbours_; }
    const std::vector<std::vector<double>>& tables() const { return tables_; }

private:
    std::size_t n_;
    std::size_t k_;
    std::uint64_t seed_;
    std::vector<std::vector<std::size_t>> neighbours_;
    std::vector<std::vector<double>> tables_;
};

/// 2D toroidal +-J spin glass on an L x L lattice. Fitness is the negated
/// energy, sum over edges of J_ij * s_i * s_j with s = 2x - 1.
class IsingSpinGlass final : public Problem {
public:
    struct Coupling {
        std::size_t i;
        std::size_t j;
        int weight;
    };

    IsingSpinGlass(std::size_t side, std::vector<Coupling> couplings);

    static IsingSpinGlass generate(std::size_t side, std::uint64_t seed);
    static IsingSpinGlass load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    std::size_t size() const override { return side_ * side_; }
    double value(BitsView x) const override;
    std::string name() const override;
    std::optional<Vig> interaction_graph() const override;

    std::size_t side() const { return side_; }
    const std::vector<Coupling>& couplings() const { return couplings_; }

private:
    std::size_t side_;
    std::vector<Coupling> couplings_;
};

/// MAX-3SAT: fitness is the number of satisfied clauses.
class MaxSat final : public Problem {
public:
    /// Literals are DIMACS-style: +v or -v with v 1-based.
    MaxSat(std::size_t variables, std::vector<std::vector<int>> clauses, std::optional<double> optimum = std::nullopt);

    static MaxSat load_dimacs(const std::filesystem::path& path);
    static MaxSat parse_dimacs(std::istream& in);
    /// Random 3-SAT with a planted satisfying assignment; optimum = clauses.
    static MaxSat generate_planted(std::size_t variables, double clause_ratio, std::uint64_t seed);

    std::size_t size() const override { return variables_; }
    double value(BitsView x) const override;
    std::string name() const override { return "max3sat"; }
    std::optional<double> optimum() const override { return optimum_; }
    std::optional<Vig> interaction_graph() const override;

    const std::vector<std::vector<int>>& clauses() const { return clauses_; }
    void save_dimacs(const std::filesystem::path& path) const;

private:
    std::size_t variables_;
    std::vector<std::vector<int>> clauses_;
    std::optional<double> optimum_;
};

/// Malformed instance file.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Small named functions used as fixtures (0-based indices).
namespace fixtures {

/// Three bim_4 blocks over x1..x4, x4..x7 and x6..x9 (single then double
/// overlap).
OverlapLayout overlapping_bimodal_layout();
std::shared_ptr<const Problem> overlapping_bimodal();
/// Product of (bim_4 + 1) over the same layout. Its non-linear graph is
/// complete, its non-monotonic graph equals the block structure.
std::shared_ptr<const Problem> overlapping_bimodal_product();
/// Block structure of the two functions above.
Vig overlapping_bimodal_vig();

std::shared_ptr<const Problem> onemax(std::size_t n);
std::shared_ptr<const Problem> onemax_squared(std::size_t n);

/// dec_4(x1..x4) + dec_4(x5..x8).
std::shared_ptr<const Problem> dec4_pair();
/// dec4_pair with the single point [0110 0000] raised from 4 to 5.5.
double spiked_dec4_pair_value(BitsView x);
std::shared_ptr<const Problem> spiked_dec4_pair();

/// Cyclic ring of three dec_k blocks overlapping on single genes
/// (n = 3 * (k - 1)).
std::shared_ptr<const Problem> dec_ring(std::size_t k);

} // namespace fixtures

} // namespace pxom
