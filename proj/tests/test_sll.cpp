#include "pxom/sll.hpp"

#include "reference_data.hpp"

#include <catch_amalgamated.hpp>

#include <numeric>
#include <sstream>

using namespace pxom;
using Catch::Approx;

namespace {

std::vector<Solution> population_of(const std::vector<std::string>& rows)
{
    std::vector<Solution> pop;
    for (const auto& r : rows) {
        pop.push_back(Solution::parse(r));
    }
    return pop;
}

/// DSM whose entries are the merge levels of a random hierarchy.
Dsm random_ultrametric(std::size_t n, Rng& rng)
{
    std::vector<std::vector<std::size_t>> clusters;
    for (std::size_t i = 0; i < n; ++i) {
        clusters.push_back({i});
    }
    Dsm dsm(n);
    double level = 1.0;
    while (clusters.size() > 1) {
        level *= 0.5 + 0.45 * rng.uniform();
        const auto a = rng.below(clusters.size());
        auto b = rng.below(clusters.size() - 1);
        if (b >= a) ++b;
        for (auto g : clusters[a]) {
            for (auto h : clusters[b]) {
                dsm.set(g, h, level);
            }
        }
        clusters[a].insert(clusters[a].end(), clusters[b].begin(), clusters[b].end());
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(b));
    }
    return dsm;
}

} // namespace

TEST_CASE("normalized information of simple joints")
{
    CHECK(normalized_information({0.5, 0.0, 0.0, 0.5}) == Approx(1.0));
    CHECK(normalized_information({0.25, 0.25, 0.25, 0.25}) == Approx(0.0).margin(1e-12));
    CHECK(normalized_information({1.0, 0.0, 0.0, 0.0}) == 0.0);
}

TEST_CASE("estimated dsm of copies and of independent pairs")
{
    const auto copies = population_of({"110", "000", "111", "001"});
    const auto dsm = estimate_dsm(copies);
    CHECK(dsm.at(0, 1) == Approx(1.0));
    CHECK(dsm.at(1, 0) == Approx(1.0));
    CHECK(dsm.at(0, 2) == Approx(0.0).margin(1e-12));

    const auto constant = population_of({"01", "01", "01"});
    CHECK(estimate_dsm(constant).at(0, 1) == 0.0);
}

TEST_CASE("estimated dsm is symmetric and bounded")
{
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng.below(10);
        std::vector<Solution> pop;
        const auto size = 1 + rng.below(30);
        for (std::size_t i = 0; i < size; ++i) {
            pop.emplace_back(rng.random_bits(n));
        }
        const auto dsm = estimate_dsm(pop);
        for (std::size_t g = 0; g < n; ++g) {
            for (std::size_t h = 0; h < n; ++h) {
                REQUIRE(dsm.at(g, h) == dsm.at(h, g));
                REQUIRE(dsm.at(g, h) >= 0.0);
                REQUIRE(dsm.at(g, h) <= 1.0 + 1e-12);
            }
        }
    }
}

TEST_CASE("incremental pair counts agree with batch estimation")
{
    Rng rng(9);
    std::vector<Solution> pop;
    PairCounts counts(7);
    for (int i = 0; i < 40; ++i) {
        pop.emplace_back(rng.random_bits(7));
        counts.add(pop.back().bits());
    }
    CHECK(counts.population() == 40);
    CHECK(counts.to_dsm().max_abs_difference(estimate_dsm(pop)) < 1e-12);
}

TEST_CASE("standard tree on the reference matrix")
{
    const auto tree = build_lt(testing::overlapping_dsm());
    REQUIRE(tree.nodes.size() == 17);
    const std::vector<std::vector<std::size_t>> first{{0, 1}, {2, 3}, {6, 7}};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(tree.nodes[9 + i].members == first[i]);
        CHECK(tree.nodes[9 + i].strength == Approx(0.99));
    }
    CHECK(tree.nodes[12].members == std::vector<std::size_t>{2, 3, 5});
    CHECK(tree.nodes[12].strength == Approx(0.74));
    // the blue PX mask never shows up
    CHECK_FALSE(testing::has_node(tree, {4, 5, 7}));
    CHECK(tree.nodes.back().members.size() == 9);
}

TEST_CASE("tree over a single variable")
{
    const auto tree = build_lt(Dsm(1));
    REQUIRE(tree.nodes.size() == 1);
    CHECK(tree.nodes[0].leaf());
}

TEST_CASE("trees have 2n - 1 nodes whose children partition the parent")
{
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng.below(15);
        Dsm dsm(n);
        for (std::size_t g = 0; g < n; ++g) {
            for (std::size_t h = g + 1; h < n; ++h) {
                dsm.set(g, h, rng.uniform());
            }
        }
        for (auto linkage : {Linkage::average, Linkage::maximum}) {
            std::vector<std::size_t> leaves(n);
            std::iota(leaves.begin(), leaves.end(), 0);
            const auto tree = agglomerate(dsm, leaves, linkage);
            REQUIRE(tree.nodes.size() == 2 * n - 1);
            for (const auto& node : tree.nodes) {
                if (node.leaf()) {
                    REQUIRE(node.members.size() == 1);
                    continue;
                }
                auto merged = tree.nodes[node.children->first].members;
                const auto& right = tree.nodes[node.children->second].members;
                merged.insert(merged.end(), right.begin(), right.end());
                std::sort(merged.begin(), merged.end());
                REQUIRE(merged == node.members);
            }
        }
    }
}

TEST_CASE("merge strengths never increase towards the root on ultrametric input")
{
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng.below(14);
        const auto tree = build_lt(random_ultrametric(n, rng));
        for (const auto& node : tree.nodes) {
            if (node.leaf()) continue;
            for (auto child : {node.children->first, node.children->second}) {
                if (!tree.nodes[child].leaf()) {
                    REQUIRE(tree.nodes[child].strength >= node.strength - 1e-12);
                }
            }
        }
    }
}

TEST_CASE("ties go to the lexicographically smallest merge")
{
    Dsm dsm(4);
    dsm.set(0, 1, 0.5);
    dsm.set(2, 3, 0.5);
    dsm.set(1, 2, 0.5);
    const auto tree = build_lt(dsm);
    CHECK(tree.nodes[4].members == std::vector<std::size_t>{0, 1});
}

TEST_CASE("perfect dsm threshold")
{
    const auto theta = is_perfect(testing::overlapping_dsm(), testing::overlapping_vig());
    REQUIRE(theta.has_value());
    CHECK(*theta > 0.50);
    CHECK(*theta < 0.51);

    Vig vig(3);
    vig.add_edge(0, 1);
    Dsm bad(3);
    bad.set(0, 1, 0.3);
    bad.set(0, 2, 0.4);
    CHECK_FALSE(is_perfect(bad, vig).has_value());

    Dsm any(3);
    any.set(0, 1, 0.7);
    const auto vacuous = is_perfect(any, Vig(3));
    REQUIRE(vacuous.has_value());
    CHECK(*vacuous >= 0.7);
}

TEST_CASE("dsm and tree text dumps")
{
    const auto dsm = testing::overlapping_dsm();
    std::stringstream ss;
    dsm.write(ss);
    const auto back = Dsm::read(ss);
    CHECK(back.max_abs_difference(dsm) < 1e-12);

    std::ostringstream out;
    build_lt(dsm).write(out);
    std::size_t lines = 0;
    for (char c : out.str()) {
        lines += c == '\n';
    }
    CHECK(lines == 17);
}

TEST_CASE("dsm set rejects values outside the unit interval")
{
    Dsm dsm(2);
    CHECK_THROWS(dsm.set(0, 1, 1.5));
    CHECK_THROWS(dsm.set(0, 1, -0.1));
}
