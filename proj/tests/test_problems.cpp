#include "pxom/dependency.hpp"
#include "pxom/oracle.hpp"
#include "pxom/problems.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

using namespace pxom;
using Catch::Approx;

namespace {

std::filesystem::path scratch_file(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "pxom-tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

double max_over_all(const Problem& p)
{
    const auto table = value_table(p);
    return *std::max_element(table.begin(), table.end());
}

} // namespace

TEST_CASE("trap values")
{
    CHECK(dec(5, 5) == 5);
    CHECK(dec(0, 5) == 4);
    CHECK(dec(3, 4) == 0);
    CHECK(dec(4, 5) == 0);
    CHECK_THROWS_AS(dec(6, 5), std::invalid_argument);
}

TEST_CASE("bimodal values")
{
    CHECK(bim(0, 4) == 2);
    CHECK(bim(4, 4) == 2);
    CHECK(bim(2, 4) == 1);
    CHECK(bim(1, 4) == 0);
    CHECK(bim(5, 10) == 4);
    CHECK(bim(1, 10) == 0);
    CHECK_THROWS_AS(bim(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(bim(1, 5), std::invalid_argument);
}

TEST_CASE("block function summaries")
{
    BlockFunction trap{BlockFunction::Kind::dec, 5};
    CHECK(trap.max_value() == 5);
    CHECK(trap.attractor_value() == 4);
    // (4*1 + 3*5 + 2*10 + 1*10 + 0*5 + 5*1) / 32
    CHECK(trap.random_mean() == Approx(54.0 / 32.0));
    BlockFunction bimodal{BlockFunction::Kind::bim, 4};
    CHECK(bimodal.max_value() == 2);
    CHECK(bimodal.attractor_value() == 1);
}

TEST_CASE("overlapping bimodal fixture")
{
    auto f = fixtures::overlapping_bimodal();
    REQUIRE(f->size() == 9);
    CHECK(f->value(parse_bits("111111111")) == 6);
    CHECK(f->value(parse_bits("000000000")) == 6);
    // blocks 1111, 1001, 0101
    CHECK(f->value(parse_bits("1111 001 01")) == 2 + 1 + 1);
    CHECK(f->optimum() == 6.0);
    CHECK(max_over_all(*f) == 6.0);
    CHECK(*f->interaction_graph() == fixtures::overlapping_bimodal_vig());
}

TEST_CASE("overlapping bimodal product fixture")
{
    auto f = fixtures::overlapping_bimodal_product();
    CHECK(f->value(parse_bits("111111111")) == 27);
    CHECK(f->value(parse_bits("000000000")) == 27);
    // blocks 1111, 1001, 0100 -> factors 3, 2, 1
    const auto x = parse_bits("1111 0010 0");
    CHECK(f->value(x) == 3 * 2 * 1);
    CHECK(max_over_all(*f) == 27.0);
}

TEST_CASE("dec3 ring")
{
    auto f = fixtures::dec_ring(3);
    REQUIRE(f->size() == 6);
    // blocks {0,1,2} {2,3,4} {4,5,0}: 3 + 1 + 1
    CHECK(f->value(parse_bits("111000")) == 5);
    const auto optima = enumerate_local_optima(*f);
    CHECK(std::find(optima.begin(), optima.end(), parse_bits("111000")) != optima.end());
    CHECK(f->value(parse_bits("111111")) == 9);
    CHECK(f->value(parse_bits("000000")) == 6);
    CHECK(max_over_all(*f) == 9.0);
}

TEST_CASE("spiked trap pair")
{
    CHECK(fixtures::spiked_dec4_pair_value(parse_bits("0110 0000")) == 5.5);
    CHECK(fixtures::spiked_dec4_pair_value(parse_bits("1111 1111")) == 8);
    CHECK(fixtures::spiked_dec4_pair_value(parse_bits("0000 0000")) == 6);
    CHECK(fixtures::dec4_pair()->value(parse_bits("0110 0000")) == 4);
}

TEST_CASE("regular layouts")
{
    SECTION("cyclic layout wraps and shares o genes with each neighbour")
    {
        const auto layout = OverlapLayout::regular(5, 2, 4, true);
        CHECK(layout.size() == 12);
        const auto& blocks = layout.blocks();
        REQUIRE(blocks.size() == 4);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const auto& cur = blocks[b];
            const auto& next = blocks[(b + 1) % blocks.size()];
            std::size_t shared = 0;
            for (auto v : cur) {
                shared += static_cast<std::size_t>(std::count(next.begin(), next.end(), v));
            }
            CHECK(shared == 2);
        }
        CHECK(OverlapLayout::blocks_for_size(12, 5, 2, true) == 4);
    }
    SECTION("open layout")
    {
        const auto layout = OverlapLayout::regular(5, 1, 3, false);
        CHECK(layout.size() == 13);
        CHECK(OverlapLayout::blocks_for_size(13, 5, 1, false) == 3);
        CHECK_THROWS(OverlapLayout::blocks_for_size(14, 5, 1, false));
    }
    SECTION("bad overlap")
    {
        CHECK_THROWS(OverlapLayout::regular(5, 5, 3, true));
    }
}

TEST_CASE("generated block problems reach their optimum on all-ones")
{
    for (bool cyclic : {false, true}) {
        for (std::size_t o : {0, 1, 2}) {
            if (cyclic && o == 0) continue;
            const auto layout = OverlapLayout::regular(5, o, 4, cyclic);
            BlockSumProblem trap("t", layout, {BlockFunction::Kind::dec, 5});
            const Bits ones(layout.size(), 1);
            CHECK(trap.value(ones) == *trap.optimum());
            if (layout.size() <= 20) {
                CHECK(max_over_all(trap) == *trap.optimum());
            }
            BlockSumProblem bimodal("b", OverlapLayout::regular(4, std::min<std::size_t>(o, 3), 4, cyclic),
                                    {BlockFunction::Kind::bim, 4});
            const Bits ones_b(bimodal.size(), 1);
            const Bits zeros_b(bimodal.size(), 0);
            CHECK(bimodal.value(ones_b) == *bimodal.optimum());
            CHECK(bimodal.value(zeros_b) == *bimodal.optimum());
        }
    }
}

TEST_CASE("block sum rejects a wrong length")
{
    BlockSumProblem trap("t", OverlapLayout::regular(5, 0, 2, false), {BlockFunction::Kind::dec, 5});
    CHECK_THROWS(trap.value(Bits(9, 0)));
}

TEST_CASE("nk landscape")
{
    SECTION("deterministic per seed and round trips through a file")
    {
        auto a = NkLandscape::generate(10, 3, 99);
        auto b = NkLandscape::generate(10, 3, 99);
        Rng rng(1);
        for (int i = 0; i < 20; ++i) {
            const auto x = rng.random_bits(10);
            CHECK(a.value(x) == b.value(x));
        }
        const auto path = scratch_file("nk.txt");
        a.save(path);
        auto c = NkLandscape::load(path);
        for (int i = 0; i < 20; ++i) {
            const auto x = rng.random_bits(10);
            CHECK(a.value(x) == c.value(x));
        }
    }
    SECTION("value of all-zeros matches a direct table lookup")
    {
        auto nk = NkLandscape::generate(10, 3, 5);
        double expected = 0.0;
        for (const auto& table : nk.tables()) {
            expected += table[0];
        }
        CHECK(nk.value(Bits(10, 0)) == Approx(expected));
    }
    SECTION("k = 0 has no interactions")
    {
        auto nk = NkLandscape::generate(6, 0, 3);
        CHECK(exhaustive_vig(nk, DependencyCheck::nonlinear).edge_count() == 0);
    }
    SECTION("k must be below n")
    {
        CHECK_THROWS(NkLandscape::generate(4, 4, 1));
    }
    SECTION("interaction graph covers every detected dependency")
    {
        auto nk = NkLandscape::generate(8, 2, 17);
        CHECK(exhaustive_vig(nk, DependencyCheck::nonlinear).is_subgraph_of(*nk.interaction_graph()));
    }
}

TEST_CASE("ising spin glass")
{
    auto isg = IsingSpinGlass::generate(3, 4);
    CHECK(isg.size() == 9);
    CHECK(isg.couplings().size() == 18);
    double all_aligned = 0.0;
    for (const auto& c : isg.couplings()) {
        all_aligned += c.weight;
    }
    CHECK(isg.value(Bits(9, 1)) == all_aligned);
    CHECK(isg.value(Bits(9, 0)) == all_aligned);

    const auto path = scratch_file("isg.txt");
    isg.save(path);
    auto loaded = IsingSpinGlass::load(path);
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        const auto x = rng.random_bits(9);
        CHECK(loaded.value(x) == isg.value(x));
    }
    CHECK(exhaustive_vig(isg, DependencyCheck::nonlinear).is_subgraph_of(*isg.interaction_graph()));
}

TEST_CASE("max3sat")
{
    SECTION("single clause semantics")
    {
        MaxSat sat(3, {{1, 2, -3}});
        CHECK(sat.value(parse_bits("001")) == 0);
        CHECK(sat.value(parse_bits("100")) == 1);
    }
    SECTION("dimacs parsing")
    {
        std::istringstream in("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 0\n%\n0\n");
        auto sat = MaxSat::parse_dimacs(in);
        CHECK(sat.size() == 3);
        CHECK(sat.clauses().size() == 2);
        CHECK(sat.value(parse_bits("010")) == 1);
    }
    SECTION("malformed input reports a position")
    {
        std::istringstream in("p cnf 3 1\n1 x 0\n");
        try {
            MaxSat::parse_dimacs(in);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(e.column() == 3);
        }
        std::istringstream out_of_range("p cnf 2 1\n1 3 0\n");
        CHECK_THROWS_AS(MaxSat::parse_dimacs(out_of_range), ParseError);
        std::istringstream wrong_count("p cnf 2 2\n1 2 0\n");
        CHECK_THROWS_AS(MaxSat::parse_dimacs(wrong_count), ParseError);
    }
    SECTION("planted instances are satisfiable and round trip")
    {
        auto sat = MaxSat::generate_planted(12, 4.0, 8);
        CHECK(sat.clauses().size() == 48);
        CHECK(max_over_all(sat) == *sat.optimum());
        const auto path = scratch_file("sat.cnf");
        sat.save_dimacs(path);
        auto loaded = MaxSat::load_dimacs(path);
        CHECK(loaded.clauses() == sat.clauses());
    }
    SECTION("missing file")
    {
        CHECK_THROWS(MaxSat::load_dimacs(scratch_file("does-not-exist.cnf")));
    }
}
