// Acceptance battery: one PASS/FAIL line per criterion, exit status 1 when
// any criterion fails.

#include "pxom/harness.hpp"
#include "pxom/dependency.hpp"
#include "pxom/oracle.hpp"
#include "pxom/problems.hpp"

#include "reference_data.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

using namespace pxom;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(int id, const char* title, const std::function<void(Verdict&)>& body)
{
    Verdict v;
    const auto started = std::chrono::steady_clock::now();
    try {
        body(v);
    } catch (const std::exception& e) {
        v.pass = false;
        v.detail << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (!v.pass) ++failures;
    std::printf("%s %2d %s:%s (%.1fs)\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.str().c_str(), secs);
    std::fflush(stdout);
}

Vig complete(std::size_t n)
{
    Vig g(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

Bits exchange(Bits target, const Bits& from, const Mask& mask)
{
    for (auto i : mask) target[i] = from[i];
    return target;
}

double probability(const EndpointDistribution& d, const char* bits)
{
    const auto it = d.find(parse_bits(bits));
    return it == d.end() ? 0.0 : it->second;
}

struct Battery {
    double success = 0.0;
    std::optional<double> median_ffe;
    std::optional<double> median_share;
};

Battery battery(const std::vector<RunRecord>& records)
{
    Battery b;
    std::vector<double> ffe;
    std::vector<double> shares;
    for (const auto& r : records) {
        if (r.success) ffe.push_back(static_cast<double>(*r.ffe_at_success));
        if (r.px_share) shares.push_back(*r.px_share);
    }
    b.success = static_cast<double>(ffe.size()) / static_cast<double>(records.size());
    b.median_ffe = median(ffe);
    b.median_share = median(shares);
    return b;
}

ExperimentConfig trap_config(const std::string& kind, std::size_t n, std::size_t overlap, const std::string& optimizer)
{
    ExperimentConfig c;
    c.kind = kind;
    c.n = n;
    c.order = 5;
    c.overlap = overlap;
    c.optimizer = optimizer;
    c.ffe_limit = 1'000'000;
    c.seed_count = 30;
    return c;
}

std::string pct(double x)
{
    std::ostringstream ss;
    ss.precision(3);
    ss << 100.0 * x << "%";
    return ss.str();
}

} // namespace

int main()
{
    const auto fe1_vig = testing::overlapping_vig();
    const auto dsm_star = testing::overlapping_dsm();
    const auto p1 = testing::first_parent();
    const auto p2 = testing::second_parent();

    criterion(1, "PX masks of the worked example", [&](Verdict& v) {
        const auto masks = px_masks(fe1_vig, p1, p2);
        v.detail << " masks";
        for (const auto& m : masks) {
            v.detail << " {";
            for (std::size_t i = 0; i < m.size(); ++i) v.detail << (i ? "," : "") << m[i] + 1;
            v.detail << "}";
        }
        v.require(masks == std::vector<Mask>{{1, 2}, {4, 5, 7}}, "expected {2,3} {5,6,8}");
    });

    criterion(2, "exhaustive interaction graphs", [&](Verdict& v) {
        v.require(exhaustive_vig(*fixtures::overlapping_bimodal(), DependencyCheck::nonlinear) == fe1_vig,
                  "non-linear graph of the bimodal sum");
        v.require(exhaustive_vig(*fixtures::overlapping_bimodal_product(), DependencyCheck::nonmonotonic) == fe1_vig,
                  "non-monotonic graph of the bimodal product");
        const auto squared = fixtures::onemax_squared(9);
        v.require(exhaustive_vig(*squared, DependencyCheck::nonlinear) == complete(9), "squared onemax complete");
        v.require(exhaustive_vig(*squared, DependencyCheck::nonmonotonic).edge_count() == 0, "squared onemax empty");
    });

    criterion(3, "standard linkage tree on the reference matrix", [&](Verdict& v) {
        const auto tree = build_lt(dsm_star);
        const std::vector<Mask> first{{0, 1}, {2, 3}, {6, 7}};
        for (std::size_t i = 0; i < 3; ++i) {
            v.require(tree.nodes[9 + i].members == first[i] && std::abs(tree.nodes[9 + i].strength - 0.99) < 1e-12,
                      "merge " + std::to_string(i + 1));
        }
        v.require(tree.nodes[12].members == Mask{2, 3, 5} && std::abs(tree.nodes[12].strength - 0.74) < 1e-12,
                  "fourth merge {3,4,6} at 0.74");
        v.require(!testing::has_node(tree, {4, 5, 7}), "{5,6,8} must be absent");
        v.detail << " fourth merge at " << tree.nodes[12].strength;
    });

    criterion(4, "PX-like linkage tree on the reference matrix", [&](Verdict& v) {
        const auto tree = build_px_lt(dsm_star, p1, p2);
        v.require(testing::has_node(tree, {1, 2}), "{2,3}");
        v.require(testing::has_node(tree, {4, 5, 7}), "{5,6,8}");
        v.detail << " nodes " << tree.nodes.size();
    });

    criterion(5, "every PX mask is a PX-like tree node under a perfect model", [&](Verdict& v) {
        Rng rng(20240601);
        std::size_t trials = 0;
        std::size_t masks = 0;
        std::size_t violations = 0;
        while (trials < 2000) {
            const std::size_t n = 6 + rng.below(19);
            const std::size_t k = 2 + rng.below(4);
            Vig vig(n);
            auto order = rng.permutation(n);
            for (std::size_t s = 0; s < n; s += k) {
                std::vector<std::size_t> block;
                for (std::size_t j = 0; j < k; ++j) block.push_back(order[(s + j) % n]);
                vig.add_clique(block);
            }
            for (std::size_t e = rng.below(n / k + 1); e > 0; --e) {
                auto extra = rng.permutation(n);
                extra.resize(k);
                vig.add_clique(extra);
            }
            const auto dsm = testing::random_perfect_dsm(vig, rng, 0.2 + 0.6 * rng.uniform());
            Solution a(rng.random_bits(n));
            Solution b(rng.random_bits(n));
            if (a == b) continue;
            ++trials;
            const auto tree = build_px_lt(dsm, a, b);
            for (const auto& m : px_masks(vig, a, b)) {
                ++masks;
                violations += testing::has_node(tree, m) ? 0 : 1;
            }
        }
        v.detail << " trials " << trials << ", masks " << masks << ", violations " << violations;
        v.require(violations == 0, "violations");
    });

    criterion(6, "PX conservation and trichotomy over all parent pairs", [&](Verdict& v) {
        const auto sum_table = value_table(*fixtures::overlapping_bimodal());
        const auto prod_table = value_table(*fixtures::overlapping_bimodal_product());
        std::size_t exchanges = 0;
        std::size_t conservation_errors = 0;
        std::size_t trichotomy_errors = 0;
        for (std::uint64_t a = 0; a < sum_table.size(); ++a) {
            const auto x1 = bits_of_index(a, 9);
            for (std::uint64_t b = a + 1; b < sum_table.size(); ++b) {
                const auto x2 = bits_of_index(b, 9);
                for (const auto& m : px_masks(fe1_vig, Solution(x1), Solution(x2))) {
                    ++exchanges;
                    const auto o1 = index_of_bits(exchange(x1, x2, m));
                    const auto o2 = index_of_bits(exchange(x2, x1, m));
                    if (std::abs(sum_table[o1] + sum_table[o2] - sum_table[a] - sum_table[b]) > 1e-9) {
                        ++conservation_errors;
                    }
                    const double f1 = prod_table[a], f2 = prod_table[b];
                    const double g1 = prod_table[o1], g2 = prod_table[o2];
                    const int held = (f1 < g1 && f2 > g2) + (f1 > g1 && f2 < g2) + (f1 == g1 && f2 == g2);
                    trichotomy_errors += held == 1 ? 0 : 1;
                }
            }
        }
        v.detail << " exchanges " << exchanges << ", conservation errors " << conservation_errors
                 << ", trichotomy errors " << trichotomy_errors;
        v.require(conservation_errors == 0 && trichotomy_errors == 0, "errors");
    });

    criterion(7, "hill-climber endpoint oracle on the trap rings", [&](Verdict& v) {
        auto ring3 = fixtures::dec_ring(3);
        auto ring4 = fixtures::dec_ring(4);
        const std::set<Bits> five{parse_bits("000000"), parse_bits("111111"), parse_bits("111000"),
                                  parse_bits("001110"), parse_bits("100011")};
        const auto exact3 = fihc_endpoints_exact(*ring3);
        Rng rng(7);
        const auto sampled3 = fihc_endpoints_sampled(*ring3, 1'000'000, rng);
        std::set<Bits> exact_set, sampled_set;
        for (const auto& [bits, p] : exact3) exact_set.insert(bits);
        for (const auto& [bits, p] : sampled3) sampled_set.insert(bits);
        v.require(exact_set == five && sampled_set == five, "endpoint set");
        const auto e = enumerate_local_optima(*ring3);
        v.require(std::set<Bits>(e.begin(), e.end()) == five, "local optima");

        const double p0 = probability(exact3, "000000");
        const double pone = probability(exact3, "111111");
        const double ph = probability(exact3, "111000");
        v.require(std::abs(p0 + pone + 3 * ph - 1.0) < 1e-9, "p0 + p1 + 3ph = 1");
        v.detail << " p0 " << p0 << " p1 " << pone << " ph " << ph;

        const std::vector<std::tuple<std::size_t, std::size_t, double>> ring3_targets{
            {0, 1, 0.47}, {0, 2, 0.19}, {1, 3, 0.17}, {0, 3, 0.08}};
        const auto mc3 = theoretical_dsm(6, sampled3);
        const auto ex3 = theoretical_dsm(6, exact3);
        v.detail << "; dec3 MC";
        for (const auto& [g, h, target] : ring3_targets) {
            v.detail << " " << mc3.at(g, h);
            v.require(std::abs(mc3.at(g, h) - target) <= 0.02, "dec3 MC entry");
            v.require(std::abs(ex3.at(g, h) - target) <= 0.02, "dec3 exact entry");
        }

        const std::vector<std::tuple<std::size_t, std::size_t, double>> ring4_targets{
            {0, 1, 0.34}, {0, 3, 0.15}, {1, 2, 1.0}, {0, 4, 0.02}, {1, 4, 0.02}};
        const auto ex4 = theoretical_dsm(9, fihc_endpoints_exact(*ring4));
        const auto mc4 = theoretical_dsm(9, fihc_endpoints_sampled(*ring4, 1'000'000, rng));
        v.detail << "; dec4 exact";
        for (const auto& [g, h, target] : ring4_targets) {
            v.detail << " " << ex4.at(g, h);
            v.require(std::abs(ex4.at(g, h) - target) <= 0.03, "dec4 exact entry");
            v.require(std::abs(mc4.at(g, h) - target) <= 0.03, "dec4 MC entry");
        }
    });

    criterion(8, "hybrid presence population sizes", [&](Verdict& v) {
        const double ph = probability(fihc_endpoints_exact(*fixtures::dec_ring(3)), "111000");
        const auto one = hybrid_presence_population_size(ph, 0.99, PresenceTarget::one);
        const auto two = hybrid_presence_population_size(ph, 0.99, PresenceTarget::two);
        const auto three = hybrid_presence_population_size(ph, 0.99, PresenceTarget::all_three);
        v.detail << " " << one << "/" << two << "/" << three;
        v.require(one == 50 && two == 57 && three == 62, "expected 50/57/62");
    });

    criterion(9, "noise invariants", [&](Verdict& v) {
        const auto plain = exhaustive_vig(*fixtures::dec4_pair(), DependencyCheck::nonmonotonic);
        const auto spiked = exhaustive_vig(*fixtures::spiked_dec4_pair(), DependencyCheck::nonmonotonic);
        Vig expected = plain;
        for (std::size_t g : {1, 2})
            for (std::size_t h = 4; h < 8; ++h) expected.add_edge(g, h);
        v.require(spiked == expected, "spike adds exactly {x2,x3} x {x5..x8}");
        v.detail << " spike edges +" << spiked.edge_count() - plain.edge_count();
        const auto optima = enumerate_local_optima(*fixtures::spiked_dec4_pair());
        for (const char* s : {"00000000", "00001111", "11110000", "11111111"}) {
            v.require(std::find(optima.begin(), optima.end(), parse_bits(s)) != optima.end(),
                      std::string("optimum ") + s);
        }

        std::size_t instances = 0;
        std::size_t violations = 0;
        for (const auto& [kind, order, overlap, n] :
             std::vector<std::tuple<std::string, std::size_t, std::size_t, std::size_t>>{
                 {"trap-concat", 4, 0, 16}, {"trap-concat", 5, 0, 15}, {"cyclic-trap", 5, 1, 16},
                 {"bimodal-concat", 4, 0, 16}, {"bimodal-cyclic", 6, 1, 15}}) {
            for (double percent : {30.0, 50.0, 70.0, 100.0}) {
                ExperimentConfig c;
                c.kind = kind;
                c.order = order;
                c.overlap = overlap;
                c.n = n;
                c.noise_percent = percent;
                const auto problem = std::dynamic_pointer_cast<const NoisedProblem>(make_problem(c));
                ++instances;
                const auto noised = value_table(*problem);
                const auto truth = value_table(problem->inner());
                for (std::size_t i = 0; i < noised.size(); ++i) {
                    if (truth[i] >= problem->config().level && noised[i] != truth[i]) ++violations;
                }
            }
        }
        v.detail << "; noised instances " << instances << ", violations " << violations;
        v.require(violations == 0, "f_noised == f_true above the level");
    });

    // shared by 10, 11 and 12
    std::vector<RunRecord> p3_dec5;
    std::vector<RunRecord> px_dec5;

    criterion(10, "p3 solves Dec5 n=50", [&](Verdict& v) {
        p3_dec5 = run(trap_config("trap-concat", 50, 0, "p3"));
        const auto b = battery(p3_dec5);
        v.detail << " success " << pct(b.success) << ", median FFE " << b.median_ffe.value_or(-1);
        v.require(b.success >= 0.8, "success >= 80%");
        v.require(b.median_ffe && *b.median_ffe <= 1e5, "median FFE <= 1e5");
    });

    criterion(11, "p3-px-om-ltopws matches p3 on Dec5 and Dec5o1", [&](Verdict& v) {
        px_dec5 = run(trap_config("trap-concat", 50, 0, "p3-px-om-ltopws"));
        if (p3_dec5.empty()) p3_dec5 = run(trap_config("trap-concat", 50, 0, "p3"));
        const auto base = battery(p3_dec5);
        const auto px = battery(px_dec5);
        v.detail << " Dec5 n=50: p3 " << pct(base.success) << " px " << pct(px.success) << " (median FFE "
                 << base.median_ffe.value_or(-1) << " vs " << px.median_ffe.value_or(-1) << ")";
        v.require(px.success >= base.success, "Dec5");

        const auto base_o1 = battery(run(trap_config("cyclic-trap", 60, 1, "p3")));
        const auto px_o1 = battery(run(trap_config("cyclic-trap", 60, 1, "p3-px-om-ltopws")));
        v.detail << "; cDec5o1 n=60: p3 " << pct(base_o1.success) << " px " << pct(px_o1.success) << " (median FFE "
                 << base_o1.median_ffe.value_or(-1) << " vs " << px_o1.median_ffe.value_or(-1) << ")";
        v.require(px_o1.success >= base_o1.success, "Dec5o1");
    });

    criterion(12, "PX-mask share of PX-OM over classic OM >= 10x", [&](Verdict& v) {
        if (p3_dec5.empty()) p3_dec5 = run(trap_config("trap-concat", 50, 0, "p3"));
        if (px_dec5.empty()) px_dec5 = run(trap_config("trap-concat", 50, 0, "p3-px-om-ltopws"));
        const auto om = battery(p3_dec5).median_share;
        const auto px = battery(px_dec5).median_share;
        v.require(om && px, "share available");
        if (om && px) {
            const double ratio = *om > 0 ? *px / *om : INFINITY;
            v.detail << " px-om " << *px << "%, classic om " << *om << "%, ratio " << ratio;
            v.require(ratio >= 10.0, "ratio >= 10");
        }
    });

    criterion(13, "noise leaves the PX-OM scalability unchanged", [&](Verdict& v) {
        ExperimentConfig c;
        c.kind = "bimodal-cyclic";
        c.order = 6;
        c.overlap = 1;
        c.ffe_limit = 300'000;
        c.seed_count = 10;
        const std::vector<std::size_t> sizes{20, 30, 40, 60};
        std::map<std::pair<std::string, int>, std::optional<std::size_t>> largest;
        for (const char* opt : {"p3", "p3-fihcwll", "p3-px-om-ltopws"}) {
            for (int noise : {0, 100}) {
                c.optimizer = opt;
                c.noise_percent = noise;
                largest[{opt, noise}] = sweep(c, sizes).largest_passing;
                v.detail << " " << opt << "@" << noise << "%=" << largest[{opt, noise}].value_or(0);
            }
        }
        const auto step = [&](std::optional<std::size_t> n) {
            const auto it = std::find(sizes.begin(), sizes.end(), n.value_or(0));
            return it == sizes.end() ? -1 : static_cast<int>(it - sizes.begin());
        };
        v.require(largest[{"p3-px-om-ltopws", 0}].has_value(), "px passes some size");
        v.require(largest[{"p3-px-om-ltopws", 0}] == largest[{"p3-px-om-ltopws", 100}], "px unchanged by noise");
        v.require(std::abs(step(largest[{"p3-fihcwll", 100}]) - step(largest[{"p3", 100}])) <= 1,
                  "fihcwll within one step of p3 at 100%");
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "SOME FAIL", failures);
    return failures == 0 ? 0 : 1;
}
