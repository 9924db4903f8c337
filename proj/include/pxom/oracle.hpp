#pragma once

// Brute-force ground truth for small instances.

#include "pxom/sll.hpp"

#include <map>

namespace pxom {

/// Largest n for which the exact endpoint distribution is computed.
inline constexpr std::size_t kExactEndpointLimit = 12;

/// All f values over {0,1}^n, indexed with x_0 as the most significant bit.
std::vector<double> value_table(const Problem& problem);

Bits bits_of_index(std::uint64_t index, std::size_t n);
std::uint64_t index_of_bits(BitsView bits);

/// Every solution without a strictly improving single-bit flip, in index
/// order. Refuses n > kExhaustiveLimit.
std::vector<Bits> enumerate_local_optima(const Problem& problem);

using EndpointDistribution = std::map<Bits, double>;

/// Probability of each FIHC endpoint over a uniform random start and
/// uniformly shuffled sweeps. Exact (n <= kExactEndpointLimit): at every
/// step the next position is uniform over those not yet visited in the
/// current sweep, which is the same as a fresh shuffle per sweep.
EndpointDistribution fihc_endpoints_exact(const Problem& problem);

/// Same distribution estimated by running the real hill climber.
EndpointDistribution fihc_endpoints_sampled(const Problem& problem, std::size_t samples, Rng& rng);

/// DSM from the pairwise marginals of a distribution over solutions.
Dsm theoretical_dsm(std::size_t n, const EndpointDistribution& distribution);

enum class PresenceTarget { one = 1, two = 2, all_three = 3 };

/// Smallest population size m such that `target` fixed hybrids, each drawn
/// with probability `ph` per member, all appear with probability at least
/// `confidence` (inclusion-exclusion).
std::size_t hybrid_presence_population_size(double ph, double confidence, PresenceTarget target);

/// P(all t fixed outcomes of probability ph appear among m draws).
double presence_probability(double ph, std::size_t t, std::size_t m);

} // namespace pxom
