#ifndef PDCUT_TESTS_CLAIMS_HPP
#define PDCUT_TESTS_CLAIMS_HPP

#include <cstdint>
#include <string>

#include "pdcut/graph.hpp"

namespace pdcut::testing {

// Each checker enumerates every relevant cut of `g` by brute force and
// returns the number of violated instances (0 when the property holds).
// `first` receives a short description of the first violation, if any.

/// Stitched s-t min cut under [w, star(1)] on the star extension at 1 is
/// unique for every t != 1, and is a base-minimum s-t cut.
std::uint64_t unique_stitched_st_violations(const WeightedGraph& g, std::string* first);

/// T sides of the stitched global min-cut family are pairwise disjoint and
/// have equal size; union_t and t_max are reported consistently.
std::uint64_t family_shape_violations(const WeightedGraph& g, std::string* first);

/// Probe trichotomy for every x in 1..n+1 when the family has >= 2 members.
std::uint64_t probe_trichotomy_violations(const WeightedGraph& g, std::string* first);

/// Unions of base-minimum s-t cut-sets (s = 1, every t) are base-minimum.
std::uint64_t union_closure_violations(const WeightedGraph& g, std::string* first);

/// Every minimizer under a stitched function minimizes its base, for the
/// layer combinations the algorithms build (global and s-t).
std::uint64_t stitching_minimality_violations(const WeightedGraph& g, std::string* first);

/// Adding zero-weight star edges (centres 1 and n) keeps the base min-cut
/// family unchanged, globally and for every s-t pair with s = centre.
std::uint64_t zero_extension_violations(const WeightedGraph& g, std::string* first);

}  // namespace pdcut::testing

#endif  // PDCUT_TESTS_CLAIMS_HPP
