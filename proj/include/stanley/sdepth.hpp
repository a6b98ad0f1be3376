#pragma once

#include "stanley/decomposition.hpp"
#include "stanley/poset.hpp"

namespace stanley {

struct SdepthResult {
  int value = 0;
  IntervalPartition partition;  // witness achieving the value
};

/// Stanley depth of S/I for a proper nonzero monomial ideal, by searching
/// interval partitions of the characteristic poset.
///
/// Iterates a target value t from high to low; for each t only intervals
/// whose upper point d has rho(d) >= t are admissible, and coverability is
/// decided by backtracking on the lexicographically least uncovered point.
/// The first t that admits a full cover is the answer, with the first cover
/// found as witness.
SdepthResult sdepth(const MonomialIdeal& ideal, const SearchLimits& limits = {});

/// Turn a valid interval partition into the corresponding Stanley
/// decomposition: [c, d] becomes x^c K[Z(d)] with Z(d) = { j : d_j = g_j }.
/// The partition is validated against the poset and the resulting
/// decomposition re-verified.
StanleyDecomposition partition_to_decomposition(const MonomialIdeal& ideal,
                                                const IntervalPartition& partition,
                                                const SearchLimits& limits = {});

/// sdepth of S/I with the free-module case folded in: the zero ideal gives
/// n (witnessed by 1*K[x_1..x_n]). The unit ideal stays a domain error.
int sdepth_quotient(const MonomialIdeal& ideal, const SearchLimits& limits = {});

}  // namespace stanley
