#pragma once

// Recovering singular points from a weighted hyperplane configuration. All
// comparisons are exact on canonical forms.

#include <cstdint>
#include <vector>

#include "theta/exactlin.hpp"
#include "theta/weighted_config.hpp"

namespace theta {

/// Inverts spans_config: the t points of P^r whose r-subsets span the
/// hyperplanes of `cfg`. Codimension-2 meets J = H n H' inside a hyperplane
/// H are classified by how many elements of `cfg` contain them: the spans
/// of r-1 of the points lie in exactly t-r+1. Each point of H is the meet of
/// the r-1 such spans containing it. The result is re-synthesized and
/// compared with `cfg`. Points are returned sorted.
std::vector<ProjPoint> recover_from_spans(const WeightedConfig& cfg, int r, int t);

/// The g+1 nodes of a split curve from the multiplicity-2^{g-1} stratum of
/// `cfg`; entries of any other multiplicity are ignored.
std::vector<ProjPoint> recover_split_nodes(const WeightedConfig& cfg, int g);

/// The delta nodes of an irreducible genus-4 curve, by the case analysis
/// on the multiplicity-2, -4 and -8 strata.
std::vector<ProjPoint> recover_nodes_g4(const WeightedConfig& cfg, int delta);

struct Cluster {
  ProjPoint point;
  std::size_t incidence;

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

/// Points cut out by r of the hyperplanes of multiplicity >= min_weight
/// that lie on at least min_count of those hyperplanes.
std::vector<Cluster> cluster_points(const WeightedConfig& cfg, std::uint64_t min_weight, std::size_t min_count);

}  // namespace theta
