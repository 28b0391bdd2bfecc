#pragma once

// Synthesis of weighted hyperplane configurations from point data, and
// projection of configurations from a point.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "theta/exactlin.hpp"
#include "theta/weighted_config.hpp"

namespace theta {

/// Points of P^r in general linear position; checked on construction.
class NodeSet {
 public:
  NodeSet(std::vector<ProjPoint> points, int ambient_dim);

  const std::vector<ProjPoint>& points() const noexcept { return points_; }
  int ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  std::vector<ProjPoint> points_;
  int ambient_dim_;
};

/// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// All C(t, r) hyperplanes spanned by r-subsets of t >= r + 1 points.
WeightedConfig spans_config(const NodeSet& points, std::uint64_t multiplicity = 1,
                            Provenance provenance = Provenance::NodeSpan);

/// The type-(g-1) stratum of a split curve with the given g + 1 nodes in
/// P^{g-1}: the C(g+1, 2) spans of (g-1)-subsets, each of multiplicity
/// 2^{g-1}.
WeightedConfig split_config(int g, const NodeSet& nodes);

struct MockOptions {
  /// Bound on the random integer coefficients.
  long height = 20;
  /// Attempts per hyperplane draw and per stratum redraw.
  int max_retries = 1000;
};

/// A synthetic genus-4 configuration with the stratum sizes of an
/// irreducible curve with delta nodes: t_i planes of multiplicity 2^i, each
/// through exactly i nodes, spread evenly over the i-subsets. Randomness
/// comes only from `seed`. The result is audited before it is returned.
WeightedConfig mock_nodal_config_g4(int delta, const NodeSet& nodes, std::uint64_t seed,
                                    const MockOptions& opts = {});

/// Checks a configuration against the irreducible nodal model of genus g
/// with the given nodes: stratum sizes, weighted degree, that a plane of
/// multiplicity 2^i contains exactly i nodes, and that every i-subset of
/// nodes carries the same number of planes. Returns one message per failed
/// check.
std::vector<std::string> audit_nodal_config(const WeightedConfig& cfg, int g,
                                            std::span<const ProjPoint> nodes);

/// Keeps the hyperplanes through `center` and maps each to its image in
/// P^{r-1}; multiplicities and provenance are carried over unchanged.
WeightedConfig project_config(const WeightedConfig& cfg, const ProjPoint& center);

/// General-position random integer points of P^r with coordinates in
/// [-height, height], drawn deterministically from `seed`.
std::vector<ProjPoint> random_general_points(int count, int ambient_dim, long height, std::uint64_t seed);

}  // namespace theta
