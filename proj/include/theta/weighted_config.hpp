#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "theta/exactlin.hpp"

namespace theta {

enum class Provenance { NodeSpan, Tangent, Mock };

std::string_view to_string(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view s);

struct ConfigEntry {
  Hyperplane hyperplane;
  std::uint64_t multiplicity;
  Provenance provenance;

  friend bool operator==(const ConfigEntry&, const ConfigEntry&) = default;
};

/// A multiset of hyperplanes of P^r with positive multiplicities: the
/// weighted configuration theta(X). Entries are kept sorted by canonical
/// hyperplane; adding an existing hyperplane adds to its multiplicity.
class WeightedConfig {
 public:
  explicit WeightedConfig(int ambient_dim) : ambient_dim_(ambient_dim) {}

  void add(const Hyperplane& h, std::uint64_t multiplicity, Provenance provenance);

  int ambient_dim() const noexcept { return ambient_dim_; }
  std::span<const ConfigEntry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  /// Sum of multiplicities.
  Integer weighted_degree() const;
  std::optional<std::uint64_t> multiplicity_of(const Hyperplane& h) const;
  /// multiplicity -> number of distinct hyperplanes carrying it.
  std::map<std::uint64_t, std::size_t> multiplicity_histogram() const;

  std::vector<Hyperplane> hyperplanes() const;
  std::vector<Hyperplane> with_multiplicity(std::uint64_t m) const;

  friend bool operator==(const WeightedConfig&, const WeightedConfig&) = default;

 private:
  int ambient_dim_;
  std::vector<ConfigEntry> entries_;
};

}  // namespace theta
