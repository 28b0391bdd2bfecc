#include "theta/weighted_config.hpp"

#include <algorithm>

namespace theta {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::NodeSpan: return "node-span";
    case Provenance::Tangent: return "tangent";
    case Provenance::Mock: return "mock";
  }
  return "?";
}

std::optional<Provenance> parse_provenance(std::string_view s) {
  if (s == "node-span") return Provenance::NodeSpan;
  if (s == "tangent") return Provenance::Tangent;
  if (s == "mock") return Provenance::Mock;
  return std::nullopt;
}

void WeightedConfig::add(const Hyperplane& h, std::uint64_t multiplicity, Provenance provenance) {
  if (h.ambient_dim() != ambient_dim_) {
    throw InvalidInput("hyperplane " + h.to_string() + " is not in P^" + std::to_string(ambient_dim_));
  }
  if (multiplicity == 0) throw InvalidInput("multiplicity must be positive");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), h,
                             [](const ConfigEntry& e, const Hyperplane& key) { return e.hyperplane < key; });
  if (it != entries_.end() && it->hyperplane == h) {
    it->multiplicity += multiplicity;
    return;
  }
  entries_.insert(it, ConfigEntry{h, multiplicity, provenance});
}

Integer WeightedConfig::weighted_degree() const {
  Integer total = 0;
  for (const auto& e : entries_) total += Integer(static_cast<unsigned long>(e.multiplicity));
  return total;
}

std::optional<std::uint64_t> WeightedConfig::multiplicity_of(const Hyperplane& h) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), h,
                             [](const ConfigEntry& e, const Hyperplane& key) { return e.hyperplane < key; });
  if (it == entries_.end() || !(it->hyperplane == h)) return std::nullopt;
  return it->multiplicity;
}

std::map<std::uint64_t, std::size_t> WeightedConfig::multiplicity_histogram() const {
  std::map<std::uint64_t, std::size_t> out;
  for (const auto& e : entries_) ++out[e.multiplicity];
  return out;
}

std::vector<Hyperplane> WeightedConfig::hyperplanes() const {
  std::vector<Hyperplane> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.hyperplane);
  return out;
}

std::vector<Hyperplane> WeightedConfig::with_multiplicity(std::uint64_t m) const {
  std::vector<Hyperplane> out;
  for (const auto& e : entries_) {
    if (e.multiplicity == m) out.push_back(e.hyperplane);
  }
  return out;
}

}  // namespace theta
