#include "theta/recovery.hpp"

#include <algorithm>
#include <set>

#include "theta/configuration.hpp"
#include "theta/enumeration.hpp"

namespace theta {

namespace {

std::size_t containing_count(const std::vector<Hyperplane>& hs, const LinSubspace& s) {
  std::size_t n = 0;
  for (const auto& h : hs) n += contains(h, s) ? 1 : 0;
  return n;
}

ProjPoint single_point(const std::optional<LinSubspace>& s, const std::string& what) {
  if (!s || s->dim() != 0) {
    throw GenericityFailure(what + " is " + (s ? "of dimension " + std::to_string(s->dim()) : "empty") +
                            ", expected a point");
  }
  return *s->as_point();
}

std::vector<ProjPoint> sorted(std::set<ProjPoint> s) { return {s.begin(), s.end()}; }

}  // namespace

std::vector<ProjPoint> recover_from_spans(const WeightedConfig& cfg, int r, int t) {
  if (r < 1 || t < r + 1) throw InvalidInput("recover_from_spans needs r >= 1 and t >= r + 1");
  if (cfg.ambient_dim() != r) {
    throw InvalidInput("configuration lives in P^" + std::to_string(cfg.ambient_dim()) + ", not P^" +
                       std::to_string(r));
  }
  const Integer expected = binomial(t, r);
  if (Integer(static_cast<unsigned long>(cfg.size())) != expected) {
    throw NotASpanConfiguration(std::to_string(cfg.size()) + " hyperplanes, expected C(" + std::to_string(t) + "," +
                                std::to_string(r) + ") = " + expected.get_str());
  }
  const auto& entries = cfg.entries();
  const std::uint64_t mult = entries.front().multiplicity;
  for (const auto& e : entries) {
    if (e.multiplicity != mult) throw NotASpanConfiguration("multiplicities are not all equal");
  }
  const std::vector<Hyperplane> hs = cfg.hyperplanes();
  const std::size_t type_a = static_cast<std::size_t>(t - r + 1);

  std::set<ProjPoint> found;
  for (std::size_t k = 0; k < hs.size() && found.size() < static_cast<std::size_t>(t); ++k) {
    const Hyperplane& h = hs[k];
    std::vector<LinSubspace> spans;
    if (t == r + 1) {
      // Simplex: every pairwise meet is a span of r-1 of the points.
      for (std::size_t j = 0; j < hs.size(); ++j) {
        if (j != k) spans.push_back(*meet(h, hs[j]));
      }
    } else {
      std::set<LinSubspace> seen;
      for (std::size_t j = 0; j < hs.size(); ++j) {
        if (j == k) continue;
        auto J = meet(h, hs[j]);
        if (!J || J->dim() != r - 2 || !seen.insert(*J).second) continue;
        if (containing_count(hs, *J) == type_a) spans.push_back(*J);
      }
    }
    if (spans.size() != static_cast<std::size_t>(r)) {
      throw NotASpanConfiguration("hyperplane " + h.to_string() + " contains " + std::to_string(spans.size()) +
                                  " codimension-2 meets lying on " + std::to_string(type_a) +
                                  " hyperplanes, expected " + std::to_string(r));
    }
    // The point missing from spans[i] is the meet of all the others.
    for (std::size_t i = 0; i < spans.size(); ++i) {
      std::optional<LinSubspace> m = LinSubspace::of(h);
      for (std::size_t j = 0; j < spans.size() && m; ++j) {
        if (j != i) m = meet(*m, spans[j]);
      }
      if (!m || m->dim() != 0) throw NotASpanConfiguration("spans inside " + h.to_string() + " do not meet in a point");
      found.insert(*m->as_point());
    }
  }
  if (found.size() != static_cast<std::size_t>(t)) {
    throw InconsistentConfiguration("collected " + std::to_string(found.size()) + " points, expected " +
                                    std::to_string(t));
  }
  std::vector<ProjPoint> points = sorted(std::move(found));

  WeightedConfig again(r);
  try {
    again = spans_config(NodeSet(points, r), mult);
  } catch (const InvalidInput& e) {
    throw InconsistentConfiguration(std::string("recovered points fail re-synthesis: ") + e.what());
  }
  if (again.hyperplanes() != hs) {
    throw InconsistentConfiguration("re-synthesized configuration differs from the input");
  }
  return points;
}

std::vector<ProjPoint> recover_split_nodes(const WeightedConfig& cfg, int g) {
  if (g < 2) throw InvalidInput("recover_split_nodes needs g >= 2");
  if (cfg.ambient_dim() != g - 1) {
    throw InvalidInput("split configuration of genus " + std::to_string(g) + " lives in P^" + std::to_string(g - 1));
  }
  const std::uint64_t top = std::uint64_t{1} << (g - 1);
  WeightedConfig stratum(g - 1);
  for (const auto& e : cfg.entries()) {
    if (e.multiplicity == top) stratum.add(e.hyperplane, e.multiplicity, e.provenance);
  }
  const Integer expected = binomial(g + 1, 2);
  if (Integer(static_cast<unsigned long>(stratum.size())) != expected) {
    throw NotASplitConfiguration(std::to_string(stratum.size()) + " hyperplanes of multiplicity " +
                                 std::to_string(top) + ", expected C(" + std::to_string(g + 1) +
                                 ",2) = " + expected.get_str());
  }
  try {
    return recover_from_spans(stratum, g - 1, g + 1);
  } catch (const NotASpanConfiguration& e) {
    throw NotASplitConfiguration(e.what());
  }
}

std::vector<ProjPoint> recover_nodes_g4(const WeightedConfig& cfg, int delta) {
  constexpr int g = 4;
  constexpr int r = 3;
  if (delta < 1 || delta > 4) throw InvalidInput("recover_nodes_g4 needs 1 <= delta <= 4");
  if (cfg.ambient_dim() != r) throw InvalidInput("genus-4 configuration must live in P^3");

  const ThetaTable table = theta_table(IrreducibleNodal{g, delta});
  const auto hist = cfg.multiplicity_histogram();
  for (int i = 0; i < g; ++i) {
    const auto it = hist.find(std::uint64_t{1} << i);
    const Integer have = it == hist.end() ? Integer(0) : Integer(static_cast<unsigned long>(it->second));
    if (have != table.counts[i]) {
      throw WrongStratification("t_" + std::to_string(i) + " = " + have.get_str() + " (multiplicity " +
                                std::to_string(1u << i) + "), expected " + table.counts[i].get_str() + " for " +
                                describe(table.model));
    }
  }
  for (const auto& [m, n] : hist) {
    if (m >= (std::uint64_t{1} << g) || (m & (m - 1)) != 0) {
      throw WrongStratification(std::to_string(n) + " hyperplanes of multiplicity " + std::to_string(m) +
                                ", which is not 2^i for i < 4");
    }
  }
  const auto twos = cfg.with_multiplicity(2);
  const auto fours = cfg.with_multiplicity(4);
  const auto eights = cfg.with_multiplicity(8);

  std::set<ProjPoint> nodes;
  switch (delta) {
    case 1:
      nodes.insert(single_point(meet(twos, r), "meet of the multiplicity-2 planes"));
      break;
    case 2: {
      const auto J = meet(fours[0], fours[1]);
      if (!J || J->dim() != 1) throw GenericityFailure("first two multiplicity-4 planes do not meet in a line");
      for (std::size_t a = 0; a < fours.size(); ++a) {
        for (std::size_t b = a + 1; b < fours.size(); ++b) {
          if (meet(fours[a], fours[b]) != J) {
            throw GenericityFailure("multiplicity-4 planes " + std::to_string(a) + " and " + std::to_string(b) +
                                    " meet outside the common line");
          }
        }
      }
      for (const auto& h : twos) {
        nodes.insert(single_point(meet(*J, LinSubspace::of(h)), "line through the nodes meet " + h.to_string()));
      }
      if (nodes.size() != 2) {
        throw GenericityFailure("multiplicity-2 planes cut " + std::to_string(nodes.size()) +
                                " points on the nodal line, expected 2");
      }
      break;
    }
    case 3: {
      const LinSubspace H = LinSubspace::of(eights.front());
      std::set<LinSubspace> lines;
      for (const auto& h : fours) {
        auto l = meet(H, LinSubspace::of(h));
        if (!l || l->dim() != 1) throw GenericityFailure("multiplicity-4 plane " + h.to_string() + " does not cut a line");
        lines.insert(*l);
      }
      if (lines.size() != 3) {
        throw GenericityFailure("multiplicity-4 planes cut " + std::to_string(lines.size()) +
                                " lines on the multiplicity-8 plane, expected 3");
      }
      const std::vector<LinSubspace> ls(lines.begin(), lines.end());
      for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = a + 1; b < 3; ++b) nodes.insert(single_point(meet(ls[a], ls[b]), "triangle vertex"));
      }
      if (nodes.size() != 3) throw GenericityFailure("triangle is degenerate");
      break;
    }
    case 4:
      for_each_subset(eights.size(), 3, [&](std::span<const std::size_t> idx) {
        const std::vector<Hyperplane> three{eights[idx[0]], eights[idx[1]], eights[idx[2]]};
        nodes.insert(single_point(meet(three, r), "triple meet of multiplicity-8 planes"));
      });
      if (nodes.size() != 4) throw GenericityFailure("multiplicity-8 planes meet in fewer than 4 points");
      break;
  }
  return sorted(std::move(nodes));
}

std::vector<Cluster> cluster_points(const WeightedConfig& cfg, std::uint64_t min_weight, std::size_t min_count) {
  std::vector<Hyperplane> hs;
  for (const auto& e : cfg.entries()) {
    if (e.multiplicity >= min_weight) hs.push_back(e.hyperplane);
  }
  const int r = cfg.ambient_dim();
  std::set<ProjPoint> candidates;
  std::vector<Hyperplane> pick;
  for_each_subset(hs.size(), static_cast<std::size_t>(r), [&](std::span<const std::size_t> idx) {
    pick.clear();
    for (auto i : idx) pick.push_back(hs[i]);
    auto m = meet(pick, r);
    if (m && m->dim() == 0) candidates.insert(*m->as_point());
  });
  std::vector<Cluster> out;
  for (const auto& p : candidates) {
    std::size_t n = 0;
    for (const auto& h : hs) n += contains(h, p) ? 1 : 0;
    if (n >= min_count) out.push_back({p, n});
  }
  return out;
}

}  // namespace theta
