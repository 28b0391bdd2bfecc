#include "theta/configuration.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "theta/enumeration.hpp"

namespace theta {

NodeSet::NodeSet(std::vector<ProjPoint> points, int ambient_dim)
    : points_(std::move(points)), ambient_dim_(ambient_dim) {
  if (!in_general_position(points_, ambient_dim_)) {
    throw InvalidInput("points are not in general linear position in P^" + std::to_string(ambient_dim_));
  }
}

WeightedConfig spans_config(const NodeSet& points, std::uint64_t multiplicity, Provenance provenance) {
  const int r = points.ambient_dim();
  const std::size_t t = points.size();
  if (static_cast<int>(t) <= r) {
    throw InvalidInput("spans_config needs at least r + 1 = " + std::to_string(r + 1) + " points, got " +
                       std::to_string(t));
  }
  WeightedConfig cfg(r);
  std::vector<ProjPoint> subset;
  for_each_subset(t, static_cast<std::size_t>(r), [&](std::span<const std::size_t> idx) {
    subset.clear();
    for (auto i : idx) subset.push_back(points.points()[i]);
    cfg.add(hyperplane_through(subset), multiplicity, provenance);
  });
  return cfg;
}

WeightedConfig split_config(int g, const NodeSet& nodes) {
  if (g < 2) throw InvalidInput("split_config needs g >= 2");
  if (nodes.ambient_dim() != g - 1 || static_cast<int>(nodes.size()) != g + 1) {
    throw InvalidInput("split curve of genus " + std::to_string(g) + " needs " + std::to_string(g + 1) +
                       " nodes in P^" + std::to_string(g - 1) + ", got " + std::to_string(nodes.size()) +
                       " in P^" + std::to_string(nodes.ambient_dim()));
  }
  return spans_config(nodes, std::uint64_t{1} << (g - 1), Provenance::NodeSpan);
}

namespace {

std::size_t count_nodes_on(const Hyperplane& h, std::span<const ProjPoint> nodes) {
  std::size_t n = 0;
  for (const auto& p : nodes) n += contains(h, p) ? 1 : 0;
  return n;
}

// Integer basis of the hyperplanes through the given points.
std::vector<IntVector> annihilator_basis(std::span<const ProjPoint> pts, int r) {
  Matrix ann;
  if (pts.empty()) {
    for (int i = 0; i <= r; ++i) {
      Vector e(static_cast<std::size_t>(r + 1), Scalar(0));
      e[i] = 1;
      ann.push_back(std::move(e));
    }
  } else {
    ann = span(pts, r).annihilator();
  }
  std::vector<IntVector> out;
  for (const auto& row : ann) out.push_back(linalg::primitive(row));
  return out;
}

}  // namespace

WeightedConfig mock_nodal_config_g4(int delta, const NodeSet& nodes, std::uint64_t seed, const MockOptions& opts) {
  constexpr int g = 4;
  constexpr int r = g - 1;
  if (delta < 1 || delta > 4) throw InvalidInput("mock genus-4 synthesis needs 1 <= delta <= 4");
  if (nodes.ambient_dim() != r || static_cast<int>(nodes.size()) != delta) {
    throw InvalidInput("mock genus-4 synthesis needs " + std::to_string(delta) + " nodes in P^3");
  }
  const auto table = theta_table(IrreducibleNodal{g, delta});
  const auto& pts = nodes.points();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(-opts.height, opts.height);

  WeightedConfig cfg(r);
  for (int type = std::min(delta, r); type >= 0; --type) {
    const auto total = table.counts[type].get_ui();
    if (total == 0) continue;
    const auto groups = binomial(delta, type).get_ui();
    const auto per_group = total / groups;
    const std::uint64_t mult = std::uint64_t{1} << type;

    // The stratum is redrawn when a genericity condition used by the
    // recovery fails.
    for (int attempt = 0;; ++attempt) {
      if (attempt >= opts.max_retries) {
        throw SynthesisFailed("could not draw a generic type-" + std::to_string(type) + " stratum");
      }
      WeightedConfig trial = cfg;
      std::vector<Hyperplane> drawn;
      for_each_subset(static_cast<std::size_t>(delta), static_cast<std::size_t>(type),
                      [&](std::span<const std::size_t> idx) {
                        std::vector<ProjPoint> through;
                        for (auto i : idx) through.push_back(pts[i]);
                        const auto basis = annihilator_basis(through, r);
                        if (basis.size() == 1) {
                          // Forced: the span of r nodes.
                          Hyperplane h(basis.front());
                          if (trial.multiplicity_of(h)) throw SynthesisFailed("forced plane already present");
                          trial.add(h, mult, Provenance::NodeSpan);
                          drawn.push_back(h);
                          return;
                        }
                        for (std::uint64_t made = 0; made < per_group;) {
                          bool ok = false;
                          for (int tries = 0; tries < opts.max_retries && !ok; ++tries) {
                            IntVector v(static_cast<std::size_t>(r + 1), Integer(0));
                            for (const auto& b : basis) {
                              const Integer c = coeff(rng);
                              for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * b[k];
                            }
                            if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; })) {
                              continue;
                            }
                            Hyperplane h(v);
                            if (count_nodes_on(h, pts) != static_cast<std::size_t>(type)) continue;
                            if (trial.multiplicity_of(h)) continue;
                            trial.add(h, mult, Provenance::Mock);
                            drawn.push_back(h);
                            ok = true;
                          }
                          if (!ok) {
                            throw SynthesisFailed("no admissible plane through a " + std::to_string(type) +
                                                  "-subset of nodes after " + std::to_string(opts.max_retries) +
                                                  " draws");
                          }
                          ++made;
                        }
                      });
      bool generic = true;
      if (delta == 1 && type == 1) {
        // The type-1 planes must meet only in the node.
        auto common = meet(drawn, r);
        generic = common && common->dim() == 0;
      }
      if (generic) {
        cfg = std::move(trial);
        break;
      }
    }
  }

  auto failures = audit_nodal_config(cfg, g, pts);
  if (!failures.empty()) throw SynthesisFailed("audit failed: " + failures.front());
  return cfg;
}

std::vector<std::string> audit_nodal_config(const WeightedConfig& cfg, int g, std::span<const ProjPoint> nodes) {
  std::vector<std::string> failures;
  const int delta = static_cast<int>(nodes.size());
  ThetaTable table = theta_table(IrreducibleNodal{g, delta});

  std::vector<Integer> counts(static_cast<std::size_t>(g), Integer(0));
  for (const auto& e : cfg.entries()) {
    const auto m = e.multiplicity;
    if ((m & (m - 1)) != 0 || m >= (std::uint64_t{1} << g)) {
      failures.push_back("multiplicity " + std::to_string(m) + " of " + e.hyperplane.to_string() +
                         " is not 2^i with i < g");
      continue;
    }
    const int type = std::countr_zero(m);
    counts[type] += 1;
    const auto on = count_nodes_on(e.hyperplane, nodes);
    if (static_cast<int>(on) != type) {
      failures.push_back("plane " + e.hyperplane.to_string() + " of multiplicity " + std::to_string(m) +
                         " contains " + std::to_string(on) + " nodes, expected " + std::to_string(type));
    }
  }
  for (int i = 0; i < g; ++i) {
    if (counts[i] != table.counts[i]) {
      failures.push_back("t_" + std::to_string(i) + " = " + counts[i].get_str() + ", expected " +
                         table.counts[i].get_str() + " for " + describe(table.model));
    }
  }
  const Integer expected_degree = n_odd(g);
  if (cfg.weighted_degree() != expected_degree) {
    failures.push_back("weighted degree " + cfg.weighted_degree().get_str() + ", expected " +
                       expected_degree.get_str());
  }
  // Equal distribution over the i-subsets of nodes.
  for (int i = 1; i < g && i <= delta; ++i) {
    if (sgn(table.counts[i]) == 0) continue;
    const Integer per = table.counts[i] / binomial(delta, i);
    for_each_subset(static_cast<std::size_t>(delta), static_cast<std::size_t>(i), [&](std::span<const std::size_t> idx) {
      std::size_t n = 0;
      for (const auto& e : cfg.entries()) {
        if (e.multiplicity != (std::uint64_t{1} << i)) continue;
        bool all = true;
        for (auto k : idx) all = all && contains(e.hyperplane, nodes[k]);
        n += all ? 1 : 0;
      }
      if (Integer(static_cast<unsigned long>(n)) != per) {
        std::string which;
        for (auto k : idx) which += (which.empty() ? "" : ",") + std::to_string(k);
        failures.push_back(std::to_string(n) + " type-" + std::to_string(i) + " planes through nodes {" + which +
                           "}, expected " + per.get_str());
      }
    });
  }
  return failures;
}

WeightedConfig project_config(const WeightedConfig& cfg, const ProjPoint& center) {
  if (center.ambient_dim() != cfg.ambient_dim()) {
    throw InvalidInput("projection center is not in P^" + std::to_string(cfg.ambient_dim()));
  }
  WeightedConfig out(cfg.ambient_dim() - 1);
  for (const auto& e : cfg.entries()) {
    if (!contains(e.hyperplane, center)) continue;
    out.add(project_hyperplane(center, e.hyperplane), e.multiplicity, e.provenance);
  }
  return out;
}

std::vector<ProjPoint> random_general_points(int count, int ambient_dim, long height, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-height, height);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<ProjPoint> pts;
    while (static_cast<int>(pts.size()) < count) {
      IntVector v(static_cast<std::size_t>(ambient_dim + 1));
      bool nonzero = false;
      for (auto& x : v) {
        x = coord(rng);
        nonzero = nonzero || sgn(x) != 0;
      }
      if (nonzero) pts.emplace_back(v);
    }
    if (in_general_position(pts, ambient_dim)) return pts;
  }
  throw SynthesisFailed("could not draw points in general position");
}

}  // namespace theta
