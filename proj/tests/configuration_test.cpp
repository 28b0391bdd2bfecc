#include "theta/configuration.hpp"

#include <gtest/gtest.h>

#include <set>

#include "test_util.hpp"
#include "theta/enumeration.hpp"
#include "theta/recovery.hpp"

namespace {

using namespace theta;
using theta::test::P;

std::vector<ProjPoint> project_all(const ProjPoint& center, const std::vector<ProjPoint>& pts) {
  std::vector<ProjPoint> out;
  for (const auto& p : pts) {
    if (!(p == center)) out.push_back(project_from_point(center, p));
  }
  return out;
}

TEST(NodeSet, RejectsCollinear) {
  EXPECT_THROW(NodeSet({P({1, 0, 0}), P({0, 1, 0}), P({1, 1, 0}), P({0, 0, 1})}, 2), InvalidInput);
}

TEST(SpansConfig, FramePlusUnitPoint) {
  const WeightedConfig cfg = spans_config(NodeSet(test::frame(2), 2));
  EXPECT_EQ(cfg.size(), 6u);
  EXPECT_EQ(cfg.weighted_degree(), 6);
  for (const auto& e : cfg.entries()) {
    EXPECT_EQ(e.multiplicity, 1u);
    EXPECT_EQ(e.provenance, Provenance::NodeSpan);
  }
}

TEST(SpansConfig, SimplexIsCoordinateHyperplanes) {
  for (int r = 2; r <= 6; ++r) {
    auto f = test::frame(r);
    f.pop_back();
    const WeightedConfig cfg = spans_config(NodeSet(f, r));
    ASSERT_EQ(cfg.size(), static_cast<std::size_t>(r + 1));
    for (const auto& h : cfg.hyperplanes()) {
      int nonzero = 0;
      for (const auto& c : h.coords()) nonzero += sgn(c) != 0;
      EXPECT_EQ(nonzero, 1);
    }
  }
}

TEST(SpansConfig, TooFewPoints) {
  auto f = test::frame(3);
  f.pop_back();
  f.pop_back();
  EXPECT_THROW(spans_config(NodeSet(f, 3)), InvalidInput);
}

TEST(SpansConfig, IncidenceCountsByMembershipScan) {
  for (int r = 2; r <= 5; ++r) {
    for (int t = r + 1; t <= r + 3; ++t) {
      const auto pts = random_general_points(t, r, 30, 100 + r * 10 + t);
      const WeightedConfig cfg = spans_config(NodeSet(pts, r));
      EXPECT_EQ(Integer(static_cast<unsigned long>(cfg.size())), binomial(t, r));
      for (const auto& p : pts) {
        std::size_t on = 0;
        for (const auto& h : cfg.hyperplanes()) on += contains(h, p);
        EXPECT_EQ(Integer(static_cast<unsigned long>(on)), binomial(t - 1, r - 1));
      }
    }
  }
}

TEST(SplitConfig, Genus3) {
  const WeightedConfig cfg = split_config(3, NodeSet(test::frame(2), 2));
  EXPECT_EQ(cfg.size(), 6u);
  for (const auto& e : cfg.entries()) EXPECT_EQ(e.multiplicity, 4u);
  // 28 minus the 4 type-0 lines.
  EXPECT_EQ(cfg.weighted_degree(), 28 - 4);
}

TEST(SplitConfig, Genus4) {
  const WeightedConfig cfg = split_config(4, NodeSet(test::frame(3), 3));
  EXPECT_EQ(cfg.size(), 10u);
  for (const auto& e : cfg.entries()) EXPECT_EQ(e.multiplicity, 8u);
}

TEST(SplitConfig, PartialDegree) {
  for (int g = 3; g <= 8; ++g) {
    const WeightedConfig cfg = split_config(g, NodeSet(test::frame(g - 1), g - 1));
    EXPECT_EQ(cfg.weighted_degree(), binomial(g + 1, 2) * (Integer(1) << (g - 1)));
  }
}

TEST(SplitConfig, SizeMismatch) {
  EXPECT_THROW(split_config(4, NodeSet(test::frame(2), 2)), InvalidInput);
  auto f = test::frame(3);
  f.pop_back();
  EXPECT_THROW(split_config(4, NodeSet(f, 3)), InvalidInput);
}

TEST(MockG4, TwoNodes) {
  const auto nodes = random_general_points(2, 3, 20, 1);
  const WeightedConfig cfg = mock_nodal_config_g4(2, NodeSet(nodes, 3), 42);
  const auto hist = cfg.multiplicity_histogram();
  EXPECT_EQ(hist.at(1), 32u);
  EXPECT_EQ(hist.at(2), 32u);
  EXPECT_EQ(hist.at(4), 6u);
  EXPECT_EQ(hist.count(8), 0u);
  EXPECT_EQ(cfg.weighted_degree(), 120);
}

TEST(MockG4, ThreeNodesFourPerPair) {
  const auto nodes = random_general_points(3, 3, 20, 2);
  const WeightedConfig cfg = mock_nodal_config_g4(3, NodeSet(nodes, 3), 7);
  const auto hist = cfg.multiplicity_histogram();
  EXPECT_EQ(hist.at(1), 16u);
  EXPECT_EQ(hist.at(2), 24u);
  EXPECT_EQ(hist.at(4), 12u);
  EXPECT_EQ(hist.at(8), 1u);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = a + 1; b < 3; ++b) {
      int n = 0;
      for (const auto& h : cfg.with_multiplicity(4)) n += contains(h, nodes[a]) && contains(h, nodes[b]);
      EXPECT_EQ(n, 4);
    }
  }
}

TEST(MockG4, FourNodesTopStratum) {
  const auto nodes = random_general_points(4, 3, 20, 3);
  const WeightedConfig cfg = mock_nodal_config_g4(4, NodeSet(nodes, 3), 9);
  const auto eights = cfg.with_multiplicity(8);
  ASSERT_EQ(eights.size(), 4u);
  std::set<std::set<std::size_t>> subsets;
  for (const auto& h : eights) {
    std::set<std::size_t> on;
    for (std::size_t i = 0; i < 4; ++i) {
      if (contains(h, nodes[i])) on.insert(i);
    }
    EXPECT_EQ(on.size(), 3u);
    subsets.insert(on);
  }
  EXPECT_EQ(subsets.size(), 4u);
}

TEST(MockG4, PassesAuditAndIsDeterministic) {
  for (int delta = 1; delta <= 4; ++delta) {
    const auto nodes = random_general_points(delta, 3, 20, 50 + delta);
    const WeightedConfig a = mock_nodal_config_g4(delta, NodeSet(nodes, 3), 1234);
    const WeightedConfig b = mock_nodal_config_g4(delta, NodeSet(nodes, 3), 1234);
    EXPECT_EQ(a, b);
    EXPECT_TRUE(audit_nodal_config(a, 4, nodes).empty());
    const WeightedConfig c = mock_nodal_config_g4(delta, NodeSet(nodes, 3), 1235);
    EXPECT_NE(a, c);
  }
}

TEST(MockG4, OneNodeGenericity) {
  const auto nodes = random_general_points(1, 3, 20, 4);
  const WeightedConfig cfg = mock_nodal_config_g4(1, NodeSet(nodes, 3), 5);
  const auto twos = cfg.with_multiplicity(2);
  ASSERT_EQ(twos.size(), 28u);
  const auto common = meet(twos, 3);
  ASSERT_TRUE(common);
  EXPECT_EQ(common->as_point(), nodes[0]);
}

TEST(MockG4, WrongNodeCount) {
  const auto nodes = random_general_points(2, 3, 20, 4);
  EXPECT_THROW(mock_nodal_config_g4(3, NodeSet(nodes, 3), 1), InvalidInput);
}

TEST(MockG4, ImpossibleHeightFails) {
  // Height 0 only ever draws the zero plane.
  const auto nodes = random_general_points(1, 3, 20, 4);
  MockOptions opts;
  opts.height = 0;
  opts.max_retries = 5;
  EXPECT_THROW(mock_nodal_config_g4(1, NodeSet(nodes, 3), 1, opts), SynthesisFailed);
}

TEST(Audit, DetectsTampering) {
  const auto nodes = random_general_points(2, 3, 20, 8);
  WeightedConfig cfg = mock_nodal_config_g4(2, NodeSet(nodes, 3), 3);
  const auto failures_before = audit_nodal_config(cfg, 4, nodes);
  EXPECT_TRUE(failures_before.empty());
  cfg.add(test::H({1, 2, 3, 5}), 1, Provenance::Mock);
  EXPECT_FALSE(audit_nodal_config(cfg, 4, nodes).empty());
}

TEST(ProjectConfig, SplitDropsOneGenus) {
  for (int g = 3; g <= 7; ++g) {
    const auto nodes = random_general_points(g + 1, g - 1, 15, 200 + g);
    const WeightedConfig up = split_config(g, NodeSet(nodes, g - 1));
    for (const auto& n : nodes) {
      const WeightedConfig down = project_config(up, n);
      const auto images = project_all(n, nodes);
      const WeightedConfig lower = split_config(g - 1, NodeSet(images, g - 2));
      EXPECT_EQ(down.size(), static_cast<std::size_t>(binomial(g, g - 2).get_ui()));
      EXPECT_EQ(down.hyperplanes(), lower.hyperplanes());
      for (const auto& e : down.entries()) EXPECT_EQ(e.multiplicity, std::uint64_t{1} << (g - 1));
      for (const auto& e : lower.entries()) EXPECT_EQ(e.multiplicity, std::uint64_t{1} << (g - 2));
    }
  }
}

TEST(ProjectConfig, CenterOffEveryHyperplane) {
  const WeightedConfig cfg = split_config(3, NodeSet(test::frame(2), 2));
  EXPECT_TRUE(project_config(cfg, P({1, 2, 5})).empty());
}

TEST(ProjectConfig, OneNodeMockGives28Lines) {
  const auto nodes = random_general_points(1, 3, 20, 12);
  const WeightedConfig cfg = mock_nodal_config_g4(1, NodeSet(nodes, 3), 77);
  const WeightedConfig down = project_config(cfg, nodes[0]);
  EXPECT_EQ(down.ambient_dim(), 2);
  EXPECT_EQ(down.size(), 28u);
  for (const auto& e : down.entries()) EXPECT_EQ(e.multiplicity, 2u);
}

TEST(ProjectConfig, DimensionMismatch) {
  const WeightedConfig cfg = split_config(3, NodeSet(test::frame(2), 2));
  EXPECT_THROW(project_config(cfg, P({1, 0, 0, 0})), InvalidInput);
}

}  // namespace
