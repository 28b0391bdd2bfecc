#include "theta/recovery.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "theta/configuration.hpp"
#include "theta/enumeration.hpp"

namespace {

using namespace theta;
using theta::test::P;
using theta::test::sorted;

TEST(RecoverFromSpans, FramePlusUnitPoint) {
  const auto f = test::frame(2);
  EXPECT_EQ(recover_from_spans(spans_config(NodeSet(f, 2)), 2, 4), sorted(f));
}

TEST(RecoverFromSpans, Simplex) {
  for (int r = 2; r <= 6; ++r) {
    auto f = test::frame(r);
    f.pop_back();
    EXPECT_EQ(recover_from_spans(spans_config(NodeSet(f, r)), r, r + 1), sorted(f));
  }
}

TEST(RecoverFromSpans, RandomRoundTrips) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = 2 + trial % 5;
    const int t = r + 1 + (trial / 5) % 4;
    const auto pts = random_general_points(t, r, 50, rng());
    EXPECT_EQ(recover_from_spans(spans_config(NodeSet(pts, r)), r, t), sorted(pts)) << "r=" << r << " t=" << t;
  }
}

TEST(RecoverFromSpans, TypeACountsInsideEachHyperplane) {
  const int r = 3, t = 6;
  const auto pts = random_general_points(t, r, 30, 17);
  const WeightedConfig cfg = spans_config(NodeSet(pts, r));
  const auto hs = cfg.hyperplanes();
  for (const auto& h : hs) {
    std::set<LinSubspace> js;
    for (const auto& k : hs) {
      if (!(k == h)) js.insert(*meet(h, k));
    }
    int type_a = 0;
    for (const auto& j : js) {
      std::size_t n = 0;
      for (const auto& k : hs) n += contains(k, j);
      if (n == static_cast<std::size_t>(t - r + 1)) {
        ++type_a;
      } else {
        EXPECT_LE(n, static_cast<std::size_t>((t - r) / 2 + 1));
      }
    }
    EXPECT_EQ(type_a, r);
  }
}

TEST(RecoverFromSpans, NotASpanConfiguration) {
  const auto pts = random_general_points(5, 2, 30, 3);
  WeightedConfig cfg = spans_config(NodeSet(pts, 2));
  // Swap one line for an unrelated one: same size, broken structure.
  WeightedConfig broken(2);
  bool first = true;
  for (const auto& e : cfg.entries()) {
    if (first) {
      first = false;
      continue;
    }
    broken.add(e.hyperplane, 1, e.provenance);
  }
  broken.add(test::H({3, 7, -11}), 1, Provenance::Mock);
  EXPECT_THROW(recover_from_spans(broken, 2, 5), NotASpanConfiguration);
}

TEST(RecoverFromSpans, WrongSizeOrMixedMultiplicity) {
  const auto f = test::frame(2);
  WeightedConfig cfg = spans_config(NodeSet(f, 2));
  EXPECT_THROW(recover_from_spans(cfg, 2, 5), NotASpanConfiguration);
  cfg.add(cfg.hyperplanes().front(), 1, Provenance::NodeSpan);
  EXPECT_THROW(recover_from_spans(cfg, 2, 4), NotASpanConfiguration);
}

TEST(RecoverSplit, Genus3WithNoise) {
  const auto f = test::frame(2);
  WeightedConfig cfg = split_config(3, NodeSet(f, 2));
  for (const auto& l : {test::H({1, 2, 3}), test::H({1, 2, 4}), test::H({1, 3, 5}), test::H({2, 3, 7})}) {
    cfg.add(l, 1, Provenance::Mock);
  }
  EXPECT_EQ(recover_split_nodes(cfg, 3), sorted(f));
}

TEST(RecoverSplit, RandomGenera) {
  for (int g = 3; g <= 8; ++g) {
    const auto nodes = random_general_points(g + 1, g - 1, 20, 300 + g);
    EXPECT_EQ(recover_split_nodes(split_config(g, NodeSet(nodes, g - 1)), g), sorted(nodes));
  }
}

TEST(RecoverSplit, WrongStratumSize) {
  const auto f = test::frame(2);
  WeightedConfig cfg = split_config(3, NodeSet(f, 2));
  cfg.add(test::H({1, 2, 3}), 4, Provenance::Mock);
  EXPECT_THROW(recover_split_nodes(cfg, 3), NotASplitConfiguration);
}

TEST(RecoverSplit, CommutesWithProjection) {
  const int g = 5;
  const auto nodes = random_general_points(g + 1, g - 1, 20, 41);
  const WeightedConfig cfg = split_config(g, NodeSet(nodes, g - 1));
  const auto found = recover_split_nodes(cfg, g);
  const ProjPoint n = found.front();
  WeightedConfig down(g - 2);
  const WeightedConfig projected = project_config(cfg, n);
  for (const auto& e : projected.entries()) {
    down.add(e.hyperplane, e.multiplicity / 2, e.provenance);
  }
  std::vector<ProjPoint> expected;
  for (const auto& p : found) {
    if (!(p == n)) expected.push_back(project_from_point(n, p));
  }
  EXPECT_EQ(recover_split_nodes(down, g - 1), sorted(expected));
}

TEST(RecoverG4, AllDeltas) {
  for (int delta = 1; delta <= 4; ++delta) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto nodes = random_general_points(delta, 3, 20, 1000 + seed * 7 + delta);
      const auto cfg = mock_nodal_config_g4(delta, NodeSet(nodes, 3), seed);
      EXPECT_EQ(recover_nodes_g4(cfg, delta), sorted(nodes)) << "delta=" << delta << " seed=" << seed;
    }
  }
}

TEST(RecoverG4, ThreeNodesTriangle) {
  const auto nodes = random_general_points(3, 3, 20, 5);
  const auto cfg = mock_nodal_config_g4(3, NodeSet(nodes, 3), 6);
  const LinSubspace top = LinSubspace::of(cfg.with_multiplicity(8).front());
  std::set<LinSubspace> lines;
  for (const auto& h : cfg.with_multiplicity(4)) lines.insert(*meet(top, LinSubspace::of(h)));
  EXPECT_EQ(lines.size(), 3u);
}

TEST(RecoverG4, SecondCommonPointIsGenericityFailure) {
  const auto nodes = random_general_points(1, 3, 20, 9);
  const auto cfg = mock_nodal_config_g4(1, NodeSet(nodes, 3), 10);
  // Rebuild the multiplicity-2 stratum from planes through the node and a
  // second fixed point.
  const ProjPoint extra = P({1, -2, 3, 7});
  const std::vector<ProjPoint> both{nodes[0], extra};
  const Matrix ann = span(both, 3).annihilator();
  WeightedConfig bad(3);
  for (const auto& e : cfg.entries()) {
    if (e.multiplicity != 2) bad.add(e.hyperplane, e.multiplicity, e.provenance);
  }
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> d(-20, 20);
  while (bad.with_multiplicity(2).size() < 28) {
    Vector v(4, Scalar(0));
    for (const auto& row : ann) {
      const Scalar c(d(rng));
      for (std::size_t k = 0; k < 4; ++k) v[k] += c * row[k];
    }
    if (std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; })) continue;
    const Hyperplane h(v);
    if (!bad.multiplicity_of(h)) bad.add(h, 2, Provenance::Mock);
  }
  EXPECT_THROW(recover_nodes_g4(bad, 1), GenericityFailure);
}

TEST(RecoverG4, WrongStratificationNamesCount) {
  const auto nodes = random_general_points(2, 3, 20, 11);
  const auto cfg = mock_nodal_config_g4(2, NodeSet(nodes, 3), 12);
  try {
    recover_nodes_g4(cfg, 3);
    FAIL() << "expected WrongStratification";
  } catch (const WrongStratification& e) {
    EXPECT_NE(std::string(e.what()).find("t_0 = 32"), std::string::npos) << e.what();
  }
}

TEST(ClusterPoints, SplitGenus3Frame) {
  const auto f = test::frame(2);
  const auto clusters = cluster_points(split_config(3, NodeSet(f, 2)), 4, 3);
  ASSERT_EQ(clusters.size(), 4u);
  std::vector<ProjPoint> pts;
  for (const auto& c : clusters) {
    EXPECT_EQ(c.incidence, 3u);
    pts.push_back(c.point);
  }
  EXPECT_EQ(sorted(pts), sorted(f));
}

TEST(ClusterPoints, Empty) { EXPECT_TRUE(cluster_points(WeightedConfig(3), 1, 1).empty()); }

TEST(ClusterPoints, FourNodeMockTripleMeets) {
  const auto nodes = random_general_points(4, 3, 20, 13);
  const auto cfg = mock_nodal_config_g4(4, NodeSet(nodes, 3), 14);
  const auto clusters = cluster_points(cfg, 8, 3);
  std::vector<ProjPoint> pts;
  for (const auto& c : clusters) pts.push_back(c.point);
  EXPECT_EQ(sorted(pts), sorted(nodes));
}

}  // namespace
