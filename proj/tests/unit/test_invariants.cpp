#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "coverinv/error.hpp"
#include "coverinv/fingerprint.hpp"
#include "coverinv/hasse.hpp"
#include "coverinv/invariants.hpp"
#include "coverinv/io.hpp"
#include "oracles.hpp"

using namespace coverinv;

namespace {

using Sets = std::vector<std::vector<std::string>>;

json load(const std::string& name) { return read_json_file(std::string(COVERINV_FIXTURE_DIR) + "/" + name); }

FiniteSpace trivial_space() { return validate_topology({"a"}, Sets{{}, {"a"}}); }

FiniteSpace chain_space(std::size_t opens) {
  std::vector<std::string> pts;
  Sets list{{}};
  for (std::size_t i = 1; i <= opens; ++i) {
    pts.push_back(std::to_string(i));
    list.push_back(pts);
  }
  return validate_topology(pts, list);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Fingerprint, TrivialCover) {
  const FiniteSpace x = trivial_space();
  const Fingerprint f = fingerprint_of_cover(x, trivial_cover(x));
  EXPECT_EQ(f.graph_cert, canonical_cert(DiGraph(1)));
  EXPECT_EQ(f.blocks.to_string(), "1");
  EXPECT_EQ(f.kpair.to_string(), "K0=Z,K1=0");
  EXPECT_EQ(f.prim.points.size(), 1u);
}

TEST(Fingerprint, ChainCover) {
  for (std::size_t k = 1; k <= 6; ++k) {
    const FiniteSpace x = chain_space(k);
    const Cover c = make_cover(x, std::vector<Mask>(x.opens().begin() + 1, x.opens().end()));
    const Fingerprint f = fingerprint_of_cover(x, c);
    EXPECT_EQ(f.graph_cert, canonical_cert(oracle::path_graph(k)));
    EXPECT_EQ(f.blocks.blocks, std::vector<std::uint64_t>{k});
    EXPECT_EQ(f.kpair.to_string(), "K0=Z,K1=0");
    EXPECT_EQ(f.prim.points.size(), 1u);
  }
}

TEST(Fingerprint, PointModelSevenCover) {
  const FiniteSpace y = space_from_json(load("three_point.json"));
  const Fingerprint f = fingerprint_of_cover(y, enumerate_covers(y, 7).at(0));
  EXPECT_EQ(f.graph_cert, canonical_cert(DiGraph(3)));
  EXPECT_EQ(f.blocks.to_string(), "1,1,1");
  EXPECT_EQ(f.kpair.to_string(), "K0=Z^3,K1=0");
  EXPECT_EQ(f.prim.points.size(), 3u);
}

TEST(Fingerprint, LevelKeysDoNotCollide) {
  const Fingerprint f = fingerprint_of_graph(oracle::path_graph(3));
  EXPECT_EQ(level_key(f, Level::Graph).rfind("graph:", 0), 0u);
  EXPECT_EQ(level_key(f, Level::CStar).rfind("cstar:3|", 0), 0u);
  EXPECT_EQ(level_key(f, Level::KTheory), "ktheory:K0=Z,K1=0");
}

TEST(Fingerprint, ParseLevel) {
  EXPECT_EQ(parse_level("graph"), Level::Graph);
  EXPECT_EQ(parse_level("cstar"), Level::CStar);
  EXPECT_EQ(parse_level("ktheory"), Level::KTheory);
  EXPECT_EQ(kind_of([] { parse_level("prim"); }), ErrorKind::InvalidArgument);
  for (Level l : {Level::Graph, Level::CStar, Level::KTheory}) EXPECT_EQ(parse_level(to_string(l)), l);
}

TEST(Pg, SizeOneIsTheScalars) {
  oracle::Rng rng(51);
  const std::string c_key = level_key(fingerprint_of_graph(DiGraph(1)), Level::CStar);
  for (int t = 0; t < 30; ++t) {
    const FingerprintSet s = pg_n(oracle::random_space(rng, 5, 10), 1, Level::CStar);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_TRUE(s.contains(c_key));
  }
}

TEST(Pg, PointModelHasNoEightCover) {
  const FiniteSpace y = space_from_json(load("three_point.json"));
  EXPECT_TRUE(pg_n(y, 8, Level::Graph).empty());
  EXPECT_EQ(pg_n(y, 7, Level::Graph).size(), 1u);
}

TEST(Pg, ChainGivesMatrixAlgebrasOnly) {
  const FingerprintSet s = pg_all(chain_space(4), Level::CStar);
  EXPECT_EQ(s.scope, "all");
  std::set<std::string> blocks;
  for (const auto& [key, f] : s.elements) blocks.insert(f.blocks.to_string());
  EXPECT_EQ(blocks, (std::set<std::string>{"1", "2", "3", "4"}));
  EXPECT_EQ(s.size(), 4u);
}

TEST(Pg, Empty) {
  const FingerprintSet e = pg_empty(Level::Graph);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.elements.begin()->second.vertex_count, 1u);
  const FingerprintSet k = pg_empty(Level::KTheory);
  EXPECT_TRUE(k.contains("ktheory:K0=Z,K1=0"));
  EXPECT_TRUE(wl_compare(e, pg_n(trivial_space(), 1, Level::Graph)));
}

TEST(Pg, IntervalDomainsMatchTypeCount) {
  const auto seg = IntervalDomain::segment(0, 1);
  for (std::size_t n = 1; n <= 3; ++n) {
    const FingerprintSet s = pg_n(seg, n, Level::Graph);
    EXPECT_LE(s.size(), enumerate_interval_cover_types(seg, n).size());
    EXPECT_EQ(s.scope, "n=" + std::to_string(n));
  }
  EXPECT_EQ(kind_of([&] { pg_n(seg, 6, Level::Graph); }), ErrorKind::CapExceeded);
}

TEST(WlCompare, Reflexive) {
  const FingerprintSet s = pg_n(chain_space(3), 2, Level::Graph);
  EXPECT_TRUE(wl_compare(s, s));
}

TEST(WlCompare, TrivialVersusChain) {
  const FingerprintSet x = pg_all(trivial_space(), Level::CStar);
  const FingerprintSet y = pg_all(chain_space(2), Level::CStar);
  EXPECT_FALSE(wl_compare(x, y));
}

TEST(WlCompare, RelabelledCopiesAgreeAtEveryN) {
  oracle::Rng rng(52);
  for (int t = 0; t < 30; ++t) {
    const FiniteSpace x = oracle::random_space(rng, 5, 10);
    const FiniteSpace y = oracle::relabeled_space(x, oracle::random_permutation(rng, x.size()));
    for (std::size_t n = 1; n <= x.nonempty_opens().size(); ++n)
      for (Level l : {Level::Graph, Level::CStar, Level::KTheory}) EXPECT_TRUE(wl_compare(pg_n(x, n, l), pg_n(y, n, l)));
  }
}

TEST(WlCompare, Mismatches) {
  const FiniteSpace x = chain_space(2);
  EXPECT_EQ(kind_of([&] { wl_compare(pg_n(x, 1, Level::Graph), pg_n(x, 1, Level::CStar)); }), ErrorKind::LevelMismatch);
  EXPECT_EQ(kind_of([&] { wl_compare(pg_n(x, 1, Level::Graph), pg_n(x, 2, Level::Graph)); }), ErrorKind::LevelMismatch);
}

TEST(WlCompare, LevelMonotonicity) {
  oracle::Rng rng(53);
  std::size_t graph_equal = 0;
  for (int t = 0; t < 120; ++t) {
    const FiniteSpace x = oracle::random_space(rng, 4, 8);
    const FiniteSpace y = t % 3 == 0 ? oracle::relabeled_space(x, oracle::random_permutation(rng, x.size()))
                                     : oracle::random_space(rng, 4, 8);
    for (std::size_t n = 1; n <= 3; ++n) {
      const bool g = wl_compare(pg_n(x, n, Level::Graph), pg_n(y, n, Level::Graph));
      const bool c = wl_compare(pg_n(x, n, Level::CStar), pg_n(y, n, Level::CStar));
      const bool k = wl_compare(pg_n(x, n, Level::KTheory), pg_n(y, n, Level::KTheory));
      if (g) EXPECT_TRUE(c);
      if (c) EXPECT_TRUE(k);
      graph_equal += g ? 1 : 0;
    }
  }
  EXPECT_GT(graph_equal, 0u);
}

TEST(WlCompare, EquivalenceOnRandomTriples) {
  oracle::Rng rng(54);
  for (int t = 0; t < 80; ++t) {
    std::vector<FiniteSpace> spaces{oracle::random_space(rng, 4, 8)};
    spaces.push_back(t % 2 ? oracle::relabeled_space(spaces[0], oracle::random_permutation(rng, spaces[0].size()))
                           : oracle::random_space(rng, 4, 8));
    spaces.push_back(oracle::random_space(rng, 4, 8));
    for (Level l : {Level::Graph, Level::KTheory}) {
      std::vector<FingerprintSet> s;
      for (const auto& x : spaces) s.push_back(pg_n(x, 2, l));
      for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_TRUE(wl_compare(s[i], s[i]));
        for (std::size_t j = 0; j < 3; ++j) {
          EXPECT_EQ(wl_compare(s[i], s[j]), wl_compare(s[j], s[i]));
          for (std::size_t k = 0; k < 3; ++k)
            if (wl_compare(s[i], s[j]) && wl_compare(s[j], s[k])) EXPECT_TRUE(wl_compare(s[i], s[k]));
        }
      }
    }
  }
}

TEST(StrInvariants, TrivialSpace) {
  EXPECT_EQ(str_invariants(trivial_space(), StrKind::CStar), (std::map<std::string, std::size_t>{{"{1}", 1}}));
  EXPECT_EQ(str_invariants(trivial_space(), StrKind::K), (std::map<std::string, std::size_t>{{"K0=Z,K1=0", 1}}));
}

TEST(StrInvariants, ChainOfTwoOpens) {
  EXPECT_EQ(str_invariants(chain_space(2), StrKind::CStar),
            (std::map<std::string, std::size_t>{{"{1}", 1}, {"{2}", 1}}));
}

TEST(StrInvariants, RelabellingInvariance) {
  oracle::Rng rng(55);
  for (int t = 0; t < 40; ++t) {
    const FiniteSpace x = oracle::random_space(rng, 5, 10);
    const FiniteSpace y = oracle::relabeled_space(x, oracle::random_permutation(rng, x.size()));
    EXPECT_EQ(str_invariants(x, StrKind::CStar), str_invariants(y, StrKind::CStar));
    EXPECT_EQ(str_invariants(x, StrKind::K), str_invariants(y, StrKind::K));
  }
}

TEST(Certificate, SegmentVersusCircle) {
  const Side seg{IntervalDomain::segment(0, 1)};
  const Side circle{interval_spec_from_json(load("circle_arcs.json"))};
  const auto c = nonhomeo_certificate(seg, circle, 4, 4, Level::Graph);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->n, 4u);
  EXPECT_EQ(c->witness_side, 1);
  EXPECT_EQ(c->witness.vertex_count, 8u);
  EXPECT_EQ(c->exhaustive_family, "interval-types:segment");
  EXPECT_TRUE(replay_certificate(to_json(*c)).ok);
}

TEST(Certificate, LineVersusPlane) {
  const Side line{IntervalDomain::line()};
  const Side plane{axis_spec_from_json(load("plane_regions.json"))};
  const auto c = nonhomeo_certificate(line, plane, 1, 4, Level::Graph);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->n, 4u);
  EXPECT_GE(c->witness.vertex_count, 10u);
  for (const auto& h : enumerate_interval_cover_types(IntervalDomain::line(), 4)) EXPECT_LE(h.size(), 9u);
}

TEST(Certificate, IntervalWitnessVersusPointModel) {
  const Side x{interval_spec_from_json(load("line_cover7.json"))};
  const Side y{space_from_json(load("three_point.json"))};
  for (Level l : {Level::Graph, Level::CStar}) {
    const auto c = nonhomeo_certificate(x, y, 1, 8, l);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->n, 7u);
    EXPECT_EQ(c->witness_side, 0);
    EXPECT_EQ(c->exhaustive_family, "finite-space");
    EXPECT_TRUE(replay_certificate(to_json(*c)).ok);
  }
}

TEST(Certificate, NothingSeparatesRelabelledCopies) {
  oracle::Rng rng(56);
  const FiniteSpace x = oracle::random_space(rng, 4, 8);
  const FiniteSpace y = oracle::relabeled_space(x, oracle::random_permutation(rng, x.size()));
  EXPECT_FALSE(nonhomeo_certificate(Side{x}, Side{y}, 1, x.nonempty_opens().size(), Level::Graph).has_value());
}

TEST(Certificate, Errors) {
  const Side a{interval_spec_from_json(load("segment_cover1.json"))};
  const Side b{interval_spec_from_json(load("circle_arcs.json"))};
  EXPECT_EQ(kind_of([&] { nonhomeo_certificate(a, b, 4, 4, Level::Graph); }), ErrorKind::NotExhaustible);
  const Side circle{IntervalDomain::circle(4)};
  const Side seg{IntervalDomain::segment(0, 1)};
  EXPECT_EQ(kind_of([&] { nonhomeo_certificate(circle, seg, 4, 4, Level::Graph); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([&] { nonhomeo_certificate(seg, b, 0, 4, Level::Graph); }), ErrorKind::InvalidArgument);
}

TEST(Certificate, TamperedCertificateFailsReplay) {
  const Side seg{IntervalDomain::segment(0, 1)};
  const Side circle{interval_spec_from_json(load("circle_arcs.json"))};
  const auto c = nonhomeo_certificate(seg, circle, 4, 4, Level::Graph);
  ASSERT_TRUE(c.has_value());
  json doc = to_json(*c);
  doc["witness"]["key"] = "graph:00";
  EXPECT_FALSE(replay_certificate(doc).ok);
  json moved = to_json(*c);
  moved["n"] = 3;
  EXPECT_FALSE(replay_certificate(moved).ok);
}

TEST(Certificate, DeterministicJson) {
  const Side x{interval_spec_from_json(load("line_cover7.json"))};
  const Side y{space_from_json(load("three_point.json"))};
  const auto a = nonhomeo_certificate(x, y, 7, 7, Level::Graph);
  const auto b = nonhomeo_certificate(x, y, 7, 7, Level::Graph);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(to_json(*a).dump(), to_json(*b).dump());
}
