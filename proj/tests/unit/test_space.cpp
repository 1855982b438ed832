#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "coverinv/error.hpp"
#include "coverinv/space.hpp"
#include "oracles.hpp"

using namespace coverinv;

namespace {

using Sets = std::vector<std::vector<std::string>>;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidArgument;
}

FiniteSpace chain(std::size_t k) {
  std::vector<std::string> pts;
  Sets opens{{}};
  for (std::size_t i = 1; i <= k; ++i) {
    pts.push_back(std::to_string(i));
    opens.push_back(pts);
  }
  return validate_topology(pts, opens);
}

FiniteSpace y_model() { return generate_topology({"neg", "zero", "pos"}, Sets{{"neg"}, {"pos"}, {"zero"}}); }

}  // namespace

TEST(ValidateTopology, TrivialTopology) {
  const FiniteSpace x = validate_topology({"a"}, Sets{{}, {"a"}});
  EXPECT_EQ(x.size(), 1u);
  EXPECT_EQ(x.opens().size(), 2u);
}

TEST(ValidateTopology, ChainOfOpens) {
  const FiniteSpace x = chain(4);
  EXPECT_EQ(x.opens().size(), 5u);
  EXPECT_EQ(x.opens().front(), 0u);
  EXPECT_EQ(x.opens().back(), x.whole());
}

TEST(ValidateTopology, UnionWitness) {
  try {
    validate_topology({"a", "b", "c"}, Sets{{}, {"a"}, {"b"}, {"a", "b", "c"}});
    FAIL() << "expected NotClosedUnderUnion";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotClosedUnderUnion);
    EXPECT_FALSE(e.detail().empty());
    EXPECT_NE(e.detail().dump().find("\"a\""), std::string::npos);
    EXPECT_NE(e.detail().dump().find("\"b\""), std::string::npos);
  }
}

TEST(ValidateTopology, AxiomFailures) {
  EXPECT_EQ(kind_of([] { validate_topology({"a", "b"}, Sets{{"a"}, {"a", "b"}}); }), ErrorKind::MissingEmpty);
  EXPECT_EQ(kind_of([] { validate_topology({"a", "b"}, Sets{{}, {"a"}}); }), ErrorKind::MissingWhole);
  EXPECT_EQ(kind_of([] { validate_topology({"a", "b", "c"}, Sets{{}, {"a", "b"}, {"b", "c"}, {"a", "b", "c"}}); }),
            ErrorKind::NotClosedUnderIntersection);
  EXPECT_EQ(kind_of([] { validate_topology({"a", "a"}, Sets{{}, {"a"}}); }), ErrorKind::DuplicatePoint);
  EXPECT_EQ(kind_of([] { validate_topology({"a"}, Sets{{}, {"a"}, {"z"}}); }), ErrorKind::InvalidArgument);
}

TEST(GenerateTopology, SingleSubbasisSet) {
  const FiniteSpace x = generate_topology({"a", "b"}, Sets{{"a"}});
  ASSERT_EQ(x.opens().size(), 3u);
  EXPECT_EQ(x.names_of(x.opens()[1]), std::vector<std::string>{"a"});
}

TEST(GenerateTopology, ThreePointModelIsDiscrete) {
  const FiniteSpace y = y_model();
  EXPECT_EQ(y.opens().size(), 8u);
}

TEST(GenerateTopology, OverlappingPair) {
  const FiniteSpace x = generate_topology({"1", "2", "3"}, Sets{{"1", "2"}, {"2", "3"}});
  std::vector<std::vector<std::string>> names;
  for (Mask m : x.opens()) names.push_back(x.names_of(m));
  const Sets expected{{}, {"2"}, {"1", "2"}, {"2", "3"}, {"1", "2", "3"}};
  EXPECT_EQ(names, expected);
}

TEST(GenerateTopology, DuplicatePoint) {
  EXPECT_EQ(kind_of([] { generate_topology({"p", "p"}, Sets{}); }), ErrorKind::DuplicatePoint);
}

TEST(EnumerateCovers, TrivialSpaceHasOnlyItself) {
  const FiniteSpace x = validate_topology({"a"}, Sets{{}, {"a"}});
  const auto covers = enumerate_covers(x, 1);
  ASSERT_EQ(covers.size(), 1u);
  EXPECT_EQ(covers[0].members, std::vector<Mask>{x.whole()});
}

TEST(EnumerateCovers, ChainTwoMemberCovers) {
  const FiniteSpace x = chain(3);
  const auto covers = enumerate_covers(x, 2);
  ASSERT_EQ(covers.size(), 2u);
  for (const auto& c : covers) EXPECT_EQ(c.members.back(), x.whole());
}

TEST(EnumerateCovers, NoEightCoverOfThreePointModel) {
  EXPECT_TRUE(enumerate_covers(y_model(), 8).empty());
  EXPECT_EQ(enumerate_covers(y_model(), 7).size(), 1u);
}

TEST(EnumerateCovers, MatchesSubsetScan) {
  oracle::Rng rng(11);
  for (int t = 0; t < 150; ++t) {
    const FiniteSpace x = oracle::random_space(rng, 5, 10);
    auto got = enumerate_covers(x);
    const auto expected = oracle::covers_by_subset_scan(x);
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), [](const Cover& a, const Cover& b) {
      return std::lexicographical_compare(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                                          SizeLexLess{});
    }));
    std::sort(got.begin(), got.end());
    ASSERT_EQ(got, expected) << "space " << t;
    std::size_t by_size = 0;
    for (std::size_t n = 1; n <= x.nonempty_opens().size(); ++n) by_size += enumerate_covers(x, n).size();
    EXPECT_EQ(by_size, expected.size());
  }
}

TEST(EnumerateCovers, OneMemberCoverIsTheWholeSpace) {
  oracle::Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const FiniteSpace x = oracle::random_space(rng, 6, 20);
    const auto covers = enumerate_covers(x, 1);
    ASSERT_EQ(covers.size(), 1u);
    EXPECT_EQ(covers[0], trivial_cover(x));
  }
}

TEST(EnumerateCovers, EveryOutputIsACover) {
  oracle::Rng rng(13);
  for (int t = 0; t < 50; ++t) {
    const FiniteSpace x = oracle::random_space(rng, 5, 12);
    for (const auto& c : enumerate_covers(x)) {
      Mask u = 0;
      for (std::size_t i = 0; i < c.members.size(); ++i) {
        EXPECT_NE(c.members[i], 0u);
        EXPECT_TRUE(x.is_open(c.members[i]));
        if (i > 0) EXPECT_NE(c.members[i], c.members[i - 1]);
        u |= c.members[i];
      }
      EXPECT_EQ(u, x.whole());
      EXPECT_EQ(make_cover(x, c.members), c);
    }
  }
}

TEST(EnumerateCovers, CandidateBudget) {
  const FiniteSpace x = generate_topology({"a", "b", "c", "d", "e"}, Sets{{"a"}, {"b"}, {"c"}, {"d"}, {"e"}});
  CoverEnumerationLimits tight;
  tight.max_candidates = 100;
  EXPECT_EQ(kind_of([&] { enumerate_covers(x, std::nullopt, tight); }), ErrorKind::CapExceeded);
}

TEST(MakeCover, RejectsBadMembers) {
  const FiniteSpace x = chain(3);
  EXPECT_EQ(kind_of([&] { make_cover(x, {x.opens()[1]}); }), ErrorKind::NotACover);
  EXPECT_EQ(kind_of([&] { make_cover(x, {0, x.whole()}); }), ErrorKind::EmptyMember);
  EXPECT_EQ(kind_of([&] { make_cover(x, {x.whole(), x.whole()}); }), ErrorKind::InvalidArgument);
}

TEST(PushForward, Identity) {
  const FiniteSpace x = chain(3);
  const std::vector<std::size_t> id{0, 1, 2};
  for (const auto& c : enumerate_covers(x)) EXPECT_EQ(push_forward_cover(x, c, x, id), c);
}

TEST(PushForward, RelabelledChain) {
  const FiniteSpace x = chain(3);
  const std::vector<std::size_t> perm{2, 0, 1};
  const FiniteSpace y = oracle::relabeled_space(x, perm);
  for (const auto& c : enumerate_covers(x)) {
    const Cover img = push_forward_cover(x, c, y, perm);
    EXPECT_EQ(img.size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i) EXPECT_TRUE(y.is_open(img.members[i]));
  }
}

TEST(PushForward, SwapInSierpinskiSpaceIsNotAHomeomorphism) {
  const FiniteSpace s = validate_topology({"open", "closed"}, Sets{{}, {"open"}, {"open", "closed"}});
  const std::vector<std::size_t> swap{1, 0};
  try {
    push_forward_cover(s, trivial_cover(s), s, swap);
    FAIL() << "expected NotAHomeomorphism";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAHomeomorphism);
  }
}

TEST(PushForward, CommutesWithEnumeration) {
  oracle::Rng rng(14);
  for (int t = 0; t < 40; ++t) {
    const FiniteSpace x = oracle::random_space(rng, 5, 10);
    const auto perm = oracle::random_permutation(rng, x.size());
    const FiniteSpace y = oracle::relabeled_space(x, perm);
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<Cover> img;
      for (const auto& c : enumerate_covers(x, n)) img.push_back(push_forward_cover(x, c, y, perm));
      std::sort(img.begin(), img.end());
      auto target = enumerate_covers(y, n);
      std::sort(target.begin(), target.end());
      EXPECT_EQ(img, target);
    }
  }
}
