#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "shortroots/errors.hpp"
#include "shortroots/weyl.hpp"
#include "support/oracles.hpp"

using namespace shortroots;

namespace {

RootSystem make(const char* s) { return RootSystem::build(parseSpec(s)); }

std::vector<std::vector<int>> allOrderings(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST(Reflect, InvolutionAndNegation) {
  for (const auto& spec : oracle::allTypes(4)) {
    const RootSystem rs = RootSystem::build(spec);
    for (int g = 0; g < static_cast<int>(rs.size()); ++g) {
      const WeylElem r = reflect(rs, g);
      ASSERT_TRUE(r.compose(r).isIdentity());
      ASSERT_EQ(r(g), rs.negate(g));
      ASSERT_TRUE(isValidElement(rs, r));
    }
  }
  const RootSystem g2 = make("G2");
  EXPECT_EQ(reflect(g2, g2.theta())(g2.theta()), g2.negate(g2.theta()));
  EXPECT_THROW(reflect(g2, 99), ValidationError);
  EXPECT_THROW(reflect(g2, Root{{1, 2}, LengthClass::Short}), ValidationError);
}

TEST(Reflect, B2OrthogonalRootFixed) {
  // epsilon_1 = alpha_1 + alpha_2, epsilon_2 = alpha_2
  const RootSystem b2 = make("B2");
  const int e1 = b2.indexOf(std::vector<int>{1, 1});
  const int e2 = b2.indexOf(std::vector<int>{0, 1});
  EXPECT_EQ(reflect(b2, e1)(e2), e2);
}

TEST(Length, Examples) {
  const RootSystem g2 = make("G2");
  const WeylElem id = WeylElem::identity(g2);
  EXPECT_EQ(length(g2, id), 0);
  EXPECT_TRUE(inversionSet(g2, id).empty());
  for (int i = 0; i < 2; ++i) {
    const WeylElem s = simpleReflection(g2, i);
    EXPECT_EQ(length(g2, s), 1);
    EXPECT_EQ(inversionSet(g2, s), std::vector<int>{g2.simpleRoot(i)});
  }
  const auto W = enumerate(g2, 100);
  int longest = 0;
  for (const auto& w : W) longest = std::max(longest, length(g2, w));
  EXPECT_EQ(longest, 6);
}

TEST(Enumerate, OrdersAndRefusal) {
  EXPECT_EQ(enumerate(make("G2"), 100).size(), 12u);
  EXPECT_EQ(enumerate(make("F4"), 1152).size(), 1152u);
  EXPECT_EQ(enumerate(make("A1"), 2).size(), 2u);
  EXPECT_THROW(enumerate(make("F4"), 1151), LimitExceeded);
  EXPECT_THROW(enumerate(make("B6"), 1152), LimitExceeded);
}

TEST(Enumerate, WordsAreReducedAndValid) {
  for (const char* t : {"G2", "B3", "C3", "A3", "F4"}) {
    const RootSystem rs = make(t);
    std::unordered_set<WeylElem, WeylElemHash> seen;
    for (const auto& w : enumerate(rs, 1152)) {
      ASSERT_TRUE(w.word().has_value());
      ASSERT_EQ(static_cast<int>(w.word()->size()), length(rs, w)) << t;
      ASSERT_TRUE(fromWord(rs, *w.word()) == w);
      ASSERT_TRUE(seen.insert(w).second);
    }
  }
}

TEST(Coxeter, OrderIsHForEveryOrdering) {
  for (const auto& spec : oracle::allTypes(4)) {
    const RootSystem rs = RootSystem::build(spec);
    for (const auto& o : allOrderings(rs.rank())) {
      const WeylElem c = coxeterElement(rs, o);
      ASSERT_EQ(order(c), rs.coxeterNumber()) << spec.name();
      ASSERT_TRUE(c.power(rs.coxeterNumber()).isIdentity());
    }
  }
  EXPECT_THROW(coxeterElement(make("B3"), {0, 0, 1}), ValidationError);
  EXPECT_THROW(coxeterElement(make("B3"), {0, 1}), ValidationError);
  const RootSystem a1 = make("A1");
  EXPECT_FALSE(coxeterElement(a1, {0}).isIdentity());
}

TEST(Coxeter, OrbitsExamples) {
  struct Case {
    const char* type;
    std::size_t orbits;
    std::size_t shortOrbits;
  };
  for (const Case c : {Case{"G2", 2, 1}, Case{"C3", 3, 2}, Case{"F4", 4, 2}}) {
    const RootSystem rs = make(c.type);
    std::vector<int> o(rs.rank());
    std::iota(o.begin(), o.end(), 0);
    const auto orbits = coxeterOrbits(rs, coxeterElement(rs, o));
    EXPECT_EQ(orbits.size(), c.orbits) << c.type;
    std::size_t shortCount = 0;
    for (const auto& orb : orbits) {
      EXPECT_EQ(static_cast<int>(orb.size()), rs.coxeterNumber());
      if (rs.root(orb.front()).isShort()) ++shortCount;
    }
    EXPECT_EQ(shortCount, c.shortOrbits) << c.type;
  }
}

TEST(Coxeter, OrbitPropertiesAllOrderings) {
  for (const auto& spec : oracle::multiplyLaced(4)) {
    const RootSystem rs = RootSystem::build(spec);
    for (const auto& o : allOrderings(rs.rank())) {
      const auto orbits = coxeterOrbits(rs, coxeterElement(rs, o));
      std::size_t shortCount = 0, total = 0;
      for (const auto& orb : orbits) {
        ASSERT_EQ(static_cast<int>(orb.size()), rs.coxeterNumber());
        const bool s = rs.root(orb.front()).isShort();
        for (int x : orb) ASSERT_EQ(rs.root(x).isShort(), s);
        shortCount += s;
        total += orb.size();
      }
      ASSERT_EQ(total, rs.size());
      ASSERT_EQ(shortCount, rs.shortSimple().size()) << spec.name();
    }
  }
}

TEST(Semidirect, Examples) {
  const RootSystem b3 = make("B3");
  const auto id = decomposeSemidirect(b3, WeylElem::identity(b3));
  EXPECT_TRUE(id.shortPart.isIdentity());
  EXPECT_TRUE(id.longPart.isIdentity());
  for (int p : b3.longPositives()) {
    const auto parts = decomposeSemidirect(b3, reflect(b3, p));
    EXPECT_TRUE(parts.shortPart.isIdentity());
    EXPECT_TRUE(parts.longPart == reflect(b3, p));
    EXPECT_TRUE(isInLongSubgroup(b3, reflect(b3, p)));
  }
  for (int i : b3.shortSimple()) EXPECT_FALSE(isInLongSubgroup(b3, simpleReflection(b3, i)));
  EXPECT_THROW(decomposeSemidirect(make("A3"), WeylElem::identity(make("A3"))), UnsupportedType);
}

TEST(Semidirect, G2ProductMapBijective) {
  const RootSystem g2 = make("G2");
  std::set<std::pair<std::vector<int>, std::vector<int>>> pairs;
  for (const auto& w : enumerate(g2, 12)) {
    const auto p = decomposeSemidirect(g2, w);
    pairs.emplace(p.shortPart.perm(), p.longPart.perm());
  }
  EXPECT_EQ(pairs.size(), 12u);
  auto ws = shortParabolic(g2);
  auto wl = longSubgroup(g2);
  EXPECT_EQ(ws.materialize().size() * wl.materialize().size(), 12u);
}

TEST(Semidirect, ExhaustiveStructure) {
  for (const char* t : {"G2", "B2", "B3", "B4", "C3", "C4", "F4"}) {
    const RootSystem rs = make(t);
    const auto W = enumerate(rs, 1152);
    auto wlH = longSubgroup(rs);
    auto wsH = shortParabolic(rs);
    std::unordered_set<WeylElem, WeylElemHash> wl(wlH.materialize().begin(), wlH.materialize().end());
    std::unordered_set<WeylElem, WeylElemHash> ws(wsH.materialize().begin(), wsH.materialize().end());
    EXPECT_EQ(wl.size() * ws.size(), W.size()) << t;
    std::size_t both = 0;
    for (const auto& x : ws) both += wl.count(x);
    EXPECT_EQ(both, 1u) << t;
    for (const auto& w : W) {
      // normality: w r w^-1 stays in W_l for every long reflection generator
      for (const auto& g : wlH.generators) ASSERT_TRUE(wl.count(w.compose(g).compose(w.inverse()))) << t;
      ASSERT_EQ(preservesLongPositives(rs, w), ws.count(w.withoutWord()) == 1) << t;
      const auto p = decomposeSemidirect(rs, w);
      ASSERT_TRUE(p.shortPart.compose(p.longPart) == w);
      ASSERT_TRUE(ws.count(p.shortPart));
      ASSERT_TRUE(wl.count(p.longPart));
      ASSERT_EQ(isInLongSubgroup(rs, w), wl.count(w.withoutWord()) == 1);
    }
  }
}

TEST(Semidirect, SampledRankFive) {
  oracle::Gen gen(5);
  for (const char* t : {"B5", "C5"}) {
    const RootSystem rs = make(t);
    auto wlH = longSubgroup(rs);
    std::unordered_set<WeylElem, WeylElemHash> wl(wlH.materialize().begin(), wlH.materialize().end());
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<int> word;
      for (int k = gen.uniform(0, 30); k > 0; --k) word.push_back(gen.uniform(0, rs.rank() - 1));
      const WeylElem w = fromWord(rs, word);
      const auto p = decomposeSemidirect(rs, w);
      ASSERT_TRUE(p.shortPart.compose(p.longPart) == w);
      ASSERT_TRUE(preservesLongPositives(rs, p.shortPart));
      ASSERT_TRUE(wl.count(p.longPart)) << t;
      // uniqueness: any other split with a long part in W_l gives the same short part
      for (const auto& g : wlH.generators) {
        const auto q = decomposeSemidirect(rs, w.compose(g));
        ASSERT_TRUE(q.shortPart == p.shortPart);
      }
    }
  }
}

TEST(WeylElemProperty, ValidityAndWordLength) {
  oracle::Gen gen(3);
  for (const auto& spec : oracle::allTypes(5)) {
    const RootSystem rs = RootSystem::build(spec);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<int> word;
      for (int k = gen.uniform(0, 12); k > 0; --k) word.push_back(gen.uniform(0, rs.rank() - 1));
      const WeylElem w = fromWord(rs, word);
      ASSERT_TRUE(isValidElement(rs, w));
      ASSERT_LE(length(rs, w), static_cast<int>(word.size()));
      ASSERT_EQ(length(rs, w) % 2, static_cast<int>(word.size()) % 2);
      ASSERT_TRUE(w.compose(w.inverse()).isIdentity());
      ASSERT_EQ(length(rs, w), length(rs, w.inverse()));
    }
  }
}

TEST(WeylElemProperty, ActionOnWeightsMatchesRootAction) {
  for (const auto& spec : oracle::allTypes(4)) {
    const RootSystem rs = RootSystem::build(spec);
    for (const auto& w : enumerate(rs, 1152))
      for (int g = 0; g < static_cast<int>(rs.size()); g += 3)
        ASSERT_EQ(applyToWeight(rs, w, rs.toFund(rs.root(g).coeffs)), rs.toFund(rs.root(w(g)).coeffs));
  }
}

TEST(Subgroup, MaterializeRefusesBeyondBound) {
  auto h = wholeGroup(make("F4"));
  EXPECT_THROW(h.materialize(100), LimitExceeded);
  auto g = wholeGroup(make("G2"));
  EXPECT_EQ(g.materialize().size(), 12u);
  EXPECT_TRUE(g.contains(simpleReflection(make("G2"), 0)));
}
