#include <gtest/gtest.h>

#include "shortroots/errors.hpp"
#include "shortroots/graded_character.hpp"
#include "shortroots/reduction.hpp"
#include "support/oracles.hpp"

using namespace shortroots;

namespace {

RootSystem make(const char* s) { return RootSystem::build(parseSpec(s)); }

QPoly poly(std::vector<std::int64_t> c, int truncation) {
  QPoly p(truncation);
  for (std::size_t k = 0; k < c.size(); ++k) p += QPoly::monomial(static_cast<int>(k), c[k], truncation);
  return p;
}

std::vector<std::vector<int>> rootCoords(const RootSystem& rs, const std::vector<int>& idx) {
  std::vector<std::vector<int>> out;
  for (int r : idx) out.push_back(rs.root(r).coeffs);
  return out;
}

IntWeight scaled(IntWeight w, int k) {
  for (auto& c : w) c *= k;
  return w;
}

}  // namespace

TEST(QPoly, Arithmetic) {
  const QPoly a = poly({1, 2}, 4);
  const QPoly b = poly({0, 1, 1}, 4);
  EXPECT_EQ((a + b).coeffs(), (std::vector<std::int64_t>{1, 3, 1, 0, 0}));
  EXPECT_EQ((a - a).isZero(), true);
  EXPECT_EQ((a * b).coeffs(), (std::vector<std::int64_t>{0, 1, 3, 2, 0}));
  EXPECT_EQ((3 * a).coeff(1), 6);
  EXPECT_EQ(b.shifted(3).coeffs(), (std::vector<std::int64_t>{0, 0, 0, 0, 1}));
  EXPECT_EQ(b.lowestDegree(), std::optional<int>(1));
  EXPECT_FALSE(QPoly(3).lowestDegree().has_value());
  EXPECT_EQ(toString(poly({1, 7}, 4)), "1 + 7q + O(q^5)");
  EXPECT_EQ(toString(poly({0, -1, 0, 2}, 3)), "-q + 2q^3 + O(q^4)");
  EXPECT_EQ(toString(QPoly(2)), "0 + O(q^3)");
}

TEST(QPoly, TruncationIsExplicit) {
  const QPoly a = poly({1, 1, 1, 1}, 3);
  const QPoly b = poly({1, 1}, 1);
  EXPECT_THROW(b.coeff(2), ValidationError);
  EXPECT_THROW(QPoly(-1), ValidationError);
  EXPECT_THROW(b.truncatedTo(2), ValidationError);
  const QPoly s = a + b;
  EXPECT_EQ(s.truncation(), 1);
  EXPECT_TRUE(s.mixedTruncation());
  EXPECT_FALSE((a + a).mixedTruncation());
  EXPECT_TRUE((a * b).mixedTruncation());
  EXPECT_TRUE(a.truncatedTo(1) == b);
  EXPECT_EQ(QPoly::monomial(5, 1, 3).isZero(), true);
}

TEST(QPoly, CompleteIntersection) {
  // 1/(1-q)^2 = 1 + 2q + 3q^2 + ...; (1-q^2)/(1-q)^2 = (1+q)/(1-q) = 1 + 2q + 2q^2 + ...
  EXPECT_EQ(QPoly::completeIntersection({}, 2, 3).coeffs(), (std::vector<std::int64_t>{1, 2, 3, 4}));
  EXPECT_EQ(QPoly::completeIntersection({2}, 2, 3).coeffs(), (std::vector<std::int64_t>{1, 2, 2, 2}));
  for (int n = 1; n <= 9; ++n)
    for (int k = 0; k <= 6; ++k)
      EXPECT_EQ(QPoly::completeIntersection({}, n, 6).coeff(k), oracle::binomial(n + k - 1, k));
}

TEST(QPartition, MatchesMultisetOracle) {
  for (const char* t : {"G2", "B2", "C3", "A2", "B3", "F4"}) {
    const RootSystem rs = make(t);
    for (RootSubset subset : {RootSubset::ShortPositives, RootSubset::AllPositives}) {
      const int D = rs.rank() >= 4 ? 3 : 5;
      const auto& gens = subset == RootSubset::ShortPositives ? rs.shortPositives() : rs.positives();
      const auto ref = oracle::multisetSums(rootCoords(rs, gens), D);
      const QPartitionTable table(rs, subset, D);
      EXPECT_EQ(table.entries().size(), ref.size()) << t;
      for (const auto& [v, counts] : ref) {
        const QPoly p = table.at(v);
        for (int k = 0; k <= D; ++k) ASSERT_EQ(p.coeff(k), counts[k]) << t;
      }
    }
  }
}

TEST(QPartition, Examples) {
  const RootSystem g2 = make("G2");
  const auto ts = g2.root(g2.thetaShort()).coeffs;
  // 2a1+a2 = (2a1+a2) = a1 + (a1+a2)
  EXPECT_EQ(qPartition(g2, RootSubset::ShortPositives, ts, 3).coeffs(), (std::vector<std::int64_t>{0, 1, 1, 0}));
  const RootSystem a2 = make("A2");
  EXPECT_EQ(qPartition(a2, RootSubset::AllPositives, {1, 1}, 3).coeffs(), (std::vector<std::int64_t>{0, 1, 1, 0}));
  EXPECT_TRUE(qPartition(a2, RootSubset::AllPositives, {-1, 1}, 3).isZero());
  EXPECT_EQ(qPartition(a2, RootSubset::AllPositives, {0, 0}, 3).coeffs(), (std::vector<std::int64_t>{1, 0, 0, 0}));
  EXPECT_THROW(qPartition(a2, RootSubset::AllPositives, {0}, 3), ValidationError);
}

TEST(QPartition, KostantCountsAtQEqualsOne) {
  // With enough degrees the coefficient sum is the ordinary Kostant partition function.
  const RootSystem a2 = make("A2");
  const QPartitionTable t(a2, RootSubset::AllPositives, 12);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      std::int64_t total = 0;
      const QPoly p = t.at({a, b});
      for (auto c : p.coeffs()) total += c;
      EXPECT_EQ(total, std::min(a, b) + 1) << a << "," << b;
    }
  const RootSystem b2 = make("B2");
  const QPartitionTable tb(b2, RootSubset::AllPositives, 14);
  const auto ref = oracle::multisetSums(rootCoords(b2, b2.positives()), 14);
  int checked = 0;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 4; ++b, ++checked) {
      std::int64_t total = 0, expect = 0;
      const QPoly p = tb.at({a, b});
      for (auto c : p.coeffs()) total += c;
      if (const auto it = ref.find({a, b}); it != ref.end())
        for (auto c : it->second) expect += c;
      EXPECT_EQ(total, expect) << a << "," << b;
    }
  EXPECT_EQ(checked, 20);
}

TEST(MBar, TrivialValues) {
  for (const auto& spec : oracle::tableSystems()) {
    const RootSystem rs = RootSystem::build(spec);
    if (rs.weylOrder() > 1152) continue;
    const IntWeight zero(rs.rank(), 0);
    EXPECT_EQ(mBar(rs, zero, zero, 3, 1152), QPoly::one(3)) << spec.name();
  }
  const RootSystem g2 = make("G2");
  EXPECT_EQ(mBar(g2, thetaShortWeight(g2), {0, 0}, 1, 12), QPoly::monomial(1, 1, 1));
  for (const IntWeight& l : {IntWeight{0, 0}, IntWeight{1, 0}, IntWeight{2, 3}, IntWeight{0, 4}})
    EXPECT_EQ(mBar(g2, l, l, 0, 12), QPoly::one(0));
  EXPECT_THROW(mBar(g2, {-1, 0}, {0, 0}, 2, 12), ValidationError);
  EXPECT_THROW(mBar(g2, {0, 0, 0}, {0, 0}, 2, 12), ValidationError);
  EXPECT_THROW(mBar(make("F4"), {0, 0, 0, 0}, {0, 0, 0, 0}, 2, 100), LimitExceeded);
}

TEST(NullconeCharacter, G2SmallDegrees) {
  const RootSystem g2 = make("G2");
  const GradedCharacter d0 = nullconeCharacter(g2, 0, 12);
  ASSERT_EQ(d0.entries.size(), 1u);
  EXPECT_EQ(d0.entries.begin()->first, (IntWeight{0, 0}));
  EXPECT_EQ(d0.entries.begin()->second, QPoly::one(0));
  const GradedCharacter d1 = nullconeCharacter(g2, 1, 12);
  ASSERT_EQ(d1.entries.size(), 2u);
  EXPECT_EQ(d1.entries.at(thetaShortWeight(g2)), QPoly::monomial(1, 1, 1));
}

TEST(NullconeCharacter, VectorRepresentationsAreHarmonics) {
  // For G2 on k^7 and B_n on k^{2n+1} the only basic invariant is the quadratic form, so
  // Sym^d V = H_d + Sym^{d-2} V with H_d irreducible of highest weight d * theta_s.
  for (const char* t : {"G2", "B2", "B3", "B4"}) {
    const RootSystem rs = make(t);
    const int D = rs.rank() == 4 ? 4 : 6;
    const GradedCharacter ch = nullconeCharacter(rs, D, 1152);
    ASSERT_EQ(ch.entries.size(), static_cast<std::size_t>(D + 1)) << t;
    const std::int64_t n = littleAdjointDims(rs).dim;
    for (int d = 0; d <= D; ++d) {
      const IntWeight lambda = scaled(thetaShortWeight(rs), d);
      ASSERT_TRUE(ch.entries.count(lambda)) << t << " d=" << d;
      EXPECT_EQ(ch.entries.at(lambda), QPoly::monomial(d, 1, D)) << t;
      EXPECT_EQ(weylDim(rs, lambda), oracle::binomial(n + d - 1, d) - oracle::binomial(n + d - 3, d - 2)) << t;
    }
  }
}

TEST(NullconeCharacter, B2AtDegreeTwo) {
  const RootSystem b2 = make("B2");
  const GradedCharacter ch = nullconeCharacter(b2, 2, 8);
  EXPECT_EQ(ch.entries.size(), 3u);
  EXPECT_TRUE(hilbertCheck(b2, ch).passed);
}

TEST(NullconeCharacter, StructuralProperties) {
  for (const char* t : {"G2", "B2", "C3", "B3", "C4", "F4"}) {
    const RootSystem rs = make(t);
    const int D = rs.rank() == 4 ? 4 : 6;
    const WeylSumContext ctx(rs, RootSubset::ShortPositives, D, 1152);
    const GradedCharacter ch = nullconeCharacter(ctx);
    const IntWeight zero(rs.rank(), 0);
    for (const auto& [lambda, p] : ch.entries) {
      EXPECT_EQ(p.truncation(), D);
      EXPECT_EQ(p.coeff(0), lambda == zero ? 1 : 0) << t;
      // a degree-k piece sits inside Sym^k V, whose weights lie below k theta_s
      for (int k = 0; k <= D; ++k)
        if (p.coeff(k) != 0) {
          EXPECT_TRUE(rs.dominates(scaled(thetaShortWeight(rs), k), lambda)) << t;
        }
      // the entry is a dominant point of the partition-function support
      const auto c = rs.toRootLattice(lambda);
      ASSERT_TRUE(c.has_value()) << t;
      EXPECT_TRUE(ctx.table().entries().count(*c)) << t;
    }
    EXPECT_TRUE(hilbertCheck(rs, ch).passed) << t;
  }
}

TEST(NullconeCharacter, IndependentOfGroupEnumerationOrder) {
  for (const char* t : {"G2", "C3", "F4"}) {
    const RootSystem rs = make(t);
    const int D = 4;
    std::vector<WeylElem> group;
    for (const auto& w : enumerate(rs, 1152)) group.push_back(w.withoutWord());
    std::reverse(group.begin(), group.end());
    const GradedCharacter a = nullconeCharacter(WeylSumContext(rs, RootSubset::ShortPositives, D, std::move(group)));
    const GradedCharacter b = nullconeCharacter(rs, D, 1152);
    ASSERT_EQ(a.entries.size(), b.entries.size()) << t;
    for (const auto& [lambda, p] : b.entries) EXPECT_EQ(a.entries.at(lambda), p) << t;
  }
  const RootSystem g2 = make("G2");
  std::vector<WeylElem> partial = enumerate(g2, 12);
  partial.pop_back();
  EXPECT_THROW(WeylSumContext(g2, RootSubset::ShortPositives, 2, partial), ValidationError);
}

TEST(HilbertCheck, TargetSystems) {
  for (const char* t : {"G2", "B2", "C2", "B3", "C3", "B4", "C4", "F4"}) {
    const RootSystem rs = make(t);
    const HilbertResult r = hilbertCheck(rs, 6, 1152);
    EXPECT_TRUE(r.passed) << t;
    EXPECT_EQ(r.degrees, invariantDegrees(rs));
    EXPECT_EQ(r.dimV, littleAdjointDims(rs).dim);
    EXPECT_EQ(r.computed, r.expected);
  }
}

TEST(HilbertCheck, DetectsTampering) {
  const RootSystem c3 = make("C3");
  GradedCharacter ch = nullconeCharacter(c3, 4, 48);
  ASSERT_TRUE(hilbertCheck(c3, ch).passed);
  auto& p = ch.entries.at(thetaShortWeight(c3));
  p += QPoly::monomial(3, 1, 4);
  const HilbertResult r = hilbertCheck(c3, ch);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.firstFailingDegree, std::optional<int>(3));
}
