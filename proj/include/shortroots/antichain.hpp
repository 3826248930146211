#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "shortroots/rational.hpp"
#include "shortroots/root_system.hpp"

namespace shortroots {

// A finite poset on 0..size()-1. For root posets, element k is root index elements[k]
// and a <= b iff root(b) - root(a) is a non-negative combination of simple roots.
struct RootPoset {
  std::vector<int> elements;
  std::vector<int> heights;
  std::vector<std::vector<bool>> leq;  // leq[a][b]: a <= b
  std::vector<std::pair<int, int>> covers;

  std::size_t size() const { return leq.size(); }
  bool comparable(int a, int b) const { return leq[a][b] || leq[b][a]; }

  // Builds covers from a reflexive, transitive relation; throws ValidationError otherwise.
  static RootPoset fromRelation(std::vector<std::vector<bool>> leq, std::vector<int> heights = {});
};

// Returns a description of the first violated order axiom, if any.
std::optional<std::string> checkPosetAxioms(const RootPoset& p);

RootPoset shortPoset(const RootSystem& rs);
RootPoset disjointUnion(const RootPoset& a, const RootPoset& b);
RootPoset chainPoset(int n);
RootPoset antichainPoset(int n);

inline constexpr std::size_t kMaxPosetSize = 64;

// Counts all antichains including the empty one. Throws LimitExceeded above 64 elements.
std::uint64_t countAntichainsBruteForce(const RootPoset& p);

// Antichains as sorted lists of poset positions; throws LimitExceeded if more than `limit`.
std::vector<std::vector<int>> listAntichains(const RootPoset& p, std::size_t limit);

// prod_{i<=l} (h + m_i + 1)/(m_i + 1) over the l = #Pi_s smallest exponents.
Rational formulaK(const RootSystem& rs);

// prod_{i<=n} (g + m_i + 1)/(m_i + 1) with g = #Delta_s / n. Only for length ratio 2.
Rational altFormulaK(const RootSystem& rs);

struct AntichainReport {
  std::uint64_t bruteForceCount = 0;
  Rational formulaCount;
  std::optional<Rational> altFormulaCount;
  std::optional<std::vector<std::vector<int>>> antichains;  // root indices
};

// Throws IdentityViolation when the counts disagree.
AntichainReport antichainReport(const RootSystem& rs, bool listThem = false);

}  // namespace shortroots
