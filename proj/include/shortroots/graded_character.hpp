#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shortroots/little_adjoint.hpp"
#include "shortroots/root_system.hpp"
#include "shortroots/weyl.hpp"

namespace shortroots {

// Integer polynomial in q known exactly up to degree `truncation`.
class QPoly {
 public:
  explicit QPoly(int truncation = 0);
  static QPoly one(int truncation);
  static QPoly monomial(int degree, std::int64_t coeff, int truncation);
  // prod (1 - q^d) / (1 - q)^n, expanded to `truncation`.
  static QPoly completeIntersection(const std::vector<int>& degrees, int n, int truncation);

  int truncation() const { return truncation_; }
  // True when an operation combined operands of different truncations.
  bool mixedTruncation() const { return mixed_; }
  std::int64_t coeff(int degree) const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  bool isZero() const;
  // Lowest degree with a nonzero coefficient, or nullopt.
  std::optional<int> lowestDegree() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(std::int64_t s, QPoly a);
  QPoly shifted(int k) const;  // q^k * this
  QPoly truncatedTo(int d) const;
  // Equal coefficients up to the smaller truncation.
  friend bool operator==(const QPoly& a, const QPoly& b);

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
  int truncation_ = 0;
  bool mixed_ = false;
};

std::string toString(const QPoly& p);

enum class RootSubset { ShortPositives, AllPositives };

// The coefficients of prod_{mu in S} 1/(1 - q e^mu) up to q^D, keyed by root coordinates.
// Read-only once built.
class QPartitionTable {
 public:
  QPartitionTable(const RootSystem& rs, RootSubset subset, int maxDegree);

  int maxDegree() const { return maxDegree_; }
  RootSubset subset() const { return subset_; }
  // Zero polynomial for vectors outside the support, including non-cone vectors.
  QPoly at(const std::vector<int>& rootCoeffs) const;
  const std::map<std::vector<int>, QPoly>& entries() const { return table_; }

 private:
  int maxDegree_;
  RootSubset subset_;
  std::map<std::vector<int>, QPoly> table_;
};

QPoly qPartition(const RootSystem& rs, RootSubset subset, const std::vector<int>& rootCoeffs, int maxDegree);

// Shared state for alternating sums: the frozen table and an enumerated W.
class WeylSumContext {
 public:
  WeylSumContext(const RootSystem& rs, RootSubset subset, int maxDegree, std::uint64_t maxWeylOrder);
  // Uses a caller-supplied enumeration of W (any order, any words).
  WeylSumContext(const RootSystem& rs, RootSubset subset, int maxDegree, std::vector<WeylElem> group);

  const RootSystem& rootSystem() const { return rs_; }
  const QPartitionTable& table() const { return table_; }
  std::size_t groupSize() const { return group_.size(); }

  // sum_w (-1)^{l(w)} P_q(w(lambda+rho) - (mu+rho)), both weights dominant.
  QPoly mBar(const IntWeight& lambda, const IntWeight& mu) const;
  // Dominant lambda for which mBar(lambda, 0) can be nonzero up to the truncation.
  std::vector<IntWeight> candidates() const;

 private:
  const RootSystem& rs_;
  QPartitionTable table_;
  std::vector<WeylElem> group_;
  std::vector<int> signs_;
};

QPoly mBar(const RootSystem& rs, const IntWeight& lambda, const IntWeight& mu, int maxDegree,
           std::uint64_t maxWeylOrder);

struct GradedCharacter {
  int truncation = 0;
  std::map<IntWeight, QPoly> entries;  // dominant lambda -> mBar(lambda, 0)
};

// Entries are evaluated concurrently after the table is frozen.
GradedCharacter nullconeCharacter(const WeylSumContext& ctx);
GradedCharacter nullconeCharacter(const RootSystem& rs, int maxDegree, std::uint64_t maxWeylOrder);

struct HilbertResult {
  bool passed = false;
  std::optional<int> firstFailingDegree;
  QPoly computed;  // sum_lambda dim V_lambda * mBar(lambda, 0)
  QPoly expected;  // prod (1 - q^d) / (1 - q)^{dim V}
  std::vector<int> degrees;
  std::int64_t dimV = 0;
};

HilbertResult hilbertCheck(const RootSystem& rs, const GradedCharacter& ch);
HilbertResult hilbertCheck(const RootSystem& rs, int maxDegree, std::uint64_t maxWeylOrder);

}  // namespace shortroots
