#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "shortroots/root_system.hpp"

namespace shortroots {

// A Weyl group element as a permutation of the root indices of its RootSystem.
// The optional word lists simple-reflection indices w = r_{word[0]} ... r_{word[k-1]}.
class WeylElem {
 public:
  WeylElem() = default;
  explicit WeylElem(std::vector<int> perm, std::optional<std::vector<int>> word = std::nullopt)
      : perm_(std::move(perm)), word_(std::move(word)) {}

  static WeylElem identity(const RootSystem& rs);

  const std::vector<int>& perm() const { return perm_; }
  const std::optional<std::vector<int>>& word() const { return word_; }
  int operator()(int rootIdx) const { return perm_[static_cast<std::size_t>(rootIdx)]; }

  // (*this) o rhs: apply rhs first.
  WeylElem compose(const WeylElem& rhs) const;
  WeylElem inverse() const;
  WeylElem power(int k) const;
  bool isIdentity() const;
  WeylElem withoutWord() const { return WeylElem(perm_); }

  friend bool operator==(const WeylElem& a, const WeylElem& b) { return a.perm_ == b.perm_; }

 private:
  std::vector<int> perm_;
  std::optional<std::vector<int>> word_;
};

struct WeylElemHash {
  std::size_t operator()(const WeylElem& w) const noexcept { return VectorHash{}(w.perm()); }
};

// Reflection in an arbitrary root; throws ValidationError if gamma is not a root.
WeylElem reflect(const RootSystem& rs, const Root& gamma);
WeylElem reflect(const RootSystem& rs, int rootIdx);
WeylElem simpleReflection(const RootSystem& rs, int i);
WeylElem fromWord(const RootSystem& rs, const std::vector<int>& word);

std::vector<int> inversionSet(const RootSystem& rs, const WeylElem& w);
int length(const RootSystem& rs, const WeylElem& w);
int order(const WeylElem& w);

// w applied to an integral weight (fundamental coordinates).
std::vector<int> applyToWeight(const RootSystem& rs, const WeylElem& w, const std::vector<int>& fundCoords);
// True if w preserves (.|.) on all pairs of roots and commutes with negation.
bool isValidElement(const RootSystem& rs, const WeylElem& w);

// All |W| elements, each with a reduced word, in breadth-first (length) order.
// Refuses with LimitExceeded when prod(m_i + 1) > bound.
std::vector<WeylElem> enumerate(const RootSystem& rs, std::uint64_t bound);

// r_{ordering[0]} r_{ordering[1]} ... r_{ordering[n-1]}; ordering is a permutation of 0..n-1.
WeylElem coxeterElement(const RootSystem& rs, const std::vector<int>& ordering);
std::vector<std::vector<int>> coxeterOrbits(const RootSystem& rs, const WeylElem& c);

// Simple system of the long-root subsystem: long positive roots that are not a
// sum of two long positive roots.
std::vector<int> longRootBase(const RootSystem& rs);

struct SemidirectParts {
  WeylElem shortPart;  // in W(Pi_s): maps long positive roots to long positive roots
  WeylElem longPart;   // in W_l
};

// w = shortPart o longPart. Throws UnsupportedType for simply-laced systems.
SemidirectParts decomposeSemidirect(const RootSystem& rs, const WeylElem& w);
bool isInLongSubgroup(const RootSystem& rs, const WeylElem& w);
bool preservesLongPositives(const RootSystem& rs, const WeylElem& w);

enum class SubgroupTag { W, LongSubgroup, ShortParabolic, Custom };

struct SubgroupHandle {
  std::vector<WeylElem> generators;
  std::optional<std::vector<WeylElem>> elements;
  SubgroupTag tag = SubgroupTag::Custom;

  // Breadth-first closure under right multiplication by generators.
  // Throws LimitExceeded beyond `bound` elements.
  const std::vector<WeylElem>& materialize(std::size_t bound = 1'000'000);
  bool contains(const WeylElem& w) const;
};

SubgroupHandle wholeGroup(const RootSystem& rs);
// Generated by reflections in all long positive roots.
SubgroupHandle longSubgroup(const RootSystem& rs);
// Generated by the short simple reflections.
SubgroupHandle shortParabolic(const RootSystem& rs);

}  // namespace shortroots
