#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "shortroots/rational.hpp"

namespace shortroots {

enum class Family { A, B, C, D, E, F, G };

char familyLetter(Family f);

struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;  // "C4", "G2"
  bool isValid() const;

  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
  friend auto operator<=>(const RootSystemSpec&, const RootSystemSpec&) = default;
};

// Throws ValidationError when the family/rank combination does not exist.
void validate(const RootSystemSpec& spec);

// Parses "C4", "g2", "E8". Throws ValidationError on malformed input.
RootSystemSpec parseSpec(std::string_view text);

enum class LengthClass { Short, Long };

struct Root {
  std::vector<int> coeffs;  // simple-root basis
  LengthClass length = LengthClass::Short;

  int height() const;
  bool isPositive() const { return height() > 0; }
  bool isShort() const { return length == LengthClass::Short; }
  bool isLong() const { return length == LengthClass::Long; }
};

// A weight in fundamental-weight coordinates. Rational so that rho, sigma and
// coroots can all be represented; integral weights have denominator 1 throughout.
struct Weight {
  std::vector<Rational> fundCoords;

  Weight() = default;
  explicit Weight(std::vector<Rational> coords) : fundCoords(std::move(coords)) {}
  static Weight zero(int rank) { return Weight(std::vector<Rational>(rank, Rational(0))); }
  static Weight fromInts(std::span<const int> coords);

  int rank() const { return static_cast<int>(fundCoords.size()); }
  bool isIntegral() const;
  bool isDominant() const;
  // Only valid when isIntegral().
  std::vector<int> toInts() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(const Rational& s, Weight a);
  friend bool operator==(const Weight&, const Weight&) = default;
};

std::string toString(const Weight& w);

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept;
};

// Immutable after build(). All bilinear data is normalised so that short roots
// have squared length 2; in simply-laced systems every root is tagged short.
class RootSystem {
 public:
  static RootSystem build(const RootSystemSpec& spec);

  const RootSystemSpec& spec() const { return spec_; }
  std::string name() const { return spec_.name(); }
  int rank() const { return spec_.rank; }

  // cartan()[i][j] = <alpha_j, alpha_i^vee>
  const IntMatrix& cartan() const { return cartan_; }
  // gram()[i][j] = (alpha_i | alpha_j)
  const IntMatrix& gram() const { return gram_; }
  const std::vector<std::vector<int>>& dynkinAdjacency() const { return adjacency_; }

  // Roots are indexed 0..size()-1. Positive roots come first, ordered by
  // height then coefficients; index p + numPositive() is the negative of p.
  std::size_t size() const { return roots_.size(); }
  int numPositive() const { return static_cast<int>(roots_.size() / 2); }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(int idx) const { return roots_.at(static_cast<std::size_t>(idx)); }
  bool isPositive(int idx) const { return idx < numPositive(); }
  int negate(int idx) const { return idx < numPositive() ? idx + numPositive() : idx - numPositive(); }
  int positivePart(int idx) const { return isPositive(idx) ? idx : negate(idx); }
  std::optional<int> find(std::span<const int> coeffs) const;
  int indexOf(std::span<const int> coeffs) const;  // throws ValidationError if not a root
  int simpleRoot(int i) const { return simpleIdx_.at(static_cast<std::size_t>(i)); }

  const std::vector<int>& positives() const { return positives_; }
  const std::vector<int>& shortPositives() const { return shortPositives_; }
  const std::vector<int>& longPositives() const { return longPositives_; }
  const std::vector<int>& shortRoots() const { return shortRoots_; }
  const std::vector<int>& longRoots() const { return longRoots_; }
  // 0-based indices i with alpha_i short.
  const std::vector<int>& shortSimple() const { return shortSimple_; }

  bool isMultiplyLaced() const { return !longRoots_.empty(); }
  // (theta|theta)/(theta_s|theta_s): 1, 2 or 3.
  int lengthRatio() const { return lengthRatio_; }

  int theta() const { return theta_; }
  int thetaShort() const { return thetaShort_; }
  const Weight& rho() const { return rho_; }
  const Weight& sigma() const { return sigma_; }
  int coxeterNumber() const { return coxeter_; }
  int dualCoxeterNumber() const { return dualCoxeter_; }
  const std::vector<int>& exponents() const { return exponents_; }
  // prod(m_i + 1), the Weyl group order predicted by the exponents.
  std::uint64_t weylOrder() const;
  // 1 + ht(theta_s), the dual Coxeter number of the dual root system.
  int dualCoxeterOfDual() const;

  // Exact arithmetic.
  Weight toWeight(std::span<const int> rootCoeffs) const;
  Weight toWeight(const Root& r) const { return toWeight(r.coeffs); }
  Weight rootWeight(int idx) const { return toWeight(root(idx).coeffs); }
  std::vector<Rational> toRootCoords(const Weight& w) const;
  // Root-lattice coordinates of an integral weight, or nullopt when it is not in the root lattice.
  std::optional<std::vector<int>> toRootLattice(std::span<const int> fundCoords) const;
  std::vector<int> toFund(std::span<const int> rootCoeffs) const;

  Rational inner(const Weight& x, const Weight& y) const;
  int rootInner(int a, int b) const;
  int rootInner(std::span<const int> a, std::span<const int> b) const;
  int squaredLength(int idx) const { return rootInner(idx, idx); }
  // 2 gamma / (gamma|gamma). Throws ValidationError on the zero vector.
  Weight coroot(std::span<const int> rootCoeffs) const;
  Weight coroot(const Root& r) const { return coroot(r.coeffs); }
  // <x, gamma^vee> for a root index; integral whenever x is.
  Rational corootPairing(const Weight& x, int rootIdx) const;
  int corootPairing(std::span<const int> fundCoords, int rootIdx) const;
  // Image of root `target` under the reflection in root `mirror`.
  int reflectRoot(int target, int mirror) const { return reflectTable_[mirror][target]; }

  // Integer form on integral weights: scaledInner(x, y) = formScale() * (x|y).
  std::int64_t formScale() const { return formScale_; }
  std::int64_t scaledInner(std::span<const int> x, std::span<const int> y) const;

  // Reflect an integral weight into the dominant chamber.
  std::vector<int> dominantConjugate(std::vector<int> fundCoords) const;
  // lambda - mu is a non-negative integer combination of simple roots.
  bool dominates(std::span<const int> lambda, std::span<const int> mu) const;

 private:
  RootSystem() = default;

  RootSystemSpec spec_;
  IntMatrix cartan_;
  IntMatrix gram_;
  RationalMatrix cartanInverse_;
  RationalMatrix fundGram_;
  IntMatrix fundGramScaled_;
  std::int64_t formScale_ = 1;
  std::vector<std::vector<int>> adjacency_;

  std::vector<Root> roots_;
  std::unordered_map<std::vector<int>, int, VectorHash> index_;
  std::vector<int> simpleIdx_;
  std::vector<std::vector<int>> reflectTable_;

  std::vector<int> positives_, shortPositives_, longPositives_, shortRoots_, longRoots_;
  std::vector<int> shortSimple_;
  int lengthRatio_ = 1;
  int theta_ = -1;
  int thetaShort_ = -1;
  Weight rho_, sigma_;
  int coxeter_ = 0;
  int dualCoxeter_ = 0;
  std::vector<int> exponents_;
};

// Symmetrised Gram matrix of the simple roots in Bourbaki numbering, short roots of squared length 2.
IntMatrix bourbakiGram(const RootSystemSpec& spec);

// Classifies a (possibly reducible) Cartan matrix into irreducible component types.
// Components are returned in order of their smallest node index. Throws
// ValidationError when the matrix is not a Cartan matrix of finite type.
std::vector<RootSystemSpec> classifySubsystem(const IntMatrix& cartan);

// The same, also returning the node indices of each component.
struct SubsystemComponent {
  RootSystemSpec type;
  std::vector<int> nodes;
};
std::vector<SubsystemComponent> classifyComponents(const IntMatrix& cartan);

}  // namespace shortroots
