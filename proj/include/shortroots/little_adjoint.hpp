#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "shortroots/root_system.hpp"

namespace shortroots {

using IntWeight = std::vector<int>;  // integral weight, fundamental coordinates

// Weights of V_lambda with positive multiplicity.
struct WeightSystem {
  IntWeight highest;
  std::map<IntWeight, std::int64_t> entries;

  std::int64_t multiplicity(const IntWeight& mu) const;
  std::int64_t dimension() const;
};

// Freudenthal's recursion, walking down from lambda one simple root at a time:
//   (|lambda+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{a>0} sum_{t>=1} m(mu + t a) (mu + t a | a)
// Throws ValidationError for non-dominant lambda (or wrong rank).
WeightSystem freudenthal(const RootSystem& rs, const IntWeight& lambda);

// Checks the recursion at every weight in `ws` and at every neighbour mu - alpha_i of
// the support (where the multiplicity must vanish). Returns the first failing weight, if any.
std::optional<IntWeight> freudenthalResidual(const RootSystem& rs, const WeightSystem& ws);

// Checks that multiplicities are constant along W-orbits by comparing every
// weight to its dominant conjugate.
bool isWeylInvariant(const RootSystem& rs, const WeightSystem& ws);

// prod_{a>0} (lambda+rho | a^vee) / (rho | a^vee).
std::int64_t weylDim(const RootSystem& rs, const IntWeight& lambda);

IntWeight thetaShortWeight(const RootSystem& rs);
IntWeight thetaWeight(const RootSystem& rs);

struct LittleAdjointDims {
  std::int64_t dim = 0;         // dim V_{theta_s}
  std::int64_t zeroMult = 0;    // m_{theta_s}(0)
  std::int64_t shortCount = 0;  // #Delta_s
};

// All three quantities come from Freudenthal and root counting and are
// cross-checked against (h+1)#Pi_s and the Weyl dimension formula.
// Throws UnsupportedType for simply-laced systems.
LittleAdjointDims littleAdjointDims(const RootSystem& rs);

struct DeltaPartition {
  std::vector<int> posPos;  // gamma > 0, (gamma|mu) > 0
  std::vector<int> posNeg;  // gamma > 0, (gamma|mu) < 0
  std::vector<int> negPos;
  std::vector<int> negNeg;

  std::size_t size() const { return posPos.size() + posNeg.size() + negPos.size() + negNeg.size(); }
};

DeltaPartition deltaPartition(const RootSystem& rs, int muIdx);
DeltaPartition deltaPartition(const RootSystem& rs, const Root& mu);

// 1 + #{gamma > 0 : (gamma|theta_s) > 0}; verified against 2 ht(theta_s) and 2 h*(dual) - 2.
int hwOrbitDim(const RootSystem& rs);

}  // namespace shortroots
