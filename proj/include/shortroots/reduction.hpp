#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shortroots/root_system.hpp"

namespace shortroots {

// The subsystem spanned by the short simple roots, its type and Coxeter data.
struct SimpleReduction {
  std::vector<int> piS;        // 0-based simple-root indices
  std::vector<int> subsystem;  // root indices of Delta(Pi_s) = Delta cap Z Pi_s
  std::vector<int> subPositives;
  RootSystemSpec subType;
  int hS = 0;
  std::vector<int> subExponents;
  int transitionFactor = 0;  // h / h_s
};

// Throws UnsupportedType for simply-laced input, IdentityViolation if Pi_s is
// disconnected or h_s does not divide h.
SimpleReduction simpleReduction(const RootSystem& rs);

bool inShortSpan(const RootSystem& rs, int rootIdx);

// c^{h_s} lies in W_l for the Coxeter element with this ordering.
bool checkCoxeterPower(const RootSystem& rs, const std::vector<int>& ordering);

struct StrangeEquality {
  int factor = 0;                    // h / h_s
  int hMinusHt = 0;                  // h - ht(theta_s)
  int htThetaMinusHtThetaSPlus1 = 0; // ht(theta) - ht(theta_s) + 1
};

// Throws IdentityViolation unless all three agree.
StrangeEquality remark47(const RootSystem& rs);

// Short positive roots up to sign, grouped by the equivalence generated by
// gamma ~ mu whenever gamma - mu is a long root.
struct HyperplaneClasses {
  std::vector<std::vector<int>> classes;  // short positive root indices, sorted
  std::vector<int> representatives;       // the unique Delta(Pi_s)^+ root in each class
};

// Throws IdentityViolation unless every class holds exactly one root of Delta(Pi_s)^+.
HyperplaneClasses hyperplaneClasses(const RootSystem& rs);

struct OneStepString {
  int gamma = -1;
  std::vector<int> longRoots;          // beta in Delta_l with gamma - beta in Delta(Pi_s)
  std::vector<int> positiveWitnesses;  // those with gamma - beta in Delta(Pi_s)^+
  std::vector<int> targetClasses;      // mu in Delta(Pi_s)^+ with gamma - beta = +-mu
  bool singleton() const { return longRoots.size() == 1; }
  bool sole() const { return targetClasses.size() == 1; }
};

// Keyed by gamma over Delta_s^+ \ Delta(Pi_s). Throws IdentityViolation if some set is empty.
std::map<int, OneStepString> oneStepStrings(const RootSystem& rs);

struct DimensionLedger {
  std::int64_t dimV = 0;       // (h+1) #Pi_s
  std::int64_t dimNullV = 0;   // h #Pi_s
  std::int64_t dimL = 0;       // #Pi_s + #Delta(Pi_s)
  std::int64_t dimNullL = 0;   // h_s #Pi_s
  std::int64_t fibreDim = 0;   // h dim V^0
  int transitionFactor = 0;
};

DimensionLedger dimensionLedger(const RootSystem& rs);

std::int64_t partitionCount(int n);

// Number of nilpotent orbits of the simple reduction (which is always of type A here).
int orbitCount(const RootSystem& rs);

// Degrees of the basic invariants: exponents of W(Pi_s) plus one.
std::vector<int> invariantDegrees(const RootSystem& rs);

struct Table1Row {
  RootSystemSpec type;
  std::int64_t dimLittleAdjoint = 0;
  std::vector<int> thetaShortCoeffs;
  int h = 0;
  RootSystemSpec subType;
  int hS = 0;
  std::int64_t orbitCount = 0;
  std::string tildeG;

  friend bool operator==(const Table1Row&, const Table1Row&) = default;
};

std::string liealgebraName(const RootSystemSpec& type);  // "sl_3", "so_8", "E_6"

// Table values for the four multiply-laced series instantiated at this rank,
// or nullopt for types without a little adjoint row.
std::optional<Table1Row> table1Registry(const RootSystemSpec& type);

// Every numeric cell computed from the root system; tildeG copied from the registry.
Table1Row table1(const RootSystem& rs);

// C_n and B_n for n = 2..6, then F_4 and G_2.
std::vector<RootSystemSpec> table1Systems();

}  // namespace shortroots
