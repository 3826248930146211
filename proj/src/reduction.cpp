#include "shortroots/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "shortroots/errors.hpp"
#include "shortroots/little_adjoint.hpp"
#include "shortroots/weyl.hpp"

namespace shortroots {

namespace {

void requireMultiplyLaced(const RootSystem& rs, const char* what) {
  if (!rs.isMultiplyLaced())
    throw UnsupportedType(std::string(what) + ": " + rs.name() + " is simply-laced and has no simple reduction");
}

[[noreturn]] void fail(const RootSystem& rs, const std::string& what) {
  throw IdentityViolation(rs.name() + ": " + what);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

bool isLongRoot(const RootSystem& rs, const std::vector<int>& coeffs) {
  const auto idx = rs.find(coeffs);
  return idx && rs.root(*idx).isLong();
}

}  // namespace

bool inShortSpan(const RootSystem& rs, int rootIdx) {
  const auto& c = rs.root(rootIdx).coeffs;
  const auto& piS = rs.shortSimple();
  for (int i = 0; i < rs.rank(); ++i)
    if (c[i] != 0 && std::find(piS.begin(), piS.end(), i) == piS.end()) return false;
  return true;
}

SimpleReduction simpleReduction(const RootSystem& rs) {
  requireMultiplyLaced(rs, "simpleReduction");
  SimpleReduction red;
  red.piS = rs.shortSimple();
  for (int g = 0; g < static_cast<int>(rs.size()); ++g)
    if (inShortSpan(rs, g)) {
      red.subsystem.push_back(g);
      if (rs.isPositive(g)) red.subPositives.push_back(g);
    }

  const std::size_t k = red.piS.size();
  IntMatrix sub(k, std::vector<int>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) sub[a][b] = rs.cartan()[red.piS[a]][red.piS[b]];
  const auto types = classifySubsystem(sub);
  if (types.size() != 1) fail(rs, "Pi_s is not connected (" + std::to_string(types.size()) + " components)");
  red.subType = types.front();

  const RootSystem subRs = RootSystem::build(red.subType);
  if (subRs.size() != red.subsystem.size())
    fail(rs, "#Delta(Pi_s) = " + std::to_string(red.subsystem.size()) + " but " + red.subType.name() + " has " +
                 std::to_string(subRs.size()) + " roots");
  red.hS = subRs.coxeterNumber();
  red.subExponents = subRs.exponents();
  if (rs.coxeterNumber() % red.hS != 0)
    fail(rs, "h_s = " + std::to_string(red.hS) + " does not divide h = " + std::to_string(rs.coxeterNumber()));
  red.transitionFactor = rs.coxeterNumber() / red.hS;
  return red;
}

bool checkCoxeterPower(const RootSystem& rs, const std::vector<int>& ordering) {
  const SimpleReduction red = simpleReduction(rs);
  return isInLongSubgroup(rs, coxeterElement(rs, ordering).power(red.hS));
}

StrangeEquality remark47(const RootSystem& rs) {
  StrangeEquality e;
  e.factor = simpleReduction(rs).transitionFactor;
  const int htS = rs.root(rs.thetaShort()).height();
  e.hMinusHt = rs.coxeterNumber() - htS;
  e.htThetaMinusHtThetaSPlus1 = rs.root(rs.theta()).height() - htS + 1;
  if (e.factor != e.hMinusHt || e.factor != e.htThetaMinusHtThetaSPlus1)
    fail(rs, "h/h_s = " + std::to_string(e.factor) + ", h - ht(theta_s) = " + std::to_string(e.hMinusHt) +
                 ", ht(theta) - ht(theta_s) + 1 = " + std::to_string(e.htThetaMinusHtThetaSPlus1));
  return e;
}

HyperplaneClasses hyperplaneClasses(const RootSystem& rs) {
  const SimpleReduction red = simpleReduction(rs);
  const auto& sp = rs.shortPositives();
  const int n = static_cast<int>(sp.size());
  UnionFind uf(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const auto& ga = rs.root(sp[a]).coeffs;
      const auto& gb = rs.root(sp[b]).coeffs;
      std::vector<int> diff(ga.size()), sum(ga.size());
      for (std::size_t i = 0; i < ga.size(); ++i) {
        diff[i] = ga[i] - gb[i];
        sum[i] = ga[i] + gb[i];
      }
      // gamma ~ mu and gamma ~ -mu, since classes are taken up to sign
      if (isLongRoot(rs, diff) || isLongRoot(rs, sum)) uf.join(a, b);
    }

  std::map<int, std::vector<int>> byRoot;
  for (int a = 0; a < n; ++a) byRoot[uf.find(a)].push_back(sp[a]);

  HyperplaneClasses hc;
  for (auto& [rootOf, members] : byRoot) {
    std::sort(members.begin(), members.end());
    std::vector<int> reps;
    for (int g : members)
      if (inShortSpan(rs, g)) reps.push_back(g);
    if (reps.size() != 1)
      fail(rs, "hyperplane class with " + std::to_string(reps.size()) + " roots of Delta(Pi_s)^+");
    hc.representatives.push_back(reps.front());
    hc.classes.push_back(std::move(members));
  }
  if (hc.classes.size() != red.subPositives.size())
    fail(rs, std::to_string(hc.classes.size()) + " hyperplane classes but #Delta(Pi_s)^+ = " +
                 std::to_string(red.subPositives.size()));
  return hc;
}

std::map<int, OneStepString> oneStepStrings(const RootSystem& rs) {
  requireMultiplyLaced(rs, "oneStepStrings");
  std::map<int, OneStepString> out;
  for (int g : rs.shortPositives()) {
    if (inShortSpan(rs, g)) continue;
    OneStepString s;
    s.gamma = g;
    std::set<int> targets;
    const auto& gc = rs.root(g).coeffs;
    for (int b : rs.longRoots()) {
      std::vector<int> d = gc;
      const auto& bc = rs.root(b).coeffs;
      for (std::size_t i = 0; i < d.size(); ++i) d[i] -= bc[i];
      const auto idx = rs.find(d);
      if (!idx || !inShortSpan(rs, *idx)) continue;
      s.longRoots.push_back(b);
      if (rs.isPositive(*idx)) s.positiveWitnesses.push_back(b);
      targets.insert(rs.positivePart(*idx));
    }
    if (s.longRoots.empty())
      fail(rs, "no long root beta with gamma - beta in Delta(Pi_s) for gamma = " +
                   toString(rs.rootWeight(g)) + " (fundamental coordinates)");
    s.targetClasses.assign(targets.begin(), targets.end());
    out.emplace(g, std::move(s));
  }
  return out;
}

DimensionLedger dimensionLedger(const RootSystem& rs) {
  const SimpleReduction red = simpleReduction(rs);
  const LittleAdjointDims dims = littleAdjointDims(rs);
  const std::int64_t h = rs.coxeterNumber();
  const std::int64_t piS = static_cast<std::int64_t>(red.piS.size());

  DimensionLedger d;
  d.dimV = (h + 1) * piS;
  d.dimNullV = h * piS;
  d.dimL = piS + static_cast<std::int64_t>(red.subsystem.size());
  d.dimNullL = red.hS * piS;
  d.fibreDim = h * dims.zeroMult;
  d.transitionFactor = red.transitionFactor;

  if (d.dimV != dims.dim) fail(rs, "(h+1)#Pi_s differs from the Freudenthal dimension");
  if (d.dimL != (red.hS + 1) * piS) fail(rs, "#Pi_s + #Delta(Pi_s) != (h_s+1)#Pi_s");
  if (d.dimNullV != d.transitionFactor * d.dimNullL) fail(rs, "dim N(V)/dim N(l) != h/h_s");
  if (d.fibreDim != d.dimNullV) fail(rs, "h dim V^0 != dim N(V)");
  return d;
}

std::int64_t partitionCount(int n) {
  if (n < 0) return 0;
  std::vector<std::int64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[s] += p[s - part];
  return p[n];
}

int orbitCount(const RootSystem& rs) {
  const SimpleReduction red = simpleReduction(rs);
  if (red.subType.family != Family::A)
    throw UnsupportedType(rs.name() + ": simple reduction " + red.subType.name() + " is not of type A");
  return static_cast<int>(partitionCount(red.subType.rank + 1));
}

std::vector<int> invariantDegrees(const RootSystem& rs) {
  std::vector<int> deg = simpleReduction(rs).subExponents;
  for (auto& d : deg) d += 1;
  std::sort(deg.begin(), deg.end());
  return deg;
}

std::string liealgebraName(const RootSystemSpec& type) {
  const int n = type.rank;
  switch (type.family) {
    case Family::A: return "sl_" + std::to_string(n + 1);
    case Family::B: return "so_" + std::to_string(2 * n + 1);
    case Family::C: return "sp_" + std::to_string(2 * n);
    case Family::D: return "so_" + std::to_string(2 * n);
    default: return std::string(1, familyLetter(type.family)) + "_" + std::to_string(n);
  }
}

std::optional<Table1Row> table1Registry(const RootSystemSpec& type) {
  if (!type.isValid()) return std::nullopt;
  const int n = type.rank;
  Table1Row r;
  r.type = type;
  switch (type.family) {
    case Family::C:
      r.dimLittleAdjoint = 2 * n * n - n - 1;
      r.thetaShortCoeffs.assign(n, 2);
      r.thetaShortCoeffs.front() = 1;
      r.thetaShortCoeffs.back() = 1;
      r.h = 2 * n;
      r.subType = {Family::A, n - 1};
      r.hS = n;
      r.orbitCount = partitionCount(n);
      r.tildeG = liealgebraName({Family::A, 2 * n - 1});
      return r;
    case Family::B:
      r.dimLittleAdjoint = 2 * n + 1;
      r.thetaShortCoeffs.assign(n, 1);
      r.h = 2 * n;
      r.subType = {Family::A, 1};
      r.hS = 2;
      r.orbitCount = 2;
      r.tildeG = liealgebraName({Family::D, n + 1});
      return r;
    case Family::F:
      r.dimLittleAdjoint = 26;
      r.thetaShortCoeffs = {1, 2, 3, 2};
      r.h = 12;
      r.subType = {Family::A, 2};
      r.hS = 3;
      r.orbitCount = 3;
      r.tildeG = liealgebraName({Family::E, 6});
      return r;
    case Family::G:
      r.dimLittleAdjoint = 7;
      r.thetaShortCoeffs = {2, 1};
      r.h = 6;
      r.subType = {Family::A, 1};
      r.hS = 2;
      r.orbitCount = 2;
      r.tildeG = liealgebraName({Family::D, 4});
      return r;
    default:
      return std::nullopt;
  }
}

Table1Row table1(const RootSystem& rs) {
  const SimpleReduction red = simpleReduction(rs);
  Table1Row r;
  r.type = rs.spec();
  r.dimLittleAdjoint = littleAdjointDims(rs).dim;
  r.thetaShortCoeffs = rs.root(rs.thetaShort()).coeffs;
  r.h = rs.coxeterNumber();
  r.subType = red.subType;
  r.hS = red.hS;
  r.orbitCount = orbitCount(rs);
  if (const auto reg = table1Registry(rs.spec())) r.tildeG = reg->tildeG;
  return r;
}

std::vector<RootSystemSpec> table1Systems() {
  std::vector<RootSystemSpec> out;
  for (int n = 2; n <= 6; ++n) out.push_back({Family::C, n});
  for (int n = 2; n <= 6; ++n) out.push_back({Family::B, n});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

}  // namespace shortroots
