#include "shortroots/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "shortroots/antichain.hpp"
#include "shortroots/errors.hpp"
#include "shortroots/graded_character.hpp"
#include "shortroots/little_adjoint.hpp"
#include "shortroots/reduction.hpp"
#include "shortroots/report.hpp"
#include "shortroots/weyl.hpp"

namespace shortroots {

using nlohmann::json;

std::string toString(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::allPassed() const { return count(CheckStatus::Fail) == 0; }

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

namespace {

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
void expectEq(json& d, const std::string& key, const T& computed, const T& expected) {
  d[key] = {{"computed", computed}, {"expected", expected}};
  if (!(computed == expected)) throw CheckFailed(key + " differs");
}

void expectTrue(json& d, const std::string& key, bool ok) {
  d[key] = ok;
  if (!ok) throw CheckFailed(key + " is false");
}

using PermSet = std::unordered_set<std::vector<int>, VectorHash>;

PermSet permSet(const std::vector<WeylElem>& elems) {
  PermSet s;
  for (const auto& w : elems) s.insert(w.perm());
  return s;
}

void checkProp21(const RootSystem& rs, const Limits& lim, json& d) {
  const auto W = enumerate(rs, lim.maxWeylOrder);
  auto wl = longSubgroup(rs);
  auto ws = shortParabolic(rs);
  const PermSet wlSet = permSet(wl.materialize(W.size() + 1));
  const PermSet wsSet = permSet(ws.materialize(W.size() + 1));
  d["orderW"] = W.size();
  d["orderWl"] = wlSet.size();
  d["orderWPiS"] = wsSet.size();
  expectEq(d, "orderProduct", wlSet.size() * wsSet.size(), W.size());

  std::size_t intersection = 0;
  for (const auto& p : wsSet) intersection += wlSet.count(p);
  expectEq(d, "intersectionSize", intersection, std::size_t{1});

  bool normal = true;
  for (int i = 0; i < rs.rank() && normal; ++i) {
    const WeylElem g = simpleReflection(rs, i).withoutWord();
    for (int p : rs.longPositives()) {
      const WeylElem conj = g.compose(reflect(rs, p)).compose(g.inverse());
      if (!wlSet.count(conj.perm())) {
        normal = false;
        break;
      }
    }
  }
  expectTrue(d, "WlNormal", normal);

  PermSet stabilizer;
  for (const auto& w : W)
    if (preservesLongPositives(rs, w)) stabilizer.insert(w.perm());
  expectTrue(d, "stabilizerOfLongPositivesIsWPiS", stabilizer == wsSet);

  bool roundTrip = true;
  std::set<std::pair<std::vector<int>, std::vector<int>>> pairs;
  for (const auto& w : W) {
    const auto parts = decomposeSemidirect(rs, w);
    if (!(parts.shortPart.compose(parts.longPart) == w) || !wsSet.count(parts.shortPart.perm()) ||
        !wlSet.count(parts.longPart.perm())) {
      roundTrip = false;
      break;
    }
    pairs.emplace(parts.shortPart.perm(), parts.longPart.perm());
  }
  expectTrue(d, "decompositionRoundTrips", roundTrip);
  expectEq(d, "distinctPairs", pairs.size(), W.size());
}

void checkProp22(const RootSystem& rs, const Limits&, json& d) {
  const LittleAdjointDims dims = littleAdjointDims(rs);
  const std::int64_t piS = static_cast<std::int64_t>(rs.shortSimple().size());
  const std::int64_t h = rs.coxeterNumber();
  expectEq(d, "zeroMultiplicity", dims.zeroMult, piS);
  expectEq(d, "dimension", dims.dim, (h + 1) * piS);
  expectEq(d, "weylDimension", weylDim(rs, thetaShortWeight(rs)), dims.dim);
  expectEq(d, "shortRootCount", dims.shortCount, h * piS);
  expectEq(d, "rootCount", static_cast<std::int64_t>(rs.size()), rs.rank() * h);

  const WeightSystem ws = freudenthal(rs, thetaShortWeight(rs));
  expectTrue(d, "recursionResidualZero", !freudenthalResidual(rs, ws).has_value());
  expectTrue(d, "weylInvariant", isWeylInvariant(rs, ws));
  IntWeight rhoInts(rs.rank(), 1);
  expectEq(d, "rhoPairingThetaShortCoroot", rs.corootPairing(rhoInts, rs.thetaShort()), rs.coxeterNumber() - 1);

  std::vector<int> ordering(rs.rank());
  std::iota(ordering.begin(), ordering.end(), 0);
  const auto orbits = coxeterOrbits(rs, coxeterElement(rs, ordering));
  bool sizesOk = true, pureOk = true;
  std::int64_t shortOrbits = 0;
  for (const auto& o : orbits) {
    if (static_cast<int>(o.size()) != rs.coxeterNumber()) sizesOk = false;
    const bool first = rs.root(o.front()).isShort();
    for (int x : o)
      if (rs.root(x).isShort() != first) pureOk = false;
    if (first) ++shortOrbits;
  }
  expectTrue(d, "coxeterOrbitsHaveSizeH", sizesOk);
  expectTrue(d, "coxeterOrbitsSingleLength", pureOk);
  expectEq(d, "shortCoxeterOrbits", shortOrbits, piS);
}

void checkEq21(const RootSystem& rs, const Limits&, json& d) {
  for (int mu = 0; mu < static_cast<int>(rs.size()); ++mu) {
    const DeltaPartition dp = deltaPartition(rs, mu);
    if (dp.posNeg.size() != dp.negPos.size()) {
      d["failingRoot"] = rs.root(mu).coeffs;
      expectEq(d, "posNegVsNegPos", dp.posNeg.size(), dp.negPos.size());
    }
  }
  d["rootsChecked"] = rs.size();
  const DeltaPartition top = deltaPartition(rs, rs.thetaShort());
  expectEq(d, "thetaShortPosNeg", top.posNeg.size(), std::size_t{0});
}

void checkProp24(const RootSystem& rs, const Limits&, json& d) {
  const std::size_t ht = static_cast<std::size_t>(rs.root(rs.thetaShort()).height());
  d["htThetaShort"] = ht;
  for (int i : rs.shortSimple()) {
    const DeltaPartition dp = deltaPartition(rs, rs.simpleRoot(i));
    const std::string key = "alpha" + std::to_string(i + 1);
    expectEq(d, key + ".posPos", dp.posPos.size(), ht);
    expectEq(d, key + ".posNeg", dp.posNeg.size(), ht - 1);
  }
  expectEq(d, "hwOrbitDim", static_cast<std::size_t>(hwOrbitDim(rs)), 2 * ht);
}

RootSystemSpec dualSpec(const RootSystemSpec& s) {
  if (s.family == Family::B) return {Family::C, s.rank};
  if (s.family == Family::C) return {Family::B, s.rank};
  return s;
}

void checkRmk25(const RootSystem& rs, const Limits&, json& d) {
  const int ht = rs.root(rs.thetaShort()).height();
  const RootSystem dual = RootSystem::build(dualSpec(rs.spec()));
  d["dualSystem"] = dual.name();
  expectEq(d, "dualCoxeterOfDual", dual.dualCoxeterNumber(), 1 + ht);
  expectEq(d, "sigmaPairingThetaShort", toString(rs.inner(rs.sigma(), rs.rootWeight(rs.thetaShort()))),
           std::to_string(ht));
  expectEq(d, "hwOrbitDim", hwOrbitDim(rs), 2 * dual.dualCoxeterNumber() - 2);
}

void checkProp33(const RootSystem& rs, const Limits&, json& d) {
  const HyperplaneClasses hc = hyperplaneClasses(rs);
  const SimpleReduction red = simpleReduction(rs);
  expectEq(d, "classCount", hc.classes.size(), red.subPositives.size());
  std::vector<std::size_t> sizes;
  for (const auto& c : hc.classes) sizes.push_back(c.size());
  d["classSizes"] = sizes;
  d["representatives"] = rootCoeffs(rs, hc.representatives);
}

void checkProp35(const RootSystem& rs, const Limits&, json& d) {
  const SimpleReduction red = simpleReduction(rs);
  d["subType"] = red.subType.name();
  bool allShort = true;
  for (int g : red.subsystem)
    if (!rs.root(g).isShort()) allShort = false;
  expectTrue(d, "subsystemShort", allShort);
  expectTrue(d, "properSubsetOfShortRoots", red.subsystem.size() < rs.shortRoots().size());
  const HyperplaneClasses hc = hyperplaneClasses(rs);
  std::vector<int> reps = hc.representatives;
  std::sort(reps.begin(), reps.end());
  expectTrue(d, "hyperplanesDistinct", reps == red.subPositives);
}

void checkRmk35(const RootSystem& rs, const Limits&, json& d) {
  const auto strings = oneStepStrings(rs);
  std::size_t singletons = 0, withPositive = 0, soleClass = 0;
  for (const auto& [g, s] : strings) {
    if (s.singleton()) ++singletons;
    if (!s.positiveWitnesses.empty()) ++withPositive;
    if (s.sole()) ++soleClass;
  }
  d["gammaCount"] = strings.size();
  d["literalSingletons"] = singletons;
  d["withPositiveWitness"] = withPositive;
  expectEq(d, "soleTargetClass", soleClass, strings.size());
}

void checkLedger(const RootSystem& rs, const Limits&, json& d) {
  const DimensionLedger l = dimensionLedger(rs);
  d["dimV"] = l.dimV;
  d["dimNullV"] = l.dimNullV;
  d["dimL"] = l.dimL;
  d["dimNullL"] = l.dimNullL;
  expectEq(d, "ratio", l.dimNullV, l.transitionFactor * l.dimNullL);
  expectEq(d, "fibreDim", l.fibreDim, l.dimNullV);
  const SimpleReduction red = simpleReduction(rs);
  const auto deg = invariantDegrees(rs);
  d["invariantDegrees"] = deg;
  expectEq(d, "degreeCount", deg.size(), red.piS.size());
  const std::uint64_t prod = std::accumulate(deg.begin(), deg.end(), std::uint64_t{1},
                                             [](std::uint64_t a, int b) { return a * static_cast<std::uint64_t>(b); });
  expectEq(d, "degreeProduct", prod, RootSystem::build(red.subType).weylOrder());
}

void checkProp45(const RootSystem& rs, const Limits&, json& d) {
  const SimpleReduction red = simpleReduction(rs);
  expectEq(d, "hModHs", rs.coxeterNumber() % red.hS, 0);
  std::vector<int> ordering(rs.rank());
  std::iota(ordering.begin(), ordering.end(), 0);
  std::vector<std::vector<int>> orderings;
  if (rs.rank() <= 4) {
    do orderings.push_back(ordering);
    while (std::next_permutation(ordering.begin(), ordering.end()));
    d["orderings"] = "all";
  } else {
    std::mt19937 rng(20240229u);
    for (int k = 0; k < 200; ++k) {
      std::shuffle(ordering.begin(), ordering.end(), rng);
      orderings.push_back(ordering);
    }
    d["orderings"] = "200 sampled";
  }
  std::size_t inWl = 0, orderH = 0;
  for (const auto& o : orderings) {
    if (checkCoxeterPower(rs, o)) ++inWl;
    if (order(coxeterElement(rs, o)) == rs.coxeterNumber()) ++orderH;
  }
  expectEq(d, "powerInWl", inWl, orderings.size());
  expectEq(d, "coxeterOrderH", orderH, orderings.size());
}

void checkRmk47(const RootSystem& rs, const Limits&, json& d) {
  const StrangeEquality e = remark47(rs);
  d["factor"] = e.factor;
  d["hMinusHt"] = e.hMinusHt;
  d["htThetaMinusHtThetaSPlus1"] = e.htThetaMinusHtThetaSPlus1;
  d["note"] = "empirical identity: verified, not explained";
}

void checkTable1(const RootSystem& rs, const Limits&, json& d) {
  const auto expected = table1Registry(rs.spec());
  if (!expected) throw UnsupportedType(rs.name() + " has no table row");
  const Table1Row row = table1(rs);
  expectEq(d, "dimLittleAdjoint", row.dimLittleAdjoint, expected->dimLittleAdjoint);
  expectEq(d, "thetaShortCoeffs", row.thetaShortCoeffs, expected->thetaShortCoeffs);
  expectEq(d, "h", row.h, expected->h);
  expectEq(d, "subType", row.subType.name(), expected->subType.name());
  expectEq(d, "hS", row.hS, expected->hS);
  expectEq(d, "orbitCount", row.orbitCount, expected->orbitCount);
  d["tildeG"] = row.tildeG;
}

void checkSec51(const RootSystem& rs, const Limits&, json& d) {
  const RootPoset p = shortPoset(rs);
  const std::uint64_t brute = countAntichainsBruteForce(p);
  const Rational k = formulaK(rs);
  d["posetSize"] = p.size();
  expectEq(d, "formulaK", toJson(k), toJson(Rational(static_cast<std::int64_t>(brute))));
  if (rs.lengthRatio() == 2)
    expectEq(d, "altFormulaK", toJson(altFormulaK(rs)), toJson(Rational(static_cast<std::int64_t>(brute))));
}

void checkSec52(const RootSystem& rs, const Limits& lim, json& d) {
  const int D = lim.maxDegree;
  const WeylSumContext ctx(rs, RootSubset::ShortPositives, D, lim.maxWeylOrder);
  const IntWeight zero(rs.rank(), 0);
  expectEq(d, "mBarZeroZero", toJson(ctx.mBar(zero, zero)), toJson(QPoly::one(D)));
  const GradedCharacter ch = nullconeCharacter(ctx);
  bool constantsOnly = true;
  std::size_t negative = 0;
  for (const auto& [lambda, poly] : ch.entries) {
    if (poly.coeff(0) != (lambda == zero ? 1 : 0)) constantsOnly = false;
    for (auto c : poly.coeffs())
      if (c < 0) ++negative;
  }
  expectTrue(d, "degreeZeroIsConstants", constantsOnly);
  d["negativeCoefficients"] = negative;
  d["entries"] = ch.entries.size();
  const HilbertResult hr = hilbertCheck(rs, ch);
  d["degrees"] = hr.degrees;
  d["dimV"] = hr.dimV;
  if (hr.firstFailingDegree) d["firstFailingDegree"] = *hr.firstFailingDegree;
  expectEq(d, "hilbertSeries", toJson(hr.computed), toJson(hr.expected));
}

using CheckFn = std::function<void(const RootSystem&, const Limits&, json&)>;

struct CheckEntry {
  CheckInfo info;
  CheckFn fn;
};

const std::vector<CheckEntry>& entries() {
  static const std::vector<CheckEntry> all = [] {
    std::vector<CheckEntry> v{
        {{"prop2.1", "W is the semidirect product of W(Pi_s) and the long-root subgroup W_l"}, checkProp21},
        {{"prop2.2", "zero weight of V(theta_s) has multiplicity #Pi_s and dim = (h+1) #Pi_s"}, checkProp22},
        {{"eq2.1", "sign partition of Delta(mu) is symmetric, so #Delta(mu)^+ = #Delta(mu)_{>0}"}, checkEq21},
        {{"prop2.4", "short simple roots see ht(theta_s) and ht(theta_s)-1 roots; orbit dim 2 ht(theta_s)"},
         checkProp24},
        {{"rmk2.5", "highest weight orbit dimension equals 2 h*(dual) - 2"}, checkRmk25},
        {{"prop3.3", "short roots up to long-root differences give one class per Delta(Pi_s)^+ root"}, checkProp33},
        {{"prop3.5", "Pi_s is connected, Delta(Pi_s) is a proper short subsystem, hyperplanes distinct"},
         checkProp35},
        {{"rmk3.5", "every short root outside Delta(Pi_s) reaches it by one long-root step"}, checkRmk35},
        {{"sec4.ledger", "null-cone dimensions and invariant degrees of the simple reduction"}, checkLedger},
        {{"prop4.5", "c^{h_s} lies in W_l for every Coxeter element, and h_s divides h"}, checkProp45},
        {{"rmk4.7", "h/h_s = h - ht(theta_s) = ht(theta) - ht(theta_s) + 1"}, checkRmk47},
        {{"table1", "little adjoint row: dim, theta_s, h, simple reduction, h_s, orbit count"}, checkTable1},
        {{"sec5.1", "antichains of short positive roots against both product formulas"}, checkSec51},
        {{"sec5.2", "graded null-cone character against the complete intersection Hilbert series"}, checkSec52},
    };
    std::sort(v.begin(), v.end(), [](const CheckEntry& a, const CheckEntry& b) { return a.info.id < b.info.id; });
    return v;
  }();
  return all;
}

CheckResult runOne(const RootSystem& rs, const CheckEntry& e, const VerifyOptions& opts) {
  CheckResult r;
  r.id = e.info.id;
  r.title = e.info.title;
  r.system = rs.spec();
  r.details = json::object();
  const auto start = std::chrono::steady_clock::now();
  try {
    if (!rs.isMultiplyLaced()) throw UnsupportedType(rs.name() + " is simply-laced: every root is short");
    e.fn(rs, opts.limits, r.details);
    r.status = CheckStatus::Pass;
  } catch (const LimitExceeded& ex) {
    r.status = CheckStatus::Skipped;
    r.reason = ex.what();
  } catch (const UnsupportedType& ex) {
    r.status = CheckStatus::Skipped;
    r.reason = ex.what();
  } catch (const std::exception& ex) {
    r.status = CheckStatus::Fail;
    r.reason = ex.what();
  }
  if (opts.timing)
    r.elapsedMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

const std::vector<CheckInfo>& checkRegistry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

VerificationReport runChecks(const RootSystem& rs, const VerifyOptions& opts) {
  std::vector<const CheckEntry*> selected;
  for (const auto& id : opts.only) {
    const auto it =
        std::find_if(entries().begin(), entries().end(), [&id](const CheckEntry& e) { return e.info.id == id; });
    if (it == entries().end()) {
      std::string valid;
      for (const auto& e : entries()) valid += (valid.empty() ? "" : ", ") + e.info.id;
      throw ValidationError("unknown check id '" + id + "'; valid ids: " + valid);
    }
    if (std::find(selected.begin(), selected.end(), &*it) == selected.end()) selected.push_back(&*it);
  }
  if (opts.only.empty())
    for (const auto& e : entries()) selected.push_back(&e);

  std::vector<std::future<CheckResult>> futures;
  for (const CheckEntry* e : selected)
    futures.push_back(std::async(std::launch::async, [&rs, e, &opts] { return runOne(rs, *e, opts); }));

  VerificationReport report;
  report.system = rs.spec();
  for (auto& f : futures) report.checks.push_back(f.get());
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return report;
}

}  // namespace shortroots
