#include "shortroots/little_adjoint.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "shortroots/errors.hpp"

namespace shortroots {

std::int64_t WeightSystem::multiplicity(const IntWeight& mu) const {
  const auto it = entries.find(mu);
  return it == entries.end() ? 0 : it->second;
}

std::int64_t WeightSystem::dimension() const {
  std::int64_t d = 0;
  for (const auto& [mu, m] : entries) d += m;
  return d;
}

namespace {

void requireDominant(const RootSystem& rs, const IntWeight& lambda, const char* what) {
  if (static_cast<int>(lambda.size()) != rs.rank())
    throw ValidationError(std::string(what) + ": weight has wrong rank for " + rs.name());
  if (std::any_of(lambda.begin(), lambda.end(), [](int c) { return c < 0; }))
    throw ValidationError(std::string(what) + ": " + toString(Weight::fromInts(lambda)) + " is not dominant");
}

void requireMultiplyLaced(const RootSystem& rs, const char* what) {
  if (!rs.isMultiplyLaced())
    throw UnsupportedType(std::string(what) + ": " + rs.name() +
                          " is simply-laced; use the adjoint module (every root is short) instead");
}

// Shared data for evaluating the recursion at a single weight.
struct FreudenthalContext {
  const RootSystem& rs;
  IntWeight lambdaRho;
  std::int64_t normLambdaRho;
  std::vector<IntWeight> posFund;
  std::vector<int> posHeight;

  FreudenthalContext(const RootSystem& r, const IntWeight& lambda) : rs(r) {
    lambdaRho = lambda;
    for (auto& c : lambdaRho) c += 1;  // rho has all fundamental coordinates 1
    normLambdaRho = rs.scaledInner(lambdaRho, lambdaRho);
    for (int p : rs.positives()) {
      posFund.push_back(rs.toFund(rs.root(p).coeffs));
      posHeight.push_back(rs.root(p).height());
    }
  }

  std::int64_t coefficient(const IntWeight& mu) const {
    IntWeight mr = mu;
    for (auto& c : mr) c += 1;
    return normLambdaRho - rs.scaledInner(mr, mr);
  }

  // 2 sum_{a>0} sum_{t>=1} m(mu + t a)(mu + t a | a), scaled by formScale.
  // `depth` is the height of lambda - mu; weights above lambda are never looked up.
  template <class Lookup>
  std::int64_t rhs(const IntWeight& mu, int depth, Lookup&& lookup) const {
    std::int64_t sum = 0;
    for (std::size_t a = 0; a < posFund.size(); ++a) {
      IntWeight shifted = mu;
      for (int t = 1; depth - t * posHeight[a] >= 0; ++t) {
        for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += posFund[a][i];
        const std::int64_t m = lookup(shifted);
        if (m != 0) sum += m * rs.scaledInner(shifted, posFund[a]);
      }
    }
    return 2 * sum;
  }
};

int depthBelow(const RootSystem& rs, const IntWeight& lambda, const IntWeight& mu) {
  IntWeight diff = lambda;
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= mu[i];
  const auto c = rs.toRootLattice(diff);
  if (!c || std::any_of(c->begin(), c->end(), [](int v) { return v < 0; })) return -1;
  int h = 0;
  for (int v : *c) h += v;
  return h;
}

}  // namespace

WeightSystem freudenthal(const RootSystem& rs, const IntWeight& lambda) {
  requireDominant(rs, lambda, "freudenthal");
  const int n = rs.rank();
  FreudenthalContext ctx(rs, lambda);

  WeightSystem ws;
  ws.highest = lambda;
  // Multiplicity-zero weights are kept here so the walk terminates cleanly.
  std::map<IntWeight, std::int64_t> all{{lambda, 1}};
  auto lookup = [&all](const IntWeight& w) -> std::int64_t {
    const auto it = all.find(w);
    return it == all.end() ? 0 : it->second;
  };

  std::vector<IntWeight> level{lambda};
  for (int depth = 1; !level.empty(); ++depth) {
    std::set<IntWeight> candidates;
    for (const auto& mu : level)
      for (int i = 0; i < n; ++i) {
        IntWeight next = mu;
        for (int j = 0; j < n; ++j) next[j] -= rs.cartan()[j][i];
        candidates.insert(std::move(next));
      }
    std::vector<IntWeight> nextLevel;
    for (const auto& nu : candidates) {
      std::int64_t m = 0;
      const std::int64_t coeff = ctx.coefficient(nu);
      // Prune weights whose dominant conjugate is not below lambda.
      if (coeff > 0 && rs.dominates(lambda, rs.dominantConjugate(nu))) {
        const std::int64_t r = ctx.rhs(nu, depth, lookup);
        if (r % coeff != 0)
          throw IdentityViolation("freudenthal: non-integral multiplicity at " + toString(Weight::fromInts(nu)));
        m = r / coeff;
      }
      all.emplace(nu, m);
      if (m > 0) nextLevel.push_back(nu);
    }
    level = std::move(nextLevel);
  }
  for (auto& [mu, m] : all)
    if (m > 0) ws.entries.emplace(mu, m);
  return ws;
}

std::optional<IntWeight> freudenthalResidual(const RootSystem& rs, const WeightSystem& ws) {
  FreudenthalContext ctx(rs, ws.highest);
  auto lookup = [&ws](const IntWeight& w) { return ws.multiplicity(w); };
  std::set<IntWeight> points;
  for (const auto& [mu, m] : ws.entries) {
    points.insert(mu);
    for (int i = 0; i < rs.rank(); ++i) {
      IntWeight next = mu;
      for (int j = 0; j < rs.rank(); ++j) next[j] -= rs.cartan()[j][i];
      points.insert(std::move(next));
    }
  }
  for (const auto& mu : points) {
    if (mu == ws.highest) continue;
    const int depth = depthBelow(rs, ws.highest, mu);
    if (depth < 0) continue;
    if (ctx.coefficient(mu) * ws.multiplicity(mu) != ctx.rhs(mu, depth, lookup)) return mu;
  }
  return std::nullopt;
}

bool isWeylInvariant(const RootSystem& rs, const WeightSystem& ws) {
  for (const auto& [mu, m] : ws.entries)
    if (ws.multiplicity(rs.dominantConjugate(mu)) != m) return false;
  return true;
}

std::int64_t weylDim(const RootSystem& rs, const IntWeight& lambda) {
  requireDominant(rs, lambda, "weylDim");
  IntWeight lr = lambda;
  for (auto& c : lr) c += 1;
  const IntWeight rho(rs.rank(), 1);
  Rational d(1);
  for (int p : rs.positives()) d *= Rational(rs.corootPairing(lr, p), rs.corootPairing(rho, p));
  if (d.denominator() != 1) throw IdentityViolation("weylDim: non-integral dimension " + toString(d));
  return d.numerator();
}

IntWeight thetaShortWeight(const RootSystem& rs) { return rs.toFund(rs.root(rs.thetaShort()).coeffs); }

IntWeight thetaWeight(const RootSystem& rs) { return rs.toFund(rs.root(rs.theta()).coeffs); }

LittleAdjointDims littleAdjointDims(const RootSystem& rs) {
  requireMultiplyLaced(rs, "littleAdjointDims");
  const WeightSystem ws = freudenthal(rs, thetaShortWeight(rs));
  const IntWeight zero(rs.rank(), 0);

  LittleAdjointDims d;
  d.dim = ws.dimension();
  d.zeroMult = ws.multiplicity(zero);
  d.shortCount = static_cast<std::int64_t>(rs.shortRoots().size());

  const std::int64_t piS = static_cast<std::int64_t>(rs.shortSimple().size());
  const std::int64_t h = rs.coxeterNumber();
  auto expect = [&rs](bool ok, const std::string& what) {
    if (!ok) throw IdentityViolation(rs.name() + ": " + what);
  };
  std::ostringstream vals;
  vals << " (dim=" << d.dim << ", m(0)=" << d.zeroMult << ", #short=" << d.shortCount << ", h=" << h
       << ", #Pi_s=" << piS << ")";
  expect(d.dim == weylDim(rs, thetaShortWeight(rs)), "Freudenthal dimension differs from Weyl dimension" + vals.str());
  expect(d.dim == d.shortCount + d.zeroMult, "dim != #short roots + m(0)" + vals.str());
  expect(d.zeroMult == piS, "m(0) != #Pi_s" + vals.str());
  expect(d.dim == (h + 1) * piS, "dim != (h+1) #Pi_s" + vals.str());
  expect(d.shortCount == h * piS, "#short roots != h #Pi_s" + vals.str());
  expect(static_cast<std::int64_t>(ws.entries.size()) == d.shortCount + 1, "support is not Delta_s and 0" + vals.str());
  for (int s : rs.shortRoots())
    expect(ws.multiplicity(rs.toFund(rs.root(s).coeffs)) == 1, "short root weight of multiplicity != 1" + vals.str());
  return d;
}

DeltaPartition deltaPartition(const RootSystem& rs, int muIdx) {
  if (muIdx < 0 || muIdx >= static_cast<int>(rs.size())) throw ValidationError("deltaPartition: not a root index");
  DeltaPartition dp;
  for (int g = 0; g < static_cast<int>(rs.size()); ++g) {
    const int s = rs.rootInner(g, muIdx);
    if (s == 0) continue;
    if (rs.isPositive(g)) (s > 0 ? dp.posPos : dp.posNeg).push_back(g);
    else (s > 0 ? dp.negPos : dp.negNeg).push_back(g);
  }
  if (dp.posPos.size() != dp.negNeg.size() || dp.posNeg.size() != dp.negPos.size())
    throw IdentityViolation(rs.name() + ": sign partition of Delta(mu) is not symmetric under negation");
  return dp;
}

DeltaPartition deltaPartition(const RootSystem& rs, const Root& mu) { return deltaPartition(rs, rs.indexOf(mu.coeffs)); }

int hwOrbitDim(const RootSystem& rs) {
  requireMultiplyLaced(rs, "hwOrbitDim");
  int count = 1;
  for (int p : rs.positives())
    if (rs.rootInner(p, rs.thetaShort()) > 0) ++count;
  const int ht = rs.root(rs.thetaShort()).height();
  if (count != 2 * ht)
    throw IdentityViolation(rs.name() + ": orbit dimension " + std::to_string(count) + " != 2 ht(theta_s) = " +
                            std::to_string(2 * ht));
  if (count != 2 * rs.dualCoxeterOfDual() - 2)
    throw IdentityViolation(rs.name() + ": orbit dimension " + std::to_string(count) + " != 2 h*(dual) - 2 = " +
                            std::to_string(2 * rs.dualCoxeterOfDual() - 2));
  return count;
}

}  // namespace shortroots
