#include "shortroots/graded_character.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "shortroots/errors.hpp"
#include "shortroots/reduction.hpp"

namespace shortroots {

QPoly::QPoly(int truncation) : coeffs_(static_cast<std::size_t>(std::max(truncation, 0)) + 1, 0), truncation_(truncation) {
  if (truncation < 0) throw ValidationError("QPoly: negative truncation");
}

QPoly QPoly::one(int truncation) { return monomial(0, 1, truncation); }

QPoly QPoly::monomial(int degree, std::int64_t coeff, int truncation) {
  QPoly p(truncation);
  if (degree < 0) throw ValidationError("QPoly: negative degree");
  if (degree <= truncation) p.coeffs_[degree] = coeff;
  return p;
}

QPoly QPoly::completeIntersection(const std::vector<int>& degrees, int n, int truncation) {
  QPoly p = one(truncation);
  for (int r = 0; r < n; ++r)  // multiply by 1/(1-q)
    for (int k = 1; k <= truncation; ++k) p.coeffs_[k] += p.coeffs_[k - 1];
  for (int d : degrees) p -= p.shifted(d);
  return p;
}

std::int64_t QPoly::coeff(int degree) const {
  if (degree < 0 || degree > truncation_)
    throw ValidationError("QPoly: coefficient of q^" + std::to_string(degree) + " beyond truncation " +
                          std::to_string(truncation_));
  return coeffs_[degree];
}

bool QPoly::isZero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

std::optional<int> QPoly::lowestDegree() const {
  for (int k = 0; k <= truncation_; ++k)
    if (coeffs_[k] != 0) return k;
  return std::nullopt;
}

void QPoly::trim() { coeffs_.resize(static_cast<std::size_t>(truncation_) + 1, 0); }

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.truncation_ != truncation_) mixed_ = true;
  mixed_ = mixed_ || o.mixed_;
  truncation_ = std::min(truncation_, o.truncation_);
  trim();
  for (int k = 0; k <= truncation_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += (-1) * o; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly p(std::min(a.truncation_, b.truncation_));
  p.mixed_ = a.mixed_ || b.mixed_ || a.truncation_ != b.truncation_;
  for (int i = 0; i <= p.truncation_; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= p.truncation_; ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return p;
}

QPoly operator*(std::int64_t s, QPoly a) {
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

QPoly QPoly::shifted(int k) const {
  QPoly p(truncation_);
  p.mixed_ = mixed_;
  for (int i = 0; i + k <= truncation_; ++i) p.coeffs_[i + k] = coeffs_[i];
  return p;
}

QPoly QPoly::truncatedTo(int d) const {
  if (d > truncation_) throw ValidationError("QPoly: cannot extend truncation");
  QPoly p = *this;
  p.truncation_ = d;
  p.trim();
  return p;
}

bool operator==(const QPoly& a, const QPoly& b) {
  const int t = std::min(a.truncation_, b.truncation_);
  for (int k = 0; k <= t; ++k)
    if (a.coeffs_[k] != b.coeffs_[k]) return false;
  return true;
}

std::string toString(const QPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.truncation(); ++k) {
    const std::int64_t c = p.coeff(k);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const std::int64_t a = c < 0 ? -c : c;
    if (k == 0) os << a;
    else {
      if (a != 1) os << a;
      os << "q";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  os << " + O(q^" << p.truncation() + 1 << ")";
  return os.str();
}

namespace {

int heightOf(const std::vector<int>& v) {
  int h = 0;
  for (int c : v) h += c;
  return h;
}

struct ByHeight {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const int ha = heightOf(a), hb = heightOf(b);
    return ha != hb ? ha < hb : a < b;
  }
};

}  // namespace

QPartitionTable::QPartitionTable(const RootSystem& rs, RootSubset subset, int maxDegree)
    : maxDegree_(maxDegree), subset_(subset) {
  if (maxDegree < 0) throw ValidationError("qPartition: negative degree bound");
  const auto& roots = subset == RootSubset::ShortPositives ? rs.shortPositives() : rs.positives();
  table_.emplace(std::vector<int>(rs.rank(), 0), QPoly::one(maxDegree));
  for (int r : roots) {
    const auto& mu = rs.root(r).coeffs;
    // Multiply by 1/(1 - q e^mu): new[v] = old[v] + q new[v - mu], processed by height.
    std::set<std::vector<int>, ByHeight> support;
    for (const auto& [v, poly] : table_) {
      const int low = *poly.lowestDegree();
      std::vector<int> w = v;
      for (int j = 0; low + j <= maxDegree; ++j) {
        support.insert(w);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += mu[i];
      }
    }
    std::map<std::vector<int>, QPoly> next;
    for (const auto& v : support) {
      QPoly p = at(v);
      std::vector<int> prev = v;
      bool inCone = true;
      for (std::size_t i = 0; i < prev.size(); ++i) {
        prev[i] -= mu[i];
        if (prev[i] < 0) inCone = false;
      }
      if (inCone)
        if (const auto it = next.find(prev); it != next.end()) p += it->second.shifted(1);
      if (!p.isZero()) next.emplace(v, std::move(p));
    }
    table_ = std::move(next);
  }
}

QPoly QPartitionTable::at(const std::vector<int>& rootCoeffs) const {
  const auto it = table_.find(rootCoeffs);
  return it == table_.end() ? QPoly(maxDegree_) : it->second;
}

QPoly qPartition(const RootSystem& rs, RootSubset subset, const std::vector<int>& rootCoeffs, int maxDegree) {
  if (static_cast<int>(rootCoeffs.size()) != rs.rank()) throw ValidationError("qPartition: wrong rank");
  return QPartitionTable(rs, subset, maxDegree).at(rootCoeffs);
}

WeylSumContext::WeylSumContext(const RootSystem& rs, RootSubset subset, int maxDegree, std::uint64_t maxWeylOrder)
    : WeylSumContext(rs, subset, maxDegree, enumerate(rs, maxWeylOrder)) {}

WeylSumContext::WeylSumContext(const RootSystem& rs, RootSubset subset, int maxDegree, std::vector<WeylElem> group)
    : rs_(rs), table_(rs, subset, maxDegree), group_(std::move(group)) {
  if (group_.size() != rs.weylOrder())
    throw ValidationError("WeylSumContext: group has " + std::to_string(group_.size()) + " elements, expected " +
                          std::to_string(rs.weylOrder()));
  for (const auto& w : group_) signs_.push_back(length(rs, w) % 2 == 0 ? 1 : -1);
}

QPoly WeylSumContext::mBar(const IntWeight& lambda, const IntWeight& mu) const {
  const int n = rs_.rank();
  if (static_cast<int>(lambda.size()) != n || static_cast<int>(mu.size()) != n)
    throw ValidationError("mBar: weight has wrong rank for " + rs_.name());
  for (int i = 0; i < n; ++i)
    if (lambda[i] < 0 || mu[i] < 0) throw ValidationError("mBar: weights must be dominant");
  IntWeight lr = lambda;
  for (auto& c : lr) c += 1;
  QPoly sum(table_.maxDegree());
  for (std::size_t k = 0; k < group_.size(); ++k) {
    IntWeight d = applyToWeight(rs_, group_[k], lr);
    for (int i = 0; i < n; ++i) d[i] -= mu[i] + 1;
    const auto c = rs_.toRootLattice(d);
    if (!c || std::any_of(c->begin(), c->end(), [](int v) { return v < 0; })) continue;
    const auto it = table_.entries().find(*c);
    if (it == table_.entries().end()) continue;
    sum += signs_[k] * it->second;
  }
  return sum;
}

std::vector<IntWeight> WeylSumContext::candidates() const {
  // mBar(lambda, 0) picks up nu exactly when nu + rho is W-conjugate to lambda + rho.
  std::set<IntWeight> out;
  for (const auto& [nu, poly] : table_.entries()) {
    IntWeight x = rs_.toFund(nu);
    for (auto& c : x) c += 1;
    IntWeight dom = rs_.dominantConjugate(std::move(x));
    if (std::any_of(dom.begin(), dom.end(), [](int c) { return c == 0; })) continue;
    for (auto& c : dom) c -= 1;
    out.insert(std::move(dom));
  }
  return {out.begin(), out.end()};
}

QPoly mBar(const RootSystem& rs, const IntWeight& lambda, const IntWeight& mu, int maxDegree,
           std::uint64_t maxWeylOrder) {
  return WeylSumContext(rs, RootSubset::ShortPositives, maxDegree, maxWeylOrder).mBar(lambda, mu);
}

GradedCharacter nullconeCharacter(const WeylSumContext& ctx) {
  const auto cands = ctx.candidates();
  const IntWeight zero(ctx.rootSystem().rank(), 0);
  std::vector<std::optional<QPoly>> results(cands.size());
  std::atomic<std::size_t> nextIdx{0};
  auto worker = [&] {
    for (std::size_t i; (i = nextIdx.fetch_add(1)) < cands.size();) results[i] = ctx.mBar(cands[i], zero);
  };
  const unsigned nThreads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nThreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  GradedCharacter ch;
  ch.truncation = ctx.table().maxDegree();
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (!results[i]->isZero()) ch.entries.emplace(cands[i], std::move(*results[i]));
  return ch;
}

GradedCharacter nullconeCharacter(const RootSystem& rs, int maxDegree, std::uint64_t maxWeylOrder) {
  return nullconeCharacter(WeylSumContext(rs, RootSubset::ShortPositives, maxDegree, maxWeylOrder));
}

HilbertResult hilbertCheck(const RootSystem& rs, const GradedCharacter& ch) {
  HilbertResult r;
  r.degrees = invariantDegrees(rs);
  r.dimV = littleAdjointDims(rs).dim;
  r.computed = QPoly(ch.truncation);
  for (const auto& [lambda, poly] : ch.entries) r.computed += weylDim(rs, lambda) * poly;
  r.expected = QPoly::completeIntersection(r.degrees, static_cast<int>(r.dimV), ch.truncation);
  for (int k = 0; k <= ch.truncation; ++k)
    if (r.computed.coeff(k) != r.expected.coeff(k)) {
      r.firstFailingDegree = k;
      break;
    }
  r.passed = !r.firstFailingDegree;
  return r;
}

HilbertResult hilbertCheck(const RootSystem& rs, int maxDegree, std::uint64_t maxWeylOrder) {
  return hilbertCheck(rs, nullconeCharacter(rs, maxDegree, maxWeylOrder));
}

}  // namespace shortroots
