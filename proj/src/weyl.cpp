#include "shortroots/weyl.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "shortroots/errors.hpp"

namespace shortroots {

WeylElem WeylElem::identity(const RootSystem& rs) {
  std::vector<int> perm(rs.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  return WeylElem(std::move(perm), std::vector<int>{});
}

WeylElem WeylElem::compose(const WeylElem& rhs) const {
  std::vector<int> perm(perm_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = perm_[static_cast<std::size_t>(rhs.perm_[i])];
  std::optional<std::vector<int>> word;
  if (word_ && rhs.word_) {
    word = *word_;
    word->insert(word->end(), rhs.word_->begin(), rhs.word_->end());
  }
  return WeylElem(std::move(perm), std::move(word));
}

WeylElem WeylElem::inverse() const {
  std::vector<int> perm(perm_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
  std::optional<std::vector<int>> word;
  if (word_) word = std::vector<int>(word_->rbegin(), word_->rend());
  return WeylElem(std::move(perm), std::move(word));
}

WeylElem WeylElem::power(int k) const {
  std::vector<int> id(perm_.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  WeylElem result(std::move(id));
  const WeylElem base = withoutWord();
  for (int i = 0; i < k; ++i) result = result.compose(base);
  return result;
}

bool WeylElem::isIdentity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != static_cast<int>(i)) return false;
  return true;
}

WeylElem reflect(const RootSystem& rs, int rootIdx) {
  if (rootIdx < 0 || rootIdx >= static_cast<int>(rs.size()))
    throw ValidationError("reflect: root index out of range");
  std::vector<int> perm(rs.size());
  for (std::size_t t = 0; t < perm.size(); ++t) perm[t] = rs.reflectRoot(static_cast<int>(t), rootIdx);
  std::optional<std::vector<int>> word;
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.simpleRoot(i) == rootIdx) word = std::vector<int>{i};
  return WeylElem(std::move(perm), std::move(word));
}

WeylElem reflect(const RootSystem& rs, const Root& gamma) { return reflect(rs, rs.indexOf(gamma.coeffs)); }

WeylElem simpleReflection(const RootSystem& rs, int i) { return reflect(rs, rs.simpleRoot(i)); }

WeylElem fromWord(const RootSystem& rs, const std::vector<int>& word) {
  WeylElem w = WeylElem::identity(rs);
  for (int i : word) w = w.compose(simpleReflection(rs, i));
  return w;
}

std::vector<int> inversionSet(const RootSystem& rs, const WeylElem& w) {
  std::vector<int> out;
  for (int p : rs.positives())
    if (!rs.isPositive(w(p))) out.push_back(p);
  return out;
}

int length(const RootSystem& rs, const WeylElem& w) {
  int n = 0;
  for (int p : rs.positives())
    if (!rs.isPositive(w(p))) ++n;
  return n;
}

int order(const WeylElem& w) {
  const WeylElem base = w.withoutWord();
  WeylElem cur = base;
  int k = 1;
  while (!cur.isIdentity()) {
    cur = cur.compose(base);
    ++k;
  }
  return k;
}

std::vector<int> applyToWeight(const RootSystem& rs, const WeylElem& w, const std::vector<int>& fundCoords) {
  // <w x, alpha_i^vee> = <x, (w^{-1} alpha_i)^vee>
  const int n = rs.rank();
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) {
    const int target = rs.simpleRoot(i);
    const auto& perm = w.perm();
    const auto it = std::find(perm.begin(), perm.end(), target);
    out[i] = rs.corootPairing(fundCoords, static_cast<int>(it - perm.begin()));
  }
  return out;
}

bool isValidElement(const RootSystem& rs, const WeylElem& w) {
  const int size = static_cast<int>(rs.size());
  if (static_cast<int>(w.perm().size()) != size) return false;
  for (int a = 0; a < size; ++a) {
    if (w(rs.negate(a)) != rs.negate(w(a))) return false;
    for (int b = a; b < size; ++b)
      if (rs.rootInner(w(a), w(b)) != rs.rootInner(a, b)) return false;
  }
  if (w.word() && !(fromWord(rs, *w.word()) == w)) return false;
  return true;
}

std::vector<WeylElem> enumerate(const RootSystem& rs, std::uint64_t bound) {
  const std::uint64_t expected = rs.weylOrder();
  if (expected > bound)
    throw LimitExceeded(rs.name() + ": |W| = " + std::to_string(expected) + " exceeds the enumeration cap " +
                        std::to_string(bound));
  std::vector<WeylElem> gens;
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(simpleReflection(rs, i));

  std::vector<WeylElem> out{WeylElem::identity(rs)};
  std::unordered_set<std::vector<int>, VectorHash> seen{out.front().perm()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : gens) {
      WeylElem next = out[k].compose(g);
      if (seen.insert(next.perm()).second) out.push_back(std::move(next));
    }
  }
  if (out.size() != expected)
    throw IdentityViolation(rs.name() + ": enumerated " + std::to_string(out.size()) +
                            " Weyl group elements, exponents predict " + std::to_string(expected));
  return out;
}

WeylElem coxeterElement(const RootSystem& rs, const std::vector<int>& ordering) {
  std::vector<int> sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < rs.rank(); ++i)
    if (static_cast<int>(sorted.size()) != rs.rank() || sorted[i] != i)
      throw ValidationError("coxeterElement: ordering is not a permutation of the simple roots");
  return fromWord(rs, ordering);
}

std::vector<std::vector<int>> coxeterOrbits(const RootSystem& rs, const WeylElem& c) {
  std::vector<bool> seen(rs.size(), false);
  std::vector<std::vector<int>> orbits;
  for (int start = 0; start < static_cast<int>(rs.size()); ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit;
    for (int x = start; !seen[x]; x = c(x)) {
      seen[x] = true;
      orbit.push_back(x);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::vector<int> longRootBase(const RootSystem& rs) {
  const auto& longPos = rs.longPositives();
  std::vector<int> base;
  for (int g : longPos) {
    bool decomposable = false;
    for (std::size_t a = 0; a < longPos.size() && !decomposable; ++a) {
      std::vector<int> rest = rs.root(g).coeffs;
      const auto& ac = rs.root(longPos[a]).coeffs;
      bool nonneg = true;
      for (std::size_t j = 0; j < rest.size(); ++j) {
        rest[j] -= ac[j];
        if (rest[j] < 0) nonneg = false;
      }
      if (!nonneg) continue;
      if (auto idx = rs.find(rest); idx && rs.root(*idx).isLong() && rs.isPositive(*idx)) decomposable = true;
    }
    if (!decomposable) base.push_back(g);
  }
  return base;
}

namespace {
void requireMultiplyLaced(const RootSystem& rs, const char* what) {
  if (!rs.isMultiplyLaced())
    throw UnsupportedType(std::string(what) + ": " + rs.name() +
                          " is simply-laced, so W_l is trivial and the decomposition degenerates");
}
}  // namespace

bool preservesLongPositives(const RootSystem& rs, const WeylElem& w) {
  for (int p : rs.longPositives())
    if (!rs.isPositive(w(p))) return false;
  return true;
}

SemidirectParts decomposeSemidirect(const RootSystem& rs, const WeylElem& w) {
  requireMultiplyLaced(rs, "decomposeSemidirect");
  const auto base = longRootBase(rs);
  std::vector<WeylElem> baseReflections;
  for (int b : base) baseReflections.push_back(reflect(rs, b).withoutWord());

  // Each step removes one long positive root from the long inversion set.
  WeylElem u = w.withoutWord();
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t k = 0; k < base.size(); ++k) {
      if (!rs.isPositive(u(base[k]))) {
        u = u.compose(baseReflections[k]);
        moved = true;
      }
    }
  }
  WeylElem longPart = u.inverse().compose(w.withoutWord());
  return {std::move(u), std::move(longPart)};
}

bool isInLongSubgroup(const RootSystem& rs, const WeylElem& w) {
  return decomposeSemidirect(rs, w).shortPart.isIdentity();
}

const std::vector<WeylElem>& SubgroupHandle::materialize(std::size_t bound) {
  if (elements) return *elements;
  if (generators.empty()) throw ValidationError("subgroup closure needs at least one generator");
  std::vector<int> id(generators.front().perm().size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  std::vector<WeylElem> out{WeylElem(std::move(id))};
  std::unordered_set<std::vector<int>, VectorHash> seen{out.front().perm()};
  std::vector<WeylElem> gens;
  for (const auto& g : generators) gens.push_back(g.withoutWord());
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : gens) {
      WeylElem next = out[k].compose(g);
      if (seen.insert(next.perm()).second) {
        if (out.size() >= bound)
          throw LimitExceeded("subgroup closure exceeds " + std::to_string(bound) + " elements");
        out.push_back(std::move(next));
      }
    }
  }
  elements = std::move(out);
  return *elements;
}

bool SubgroupHandle::contains(const WeylElem& w) const {
  if (!elements) throw ValidationError("subgroup is not materialized");
  return std::find(elements->begin(), elements->end(), w) != elements->end();
}

SubgroupHandle wholeGroup(const RootSystem& rs) {
  SubgroupHandle h;
  h.tag = SubgroupTag::W;
  for (int i = 0; i < rs.rank(); ++i) h.generators.push_back(simpleReflection(rs, i));
  return h;
}

SubgroupHandle longSubgroup(const RootSystem& rs) {
  SubgroupHandle h;
  h.tag = SubgroupTag::LongSubgroup;
  for (int p : rs.longPositives()) h.generators.push_back(reflect(rs, p));
  if (h.generators.empty()) h.generators.push_back(WeylElem::identity(rs));
  return h;
}

SubgroupHandle shortParabolic(const RootSystem& rs) {
  SubgroupHandle h;
  h.tag = SubgroupTag::ShortParabolic;
  for (int i : rs.shortSimple()) h.generators.push_back(simpleReflection(rs, i));
  if (h.generators.empty()) h.generators.push_back(WeylElem::identity(rs));
  return h;
}

}  // namespace shortroots
