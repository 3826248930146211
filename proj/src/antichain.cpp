#include "shortroots/antichain.hpp"

#include <algorithm>
#include <bit>

#include "shortroots/errors.hpp"

namespace shortroots {

std::optional<std::string> checkPosetAxioms(const RootPoset& p) {
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (p.leq[a].size() != n) return "relation matrix is not square";
    if (!p.leq[a][a]) return "not reflexive at " + std::to_string(a);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && p.leq[a][b] && p.leq[b][a])
        return "not antisymmetric at " + std::to_string(a) + ", " + std::to_string(b);
      if (p.leq[a][b] && a != b && !p.heights.empty() && p.heights[a] >= p.heights[b])
        return "height not strictly monotone at " + std::to_string(a) + " < " + std::to_string(b);
      for (std::size_t c = 0; c < n; ++c)
        if (p.leq[a][b] && p.leq[b][c] && !p.leq[a][c]) return "not transitive at " + std::to_string(a);
    }
  return std::nullopt;
}

RootPoset RootPoset::fromRelation(std::vector<std::vector<bool>> leq, std::vector<int> heights) {
  RootPoset p;
  p.leq = std::move(leq);
  p.heights = std::move(heights);
  if (const auto bad = checkPosetAxioms(p)) throw ValidationError("poset: " + *bad);
  const std::size_t n = p.size();
  p.elements.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.elements[i] = static_cast<int>(i);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !p.leq[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != a && c != b && p.leq[a][c] && p.leq[c][b]) cover = false;
      if (cover) p.covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return p;
}

RootPoset shortPoset(const RootSystem& rs) {
  const auto& sp = rs.shortPositives();
  const std::size_t n = sp.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  std::vector<int> heights(n);
  for (std::size_t a = 0; a < n; ++a) {
    heights[a] = rs.root(sp[a]).height();
    for (std::size_t b = 0; b < n; ++b) {
      const auto& ca = rs.root(sp[a]).coeffs;
      const auto& cb = rs.root(sp[b]).coeffs;
      bool le = true;
      for (std::size_t i = 0; i < ca.size(); ++i)
        if (cb[i] < ca[i]) le = false;
      leq[a][b] = le;
    }
  }
  RootPoset p = RootPoset::fromRelation(std::move(leq), std::move(heights));
  p.elements = sp;
  return p;
}

RootPoset disjointUnion(const RootPoset& a, const RootPoset& b) {
  const std::size_t n = a.size() + b.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) leq[i][j] = a.leq[i][j];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) leq[a.size() + i][a.size() + j] = b.leq[i][j];
  return RootPoset::fromRelation(std::move(leq));
}

RootPoset chainPoset(int n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq[i][j] = true;
  return RootPoset::fromRelation(std::move(leq));
}

RootPoset antichainPoset(int n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) leq[i][i] = true;
  return RootPoset::fromRelation(std::move(leq));
}

namespace {

std::vector<std::uint64_t> comparabilityMasks(const RootPoset& p) {
  if (p.size() > kMaxPosetSize)
    throw LimitExceeded("antichain enumeration refuses posets with " + std::to_string(p.size()) + " > " +
                        std::to_string(kMaxPosetSize) + " elements");
  std::vector<std::uint64_t> masks(p.size(), 0);
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.comparable(static_cast<int>(a), static_cast<int>(b))) masks[a] |= std::uint64_t{1} << b;
  return masks;
}

std::uint64_t allBits(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Each leaf of the recursion is one antichain, so the work is linear in the answer.
std::uint64_t countFrom(std::uint64_t candidates, const std::vector<std::uint64_t>& masks) {
  if (candidates == 0) return 1;
  const int v = std::countr_zero(candidates);
  const std::uint64_t without = candidates & (candidates - 1);
  return countFrom(without, masks) + countFrom(without & ~masks[v], masks);
}

void listFrom(std::uint64_t candidates, std::vector<int>& current, const std::vector<std::uint64_t>& masks,
              std::vector<std::vector<int>>& out, std::size_t limit) {
  if (candidates == 0) {
    if (out.size() >= limit) throw LimitExceeded("more than " + std::to_string(limit) + " antichains");
    out.push_back(current);
    return;
  }
  const int v = std::countr_zero(candidates);
  const std::uint64_t without = candidates & (candidates - 1);
  listFrom(without, current, masks, out, limit);
  current.push_back(v);
  listFrom(without & ~masks[v], current, masks, out, limit);
  current.pop_back();
}

}  // namespace

std::uint64_t countAntichainsBruteForce(const RootPoset& p) {
  const auto masks = comparabilityMasks(p);
  return countFrom(allBits(p.size()), masks);
}

std::vector<std::vector<int>> listAntichains(const RootPoset& p, std::size_t limit) {
  const auto masks = comparabilityMasks(p);
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  listFrom(allBits(p.size()), current, masks, out, limit);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Rational requireIntegral(const RootSystem& rs, Rational k, const char* what) {
  if (k.denominator() != 1) throw IdentityViolation(rs.name() + ": " + what + " = " + toString(k) + " is not an integer");
  return k;
}

}  // namespace

Rational formulaK(const RootSystem& rs) {
  std::vector<int> m = rs.exponents();
  std::sort(m.begin(), m.end());
  const std::size_t l = rs.shortSimple().size();
  const int h = rs.coxeterNumber();
  Rational k(1);
  for (std::size_t i = 0; i < l; ++i) k *= Rational(h + m[i] + 1, m[i] + 1);
  return requireIntegral(rs, k, "formulaK");
}

Rational altFormulaK(const RootSystem& rs) {
  if (rs.lengthRatio() != 2)
    throw UnsupportedType("altFormulaK: " + rs.name() + " has length ratio " + std::to_string(rs.lengthRatio()) +
                          "; the formula is stated only for ratio 2");
  const Rational g(static_cast<std::int64_t>(rs.shortRoots().size()), rs.rank());
  Rational k(1);
  for (int m : rs.exponents()) k *= (g + Rational(m + 1)) / Rational(m + 1);
  return requireIntegral(rs, k, "altFormulaK");
}

AntichainReport antichainReport(const RootSystem& rs, bool listThem) {
  const RootPoset p = shortPoset(rs);
  AntichainReport r;
  r.bruteForceCount = countAntichainsBruteForce(p);
  r.formulaCount = formulaK(rs);
  if (rs.lengthRatio() == 2) r.altFormulaCount = altFormulaK(rs);
  const Rational brute(static_cast<std::int64_t>(r.bruteForceCount));
  if (brute != r.formulaCount || (r.altFormulaCount && *r.altFormulaCount != brute))
    throw IdentityViolation(rs.name() + ": antichain count " + std::to_string(r.bruteForceCount) +
                            " vs formula " + toString(r.formulaCount) +
                            (r.altFormulaCount ? " vs alternate " + toString(*r.altFormulaCount) : std::string()));
  if (listThem) {
    auto lists = listAntichains(p, r.bruteForceCount);
    for (auto& a : lists)
      for (auto& x : a) x = p.elements[x];
    r.antichains = std::move(lists);
  }
  return r;
}

}  // namespace shortroots
