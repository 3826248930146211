#include "shortroots/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "shortroots/errors.hpp"

namespace shortroots {

std::string toString(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

RationalMatrix toRational(const IntMatrix& m) {
  RationalMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int v : m[i]) out[i].emplace_back(v);
  return out;
}

RationalMatrix inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a = m;
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].numerator() == 0) ++pivot;
    if (pivot == n) throw std::domain_error("inverse: singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].numerator() == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// RootSystemSpec
// ---------------------------------------------------------------------------

char familyLetter(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

std::string RootSystemSpec::name() const { return std::string(1, familyLetter(family)) + std::to_string(rank); }

bool RootSystemSpec::isValid() const {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B:
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 3;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

void validate(const RootSystemSpec& spec) {
  if (!spec.isValid()) throw ValidationError("no simple root system of type " + spec.name());
}

RootSystemSpec parseSpec(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.size() < 2) throw ValidationError("cannot parse root system type '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  if (letter < 'A' || letter > 'G')
    throw ValidationError("unknown family '" + std::string(1, text.front()) + "' (expected one of A-G)");
  int rank = 0;
  const auto digits = text.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw ValidationError("cannot parse rank in '" + std::string(text) + "'");
  RootSystemSpec spec{static_cast<Family>(letter - 'A'), rank};
  validate(spec);
  return spec;
}

// ---------------------------------------------------------------------------
// Root / Weight
// ---------------------------------------------------------------------------

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

Weight Weight::fromInts(std::span<const int> coords) {
  Weight w;
  for (int c : coords) w.fundCoords.emplace_back(c);
  return w;
}

bool Weight::isIntegral() const {
  return std::all_of(fundCoords.begin(), fundCoords.end(), [](const Rational& r) { return r.denominator() == 1; });
}

bool Weight::isDominant() const {
  return std::all_of(fundCoords.begin(), fundCoords.end(), [](const Rational& r) { return r.numerator() >= 0; });
}

std::vector<int> Weight::toInts() const {
  std::vector<int> out;
  out.reserve(fundCoords.size());
  for (const auto& r : fundCoords) {
    if (r.denominator() != 1) throw ValidationError("weight " + toString(*this) + " is not integral");
    out.push_back(static_cast<int>(r.numerator()));
  }
  return out;
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < fundCoords.size(); ++i) fundCoords[i] += o.fundCoords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < fundCoords.size(); ++i) fundCoords[i] -= o.fundCoords[i];
  return *this;
}

Weight operator-(Weight a) {
  for (auto& c : a.fundCoords) c = -c;
  return a;
}

Weight operator*(const Rational& s, Weight a) {
  for (auto& c : a.fundCoords) c *= s;
  return a;
}

std::string toString(const Weight& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.fundCoords.size(); ++i) os << (i ? ", " : "") << toString(w.fundCoords[i]);
  os << ']';
  return os.str();
}

std::size_t VectorHash::operator()(const std::vector<int>& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : v) {
    h ^= static_cast<std::size_t>(static_cast<unsigned>(x) + 0x9e3779b9U);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Cartan data
// ---------------------------------------------------------------------------

IntMatrix bourbakiGram(const RootSystemSpec& spec) {
  validate(spec);
  const int n = spec.rank;
  IntMatrix g(n, std::vector<int>(n, 0));
  auto link = [&g](int i, int j, int v) { g[i][j] = g[j][i] = v; };
  for (int i = 0; i < n; ++i) g[i][i] = 2;

  switch (spec.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      // alpha_i = e_i - e_{i+1} (long), alpha_n = e_n (short)
      for (int i = 0; i + 1 < n; ++i) g[i][i] = 4;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case Family::C:
      // alpha_i = e_i - e_{i+1} (short), alpha_n = 2 e_n (long)
      g[n - 1][n - 1] = 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E:
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::F:
      g[0][0] = g[1][1] = 4;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:
      g[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

// ---------------------------------------------------------------------------
// RootSystem::build
// ---------------------------------------------------------------------------

RootSystem RootSystem::build(const RootSystemSpec& spec) {
  validate(spec);
  RootSystem rs;
  rs.spec_ = spec;
  const int n = spec.rank;
  rs.gram_ = bourbakiGram(spec);
  rs.cartan_.assign(n, std::vector<int>(n, 0));
  rs.adjacency_.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rs.cartan_[i][j] = 2 * rs.gram_[i][j] / rs.gram_[i][i];
      if (i != j && rs.gram_[i][j] != 0) rs.adjacency_[i].push_back(j);
    }

  // Closure of the simple roots under simple reflections, staying positive.
  std::vector<std::vector<int>> positive;
  std::unordered_map<std::vector<int>, int, VectorHash> seen;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.emplace(e, static_cast<int>(positive.size()));
    positive.push_back(std::move(e));
  }
  for (std::size_t k = 0; k < positive.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      const std::vector<int> beta = positive[k];
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += rs.cartan_[i][j] * beta[j];
      if (pairing == 0) continue;
      std::vector<int> image = beta;
      image[i] -= pairing;
      if (image[i] < 0) continue;  // only r_i(alpha_i) = -alpha_i leaves the positive cone
      if (seen.emplace(image, static_cast<int>(positive.size())).second) positive.push_back(std::move(image));
    }
  }
  std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  const int p = static_cast<int>(positive.size());
  int maxSq = 0;
  std::vector<int> sq(p);
  for (int k = 0; k < p; ++k) {
    sq[k] = rs.rootInner(positive[k], positive[k]);
    maxSq = std::max(maxSq, sq[k]);
  }
  rs.lengthRatio_ = maxSq / 2;
  rs.roots_.resize(2 * p);
  for (int k = 0; k < p; ++k) {
    const LengthClass len = (sq[k] == 2) ? LengthClass::Short : LengthClass::Long;
    rs.roots_[k] = Root{positive[k], len};
    std::vector<int> neg = positive[k];
    for (auto& c : neg) c = -c;
    rs.roots_[k + p] = Root{std::move(neg), len};
  }
  for (int k = 0; k < 2 * p; ++k) {
    rs.index_.emplace(rs.roots_[k].coeffs, k);
    auto& bucket = rs.roots_[k].isShort() ? rs.shortRoots_ : rs.longRoots_;
    bucket.push_back(k);
    if (k < p) {
      rs.positives_.push_back(k);
      (rs.roots_[k].isShort() ? rs.shortPositives_ : rs.longPositives_).push_back(k);
    }
  }
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    rs.simpleIdx_.push_back(rs.index_.at(e));
    if (rs.roots_[rs.simpleIdx_.back()].isShort()) rs.shortSimple_.push_back(i);
  }

  rs.reflectTable_.assign(2 * p, std::vector<int>(2 * p, -1));
  for (int m = 0; m < 2 * p; ++m) {
    const auto& mc = rs.roots_[m].coeffs;
    const int msq = rs.squaredLength(m);
    for (int t = 0; t < 2 * p; ++t) {
      const int k = 2 * rs.rootInner(rs.roots_[t].coeffs, mc) / msq;
      std::vector<int> img = rs.roots_[t].coeffs;
      for (int j = 0; j < n; ++j) img[j] -= k * mc[j];
      rs.reflectTable_[m][t] = rs.index_.at(img);
    }
  }

  // Weight-space forms.
  rs.cartanInverse_ = inverse(toRational(rs.cartan_));
  rs.fundGram_.assign(n, std::vector<Rational>(n, Rational(0)));
  std::int64_t scale = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rs.fundGram_[i][j] = rs.cartanInverse_[i][j] * Rational(rs.gram_[i][i], 2);
      scale = std::lcm(scale, rs.fundGram_[i][j].denominator());
    }
  rs.formScale_ = scale;
  rs.fundGramScaled_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational v = rs.fundGram_[i][j] * scale;
      rs.fundGramScaled_[i][j] = static_cast<int>(v.numerator());
    }

  // Distinguished roots.
  rs.theta_ = p - 1;
  if (p >= 2 && rs.roots_[p - 2].height() == rs.roots_[p - 1].height())
    throw IdentityViolation(spec.name() + ": root of maximal height is not unique");
  for (int k : rs.shortPositives_) {
    bool dominant = true;
    for (int i = 0; i < n && dominant; ++i) {
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += rs.cartan_[i][j] * rs.roots_[k].coeffs[j];
      dominant = pairing >= 0;
    }
    if (dominant) {
      if (rs.thetaShort_ >= 0) throw IdentityViolation(spec.name() + ": short dominant root is not unique");
      rs.thetaShort_ = k;
    }
  }

  rs.rho_ = Weight(std::vector<Rational>(n, Rational(1)));
  rs.sigma_ = Weight::zero(n);
  for (int i = 0; i < n; ++i) rs.sigma_.fundCoords[i] = Rational(2, rs.gram_[i][i]);

  if ((2 * p) % n != 0) throw IdentityViolation(spec.name() + ": #roots is not divisible by the rank");
  rs.coxeter_ = 2 * p / n;
  if (rs.roots_[rs.theta_].height() + 1 != rs.coxeter_)
    throw IdentityViolation(spec.name() + ": ht(theta)+1 differs from #roots/rank");
  rs.dualCoxeter_ = 1 + static_cast<int>(rs.corootPairing(rs.rho_, rs.theta_).numerator());

  // Exponents: conjugate partition of the height distribution.
  const int maxHeight = rs.roots_[rs.theta_].height();
  std::vector<int> count(maxHeight + 2, 0);
  for (int k = 0; k < p; ++k) ++count[rs.roots_[k].height()];
  for (int j = 1; j <= maxHeight; ++j)
    for (int t = 0; t < count[j] - count[j + 1]; ++t) rs.exponents_.push_back(j);
  if (static_cast<int>(rs.exponents_.size()) != n)
    throw IdentityViolation(spec.name() + ": height distribution does not yield rank-many exponents");
  return rs;
}

// ---------------------------------------------------------------------------
// Queries and arithmetic
// ---------------------------------------------------------------------------

std::optional<int> RootSystem::find(std::span<const int> coeffs) const {
  const std::vector<int> key(coeffs.begin(), coeffs.end());
  const auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::indexOf(std::span<const int> coeffs) const {
  if (auto idx = find(coeffs)) return *idx;
  std::ostringstream os;
  os << name() << ": (";
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  os << ") is not a root";
  throw ValidationError(os.str());
}

std::uint64_t RootSystem::weylOrder() const {
  std::uint64_t order = 1;
  for (int m : exponents_) order *= static_cast<std::uint64_t>(m + 1);
  return order;
}

int RootSystem::dualCoxeterOfDual() const { return 1 + root(thetaShort_).height(); }

Weight RootSystem::toWeight(std::span<const int> rootCoeffs) const {
  return Weight::fromInts(toFund(rootCoeffs));
}

std::vector<int> RootSystem::toFund(std::span<const int> rootCoeffs) const {
  const int n = rank();
  std::vector<int> x(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x[i] += cartan_[i][j] * rootCoeffs[j];
  return x;
}

std::vector<Rational> RootSystem::toRootCoords(const Weight& w) const {
  const int n = rank();
  std::vector<Rational> c(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i] += cartanInverse_[i][j] * w.fundCoords[j];
  return c;
}

std::optional<std::vector<int>> RootSystem::toRootLattice(std::span<const int> fundCoords) const {
  const int n = rank();
  std::vector<int> c(n, 0);
  for (int i = 0; i < n; ++i) {
    Rational s(0);
    for (int j = 0; j < n; ++j) s += cartanInverse_[i][j] * fundCoords[j];
    if (s.denominator() != 1) return std::nullopt;
    c[i] = static_cast<int>(s.numerator());
  }
  return c;
}

Rational RootSystem::inner(const Weight& x, const Weight& y) const {
  const int n = rank();
  Rational s(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += x.fundCoords[i] * fundGram_[i][j] * y.fundCoords[j];
  return s;
}

std::int64_t RootSystem::scaledInner(std::span<const int> x, std::span<const int> y) const {
  const int n = rank();
  std::int64_t s = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    std::int64_t row = 0;
    for (int j = 0; j < n; ++j) row += static_cast<std::int64_t>(fundGramScaled_[i][j]) * y[j];
    s += row * x[i];
  }
  return s;
}

int RootSystem::rootInner(int a, int b) const { return rootInner(root(a).coeffs, root(b).coeffs); }

int RootSystem::rootInner(std::span<const int> a, std::span<const int> b) const {
  const int n = rank();
  int s = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) s += a[i] * gram_[i][j] * b[j];
  }
  return s;
}

Weight RootSystem::coroot(std::span<const int> rootCoeffs) const {
  const int sq = rootInner(rootCoeffs, rootCoeffs);
  if (sq == 0) throw ValidationError("coroot of the zero vector");
  return Rational(2, sq) * toWeight(rootCoeffs);
}

Rational RootSystem::corootPairing(const Weight& x, int rootIdx) const {
  const auto& c = root(rootIdx).coeffs;
  Rational s(0);
  for (int j = 0; j < rank(); ++j) s += x.fundCoords[j] * c[j] * gram_[j][j];
  return s / squaredLength(rootIdx);
}

int RootSystem::corootPairing(std::span<const int> fundCoords, int rootIdx) const {
  const auto& c = root(rootIdx).coeffs;
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += fundCoords[j] * c[j] * gram_[j][j];
  return s / squaredLength(rootIdx);
}

std::vector<int> RootSystem::dominantConjugate(std::vector<int> x) const {
  const int n = rank();
  for (;;) {
    int i = 0;
    while (i < n && x[i] >= 0) ++i;
    if (i == n) return x;
    const int k = x[i];
    for (int j = 0; j < n; ++j) x[j] -= k * cartan_[j][i];
  }
}

bool RootSystem::dominates(std::span<const int> lambda, std::span<const int> mu) const {
  std::vector<int> diff(lambda.begin(), lambda.end());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= mu[i];
  const auto c = toRootLattice(diff);
  return c && std::all_of(c->begin(), c->end(), [](int v) { return v >= 0; });
}

}  // namespace shortroots
