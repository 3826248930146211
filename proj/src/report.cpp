#include "shortroots/report.hpp"

#include <iomanip>
#include <sstream>

#include "shortroots/little_adjoint.hpp"

namespace shortroots {

using nlohmann::json;

json toJson(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

json toJson(const QPoly& p) {
  json coeffs = json::object();
  for (int k = 0; k <= p.truncation(); ++k)
    if (p.coeff(k) != 0) coeffs[std::to_string(k)] = p.coeff(k);
  json out{{"truncation", p.truncation()}, {"coeffs", coeffs}};
  if (p.mixedTruncation()) out["mixedTruncation"] = true;
  return out;
}

json toJson(const RootSystemSpec& s) { return {{"family", std::string(1, familyLetter(s.family))}, {"rank", s.rank}}; }

json toJson(const Table1Row& row) {
  return {{"type", row.type.name()},
          {"dimLittleAdjoint", row.dimLittleAdjoint},
          {"thetaShortCoeffs", row.thetaShortCoeffs},
          {"h", row.h},
          {"subType", row.subType.name()},
          {"hS", row.hS},
          {"orbitCount", row.orbitCount},
          {"tildeG", row.tildeG}};
}

json toJson(const CheckResult& c) {
  json out{{"id", c.id},
           {"title", c.title},
           {"system", toJson(c.system)},
           {"status", toString(c.status)},
           {"details", c.details}};
  if (!c.reason.empty()) out["reason"] = c.reason;
  if (c.elapsedMs) out["elapsedMs"] = *c.elapsedMs;
  return out;
}

json rootCoeffs(const RootSystem& rs, const std::vector<int>& rootIdx) {
  json out = json::array();
  for (int i : rootIdx) out.push_back(rs.root(i).coeffs);
  return out;
}

std::string coeffString(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

namespace {

json header(const RootSystemSpec& s) { return {{"schemaVersion", kSchemaVersion}, {"system", toJson(s)}}; }

std::vector<int> oneBased(std::vector<int> v) {
  for (auto& x : v) ++x;
  return v;
}

void line(std::ostringstream& os, const std::string& key, const std::string& value) {
  os << "  " << std::left << std::setw(22) << key << value << "\n";
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

// B_2 and C_2 are the same root system with the nodes swapped.
std::optional<RootSystemSpec> isomorphicTwin(const RootSystemSpec& s) {
  if (s == RootSystemSpec{Family::B, 2}) return RootSystemSpec{Family::C, 2};
  if (s == RootSystemSpec{Family::C, 2}) return RootSystemSpec{Family::B, 2};
  return std::nullopt;
}

}  // namespace

json infoJson(const RootSystem& rs) {
  json out = header(rs.spec());
  out["convention"] = "Bourbaki numbering; short roots have squared length 2";
  out["cartan"] = rs.cartan();
  out["roots"] = rs.size();
  out["positiveRoots"] = rs.numPositive();
  out["shortRoots"] = rs.shortRoots().size();
  out["longRoots"] = rs.longRoots().size();
  out["lengthRatio"] = rs.lengthRatio();
  out["theta"] = rs.root(rs.theta()).coeffs;
  out["thetaShort"] = rs.root(rs.thetaShort()).coeffs;
  out["h"] = rs.coxeterNumber();
  out["dualCoxeter"] = rs.dualCoxeterNumber();
  out["exponents"] = rs.exponents();
  out["weylOrder"] = rs.weylOrder();
  if (rs.isMultiplyLaced()) {
    const SimpleReduction red = simpleReduction(rs);
    const LittleAdjointDims dims = littleAdjointDims(rs);
    const DimensionLedger led = dimensionLedger(rs);
    out["littleAdjoint"] = {{"highestWeight", thetaShortWeight(rs)}, {"dim", dims.dim}, {"zeroMultiplicity", dims.zeroMult}};
    out["simpleReduction"] = {{"shortSimple", oneBased(red.piS)},
                              {"type", red.subType.name()},
                              {"hS", red.hS},
                              {"exponents", red.subExponents},
                              {"transitionFactor", red.transitionFactor}};
    out["dimensionLedger"] = {
        {"dimV", led.dimV}, {"dimNullV", led.dimNullV}, {"dimL", led.dimL}, {"dimNullL", led.dimNullL}};
  }
  return out;
}

std::string infoText(const RootSystem& rs) {
  std::ostringstream os;
  os << rs.name() << " (Bourbaki numbering, short roots have squared length 2)\n";
  line(os, "roots", std::to_string(rs.size()) + " (" + std::to_string(rs.shortRoots().size()) + " short, " +
                        std::to_string(rs.longRoots().size()) + " long)");
  line(os, "theta", coeffString(rs.root(rs.theta()).coeffs));
  line(os, "theta_s", coeffString(rs.root(rs.thetaShort()).coeffs));
  line(os, "h", std::to_string(rs.coxeterNumber()));
  line(os, "h*", std::to_string(rs.dualCoxeterNumber()));
  line(os, "exponents", join(rs.exponents()));
  line(os, "|W|", std::to_string(rs.weylOrder()));
  if (rs.isMultiplyLaced()) {
    const SimpleReduction red = simpleReduction(rs);
    const LittleAdjointDims dims = littleAdjointDims(rs);
    const DimensionLedger led = dimensionLedger(rs);
    line(os, "dim V(theta_s)", std::to_string(dims.dim));
    line(os, "m(0)", std::to_string(dims.zeroMult));
    line(os, "Pi_s", join(oneBased(red.piS)));
    line(os, "l = g(Pi_s)", red.subType.name());
    line(os, "h_s", std::to_string(red.hS));
    line(os, "transition factor", std::to_string(red.transitionFactor));
    line(os, "dim N(V)", std::to_string(led.dimNullV));
    line(os, "dim l", std::to_string(led.dimL));
    line(os, "dim N(l)", std::to_string(led.dimNullL));
  }
  return os.str();
}

json reportJson(const VerificationReport& r) {
  json out = header(r.system);
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(toJson(c));
  out["checks"] = checks;
  out["summary"] = {{"pass", r.count(CheckStatus::Pass)},
                    {"fail", r.count(CheckStatus::Fail)},
                    {"skipped", r.count(CheckStatus::Skipped)}};
  return out;
}

std::string reportText(const VerificationReport& r) {
  std::ostringstream os;
  os << "verify " << r.system.name() << "\n";
  for (const auto& c : r.checks) {
    os << "  " << std::left << std::setw(8) << toString(c.status) << std::setw(12) << c.id << c.title;
    if (c.elapsedMs) os << " [" << std::fixed << std::setprecision(1) << *c.elapsedMs << " ms]";
    os << "\n";
    if (!c.reason.empty()) os << "      " << c.reason << "\n";
    if (c.status == CheckStatus::Fail) os << "      " << c.details.dump() << "\n";
  }
  os << r.count(CheckStatus::Pass) << " passed, " << r.count(CheckStatus::Fail) << " failed, "
     << r.count(CheckStatus::Skipped) << " skipped\n";
  return os.str();
}

json table1Json(const std::vector<Table1Row>& rows) {
  json out{{"schemaVersion", kSchemaVersion}};
  json arr = json::array();
  for (const auto& row : rows) {
    json j = toJson(row);
    if (const auto twin = isomorphicTwin(row.type)) j["isomorphicTo"] = twin->name();
    arr.push_back(std::move(j));
  }
  out["rows"] = arr;
  return out;
}

std::string table1Text(const std::vector<Table1Row>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "type" << std::setw(7) << "dim" << std::setw(18) << "theta_s" << std::setw(5)
     << "h" << std::setw(6) << "l" << std::setw(5) << "h_s" << std::setw(8) << "orbits"
     << "g~\n";
  for (const auto& r : rows)
    os << std::left << std::setw(6) << r.type.name() << std::setw(7) << r.dimLittleAdjoint << std::setw(18)
       << coeffString(r.thetaShortCoeffs) << std::setw(5) << r.h << std::setw(6) << r.subType.name() << std::setw(5)
       << r.hS << std::setw(8) << r.orbitCount << r.tildeG
       << (isomorphicTwin(r.type) ? "  (isomorphic to " + isomorphicTwin(r.type)->name() + ")" : "") << "\n";
  return os.str();
}

json antichainJson(const RootSystem& rs, const AntichainReport& r) {
  json out = header(rs.spec());
  out["posetSize"] = rs.shortPositives().size();
  out["bruteForceCount"] = r.bruteForceCount;
  out["formulaK"] = toJson(r.formulaCount);
  out["altFormulaK"] = r.altFormulaCount ? toJson(*r.altFormulaCount) : json(nullptr);
  if (r.antichains) {
    json arr = json::array();
    for (const auto& a : *r.antichains) arr.push_back(rootCoeffs(rs, a));
    out["antichains"] = arr;
  }
  return out;
}

std::string antichainText(const RootSystem& rs, const AntichainReport& r) {
  std::ostringstream os;
  os << "antichains " << rs.name() << "\n";
  line(os, "short positive roots", std::to_string(rs.shortPositives().size()));
  line(os, "brute force", std::to_string(r.bruteForceCount));
  line(os, "formula K", toString(r.formulaCount));
  line(os, "alternate K", r.altFormulaCount ? toString(*r.altFormulaCount) : "n/a (length ratio 3)");
  if (r.antichains)
    for (const auto& a : *r.antichains) {
      std::string s = "{";
      for (std::size_t i = 0; i < a.size(); ++i) s += (i ? " " : "") + coeffString(rs.root(a[i]).coeffs);
      os << "    " << s << "}\n";
    }
  return os.str();
}

json nullconeJson(const RootSystem& rs, const GradedCharacter& ch, const HilbertResult& hr) {
  json out = header(rs.spec());
  out["truncation"] = ch.truncation;
  json entries = json::array();
  for (const auto& [lambda, poly] : ch.entries)
    entries.push_back({{"highestWeight", lambda}, {"dim", weylDim(rs, lambda)}, {"mBar", toJson(poly)}});
  out["entries"] = entries;
  out["hilbert"] = {{"passed", hr.passed},
                    {"degrees", hr.degrees},
                    {"dimV", hr.dimV},
                    {"computed", toJson(hr.computed)},
                    {"expected", toJson(hr.expected)}};
  if (hr.firstFailingDegree) out["hilbert"]["firstFailingDegree"] = *hr.firstFailingDegree;
  return out;
}

std::string nullconeText(const RootSystem& rs, const GradedCharacter& ch, const HilbertResult& hr) {
  std::ostringstream os;
  os << "null-cone character " << rs.name() << " up to q^" << ch.truncation << "\n";
  for (const auto& [lambda, poly] : ch.entries)
    os << "  " << std::left << std::setw(16) << coeffString(lambda) << std::setw(8) << weylDim(rs, lambda)
       << toString(poly) << "\n";
  os << "hilbert series " << (hr.passed ? "matches" : "MISMATCH") << ": " << toString(hr.computed) << "\n";
  if (hr.firstFailingDegree)
    os << "  first failing degree " << *hr.firstFailingDegree << ": computed " << hr.computed.coeff(*hr.firstFailingDegree)
       << ", expected " << hr.expected.coeff(*hr.firstFailingDegree) << "\n";
  return os.str();
}

}  // namespace shortroots
