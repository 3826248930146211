#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "shortroots/antichain.hpp"
#include "shortroots/graded_character.hpp"
#include "shortroots/rational.hpp"
#include "shortroots/reduction.hpp"
#include "shortroots/root_system.hpp"
#include "shortroots/verify.hpp"

namespace shortroots {

inline constexpr int kSchemaVersion = 1;

nlohmann::json toJson(const Rational& r);  // {"num": n, "den": d}
nlohmann::json toJson(const QPoly& p);     // {"truncation": D, "coeffs": {"k": c, ...}}
nlohmann::json toJson(const RootSystemSpec& s);
nlohmann::json toJson(const Table1Row& row);
nlohmann::json toJson(const CheckResult& c);
nlohmann::json rootCoeffs(const RootSystem& rs, const std::vector<int>& rootIdx);

// Every document has {schemaVersion, system, ...}; table1 has no single system.
nlohmann::json infoJson(const RootSystem& rs);
nlohmann::json reportJson(const VerificationReport& r);
nlohmann::json table1Json(const std::vector<Table1Row>& rows);
nlohmann::json antichainJson(const RootSystem& rs, const AntichainReport& r);
nlohmann::json nullconeJson(const RootSystem& rs, const GradedCharacter& ch, const HilbertResult& hr);

std::string infoText(const RootSystem& rs);
std::string reportText(const VerificationReport& r);
std::string table1Text(const std::vector<Table1Row>& rows);
std::string antichainText(const RootSystem& rs, const AntichainReport& r);
std::string nullconeText(const RootSystem& rs, const GradedCharacter& ch, const HilbertResult& hr);

std::string coeffString(const std::vector<int>& v);  // "(1,2,3,2)"

}  // namespace shortroots
