#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>

#include "colorlie/algebra.hpp"
#include "colorlie/codim.hpp"
#include "colorlie/constructions.hpp"

namespace colorlie {

using Json = nlohmann::ordered_json;

Json load_json_file(const std::filesystem::path& path);
void save_json_file(const std::filesystem::path& path, const Json& j);

// ---- algebra spec files ----------------------------------------------------
// {"kind":"algebra","name":...,"dim":...,"degrees":[[i,j],...],
//  "struct":[[i,j,k,"num/den"],...]}

Json algebra_to_json(const GradedAlgebra& A);
GradedAlgebra algebra_from_json(const Json& j);

// ---- cocycle / bicharacter tables -------------------------------------------
// {"kind":"sign-table","table":[[+-1 x4] x4]}

Json sign_table_to_json(const SignTable& t, const std::string& kind = "sign-table");
SignTable sign_table_from_json(const Json& j);

// ---- witness files -----------------------------------------------------------

Json witness_to_json(const WitnessPolynomial& w);
WitnessPolynomial witness_from_json(const Json& j);

// ---- vectors -----------------------------------------------------------------

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

// ---- reports -----------------------------------------------------------------

struct RunInfo {
    std::string command;  // canonicalized invocation
    std::string version;
};

Json codim_report_to_json(const CodimReport& rep, const RunInfo& info);
std::string codim_report_to_tsv(const CodimReport& rep, const RunInfo& info);

// 12 significant digits, stable across runs
std::string format_double(double x);

}  // namespace colorlie
