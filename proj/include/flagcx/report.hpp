#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "flagcx/btransform.hpp"
#include "flagcx/courant.hpp"
#include "flagcx/mclass.hpp"

namespace flagcx {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// Exact values survive serialization: rationals as "p/q", Gaussian rationals as {"re","im"}.
Json to_json(const Rational& q);
Json to_json(const GQ& z);
Json to_json(const QMatrix& m);

Json root_json(const LieType& t, const Root& r);
Json flag_json(const FlagSpec& fs);
Json class_json(const LieType& t, const MClass& c);
Json existence_json(const ExistenceReport& e);

Json gvector_json(const GVector& v);
Json block_json(const GcsBlock& b);
Json structure_json(const InvariantGacs& j);
Json witness_json(const Witness& w);
Json bfield_json(const BField& b);
Json spinor_json(const TangentModel& model, const Spinor& s);

Json make_report(const std::string& command, const FlagSpec& fs, Json payload, std::optional<std::uint64_t> seed);

}  // namespace flagcx
