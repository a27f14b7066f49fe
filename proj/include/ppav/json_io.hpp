#pragma once

#include <string>

#include <json.hpp>

#include "ppav/arith.hpp"
#include "ppav/census.hpp"
#include "ppav/measures.hpp"
#include "ppav/orders.hpp"
#include "ppav/stratum.hpp"

namespace ppav {

using Json = nlohmann::ordered_json;

/// A JSON number when |n| <= 2^53, else a decimal string.
Json json_integer(const Integer& n);
/// Always a decimal string.
Json json_decimal(const Integer& n);
/// "a/b" (or "a" for integers).
Json json_rational(const Rational& r);

/// Serializes with floats at 17 significant digits so identical values give
/// identical bytes. Non-finite floats become null.
std::string dump_json(const Json& j, int indent = 2);

Json to_json(const Lattice& l);
Json to_json(const ConvenienceCertificate& c);
Json to_json(const StratumReport& r);
Json to_json(const HeavyClass& h);
Json to_json(const FamilyMember& m);
Json to_json(const CensusSummary& s);
Json to_json(const MeasureSpec& m);

}  // namespace ppav
