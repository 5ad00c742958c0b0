#pragma once

#include <json.hpp>

#include "steinhaus/planar.hpp"
#include "steinhaus/qualify.hpp"
#include "steinhaus/search.hpp"

namespace steinhaus::jsonio {

using Json = nlohmann::ordered_json;

/// Integers are emitted as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise; rationals always as {"num":..., "den":...}.
Json to_json(const BigInt& n);
Json to_json(const Rational& q);
Json to_json(const sos::SquaresWitness& w);
Json to_json(const sos::FourPowerObstruction& o);
Json to_json(const forms::CharPoly& p);
Json to_json(const qualify::FormVerdict& v);
Json to_json(const qualify::TilingLevel& level);
Json to_json(const qualify::ValueCounterexample& ce);
Json to_json(const qualify::ResidueClaim& claim);
Json to_json(const qualify::VerificationReport& report);
Json to_json(const planar::LinearSosPair& p);
Json to_json(const planar::BinaryFormReport& report);
Json to_json(const search::CandidateRecord& record);

}  // namespace steinhaus::jsonio
