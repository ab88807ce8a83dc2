#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nashseq/arcspace.hpp"
#include "nashseq/census.hpp"
#include "nashseq/motivic.hpp"
#include "nashseq/nash.hpp"
#include "nashseq/staircase.hpp"
#include "nashseq/standard_basis.hpp"

namespace nashseq {

using json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, others decimal strings.
json exact(const mpz_class& z);
/// Integers as above, proper fractions as "p/q" strings.
json exact(const mpq_class& q);
json exact(const FieldElement& c);
json order_json(const Order& o);

json to_json(const ExponentVector& e);
json to_json(const Staircase& s);
json to_json(const UPoly& p);
json to_json(const HilbertData& h);
json to_json(const NashReport& r, const std::vector<std::string>& names);
json to_json(const StandardBasis& b, const std::vector<std::string>& names);
json to_json(const RationalFunction& f);
json to_json(const MotivicExpr& e);
json to_json(const ArcDistance& d);
json to_json(const CensusResult& c, bool with_timing);

/// Inverse of to_json(Staircase) and to_json(MotivicExpr), used to check that
/// published reports read back.
Staircase staircase_from_json(const json& j, std::size_t m);
MotivicExpr motivic_from_json(const json& j);

} // namespace nashseq
