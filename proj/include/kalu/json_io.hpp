#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kalu/engine.hpp"

namespace kalu {

// Insertion-ordered so that emitted documents have a stable key order and
// parse -> dump round-trips are byte-identical.
using Json = nlohmann::ordered_json;

// The one dump used everywhere: compact, one line.
std::string dump(const Json& j);

// Field accessors that throw validation_error naming the field on missing
// or mistyped input. Used by every *_from_json below and by the job layer.
const Json& require_field(const Json& j, const std::string& name);
int int_field(const Json& j, const std::string& name);
std::vector<int> int_vector(const Json& j, const std::string& context);
std::vector<int> vector_field(const Json& j, const std::string& name);

// Polynomials travel as [[exponent, "coefficient"], ...] with ascending
// exponents; coefficients are decimal strings so no width is ever lost.
Json to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

Json to_json(const SchubertDatum& d);  // {"k", "l", "I", "J"}
SchubertDatum datum_from_json(const Json& j);

Json to_json(const EssentialPair& e);  // {"positions", "I", "J", "p"}

Json to_json(const FiberReport& r);

Json to_json(const Cell& c);  // {"a", "r", "g", "b", "m"}
Cell cell_from_json(const Json& j);

Json to_json(const SmallnessReport& r);
Json to_json(const DecompositionReport& r);
Json to_json(const ScanRow& row);
Json to_json(const std::vector<ScanRow>& rows);
Json to_json(const VerifyReport& r);

// "1,0|2,1": comma-joined vectors separated by a bar.
std::string pair_key(const PairKey& key);
PairKey pair_key_from_text(const std::string& s);

// Everything needed to rebuild a table without recomputation: the datum and
// offsets defining the base, the canonical cells, and the alias pairs.
Json to_json(const KaLuTable& table);

// Loads a dump produced by to_json into a freshly constructed table. The
// stored datum and base offsets must match the table's context.
void load_table(KaLuTable& table, const Json& j);

}  // namespace kalu
