#pragma once

// JSON and line-oriented text forms of the library's records.
//
// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; readers accept either form.

#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "dioph/arith.hpp"
#include "dioph/bounds.hpp"
#include "dioph/lemmas.hpp"
#include "dioph/pell.hpp"
#include "dioph/tuples.hpp"

namespace dioph::io {

using Json = nlohmann::json;

Json integer_to_json(const Integer& value);
Integer integer_from_json(const Json& value);  // InputError on other types

Json to_json(const tuples::MTuple& tuple);
tuples::MTuple tuple_from_json(const Json& value);

Json tuples_to_json(const std::vector<tuples::MTuple>& list);
std::vector<tuples::MTuple> tuples_from_json(const Json& value);

/// One tuple per line, elements separated by single spaces.
void write_tuple_lines(std::ostream& out, const std::vector<tuples::MTuple>& list);
/// Blank lines are skipped; anything else malformed raises InputError.
std::vector<tuples::MTuple> read_tuple_lines(std::istream& in);

Json to_json(const tuples::MTuple& tuple, const tuples::VerificationReport& report);

Json to_json(const pell::PellTriple& triple, const pell::IntersectionWitness& witness);
/// Returns the triple's (A, B, C) alongside the witness.
pell::IntersectionWitness witness_from_json(const Json& value, Integer* A = nullptr,
                                            Integer* B = nullptr, Integer* C = nullptr);
Json to_json(const pell::PellTriple& triple, const pell::ParityAnomaly& anomaly);

Json to_json(const lemmas::AuditReport& report);
Json to_json(const lemmas::AuditSummary& summary, bool include_reports);
Json to_json(const lemmas::ProofStepTrace& trace);

Json to_json(const bounds::BoundReport& report);
bounds::BoundReport bound_report_from_json(const Json& value);
Json to_json(const bounds::ConsistencyReport& report);

}  // namespace dioph::io
