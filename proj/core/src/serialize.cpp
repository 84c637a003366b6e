#include "dioph/serialize.hpp"

#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "dioph/errors.hpp"

namespace dioph::io {

Json integer_to_json(const Integer& value) {
  if (mpz_fits_slong_p(value.get_mpz_t())) return Json(static_cast<std::int64_t>(value.get_si()));
  if (sgn(value) > 0 && mpz_fits_ulong_p(value.get_mpz_t())) {
    return Json(static_cast<std::uint64_t>(value.get_ui()));
  }
  return Json(value.get_str());
}

Integer integer_from_json(const Json& value) {
  if (value.is_number_unsigned()) return Integer(static_cast<unsigned long>(value.get<std::uint64_t>()));
  if (value.is_number_integer()) return Integer(static_cast<long>(value.get<std::int64_t>()));
  if (value.is_string()) return arith::parse_integer(value.get<std::string>());
  throw InputError("expected an integer (number or decimal string), got " + value.dump());
}

Json to_json(const tuples::MTuple& tuple) {
  Json arr = Json::array();
  for (const auto& e : tuple.elements()) arr.push_back(integer_to_json(e));
  return arr;
}

tuples::MTuple tuple_from_json(const Json& value) {
  if (!value.is_array()) throw InputError("tuple must be a JSON array");
  std::vector<Integer> elems;
  for (const auto& e : value) elems.push_back(integer_from_json(e));
  return tuples::MTuple(std::move(elems));
}

Json tuples_to_json(const std::vector<tuples::MTuple>& list) {
  Json arr = Json::array();
  for (const auto& t : list) arr.push_back(to_json(t));
  return arr;
}

std::vector<tuples::MTuple> tuples_from_json(const Json& value) {
  if (!value.is_array()) throw InputError("tuple list must be a JSON array");
  std::vector<tuples::MTuple> out;
  for (const auto& t : value) out.push_back(tuple_from_json(t));
  return out;
}

void write_tuple_lines(std::ostream& out, const std::vector<tuples::MTuple>& list) {
  for (const auto& t : list) out << t.to_string() << '\n';
}

std::vector<tuples::MTuple> read_tuple_lines(std::istream& in) {
  std::vector<tuples::MTuple> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::vector<Integer> elems;
    std::string token;
    while (fields >> token) elems.push_back(arith::parse_natural(token));
    if (elems.empty()) continue;
    out.emplace_back(std::move(elems));
  }
  return out;
}

Json to_json(const tuples::MTuple& tuple, const tuples::VerificationReport& report) {
  Json failing = Json::array();
  for (const auto& p : report.failing) {
    failing.push_back(Json::array({integer_to_json(p.first), integer_to_json(p.second)}));
  }
  return Json{{"tuple", to_json(tuple)}, {"ok", report.ok}, {"failing_pairs", failing}};
}

Json to_json(const pell::PellTriple& t, const pell::IntersectionWitness& w) {
  return Json{{"A", integer_to_json(t.A)},
              {"B", integer_to_json(t.B)},
              {"C", integer_to_json(t.C)},
              {"j", w.j},
              {"k", w.k},
              {"m", w.m},
              {"n", w.n},
              {"lambda", pell::value(w.lambda)},
              {"z", integer_to_json(w.z)},
              {"D", integer_to_json(w.D)}};
}

pell::IntersectionWitness witness_from_json(const Json& value, Integer* A, Integer* B, Integer* C) {
  try {
    pell::IntersectionWitness w;
    w.j = value.at("j").get<std::size_t>();
    w.k = value.at("k").get<std::size_t>();
    w.m = value.at("m").get<std::size_t>();
    w.n = value.at("n").get<std::size_t>();
    const int lambda = value.at("lambda").get<int>();
    if (lambda != 1 && lambda != -1) throw InputError("lambda must be +1 or -1");
    w.lambda = lambda == 1 ? pell::Sign::Plus : pell::Sign::Minus;
    w.z = integer_from_json(value.at("z"));
    w.D = integer_from_json(value.at("D"));
    if (A) *A = integer_from_json(value.at("A"));
    if (B) *B = integer_from_json(value.at("B"));
    if (C) *C = integer_from_json(value.at("C"));
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed witness record: ") + e.what());
  }
}

Json to_json(const pell::PellTriple& t, const pell::ParityAnomaly& a) {
  return Json{{"A", integer_to_json(t.A)},
              {"B", integer_to_json(t.B)},
              {"C", integer_to_json(t.C)},
              {"j", a.j},
              {"k", a.k},
              {"lambda", pell::value(a.lambda)},
              {"z", integer_to_json(a.z)}};
}

Json to_json(const lemmas::AuditReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json rec = to_json(report.triple, e.witness);
    rec["index_relation"] = e.index_relation;
    rec["congruence"] = e.congruence;
    rec["gap_applicable"] = e.gap_applicable;
    rec["gap_holds"] = e.gap_holds;
    rec["quadruple_verified"] = e.quadruple_verified;
    rec["passed"] = e.passed();
    entries.push_back(std::move(rec));
  }
  Json anomalies = Json::array();
  for (const auto& a : report.anomalies) anomalies.push_back(to_json(report.triple, a));
  return Json{{"triple", Json::array({integer_to_json(report.triple.A), integer_to_json(report.triple.B),
                                      integer_to_json(report.triple.C)})},
              {"witnesses", entries},
              {"anomalies", anomalies},
              {"violations", report.violations()},
              {"passed", report.passed()}};
}

Json to_json(const lemmas::AuditSummary& summary, bool include_reports) {
  Json out{{"c_max", summary.c_max},
           {"max_index", summary.max_index},
           {"triples", summary.triples},
           {"witnesses", summary.witnesses},
           {"gap_checks", summary.gap_checks},
           {"violations", summary.violations},
           {"passed", summary.passed()}};
  Json reports = Json::array();
  for (const auto& r : summary.reports) {
    if (include_reports || !r.passed()) reports.push_back(to_json(r));
  }
  out["reports"] = reports;
  return out;
}

Json to_json(const lemmas::ProofStepTrace& t) {
  return Json{{"hypothesis_met", t.hypothesis_met},
              {"m", integer_to_json(t.m)},
              {"square_majorization", t.square_majorization},
              {"linear_majorization", t.linear_majorization},
              {"chain_majorization", t.chain_majorization},
              {"lhs_upper", t.lhs_upper},
              {"lhs_ratio", t.lhs_ratio},
              {"holds", t.holds}};
}

Json to_json(const bounds::BoundReport& r) {
  return Json{{"c_star", r.c_star},
              {"bracket_lo", r.bracket_lo},
              {"bracket_hi", r.bracket_hi},
              {"iterations", r.iterations},
              {"verdict_at_10_76", r.verdict_at_10_76}};
}

bounds::BoundReport bound_report_from_json(const Json& value) {
  try {
    bounds::BoundReport r;
    r.c_star = value.at("c_star").get<double>();
    r.bracket_lo = value.at("bracket_lo").get<double>();
    r.bracket_hi = value.at("bracket_hi").get<double>();
    r.iterations = value.at("iterations").get<int>();
    r.verdict_at_10_76 = value.at("verdict_at_10_76").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed bound report: ") + e.what());
  }
}

Json to_json(const bounds::ConsistencyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"relation", c.relation},
                          {"small", c.small},
                          {"large", c.large},
                          {"margin", c.margin},
                          {"passed", c.passed}});
  }
  return Json{{"checks", checks}, {"passed", report.passed()}};
}

}  // namespace dioph::io
