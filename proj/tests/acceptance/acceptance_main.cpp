// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Thresholds and tolerances are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "dioph/bounds.hpp"
#include "dioph/lemmas.hpp"
#include "dioph/pell.hpp"
#include "dioph/tuples.hpp"
#include "oracles.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using namespace dioph;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct CliResult {
  int code;
  std::string out;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

Integer pow10(unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

tuples::MTuple tuple(std::initializer_list<long> xs) { return tuples::MTuple({xs.begin(), xs.end()}); }

// 1. Fermat set: verify 1 3 8 120 and extend 1 3 8 -> 120. < 1 ms.
Outcome fermat_set() {
  Outcome o;
  const auto v = cli({"verify", "1", "3", "8", "120"});
  o.require(v.code == 0, "verify exit " + std::to_string(v.code));
  const auto e = cli({"extend", "1", "3", "8"});
  o.require(e.code == 0, "extend exit " + std::to_string(e.code));
  o.require(e.out.substr(0, e.out.find('\n')) == "120", "extend printed " + e.out.substr(0, e.out.find('\n')));
  o.require(tuples::regular_extension(1, 3, 8) == 120, "regular_extension(1,3,8) != 120");
  return o;
}

// 2. bound --tolerance 0.01: fails at 1e76, c_star < 1e76 inside (1e75, 2e75),
//    bracket width <= 1% relative. < 1 s.
Outcome theorem_bound() {
  Outcome o;
  const auto r = cli({"bound", "--tolerance", "0.01", "--json"});
  o.require(r.code == 0, "bound exit " + std::to_string(r.code));
  const auto j = nlohmann::json::parse(r.out);
  const double c_star = j["c_star"].get<double>();
  const double lo = j["bracket_lo"].get<double>();
  const double hi = j["bracket_hi"].get<double>();
  o.require(!j["verdict_at_10_76"].get<bool>(), "inequality holds at 1e76");
  o.require(!bounds::combined_inequality_holds(1e76), "library: inequality holds at 1e76");
  o.require(c_star < 1e76, "c_star >= 1e76");
  o.require(lo > 1.0e75 && hi < 2.0e75, "bracket outside (1e75, 2e75)");
  o.require(lo <= c_star && c_star <= hi, "c_star outside bracket");
  o.require(hi / lo <= 1.01, "bracket wider than 1%");
  o.require(bounds::combined_inequality_holds(lo) && !bounds::combined_inequality_holds(hi),
            "bracket does not straddle the crossover");
  std::ostringstream d;
  d << "c_star=" << c_star << " bracket=[" << lo << ", " << hi << "]";
  if (o.ok) o.detail = d.str();
  return o;
}

// 3. Constant gluing with directed rounding. < 1 ms.
Outcome constant_gluing() {
  Outcome o;
  const auto report = bounds::check_constant_consistency();
  o.require(report.checks.size() == 3, "expected three checks");
  for (const auto& c : report.checks) o.require(c.passed && c.margin > 0, c.relation);
  if (o.ok) {
    std::ostringstream d;
    for (const auto& c : report.checks) d << c.name << " margin " << c.margin << "  ";
    o.detail = d.str();
  }
  return o;
}

// 4. Triple (1,3,8), max_index 10: exactly one witness, lambda = -1, z = 31,
//    D = 120, (m,n) = (1,1); checked against an independent map-based
//    intersection of the generated sequences. < 10 ms.
Outcome intersection_oracle() {
  Outcome o;
  const auto t = pell::make_pell_triple(1, 3, 8);
  const auto found = pell::find_intersections(t, 10);
  o.require(found.anomalies.empty(), "parity anomalies present");
  o.require(found.witnesses.size() == 1, "witness count " + std::to_string(found.witnesses.size()));
  if (found.witnesses.size() == 1) {
    const auto& w = found.witnesses[0];
    o.require(w.lambda == pell::Sign::Minus, "lambda != -1");
    o.require(w.z == 31 && w.D == 120, "z/D mismatch");
    o.require(w.m == 1 && w.n == 1, "(m,n) != (1,1)");
    o.require(tuples::verify_tuple(tuple({1, 3, 8, 120})).ok, "quadruple does not verify");
  }
  std::size_t oracle_hits = 0;
  for (auto sign : {pell::Sign::Plus, pell::Sign::Minus}) {
    const auto vs = pell::generate_sequence(t, pell::SequenceKind::V, sign, 11);
    const auto ws = pell::generate_sequence(t, pell::SequenceKind::W, sign, 11);
    for (auto [j, k] : oracle::common_terms(vs, ws)) {
      if (abs(vs[j]) > 1) {
        ++oracle_hits;
        o.require(sign == pell::Sign::Minus && j == 2 && k == 2, "oracle found a different coincidence");
      }
    }
  }
  o.require(oracle_hits == 1, "oracle coincidence count " + std::to_string(oracle_hits));
  return o;
}

// 5. Every witness over triples c <= 200, indices <= 20: n <= m <= 2n and the
//    congruence mod 4C; zero violations. < 1 min.
Outcome lemma_properties() {
  Outcome o;
  const auto summary = lemmas::audit_range(200, 20);
  std::size_t checked = 0;
  for (const auto& r : summary.reports) {
    o.require(r.anomalies.empty(), "odd-index coincidence");
    for (const auto& e : r.entries) {
      ++checked;
      o.require(e.index_relation, "index relation violated");
      o.require(e.congruence, "congruence violated");
      o.require(e.passed(), "audit entry failed");
    }
  }
  o.require(summary.violations == 0, std::to_string(summary.violations) + " violations");
  o.require(checked > 0, "no witnesses audited");
  if (o.ok) {
    o.detail = std::to_string(summary.triples) + " triples, " + std::to_string(checked) + " witnesses";
  }
  return o;
}

// 6. proof_step_inequality true on a log grid B in [8, 1e10], C in [B, 1e80],
//    false for at least one B < 8. < 1 s.
Outcome gap_inequality() {
  Outcome o;
  std::size_t points = 0;
  std::vector<Integer> bs{8};
  for (unsigned e = 1; e <= 10; ++e) {
    bs.push_back(pow10(e));
    if (e < 10) bs.push_back(3 * pow10(e));
  }
  for (const auto& B : bs) {
    std::vector<Integer> cs{B};
    for (unsigned e = 0; e <= 80; ++e) {
      for (int mant : {1, 2, 5}) {
        const Integer c = mant * pow10(e);
        if (c >= B && c <= pow10(80)) cs.push_back(c);
      }
    }
    for (const auto& C : cs) {
      ++points;
      if (!lemmas::proof_step_inequality(B, C).holds) {
        o.require(false, "fails at B=" + B.get_str() + " C=" + C.get_str());
      }
    }
  }
  bool some_small_fails = false;
  for (long B = 1; B < 8; ++B) {
    for (unsigned e = 1; e <= 80; ++e) {
      const Integer C = pow10(e);
      if (C >= B && !lemmas::proof_step_inequality(B, C).holds) some_small_fails = true;
    }
  }
  o.require(some_small_fails, "no B < 8 sample fails");
  if (o.ok) o.detail = std::to_string(points) + " grid points hold; B < 8 fails somewhere";
  return o;
}

// 7. search --limit 1000: size 5 empty; size 4 contains {1,3,8,120} and {2,4,12,420}. < 1 min.
Outcome desk_search() {
  Outcome o;
  const auto five = cli({"search", "--limit", "1000", "--size", "5", "--json"});
  o.require(five.code == 0, "search size 5 exit " + std::to_string(five.code));
  const auto j5 = nlohmann::json::parse(five.out);
  o.require(j5["count"] == 0 && j5["tuples"].empty(), "quintuples found");

  const auto four = cli({"search", "--limit", "1000", "--size", "4", "--json"});
  o.require(four.code == 0, "search size 4 exit " + std::to_string(four.code));
  const auto j4 = nlohmann::json::parse(four.out);
  const auto& list = j4["tuples"];
  auto contains = [&](std::vector<int> t) {
    return std::find(list.begin(), list.end(), nlohmann::json(t)) != list.end();
  };
  o.require(!list.empty(), "no quadruples");
  o.require(contains({1, 3, 8, 120}), "missing {1,3,8,120}");
  o.require(contains({2, 4, 12, 420}), "missing {2,4,12,420}");
  if (o.ok) o.detail = std::to_string(list.size()) + " quadruples, 0 quintuples";
  return o;
}

// 8. Every triple at limit 200: d+ > 4abc and 4b^2 < d+. < 10 s.
Outcome regular_extension_gap() {
  Outcome o;
  const auto triples = tuples::enumerate_tuples(200, 3);
  for (const auto& t : triples) {
    const Integer d = tuples::regular_extension(t[0], t[1], t[2]);
    o.require(d > 4 * t[0] * t[1] * t[2], "d+ <= 4abc for " + t.to_string());
    o.require(bounds::b_bound_from_gap(t[1], d), "4b^2 >= d+ for " + t.to_string());
  }
  o.require(!triples.empty(), "no triples");
  if (o.ok) o.detail = std::to_string(triples.size()) + " triples";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Fermat-set reproduction", 1e-3, fermat_set},
      {2, "Theorem bound d < 10^76", 1.0, theorem_bound},
      {3, "Constant-gluing audit", 1e-3, constant_gluing},
      {4, "Intersection oracle on (1,3,8)", 1e-2, intersection_oracle},
      {5, "Lemma property suite (c <= 200, index <= 20)", 60.0, lemma_properties},
      {6, "Gap-lemma closing inequality", 1.0, gap_inequality},
      {7, "Desk-scale search (limit 1000)", 60.0, desk_search},
      {8, "Regular-extension gap (limit 200)", 10.0, regular_extension_gap},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = secs < c.budget_seconds;
    if (!in_time) o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time budget");
    const bool pass = o.ok && in_time;
    failed += pass ? 0 : 1;
    std::printf("[%s] AC%d %s (%.3f ms, budget %.0f ms)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                secs * 1e3, c.budget_seconds * 1e3, o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%zu/%zu acceptance criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
