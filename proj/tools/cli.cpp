#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dioph/arith.hpp"
#include "dioph/bounds.hpp"
#include "dioph/errors.hpp"
#include "dioph/lemmas.hpp"
#include "dioph/pell.hpp"
#include "dioph/serialize.hpp"
#include "dioph/tuples.hpp"

namespace dioph::cli {
namespace {

using io::Json;

struct GlobalOptions {
  bool json = false;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

struct Triple {
  Integer a, b, c;
};

Triple parse_triple(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw InputError("--triple expects a,b,c, got '" + text + "'");
  return {arith::parse_natural(parts[0]), arith::parse_natural(parts[1]),
          arith::parse_natural(parts[2])};
}

std::uint64_t parse_bounded(const std::string& text, const char* what, std::uint64_t max) {
  const Integer v = arith::parse_natural(text);
  if (!mpz_fits_ulong_p(v.get_mpz_t()) || v.get_ui() > max) {
    throw InputError(std::string(what) + " is out of range: " + text);
  }
  return v.get_ui();
}

std::string format_real(double x) {
  std::ostringstream s;
  s << std::setprecision(6) << std::scientific << x;
  return s.str();
}

std::string format_list(const std::vector<Integer>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].get_str();
  }
  return out + "]";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// --- verify ------------------------------------------------------------------

int cmd_verify(const std::vector<std::string>& raw, const GlobalOptions& g, std::ostream& out) {
  std::vector<Integer> elems;
  for (const auto& r : raw) elems.push_back(arith::parse_natural(r));
  const tuples::MTuple tuple(std::move(elems));
  const auto report = tuples::verify_tuple(tuple);
  if (g.json) {
    print_json(out, io::to_json(tuple, report));
  } else {
    out << "tuple: " << tuple.to_string() << '\n';
    out << "verified: " << (report.ok ? "yes" : "no") << '\n';
    for (const auto& p : report.failing) {
      out << "failing pair: (" << p.first.get_str() << "," << p.second.get_str() << ") "
          << p.first.get_str() << "*" << p.second.get_str() << "+1 = "
          << Integer(p.first * p.second + 1).get_str() << " is not a square\n";
    }
  }
  return report.ok ? kSuccess : kClaimFailed;
}

// --- extend ------------------------------------------------------------------

int cmd_extend(const std::vector<std::string>& raw, const GlobalOptions& g, std::ostream& out) {
  if (raw.size() != 3) throw InputError("extend expects exactly three numbers a b c");
  const Integer a = arith::parse_natural(raw[0]);
  const Integer b = arith::parse_natural(raw[1]);
  const Integer c = arith::parse_natural(raw[2]);
  const auto triple = tuples::triple_rst(a, b, c);
  const Integer d = tuples::regular_extension(triple);
  const tuples::MTuple quad({a, b, c, d});
  const auto report = tuples::verify_tuple(quad);
  const bool above_4abc = d > 4 * a * b * c;
  const bool gap = bounds::b_bound_from_gap(b, d);
  if (g.json) {
    Json j = io::to_json(quad, report);
    j["d_plus"] = io::integer_to_json(d);
    j["r"] = io::integer_to_json(triple.r);
    j["s"] = io::integer_to_json(triple.s);
    j["t"] = io::integer_to_json(triple.t);
    j["exceeds_4abc"] = above_4abc;
    j["exceeds_4b2"] = gap;
    print_json(out, j);
  } else {
    out << d.get_str() << '\n';
    out << "r s t: " << triple.r.get_str() << ' ' << triple.s.get_str() << ' ' << triple.t.get_str()
        << '\n';
    out << "quadruple " << quad.to_string() << ": " << (report.ok ? "verified" : "NOT verified")
        << '\n';
    out << "d+ > 4abc: " << (above_4abc ? "yes" : "no") << '\n';
    out << "d+ > 4b^2: " << (gap ? "yes" : "no") << '\n';
  }
  return report.ok && above_4abc && gap ? kSuccess : kClaimFailed;
}

// --- pell --------------------------------------------------------------------

int cmd_pell(const std::string& triple_text, const std::string& kind_text, int sign, std::size_t terms,
             const GlobalOptions& g, std::ostream& out) {
  const auto t = parse_triple(triple_text);
  pell::SequenceKind kind;
  if (kind_text == "v" || kind_text == "V") {
    kind = pell::SequenceKind::V;
  } else if (kind_text == "w" || kind_text == "W") {
    kind = pell::SequenceKind::W;
  } else {
    throw InputError("--kind must be v or w");
  }
  if (sign != 1 && sign != -1) throw InputError("--sign must be +1 or -1");
  if (terms < 1) throw InputError("--terms must be at least 1");
  const auto pt = pell::make_pell_triple(t.a, t.b, t.c);
  const auto values =
      pell::generate_sequence(pt, kind, sign == 1 ? pell::Sign::Plus : pell::Sign::Minus, terms);

  bool all_solve = true;
  std::vector<Integer> companions;
  for (const auto& z : values) {
    auto comp = pell::check_pell_term(pt, kind, z);
    all_solve = all_solve && comp.has_value();
    companions.push_back(comp.value_or(Integer(-1)));
  }

  if (g.json) {
    Json vals = Json::array();
    Json comps = Json::array();
    for (const auto& z : values) vals.push_back(io::integer_to_json(z));
    for (const auto& x : companions) comps.push_back(io::integer_to_json(x));
    print_json(out, Json{{"A", io::integer_to_json(pt.A)},
                         {"B", io::integer_to_json(pt.B)},
                         {"C", io::integer_to_json(pt.C)},
                         {"kind", pell::to_string(kind)},
                         {"sign", sign},
                         {"terms", vals},
                         {"companions", comps},
                         {"all_solve", all_solve}});
  } else {
    out << format_list(values) << '\n';
  }
  return all_solve ? kSuccess : kClaimFailed;
}

// --- intersect ---------------------------------------------------------------

int cmd_intersect(const std::string& triple_text, std::size_t max_index, const GlobalOptions& g,
                  std::ostream& out) {
  const auto t = parse_triple(triple_text);
  const auto pt = pell::make_pell_triple(t.a, t.b, t.c);
  const auto found = pell::find_intersections(pt, max_index);

  bool ok = found.anomalies.empty();
  std::vector<bool> verified;
  for (const auto& w : found.witnesses) {
    bool v = true;
    if (w.extends(pt)) {
      v = tuples::verify_tuple(tuples::MTuple::from_unordered({pt.A, pt.B, pt.C, w.D})).ok;
    }
    verified.push_back(v);
    ok = ok && v;
  }

  if (g.json) {
    Json ws = Json::array();
    for (std::size_t i = 0; i < found.witnesses.size(); ++i) {
      Json rec = io::to_json(pt, found.witnesses[i]);
      rec["quadruple_verified"] = static_cast<bool>(verified[i]);
      ws.push_back(std::move(rec));
    }
    Json an = Json::array();
    for (const auto& a : found.anomalies) an.push_back(io::to_json(pt, a));
    print_json(out, Json{{"witnesses", ws}, {"anomalies", an}});
  } else {
    out << "triple " << pt.A.get_str() << "," << pt.B.get_str() << "," << pt.C.get_str()
        << " (R,S,T = " << pt.R.get_str() << "," << pt.S.get_str() << "," << pt.T.get_str()
        << "), indices <= " << max_index << '\n';
    out << "witnesses: " << found.witnesses.size() << '\n';
    for (std::size_t i = 0; i < found.witnesses.size(); ++i) {
      const auto& w = found.witnesses[i];
      out << "  lambda=" << pell::value(w.lambda) << " j=" << w.j << " k=" << w.k << " m=" << w.m
          << " n=" << w.n << " z=" << w.z.get_str() << " D=" << w.D.get_str();
      if (w.extends(pt)) out << (verified[i] ? " quadruple verified" : " quadruple NOT verified");
      out << '\n';
    }
    for (const auto& a : found.anomalies) {
      out << "  ANOMALY odd index: lambda=" << pell::value(a.lambda) << " j=" << a.j << " k=" << a.k
          << " z=" << a.z.get_str() << '\n';
    }
  }
  return ok ? kSuccess : kClaimFailed;
}

// --- search ------------------------------------------------------------------

int cmd_search(const std::string& limit_text, unsigned size, std::size_t spot_check,
               const GlobalOptions& g, std::ostream& out) {
  const auto limit = parse_bounded(limit_text, "--limit", tuples::kMaxEnumerationLimit);
  const auto found = tuples::enumerate_tuples(limit, size, g.jobs);
  std::optional<tuples::MTuple> unlisted;
  if (spot_check > 0) {
    unlisted = tuples::find_unlisted_tuple(limit, size, found, spot_check, g.seed);
  }
  if (g.json) {
    Json j{{"limit", limit}, {"size", size}, {"count", found.size()}, {"tuples", io::tuples_to_json(found)}};
    if (spot_check > 0) {
      j["spot_check"] = Json{{"samples", spot_check},
                             {"seed", g.seed},
                             {"unlisted", unlisted ? io::to_json(*unlisted) : Json(nullptr)}};
    }
    print_json(out, j);
  } else {
    out << "count: " << found.size() << '\n';
    io::write_tuple_lines(out, found);
    if (unlisted) out << "spot check found unlisted tuple: " << unlisted->to_string() << '\n';
  }
  return unlisted ? kClaimFailed : kSuccess;
}

// --- audit -------------------------------------------------------------------

int cmd_audit(const std::string& c_max_text, std::size_t max_index, bool full, const GlobalOptions& g,
              std::ostream& out) {
  const auto c_max = parse_bounded(c_max_text, "--c-max", tuples::kMaxEnumerationLimit);
  const auto summary = lemmas::audit_range(c_max, max_index, g.jobs);
  if (g.json) {
    print_json(out, io::to_json(summary, full));
  } else {
    out << "triples with c <= " << c_max << ": " << summary.triples << '\n';
    out << "witnesses (indices <= " << max_index << "): " << summary.witnesses << '\n';
    out << "gap-lemma clauses applicable: " << summary.gap_checks << '\n';
    out << "violations: " << summary.violations << '\n';
    for (const auto& r : summary.reports) {
      if (r.passed() && !full) continue;
      out << "  triple " << r.triple.A.get_str() << "," << r.triple.B.get_str() << ","
          << r.triple.C.get_str() << ": " << r.entries.size() << " witnesses, "
          << r.violations() << " violations\n";
      for (const auto& e : r.entries) {
        out << "    m=" << e.witness.m << " n=" << e.witness.n << " D=" << e.witness.D.get_str()
            << " index=" << e.index_relation << " congruence=" << e.congruence
            << " gap=" << (e.gap_applicable ? (e.gap_holds ? "1" : "0") : "n/a")
            << " quadruple=" << e.quadruple_verified << '\n';
      }
      for (const auto& a : r.anomalies) {
        out << "    odd-index coincidence j=" << a.j << " k=" << a.k << " z=" << a.z.get_str() << '\n';
      }
    }
    out << (summary.passed() ? "audit passed" : "audit FAILED") << '\n';
  }
  return summary.passed() ? kSuccess : kClaimFailed;
}

// --- bound -------------------------------------------------------------------

int cmd_bound(double tolerance, double lo, double hi, const GlobalOptions& g, std::ostream& out) {
  const auto report = bounds::solve_crossover(tolerance, lo, hi);
  const auto consistency = bounds::check_constant_consistency();
  const bool precise = bounds::bracket_confirmed_precise(report);
  const bool below = report.c_star < 1e76 && report.bracket_hi < 1e76;
  const bool ok = !report.verdict_at_10_76 && below && consistency.passed() && precise;

  const Json j = io::to_json(report);
  if (g.json) {
    Json full = j;
    full["constants"] = io::to_json(consistency);
    full["precise_cross_check"] = precise;
    print_json(out, full);
  } else {
    out << "combined inequality crossover C*: " << format_real(report.c_star) << '\n';
    out << "bracket: [" << format_real(report.bracket_lo) << ", " << format_real(report.bracket_hi)
        << "] after " << report.iterations << " bisection steps\n";
    out << "holds at C = 1e76: " << (report.verdict_at_10_76 ? "yes" : "no") << '\n';
    out << "high-precision bracket check: " << (precise ? "confirmed" : "MISMATCH") << '\n';
    for (const auto& c : consistency.checks) {
      out << "constant " << c.name << ": " << c.relation << " margin " << format_real(c.margin)
          << (c.passed ? " ok" : " FAILED") << '\n';
    }
    out << (ok ? "d < 10^76 confirmed" : "d < 10^76 NOT confirmed") << '\n';
    out << j.dump() << '\n';
  }
  return ok ? kSuccess : kClaimFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diophantine tuple toolkit: verification, Pellian intersections, lemma audits, bounds"};
  app.name("dioph");
  app.require_subcommand(1, 1);
  app.fallthrough();

  GlobalOptions g;
  app.add_flag("--json", g.json, "Emit structured JSON instead of text");
  app.add_option("--seed", g.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for search and audit")
      ->check(CLI::Range(1U, 1024U))
      ->capture_default_str();

  std::vector<std::string> verify_args;
  auto* verify = app.add_subcommand("verify", "Check that a set is a Diophantine tuple");
  verify->add_option("elements", verify_args, "Strictly increasing positive integers")
      ->required()
      ->expected(2, -1);

  std::vector<std::string> extend_args;
  auto* extend = app.add_subcommand("extend", "Regular extension d+ of a Diophantine triple");
  extend->add_option("triple", extend_args, "a b c with a < b < c")->required()->expected(3);

  std::string pell_triple;
  std::string pell_kind = "v";
  int pell_sign = 1;
  std::size_t pell_terms = 4;
  auto* pell_cmd = app.add_subcommand("pell", "Terms of the v or w solution sequence");
  pell_cmd->add_option("--triple", pell_triple, "a,b,c")->required();
  pell_cmd->add_option("--kind", pell_kind, "v or w")->capture_default_str();
  pell_cmd->add_option("--sign", pell_sign, "Sign of z0 / z1 (+1 or -1)")->capture_default_str();
  pell_cmd->add_option("--terms", pell_terms, "Number of terms")->capture_default_str();

  std::string inter_triple;
  std::size_t inter_max = 10;
  auto* inter = app.add_subcommand("intersect", "Common terms v_j = w_k of the diagonal classes");
  inter->add_option("--triple", inter_triple, "a,b,c")->required();
  inter->add_option("--max-index", inter_max, "Largest index searched")->capture_default_str();

  std::string search_limit;
  unsigned search_size = 4;
  std::size_t spot_check = 0;
  auto* search = app.add_subcommand("search", "Enumerate all Diophantine tuples up to a limit");
  search->add_option("--limit", search_limit, "Largest element")->required();
  search->add_option("--size", search_size, "Tuple size (2..5)")->capture_default_str();
  search->add_option("--spot-check", spot_check, "Random samples checked against the result")
      ->capture_default_str();

  std::string audit_cmax = "200";
  std::size_t audit_max = 20;
  bool audit_full = false;
  auto* audit = app.add_subcommand("audit", "Check the index relation, congruence and gap bound");
  audit->add_option("--c-max", audit_cmax, "Largest c of the audited triples")->capture_default_str();
  audit->add_option("--max-index", audit_max, "Largest sequence index")->capture_default_str();
  audit->add_flag("--full", audit_full, "List every triple, not only failing ones");

  double tolerance = 0.01;
  double lo = 70.0;
  double hi = 80.0;
  auto* bound = app.add_subcommand("bound", "Solve the combined inequality for its crossover");
  bound->add_option("--tolerance", tolerance, "Relative bracket width")->capture_default_str();
  bound->add_option("--lo", lo, "Lower bracket end, log10 C")->capture_default_str();
  bound->add_option("--hi", hi, "Upper bracket end, log10 C")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_args, g, out);
    if (extend->parsed()) return cmd_extend(extend_args, g, out);
    if (pell_cmd->parsed()) return cmd_pell(pell_triple, pell_kind, pell_sign, pell_terms, g, out);
    if (inter->parsed()) return cmd_intersect(inter_triple, inter_max, g, out);
    if (search->parsed()) return cmd_search(search_limit, search_size, spot_check, g, out);
    if (audit->parsed()) return cmd_audit(audit_cmax, audit_max, audit_full, g, out);
    if (bound->parsed()) return cmd_bound(tolerance, lo, hi, g, out);
  } catch (const HypothesisError& e) {
    err << "hypothesis not met: " << e.what() << '\n';
    return kClaimFailed;
  } catch (const DomainError& e) {
    err << "claim fails: " << e.what() << '\n';
    return kClaimFailed;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConfigurationError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kUsageError;
  }
  err << "error: no subcommand\n";
  return kUsageError;
}

}  // namespace dioph::cli
