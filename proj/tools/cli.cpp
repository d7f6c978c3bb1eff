#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "resgrass/enumerate.hpp"
#include "resgrass/errors.hpp"
#include "resgrass/oracle.hpp"
#include "resgrass/resonance.hpp"

namespace resgrass::cli {

namespace {

using nlohmann::json;

constexpr const char* kBenchNote =
    "Published CAS timings for this computation: A3 0.036 s, Hessian 14.004 s. "
    "The Ext-annihilator route took 0.125 s and 9038.345 s (2.2 GHz AMD). "
    "No baseline is run here.";

Arrangement load(const RunConfig& cfg, const PrimeField& field) {
  if (!cfg.fixture.empty() && !cfg.input.empty()) throw InputError("use either --fixture or --input, not both");
  if (!cfg.fixture.empty()) {
    Arrangement a = fixture(cfg.fixture);
    validate(a, field);
    return a;
  }
  if (!cfg.input.empty()) return load_arrangement_file(cfg.input, field);
  throw InputError("an arrangement is required (--fixture or --input)");
}

std::uint64_t budget(const RunConfig& cfg) { return cfg.budget ? cfg.budget : default_budget(); }

std::string fmt_ms(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << ms;
  return s.str();
}

json point_json(const PrimeField& field, const std::vector<Coeff>& v) {
  json a = json::array();
  for (auto c : v) a.push_back(field.lift(c));
  return a;
}

std::string point_text(const PrimeField& field, const std::vector<Coeff>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(field.lift(v[i]));
  return s + ")";
}

std::vector<std::int64_t> parse_coords(const std::string& text, int n) {
  std::vector<std::int64_t> out;
  std::istringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw InputError("bad coordinate '" + tok + "'");
    } catch (const std::logic_error&) {
      throw InputError("bad coordinate '" + tok + "'");
    }
  }
  if (static_cast<int>(out.size()) != n)
    throw InputError("expected " + std::to_string(n) + " coordinates, got " + std::to_string(out.size()));
  return out;
}

json report_json(const ResonanceReport& r, const PrimeField& field, const std::string& order) {
  return json{{"arrangement", r.arrangement},
              {"n", r.n},
              {"p", field.modulus()},
              {"order", order},
              {"hilbert", format_hp(r.hilbert)},
              {"n_os_points", r.n_os_points},
              {"n_span_forms", r.n_span_forms},
              {"ring_vars", r.ring_vars},
              {"groebner_size", r.groebner_size},
              {"timings_ms", r.timings_ms}};
}

int cmd_r1(const RunConfig& cfg, std::ostream& out) {
  const PrimeField field(cfg.p);
  const Arrangement a = load(cfg, field);
  ResonanceOptions opts{parse_order(cfg.order), cfg.eliminate};
  const auto rep = r1_hilbert(a, field, opts);
  if (cfg.json) {
    out << report_json(rep, field, cfg.order).dump(2) << "\n";
    return kExitOk;
  }
  out << format_hp(rep.hilbert) << "\n";
  out << "arrangement: " << rep.arrangement << " (n=" << rep.n << ", p=" << field.modulus() << ", order=" << cfg.order
      << ")\n";
  out << "os points: " << rep.n_os_points << ", span forms: " << rep.n_span_forms
      << ", ring vars: " << rep.ring_vars << ", groebner size: " << rep.groebner_size << "\n";
  out << "timings_ms:";
  for (const auto& [stage, ms] : rep.timings_ms) out << " " << stage << "=" << fmt_ms(ms);
  out << "\n";
  out << "note: each point of the Grassmannian scheme is a line of R^1 in P(E_1)\n";
  return kExitOk;
}

int cmd_check_point(const RunConfig& cfg, std::ostream& out) {
  const PrimeField field(cfg.p);
  const Arrangement a = load(cfg, field);
  const ExteriorAlgebra alg(a.n, field);
  const auto pt = alg.linear_int(parse_coords(cfg.coords, a.n));
  if (pt.is_zero()) throw InputError("the zero vector is not a projective point");

  const int rank = a.rank(field);
  int up_to = a.realization ? rank : std::min(rank, 1);
  if (cfg.k) {
    if (*cfg.k < 0) throw InputError("--k must be non-negative");
    up_to = std::max(up_to, *cfg.k);
  }
  const auto prof = aomoto_profile(a, alg, pt, up_to);
  const bool r1 = is_resonant_1(a, alg, pt);
  std::optional<ResonanceKVerdict> vk;
  if (cfg.k) vk = is_resonant_k(a, alg, pt, *cfg.k);

  std::vector<std::int64_t> coords;
  for (std::size_t i = 0; i < static_cast<std::size_t>(a.n); ++i) coords.push_back(field.lift(alg.to_vector(pt)[i]));
  if (cfg.json) {
    json j{{"arrangement", a.name}, {"point", coords}, {"h", prof.h}, {"chain_dims", prof.chain_dims},
           {"resonant_1", r1}};
    if (vk)
      j["resonant_k"] = {{"k", *cfg.k},
                         {"cohomology_nonzero", vk->cohomology_nonzero},
                         {"witness_exists", vk->witness_exists},
                         {"diverges", vk->diverges()}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "arrangement: " << a.name << "\n";
  out << "point:";
  for (auto c : coords) out << " " << c;
  out << "\n";
  for (std::size_t k = 0; k < prof.h.size(); ++k)
    out << "h^" << k << " = " << prof.h[k] << "  (dim A^" << k << " = " << prof.chain_dims[k] << ")\n";
  out << (r1 ? "resonant" : "non-resonant") << " (R^1)\n";
  if (vk) {
    out << "R^" << *cfg.k << ": h^" << *cfg.k << (vk->cohomology_nonzero ? " != 0" : " = 0")
        << ", witness " << (vk->witness_exists ? "found" : "absent");
    if (vk->diverges()) out << " (tests diverge)";
    out << "\n";
  }
  return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const PrimeField field(cfg.p);
  const Arrangement a = load(cfg, field);
  const PrimeField small(cfg.q);
  const auto rep = check_plane_union(a, cfg.q, budget(cfg));
  if (cfg.json) {
    json planes = json::array();
    for (const auto& p : rep.planes) planes.push_back({point_json(small, p.rows[0]), point_json(small, p.rows[1])});
    json only_r1 = json::array(), only_planes = json::array();
    for (const auto& v : rep.only_resonant) only_r1.push_back(point_json(small, v));
    for (const auto& v : rep.only_planes) only_planes.push_back(point_json(small, v));
    out << json{{"arrangement", a.name},
                {"q", cfg.q},
                {"agree", rep.agree},
                {"resonant_points", rep.resonant_points.size()},
                {"planes", planes},
                {"planes_disjoint", rep.planes_disjoint},
                {"only_resonant", only_r1},
                {"only_planes", only_planes}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << (rep.agree ? "agree" : "disagree") << "\n";
  out << "arrangement: " << a.name << " over F_" << cfg.q << "\n";
  out << "resonant points: " << rep.resonant_points.size() << "\n";
  out << "planes: " << rep.planes.size() << (rep.planes_disjoint ? " (pairwise disjoint)" : " (overlapping)") << "\n";
  for (const auto& p : rep.planes)
    out << "  span{" << point_text(small, p.rows[0]) << ", " << point_text(small, p.rows[1]) << "}\n";
  for (const auto& v : rep.only_resonant) out << "only in R^1: " << point_text(small, v) << "\n";
  for (const auto& v : rep.only_planes) out << "only on planes: " << point_text(small, v) << "\n";
  return kExitOk;
}

int cmd_fixtures(const RunConfig& cfg, std::ostream& out) {
  const PrimeField field(cfg.p);
  json list = json::array();
  for (const auto& name : fixture_names()) {
    const auto a = fixture(name);
    if (cfg.json) {
      list.push_back({{"name", a.name}, {"n", a.n}, {"flats", a.rank2_flats}, {"realization", a.realization.has_value()}});
      continue;
    }
    out << a.name << ": n=" << a.n << ", " << a.rank2_flats.size() << " flats"
        << (a.realization ? ", realized" : ", combinatorial") << "\n ";
    for (const auto& f : a.rank2_flats) {
      out << " {";
      for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
      out << "}";
    }
    out << "\n";
  }
  if (cfg.json) out << list.dump(2) << "\n";
  return kExitOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  const PrimeField field(cfg.p);
  if (cfg.runs < 1) throw InputError("--runs must be positive");
  std::vector<Arrangement> targets;
  if (!cfg.fixture.empty() || !cfg.input.empty()) {
    targets.push_back(load(cfg, field));
  } else {
    for (const auto& name : fixture_names()) targets.push_back(fixture(name));
  }
  const std::vector<std::string> stages{"span", "eliminate", "groebner", "hilbert", "total"};
  json all = json::array();
  if (!cfg.json) out << kBenchNote << "\n";
  for (const auto& a : targets) {
    std::map<std::string, std::vector<double>> samples;
    std::string hp;
    for (int r = 0; r < cfg.runs; ++r) {
      const auto rep = r1_hilbert(a, field, {parse_order(cfg.order), cfg.eliminate});
      hp = format_hp(rep.hilbert);
      for (const auto& s : stages) samples[s].push_back(rep.timings_ms.at(s));
    }
    json row{{"arrangement", a.name}, {"hilbert", hp}, {"runs", cfg.runs}};
    if (!cfg.json) out << "\n" << a.name << " (" << hp << ", " << cfg.runs << " runs)\n"
                       << "  stage        min_ms     median_ms\n";
    for (const auto& s : stages) {
      auto v = samples[s];
      std::sort(v.begin(), v.end());
      const double median = v.size() % 2 ? v[v.size() / 2] : (v[v.size() / 2 - 1] + v[v.size() / 2]) / 2;
      row["min_ms"][s] = v.front();
      row["median_ms"][s] = median;
      if (!cfg.json)
        out << "  " << std::left << std::setw(10) << s << std::right << std::setw(12) << fmt_ms(v.front())
            << std::setw(14) << fmt_ms(median) << "\n";
    }
    all.push_back(row);
  }
  if (cfg.json) out << all.dump(2) << "\n";
  return kExitOk;
}

void add_arrangement_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--fixture", cfg.fixture, "Built-in arrangement: A3 or Hessian");
  sub->add_option("--input", cfg.input, "Arrangement file (matrix, flats or JSON)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"First resonance varieties of hyperplane arrangements via the Grassmannian G(2,n)", "resgrass"};
  app.require_subcommand(1);
  app.add_option("--p", cfg.p, "Working prime for the Groebner computation")->capture_default_str();
  app.add_flag("--json", cfg.json, "Machine-readable output");
  app.add_option("--budget", cfg.budget, "Cap on enumerated candidates (default 1e7 or RESGRASS_BUDGET)");

  auto* r1 = app.add_subcommand("r1", "Hilbert polynomial of G(2,n) ∩ span of the Orlik-Solomon points");
  add_arrangement_options(r1, cfg);
  r1->add_option("--order", cfg.order, "Monomial order: grevlex or lex")->capture_default_str();
  r1->add_flag("!--no-eliminate", cfg.eliminate, "Keep linear forms as Groebner generators");

  auto* check = app.add_subcommand("check-point", "Aomoto cohomology and R^1 membership of a point");
  add_arrangement_options(check, cfg);
  check->add_option("--coords", cfg.coords, "Comma-separated integer coordinates, e.g. 0,1,0,0,-1,0")->required();
  check->add_option("--k", cfg.k, "Also test membership in R^k");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive check of R^1 against decomposables of I_2 over F_q");
  add_arrangement_options(oracle, cfg);
  oracle->add_option("--q", cfg.q, "Small prime for enumeration")->capture_default_str();

  auto* fixtures = app.add_subcommand("fixtures", "List built-in arrangements");
  (void)fixtures;

  auto* bench = app.add_subcommand("bench", "Per-stage timings of r1 on fixtures");
  add_arrangement_options(bench, cfg);
  bench->add_option("--runs", cfg.runs, "Repetitions per arrangement")->capture_default_str();
  bench->add_option("--order", cfg.order, "Monomial order: grevlex or lex")->capture_default_str();
  bench->footer(kBenchNote);

  // Global options are also accepted after the subcommand name.
  for (auto* sub : {r1, check, oracle, fixtures, bench}) {
    sub->add_option("--p", cfg.p, "Working prime");
    sub->add_flag("--json", cfg.json, "Machine-readable output");
    sub->add_option("--budget", cfg.budget, "Cap on enumerated candidates");
    sub->fallthrough(false);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, out, msg);
    err << msg.str();
    return e.get_exit_code() == 0 ? kExitOk : kExitInput;
  }

  try {
    if (r1->parsed()) return cmd_r1(cfg, out);
    if (check->parsed()) return cmd_check_point(cfg, out);
    if (oracle->parsed()) return cmd_oracle(cfg, out);
    if (fixtures->parsed()) return cmd_fixtures(cfg, out);
    if (bench->parsed()) return cmd_bench(cfg, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace resgrass::cli
