#include "nilzeta/cli.hpp"
#include "serialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace nilzeta::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<Rational> rationals(const std::string& csv, std::size_t n, const char* what) {
  const auto parts = split(csv);
  if (parts.size() != n) throw UsageError(std::string(what) + ": expected " + std::to_string(n) + " comma-separated values");
  std::vector<Rational> out;
  for (const auto& p : parts) out.push_back(parse_rational(p));
  return out;
}

cplx parse_complex(const std::string& text) {
  const auto parts = split(text);
  if (parts.empty() || parts.size() > 2) throw UsageError("--s: expected re or re,im");
  return {to_double(parse_rational(parts[0])), parts.size() == 2 ? to_double(parse_rational(parts[1])) : 0.0};
}

RepLabel parse_label(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--label: expected type:params, e.g. generic:1,0,5");
  const std::string type = text.substr(0, colon), params = text.substr(colon + 1);
  RepLabel l;
  if (type == "scalar") {
    const auto p = rationals(params, 2, "--label");
    l = ScalarLabel{to_double(p[0]), to_double(p[1])};
  } else if (type == "schrodinger") {
    l = SchrodingerLabel{to_double(rationals(params, 1, "--label")[0])};
  } else if (type == "generic") {
    const auto p = rationals(params, 3, "--label");
    l = GenericLabel{to_double(p[0]), to_double(p[1]), to_double(p[2])};
  } else {
    throw UsageError("--label: unknown type " + type);
  }
  validate_label(l);
  return l;
}

// flag > NILZETA_* environment > config file > built-in default
struct Settings {
  std::map<std::string, std::string> config;

  std::string pick(const std::string& key, const std::string& flag, const char* env, const std::string& fallback) const {
    if (!flag.empty()) return flag;
    if (env) {
      if (const char* e = std::getenv(env); e && *e) return e;
    }
    if (auto it = config.find(key); it != config.end()) return it->second;
    return fallback;
  }
  int pick_int(const std::string& key, const std::string& flag, const char* env, int fallback) const {
    const std::string v = pick(key, flag, env, std::to_string(fallback));
    try {
      std::size_t used = 0;
      const int x = std::stoi(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return x;
    } catch (const std::exception&) {
      throw UsageError(key + ": not an integer: " + v);
    }
  }
  double pick_double(const std::string& key, const std::string& flag, double fallback) const {
    const std::string v = pick(key, flag, nullptr, "");
    return v.empty() ? fallback : to_double(parse_rational(v));
  }
};

struct SpecFlags {
  std::string r, u, v, e, f, g, h, chi;

  void add(CLI::App* app, bool with_chi = true) {
    app->add_option("--r", r, "lattice parameter r (positive integer)");
    app->add_option("--u", u, "lattice parameter u");
    app->add_option("--v", v, "lattice parameter v");
    app->add_option("--e", e, "lattice parameter e");
    app->add_option("--f", f, "lattice parameter f");
    app->add_option("--g", g, "lattice parameter g");
    app->add_option("--h", h, "lattice parameter h");
    if (with_chi) app->add_option("--chi", chi, "character a,b,c,phi4,phi5");
  }
  LatticeSpec spec(const Settings& st) const {
    LatticeSpec s = LatticeSpec::gamma0();
    const Rational rr = parse_rational(st.pick("r", r, nullptr, "1"));
    if (!is_integer(rr)) throw UsageError("--r must be an integer");
    s.r = static_cast<long long>(num(rr));
    s.u = parse_rational(st.pick("u", u, nullptr, "1"));
    s.v = parse_rational(st.pick("v", v, nullptr, "1"));
    s.e = parse_rational(st.pick("e", e, nullptr, "0"));
    s.f = parse_rational(st.pick("f", f, nullptr, "0"));
    s.g = parse_rational(st.pick("g", g, nullptr, "0"));
    s.h = parse_rational(st.pick("h", h, nullptr, "0"));
    s.validate();
    return s;
  }
  Character character(const LatticeSpec& s, const Settings& st) const {
    const Character c = Character::parse(st.pick("chi", chi, nullptr, "0,0,0,0,0"));
    if (!character_validate(s, c)) throw UsageError("character " + c.str() + " is not a character of this lattice");
    return c;
  }
};

std::string format_of(const Settings& st, const std::string& flag, const std::string& fallback,
                      std::initializer_list<const char*> allowed) {
  const std::string f = st.pick("format", flag, nullptr, fallback);
  for (const char* a : allowed)
    if (f == a) return f;
  throw UsageError("--format " + f + " is not supported by this command");
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---- command bodies ----

int cmd_group(const std::string& op, const std::vector<std::string>& args, const std::string& format, std::ostream& out) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) throw UsageError("group " + op + ": expected " + std::to_string(n) + " arguments");
  };
  GroupElement res;
  if (op == "mul") {
    need(2);
    res = multiply(parse_group_element(args[0]), parse_group_element(args[1]));
  } else if (op == "comm") {
    need(2);
    res = commutator(parse_group_element(args[0]), parse_group_element(args[1]));
  } else if (op == "inv") {
    need(1);
    res = inverse(parse_group_element(args[0]));
  } else if (op == "pow") {
    need(2);
    const Rational k = parse_rational(args[1]);
    if (!is_integer(k)) throw UsageError("group pow: exponent must be an integer");
    res = power(parse_group_element(args[0]), static_cast<long long>(num(k)));
  } else if (op == "dilate") {
    need(2);
    res = dilate(GradedDilation(parse_rational(args[0])), parse_group_element(args[1]));
  } else if (op == "bracket") {
    need(2);
    res = lie_bracket(parse_group_element(args[0]), parse_group_element(args[1]));
  } else {
    throw UsageError("group: unknown operation " + op);
  }
  if (format == "json") emit_json(out, to_json(res));
  else if (format == "csv") {
    for (int i = 0; i < 5; ++i) out << (i ? "," : "") << to_string(res[i]);
    out << '\n';
  } else out << to_string(res) << '\n';
  return 0;
}

json lattice_json(const LatticeSpec& s, const Character& chi) {
  json gens = json::array();
  for (const auto& g : generators(s)) gens.push_back(to_json(g));
  auto planar = [](const PlanarLattice& L) {
    json b = json::array();
    for (const auto& v : L.basis) b.push_back({to_string(v[0]), to_string(v[1])});
    return json{{"basis", b}, {"covolume", to_string(L.covolume())}};
  };
  const auto gp = gamma_double_prime(s);
  const auto ab = abelianization(s);
  json inv = json::array(), tors = json::array();
  for (const auto& x : ab.all_invariants) inv.push_back(x.str());
  for (const auto& x : ab.torsion_invariants) tors.push_back(x.str());
  json j{{"generators", gens},
         {"gamma_double_prime", planar(gp)},
         {"dual", planar(dual_lattice(gp))},
         {"abelianization", {{"invariants", inv}, {"torsion", tors}, {"quotient_finite", ab.quotient_finite}}},
         {"character", chi.str()},
         {"trivial_on_derived", trivial_on_derived(s, chi)},
         {"trivial_on_center", trivial_on_center(s, chi)},
         {"trivial", is_trivial(s, chi)}};
  const auto [l0, m0] = solve_lambda_mu0(s, chi);
  j["lambda0_mu0"] = {l0.str(), m0.str()};
  return j;
}

ZetaValue eval_zeta(const std::string& kind, cplx s, const std::string& a, const std::string& gram,
                    const std::string& shift, const std::string& label, const LatticeSpec& spec, const Character& chi,
                    const TorsionOptions& topt, SpectralCache& cache) {
  const ZetaOptions& zo = topt.zeta;
  if (kind == "hurwitz") return hurwitz(s, to_double(parse_rational(a.empty() ? "1" : a)), zo);
  if (kind == "riemann") return riemann(s, zo);
  if (kind == "epstein1") return epstein_1d(s, parse_rational(a.empty() ? "0" : a), zo);
  if (kind == "epstein2") {
    ShiftedLattice2 L;
    if (!gram.empty()) {
      const auto g = rationals(gram, 3, "--gram");
      L.gram = {{{g[0], g[1]}, {g[1], g[2]}}};
    }
    if (!shift.empty()) {
      const auto sh = rationals(shift, 2, "--shift");
      L.shift = {sh[0], sh[1]};
    }
    L.validate();
    return epstein_2d(s, L, zo);
  }
  if (kind == "rho") {
    if (label.empty()) throw UsageError("zeta --kind rho needs --label");
    const RepLabel l = parse_label(label);
    if (std::holds_alternative<ScalarLabel>(l)) {
      const auto& sc = std::get<ScalarLabel>(l);
      return to_zeta_value(scalar_zeta_closed(sc.alpha, sc.beta, s));
    }
    return to_zeta_value(zeta_from_spectra(cache.get(l), s));
  }
  if (kind == "zetaI") return zeta_I(spec, chi, s, zo);
  if (kind == "zetaII") return zeta_II(spec, chi, s, cache, zo);
  if (kind == "zetaIII") {
    const auto r = zeta_III_structural(spec, chi, s, cache, topt);
    if (!r.direct) throw AtPole("zetaIII: direct sum needs Re s > 10/(2 kappa)");
    return *r.direct;
  }
  throw UsageError("--kind must be hurwitz|riemann|epstein1|epstein2|rho|zetaI|zetaII|zetaIII");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"nilzeta: lattices, representations and zeta functions of a five-dimensional nilmanifold"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_help_flag("--help", "print help");  // -h is taken by the lattice parameter
  app.set_help_all_flag("--help-all");
  std::string config_path, format, precision, truncation;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--format", format, "output format: json|csv|text");
  app.add_option("--precision", precision, "decimal digits (also NILZETA_PRECISION)");
  app.add_option("--truncation", truncation, "Hermite truncation N for numeric spectra");

  SpecFlags spec_flags;

  auto* group = app.add_subcommand("group", "group operations: mul|comm|inv|pow|dilate|bracket");
  std::string group_op;
  std::vector<std::string> group_args;
  group->add_option("op", group_op, "operation")->required();
  group->add_option("args", group_args, "comma-separated exponential coordinates (or integer / rational)");

  auto* lattice = app.add_subcommand("lattice", "lattice report");
  spec_flags.add(lattice);

  auto* decomp = app.add_subcommand("decompose", "decomposition of L^2(Gamma\\G, chi) up to a cutoff");
  spec_flags.add(decomp);
  std::string cutoff;
  decomp->add_option("--cutoff", cutoff, "radius in the (lambda, mu) plane");

  std::string kind, s_text, a_text, gram, shift, label, from, to, steps;
  auto add_zeta_flags = [&](CLI::App* sub) {
    spec_flags.add(sub);
    sub->add_option("--kind", kind, "hurwitz|riemann|epstein1|epstein2|rho|zetaI|zetaII|zetaIII")->required();
    sub->add_option("--a", a_text, "Hurwitz or 1d Epstein shift");
    sub->add_option("--gram", gram, "g11,g12,g22 of the 2d Epstein form");
    sub->add_option("--shift", shift, "a,b of the 2d Epstein shift");
    sub->add_option("--label", label, "scalar:a,b | schrodinger:h | generic:l,m,n");
    sub->add_option("--cutoff", cutoff, "cutoff for zetaIII");
  };
  auto* zeta = app.add_subcommand("zeta", "evaluate a zeta function");
  auto* zeta_eval = zeta->add_subcommand("eval", "evaluate at one point");
  zeta->require_subcommand(1);
  add_zeta_flags(zeta_eval);
  zeta_eval->add_option("--s", s_text, "re or re,im")->required();

  auto* plot = app.add_subcommand("plot-data", "(s, zeta(s)) on a real grid as CSV");
  add_zeta_flags(plot);
  plot->add_option("--from", from, "start of the grid")->required();
  plot->add_option("--to", to, "end of the grid")->required();
  plot->add_option("--steps", steps, "number of intervals");

  auto* torsion = app.add_subcommand("torsion", "analytic torsion report");
  spec_flags.add(torsion);
  bool check_decomposition = false;
  std::string check_s;
  torsion->add_flag("--check-decomposition", check_decomposition, "compare the factor assembly with the direct sum");
  torsion->add_option("--cutoff", cutoff, "cutoff for the decomposition check");
  torsion->add_option("--s", check_s, "evaluation point of the decomposition check (default 11/6)");

  auto* verify = app.add_subcommand("verify", "run invariant suites");
  std::string suite = "all";
  verify->add_option("suite", suite, "group|uea|lattice|repdecomp|spectral|zeta|torsion|all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  }

  try {
    Settings st;
    if (!config_path.empty()) st.config = load_config(config_path);
    TorsionOptions topt;
    topt.zeta.digits = st.pick_int("precision", precision, "NILZETA_PRECISION", 16);
    if (topt.zeta.digits < 1 || topt.zeta.digits > 30) throw UsageError("precision must be in 1..30");
    topt.spectral.N = st.pick_int("truncation", truncation, nullptr, topt.spectral.N);
    if (topt.spectral.N < 16) throw UsageError("truncation must be at least 16");
    topt.cutoff = st.pick_double("cutoff", cutoff, topt.cutoff);
    if (!(topt.cutoff > 0)) throw UsageError("cutoff must be positive");

    if (group->parsed()) return cmd_group(group_op, group_args, format_of(st, format, "text", {"json", "csv", "text"}), out);

    if (lattice->parsed()) {
      format_of(st, format, "json", {"json"});
      const auto s = spec_flags.spec(st);
      emit_json(out, lattice_json(s, spec_flags.character(s, st)));
      return 0;
    }

    if (decomp->parsed()) {
      const std::string f = format_of(st, format, "json", {"json", "csv", "text"});
      const auto s = spec_flags.spec(st);
      const auto terms = decompose(s, spec_flags.character(s, st), st.pick_double("cutoff", cutoff, 3.0));
      if (f == "json") emit_json(out, to_json(terms));
      else if (f == "csv") out << decomposition_csv(terms);
      else out << decomposition_text(terms);
      return 0;
    }

    if (zeta_eval->parsed() || plot->parsed()) {
      const auto s = spec_flags.spec(st);
      const auto chi = spec_flags.character(s, st);
      SpectralCache cache(topt.spectral);
      if (zeta_eval->parsed()) {
        const std::string f = format_of(st, format, "json", {"json", "text"});
        const ZetaValue z = eval_zeta(kind, parse_complex(s_text), a_text, gram, shift, label, s, chi, topt, cache);
        if (f == "json") emit_json(out, to_json(z));
        else out << format_double(z.value.real()) << ' ' << format_double(z.value.imag()) << " +- " << format_double(z.abs_error) << '\n';
        return 0;
      }
      format_of(st, format, "csv", {"csv"});
      const double lo = to_double(parse_rational(from)), hi = to_double(parse_rational(to));
      const int n = steps.empty() ? 100 : std::stoi(steps);
      if (n < 1) throw UsageError("--steps must be positive");
      out << "s,re,im,abs_error\n";
      for (int i = 0; i <= n; ++i) {
        const double x = lo + (hi - lo) * i / n;
        out << format_double(x) << ',';
        try {
          const ZetaValue z = eval_zeta(kind, x, a_text, gram, shift, label, s, chi, topt, cache);
          out << format_double(z.value.real()) << ',' << format_double(z.value.imag()) << ',' << format_double(z.abs_error) << '\n';
        } catch (const AtPole&) {
          out << "nan,nan,nan\n";
        }
      }
      return 0;
    }

    if (torsion->parsed()) {
      const std::string f = format_of(st, format, "json", {"json", "text"});
      const auto s = spec_flags.spec(st);
      const auto chi = spec_flags.character(s, st);
      const TorsionReport rep = torsion_report(s, chi);
      json j = to_json(rep);
      std::string extra;
      if (check_decomposition) {
        const double at = check_s.empty() ? 11.0 / 6.0 : to_double(parse_rational(check_s));
        const auto d = decomposition_identity_check(s, chi, at, topt);
        j["decomposition_check"] = {{"s", d.s},
                                    {"factor_side", to_json(d.factor_side)},
                                    {"direct_side", to_json(d.direct_side)},
                                    {"difference", d.difference},
                                    {"combined_error", d.combined_error},
                                    {"relative", d.relative},
                                    {"terms", d.terms},
                                    {"spectra", d.spectra},
                                    {"truncation", topt.spectral.N},
                                    {"pass", d.pass}};
        extra = "decomposition check at s = " + format_double(d.s) + ": relative " + format_double(d.relative) +
                (d.pass ? " pass\n" : " FAIL\n");
      }
      if (f == "json") emit_json(out, j);
      else out << torsion_text(rep) << extra;
      return 0;
    }

    if (verify->parsed()) {
      const std::string f = format_of(st, format, "text", {"json", "text"});
      const auto names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite " + suite);
      const auto rows = run_suite(suite, topt.spectral);
      bool ok = true;
      for (const auto& r : rows) ok = ok && (r.pass || !r.asserted);
      if (f == "json") emit_json(out, {{"suite", suite}, {"pass", ok}, {"checks", to_json(rows)}});
      else out << checks_text(rows) << (ok ? "all checks passed\n" : "some checks FAILED\n");
      return ok ? 0 : 2;
    }
    throw UsageError("no command");
  } catch (const AtPole& e) {
    err << "at pole: " << e.what() << '\n';
    return 2;
  } catch (const CutoffInsufficient& e) {
    err << "cutoff insufficient: " << e.what() << '\n';
    return 2;
  } catch (const Untrusted& e) {
    err << "untrusted: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "computation error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace nilzeta::cli
