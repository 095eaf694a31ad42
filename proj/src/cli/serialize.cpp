#include "serialize.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace nilzeta::cli {

namespace {

const char* kind_name(ExactLabel::Kind k) {
  switch (k) {
    case ExactLabel::Kind::Scalar: return "scalar";
    case ExactLabel::Kind::Schrodinger: return "schrodinger";
    case ExactLabel::Kind::Generic: return "generic";
  }
  return "?";
}

ExactLabel::Kind kind_from(const std::string& s) {
  if (s == "scalar") return ExactLabel::Kind::Scalar;
  if (s == "schrodinger") return ExactLabel::Kind::Schrodinger;
  if (s == "generic") return ExactLabel::Kind::Generic;
  throw std::invalid_argument("unknown representation type " + s);
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string label_params(const ExactLabel& l) {
  std::string out;
  for (std::size_t i = 0; i < l.params.size(); ++i) out += (i ? "," : "") + to_string(l.params[i]);
  return out;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json to_json(const Rational& x) { return to_string(x); }

json to_json(const GroupElement& g) {
  json a = json::array();
  for (int i = 0; i < 5; ++i) a.push_back(to_string(g[i]));
  return a;
}

json to_json(cplx z) { return json::array({number_or_null(z.real()), number_or_null(z.imag())}); }

json to_json(const ZetaValue& z) {
  return {{"value", to_json(z.value)},
          {"derivative", z.derivative ? to_json(*z.derivative) : json(nullptr)},
          {"abs_error", number_or_null(z.abs_error)}};
}

json to_json(const std::vector<DecompositionTerm>& terms) {
  json a = json::array();
  for (const auto& t : terms) {
    json p = json::array();
    for (const auto& x : t.label.params) p.push_back(to_string(x));
    a.push_back({{"type", kind_name(t.label.kind)}, {"params", p}, {"multiplicity", to_string(t.multiplicity)}});
  }
  return a;
}

json to_json(const TrustedConstant& c) {
  json j = {{"name", c.name}, {"value", number_or_null(c.value)}, {"provenance", to_string(c.provenance)}};
  if (c.provenance == Provenance::Numeric) {
    j["truncation"] = c.truncation;
    j["error"] = number_or_null(c.error);
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

json to_json(const TorsionReport& r) {
  auto term = [](const TrustedConstant& at0, const TrustedConstant& d0) {
    return json{{"value0", to_json(at0)}, {"prime0", to_json(d0)}};
  };
  json poles = json::array();
  for (const auto& p : r.poles)
    poles.push_back({{"factor", p.factor},
                     {"location", p.location},
                     {"residue", p.residue ? json(*p.residue) : json(nullptr)},
                     {"provenance", to_string(p.provenance)},
                     {"note", p.note}});
  return {{"zetaI", term(r.zetaI0, r.zetaI_prime0)},
          {"zetaII", term(r.zetaII0, r.zetaII_prime0)},
          {"zetaIII", term(r.zetaIII0, r.zetaIII_prime0)},
          {"log_tau", r.log_tau},
          {"tau", r.tau},
          {"acyclic", r.acyclic},
          {"poles", poles},
          {"provenance", r.provenance}};
}

json to_json(const std::vector<CheckRow>& rows) {
  json a = json::array();
  for (const auto& c : rows)
    a.push_back({{"name", c.name},
                 {"pass", c.pass},
                 {"asserted", c.asserted},
                 {"measured", number_or_null(c.measured)},
                 {"tolerance", number_or_null(c.tolerance)},
                 {"detail", c.detail}});
  return a;
}

json to_json(const ZetaIIIResult& r) {
  json factors = json::array();
  for (const auto& f : r.factors)
    factors.push_back({{"name", f.name},
                       {"value", f.value ? to_json(*f.value) : json(nullptr)},
                       {"provenance", to_string(f.provenance)},
                       {"note", f.note}});
  return {{"direct", r.direct ? to_json(*r.direct) : json(nullptr)},
          {"spectral_error", number_or_null(r.spectral_error)},
          {"shell_share", number_or_null(r.shell_share)},
          {"terms", r.terms},
          {"distinct_spectra", r.distinct_spectra},
          {"epstein_factor", to_json(r.epstein_factor)},
          {"factors", factors}};
}

Rational rational_from_json(const json& j) { return parse_rational(j.get<std::string>()); }

cplx cplx_from_json(const json& j) {
  auto part = [](const json& x) { return x.is_null() ? HUGE_VAL : x.get<double>(); };
  return {part(j.at(0)), part(j.at(1))};
}

ZetaValue zeta_value_from_json(const json& j) {
  ZetaValue z;
  z.value = cplx_from_json(j.at("value"));
  if (!j.at("derivative").is_null()) z.derivative = cplx_from_json(j.at("derivative"));
  z.abs_error = j.at("abs_error").is_null() ? HUGE_VAL : j.at("abs_error").get<double>();
  return z;
}

std::vector<DecompositionTerm> decomposition_from_json(const json& j) {
  std::vector<DecompositionTerm> out;
  for (const auto& e : j) {
    DecompositionTerm t;
    t.label.kind = kind_from(e.at("type").get<std::string>());
    for (const auto& p : e.at("params")) t.label.params.push_back(rational_from_json(p));
    t.multiplicity = rational_from_json(e.at("multiplicity"));
    out.push_back(std::move(t));
  }
  return out;
}

std::string decomposition_csv(const std::vector<DecompositionTerm>& terms) {
  std::ostringstream os;
  os << "type,p1,p2,p3,multiplicity\n";
  for (const auto& t : terms) {
    os << kind_name(t.label.kind);
    for (std::size_t i = 0; i < 3; ++i) os << ',' << (i < t.label.params.size() ? to_string(t.label.params[i]) : "");
    os << ',' << to_string(t.multiplicity) << '\n';
  }
  return os.str();
}

std::string decomposition_text(const std::vector<DecompositionTerm>& terms) {
  std::ostringstream os;
  for (const auto& t : terms)
    os << kind_name(t.label.kind) << '(' << label_params(t.label) << ") x " << to_string(t.multiplicity) << '\n';
  os << terms.size() << " terms\n";
  return os.str();
}

std::string torsion_text(const TorsionReport& r) {
  std::ostringstream os;
  for (const auto* c : {&r.zetaI_prime0, &r.zetaII_prime0, &r.zetaIII_prime0}) {
    os << c->name << " = " << format_double(c->value) << " [" << to_string(c->provenance) << "]";
    if (!c->note.empty()) os << "  " << c->note;
    os << '\n';
  }
  os << "log_tau = " << format_double(r.log_tau) << '\n' << "tau = " << format_double(r.tau) << '\n';
  os << "acyclic = " << (r.acyclic ? "true" : "false") << '\n';
  for (const auto& p : r.poles) {
    os << "pole " << p.factor << " at s = " << format_double(p.location) << ", residue "
       << (p.residue ? format_double(*p.residue) : std::string("unknown")) << " [" << to_string(p.provenance) << "] "
       << p.note << '\n';
  }
  return os.str();
}

std::string checks_text(const std::vector<CheckRow>& rows) {
  std::ostringstream os;
  for (const auto& c : rows) {
    os << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.asserted) os << " (reported)";
    if (c.tolerance > 0) os << " (measured " << format_double(c.measured) << ", tol " << format_double(c.tolerance) << ")";
    else if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << '\n';
  }
  return os.str();
}

}  // namespace nilzeta::cli
