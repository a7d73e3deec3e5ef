#include <omega/render.hpp>

#include <array>
#include <stdexcept>

namespace omega {

Format format_from_name(const std::string& name) {
  if (name == "plain") return Format::plain;
  if (name == "latex") return Format::latex;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format: " + name);
}

Notation notation_from_name(const std::string& name) {
  if (name == "letters") return Notation::letters;
  if (name == "indexed") return Notation::indexed;
  throw std::invalid_argument("unknown notation: " + name);
}

Notation default_notation(const PartitionSpec& spec) {
  return spec.rho() <= 3 ? Notation::letters : Notation::indexed;
}

namespace {

// Colors map to the trailing rho letters: rho=2 uses (y,z), rho=3 (x,y,z).
std::string color_letter(int color, int rho, bool parameter) {
  static constexpr std::array<const char*, 3> vars{"x", "y", "z"};
  static constexpr std::array<const char*, 3> params{"r", "s", "t"};
  const int idx = 3 - rho + color - 1;
  return (parameter ? params : vars)[static_cast<size_t>(idx)];
}

std::string name_impl(VarIndex v, const PartitionSpec& spec, Format f, Notation n,
                      bool parameter) {
  if (n == Notation::letters) {
    if (spec.rho() > 3)
      throw std::invalid_argument("letter notation requires rho <= 3");
    const std::string letter = color_letter(v.color, spec.rho(), parameter);
    if (f == Format::latex) return letter + "_{" + std::to_string(v.mult) + "}";
    return letter + std::to_string(v.mult);
  }
  const std::string base = parameter ? "t" : "z";
  const std::string idx = std::to_string(v.color) + "," + std::to_string(v.mult);
  if (f == Format::latex) return base + "_{" + idx + "}";
  return base + "[" + idx + "]";
}

std::string exponent_term(unsigned power, long long coeff, const std::string& param,
                          Format f) {
  if (power == 0) return std::to_string(coeff);
  std::string base = param;
  if (power > 1) base += "^" + std::to_string(power);
  if (coeff == 1) return base;
  return std::to_string(coeff) + (f == Format::latex ? "" : "*") + base;
}

std::string exponent_poly_str(const ExponentPoly& p, const std::string& param, Format f) {
  std::string out;
  for (const auto& [power, coeff] : p.terms()) {
    if (!out.empty()) out += "+";
    out += exponent_term(power, coeff, param, f);
  }
  return out.empty() ? "0" : out;
}

bool is_unit_exponent(const ExponentPoly& p) {
  return p.terms().size() == 1 && p.terms().count(0) == 1 && p.terms().at(0) == 1;
}

std::string factor_str(VarIndex v, const ExponentPoly& p, const PartitionSpec& spec,
                       Format f, Notation n) {
  const std::string var = name_impl(v, spec, f, n, false);
  if (is_unit_exponent(p)) return var;
  const std::string es = exponent_poly_str(p, name_impl(v, spec, f, n, true), f);
  if (f == Format::latex) return var + "^{" + es + "}";
  const bool simple = es.find('+') == std::string::npos &&
                      es.find('*') == std::string::npos &&
                      es.find('^') == std::string::npos;
  return simple ? var + "^" + es : var + "^(" + es + ")";
}

} // namespace

std::string variable_name(VarIndex v, const PartitionSpec& spec, Format f, Notation n) {
  return name_impl(v, spec, f, n, false);
}

std::string parameter_name(VarIndex v, const PartitionSpec& spec, Format f, Notation n) {
  return name_impl(v, spec, f, n, true);
}

std::string render_monomial(const Monomial& m, const PartitionSpec& spec, Format f,
                            Notation n) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, p] : m.factors()) {
    if (!out.empty() && f != Format::latex) out += "*";
    out += factor_str(v, p, spec, f, n);
  }
  return out;
}

std::string render_omega(const OmegaPoly& P, long long n, Format f, Notation nt) {
  if (f == Format::json) return omega_to_json(P, n).dump(2);
  if (P.is_zero()) return "0";
  std::string out;
  for (const auto& [m, coeff] : P.terms()) {
    if (!out.empty()) out += f == Format::latex ? "+" : " + ";
    std::string term;
    if (coeff != 1 || m.is_one()) {
      term = coeff.str();
      if (!m.is_one()) term += f == Format::latex ? "" : "*";
    }
    if (!m.is_one()) term += render_monomial(m, P.spec(), f, nt);
    out += term;
  }
  return out;
}

nlohmann::ordered_json omega_to_json(const OmegaPoly& P, long long n) {
  nlohmann::ordered_json j;
  j["spec"] = {{"b", P.spec().base}, {"lambdas", P.spec().lambdas}};
  j["n"] = n;
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, coeff] : P.terms()) {
    nlohmann::ordered_json term;
    term["coeff"] = coeff.convert_to<long long>();
    term["factors"] = nlohmann::ordered_json::array();
    for (const auto& [v, p] : m.factors()) {
      nlohmann::ordered_json factor;
      factor["color"] = v.color;
      factor["mult"] = v.mult;
      factor["exponent"] = nlohmann::ordered_json::array();
      for (const auto& [power, c] : p.terms())
        factor["exponent"].push_back({power, c});
      term["factors"].push_back(std::move(factor));
    }
    j["terms"].push_back(std::move(term));
  }
  return j;
}

OmegaPoly omega_from_json(const nlohmann::ordered_json& j, long long* n_out) {
  PartitionSpec spec(j.at("spec").at("b").get<int>(),
                     j.at("spec").at("lambdas").get<std::vector<int>>());
  if (n_out) *n_out = j.at("n").get<long long>();
  OmegaPoly P(spec);
  for (const auto& term : j.at("terms")) {
    Monomial m;
    for (const auto& factor : term.at("factors")) {
      ExponentPoly p;
      for (const auto& e : factor.at("exponent")) {
        ExponentPoly piece;
        for (long long c = 0; c < e.at(1).get<long long>(); ++c)
          piece.add(ExponentPoly::unit_power(e.at(0).get<unsigned>()));
        p.add(piece);
      }
      m = m.times(Monomial::variable(
          VarIndex{factor.at("color").get<int>(), factor.at("mult").get<int>()}, p));
    }
    P.add_term(m, term.at("coeff").get<long long>());
  }
  return P;
}

nlohmann::ordered_json partition_to_json(const ColoredPartition& p) {
  nlohmann::ordered_json j;
  j["n"] = p.value().convert_to<long long>();
  j["parts"] = nlohmann::ordered_json::array();
  for (const auto& [key, mult] : p.parts) {
    nlohmann::ordered_json part;
    part["value"] = checked_pow(p.spec.base, key.second).convert_to<long long>();
    part["power"] = key.second;
    part["color"] = key.first;
    part["count"] = mult;
    j["parts"].push_back(std::move(part));
  }
  return j;
}

} // namespace omega
