#include "convsum/serialize.hpp"

#include <string>

#include "convsum/arith.hpp"
#include "convsum/errors.hpp"

namespace convsum {

namespace {

BigRational rational_from(const Json& j) {
  if (!j.is_string()) throw InvalidArgument("expected a \"num/den\" string, got " + j.dump());
  return BigRational::parse(j.get<std::string>());
}

int int_key(const std::string& key) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(key, &used);
    if (used != key.size()) throw InvalidArgument("bad integer key '" + key + "'");
    return v;
  } catch (const std::logic_error&) {
    throw InvalidArgument("bad integer key '" + key + "'");
  }
}

}  // namespace

Json qseries_to_json(const QSeries& s) {
  Json coeffs = Json::array();
  for (const BigRational& c : s.coefficients()) coeffs.push_back(c.to_string());
  Json j;
  j["version"] = 1;
  j["kind"] = "qseries";
  j["truncation"] = s.truncation();
  j["coeffs"] = std::move(coeffs);
  return j;
}

QSeries qseries_from_json(const Json& j) {
  if (!j.is_object() || j.value("version", 0) != 1 || j.value("kind", std::string()) != "qseries") {
    throw InvalidArgument("not a version-1 qseries document");
  }
  const auto& coeffs = j.at("coeffs");
  const auto truncation = j.at("truncation").get<std::size_t>();
  if (!coeffs.is_array() || coeffs.size() != truncation + 1) {
    throw InvalidArgument("qseries document must carry exactly truncation + 1 coefficients");
  }
  std::vector<BigRational> c;
  c.reserve(coeffs.size());
  for (const auto& v : coeffs) c.push_back(rational_from(v));
  return QSeries(std::move(c));
}

Json eta_to_json(const EtaQuotient& f) {
  Json exps = Json::object();
  for (std::int64_t d : divisors(f.level())) exps[std::to_string(d)] = f.exponent(static_cast<int>(d));
  Json j;
  j["level"] = f.level();
  j["exponents"] = std::move(exps);
  return j;
}

EtaQuotient eta_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("level") || !j.contains("exponents")) {
    throw InvalidArgument("eta quotient JSON needs \"level\" and \"exponents\"");
  }
  std::map<int, int> e;
  for (const auto& [key, value] : j.at("exponents").items()) e.emplace(int_key(key), value.get<int>());
  return EtaQuotient(j.at("level").get<int>(), std::move(e));
}

Json ligozat_to_json(const EtaQuotient& f, const LigozatReport& report) {
  Json orders = Json::object();
  for (const auto& [d, v] : report.orders) orders[std::to_string(d)] = v.to_string();
  Json j = eta_to_json(f);
  j["cond_i"] = report.cond_i;
  j["cond_ii"] = report.cond_ii;
  j["cond_iii"] = report.cond_iii;
  j["weight"] = report.weight.to_string();
  j["cond_iv"] = report.cond_iv;
  j["orders"] = std::move(orders);
  j["cond_v"] = report.cond_v;
  j["cond_v_prime"] = report.cond_v_prime;
  j["modular_form"] = report.is_modular_form();
  j["cusp_form"] = report.is_cusp_form();
  return j;
}

Json formula_to_json(const ConvolutionFormula& f) {
  Json sigma3 = Json::object();
  for (const auto& [d, c] : f.sigma3_terms) sigma3[std::to_string(d)] = c.to_string();
  Json sigma = Json::object();
  for (const auto& [d, c] : f.sigma_terms) sigma[std::to_string(d)] = Json::array({c.first.to_string(), c.second.to_string()});
  Json cusp = Json::array();
  for (const auto& [id, c] : f.cusp_terms) cusp.push_back(Json::array({id, c.to_string()}));
  Json j;
  j["alpha"] = f.alpha;
  j["beta"] = f.beta;
  j["sigma3"] = std::move(sigma3);
  j["sigma"] = std::move(sigma);
  j["cusp"] = std::move(cusp);
  return j;
}

ConvolutionFormula formula_from_json(const Json& j) {
  ConvolutionFormula f;
  f.alpha = j.at("alpha").get<std::int64_t>();
  f.beta = j.at("beta").get<std::int64_t>();
  f.level = static_cast<int>(f.alpha * f.beta);
  for (const auto& [key, value] : j.at("sigma3").items()) f.sigma3_terms.emplace(int_key(key), rational_from(value));
  for (const auto& [key, value] : j.at("sigma").items()) {
    if (!value.is_array() || value.size() != 2) throw InvalidArgument("sigma term must be [c0, c1]");
    f.sigma_terms.emplace(int_key(key), std::make_pair(rational_from(value[0]), rational_from(value[1])));
  }
  for (const auto& item : j.at("cusp")) {
    if (!item.is_array() || item.size() != 2) throw InvalidArgument("cusp term must be [id, c]");
    f.cusp_terms.emplace_back(item[0].get<std::string>(), rational_from(item[1]));
  }
  return f;
}

Json verification_to_json(const VerificationReport& report) {
  Json mismatches = Json::array();
  for (const Mismatch& m : report.mismatches) {
    Json item;
    item["n"] = m.n;
    item["formula"] = m.formula.to_string();
    item["brute_force"] = m.brute_force;
    mismatches.push_back(std::move(item));
  }
  Json j;
  j["mismatches"] = std::move(mismatches);
  j["checked"] = report.checked;
  return j;
}

Json basis_to_json(const Basis& basis, std::size_t preview) {
  Json elements = Json::array();
  for (const BasisElement& e : basis.elements) {
    Json item;
    item["id"] = e.label;
    if (e.kind == BasisElement::Kind::Eisenstein) {
      item["kind"] = "eisenstein";
      item["t"] = e.t;
    } else {
      item["kind"] = "cusp";
      item["index"] = e.index;
      item["eta"] = eta_to_json(*e.eta);
    }
    Json coeffs = Json::array();
    for (std::size_t n = 0; n < preview && n <= e.series.truncation(); ++n) coeffs.push_back(e.series[n].to_string());
    item["coeffs"] = std::move(coeffs);
    elements.push_back(std::move(item));
  }
  Json j;
  j["level"] = basis.level;
  j["truncation"] = basis.truncation;
  j["dim_E4"] = basis.eisenstein_count();
  j["dim_S4"] = basis.size() - basis.eisenstein_count();
  j["elements"] = std::move(elements);
  return j;
}

Json expansion_to_json(const TargetExpansion& e) {
  Json eis = Json::object();
  for (const auto& [t, x] : e.eisenstein) eis[std::to_string(t)] = e.sigma3_display(t).to_string();
  Json cusp = Json::array();
  for (const auto& [id, y] : e.cusp) cusp.push_back(Json::array({id, y.to_string()}));
  Json j;
  j["alpha"] = e.alpha;
  j["beta"] = e.beta;
  j["constant"] = e.constant.to_string();
  j["sigma3"] = std::move(eis);
  j["cusp"] = std::move(cusp);
  return j;
}

}  // namespace convsum
