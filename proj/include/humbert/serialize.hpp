#ifndef HUMBERT_SERIALIZE_HPP
#define HUMBERT_SERIALIZE_HPP

#include <sstream>
#include <string>

#include "json.hpp"

#include "humbert/pipelines.hpp"
#include "humbert/poly_io.hpp"

namespace humbert {

inline nlohmann::ordered_json to_json(const NormalizationEntry& e) {
  nlohmann::ordered_json j{{"kind", e.kind}};
  if (!e.value.empty()) j["value"] = e.value;
  if (!e.poly.empty()) j["poly"] = e.poly;
  if (e.multiplicity != 0) j["multiplicity"] = e.multiplicity;
  return j;
}

inline nlohmann::ordered_json to_json(const ModularEquation& m) {
  nlohmann::ordered_json spec = nlohmann::ordered_json::object();
  for (const auto& [v, value] : m.specialization) spec[std::string(var_name(v))] = value.get_str();
  nlohmann::ordered_json log = nlohmann::ordered_json::array();
  for (const auto& e : m.normalization_log) log.push_back(to_json(e));
  nlohmann::ordered_json family = m.family;
  nlohmann::ordered_json meta{{"curve_degree", m.degree}, {"family", std::move(family)}};
  if (m.seed) meta["seed"] = *m.seed;
  if (m.homogeneity.family_discriminant) meta["discriminant_degree"] = *m.homogeneity.family_discriminant;
  if (!m.homogeneity.tangency.empty()) {
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (const auto& [line, d] : m.homogeneity.tangency)
      t["l" + std::to_string(line)] = d ? nlohmann::ordered_json(*d) : nlohmann::ordered_json(nullptr);
    meta["tangency_degrees"] = std::move(t);
  }
  return {{"config", m.config},         {"delta", m.delta},
          {"specialization", spec},     {"equation", to_json(m.equation)},
          {"normalization_log", log},   {"metadata", std::move(meta)}};
}

template <class Json>
ModularEquation modular_equation_from_json(const Json& j) {
  try {
    ModularEquation m;
    m.config = j.at("config").template get<std::string>();
    m.delta = j.at("delta").template get<int>();
    for (const auto& [name, value] : j.at("specialization").items()) {
      auto v = parse_var(name);
      if (!v) throw ParseError("unknown specialized variable " + name);
      Rational r(value.template get<std::string>());
      r.canonicalize();
      m.specialization[*v] = r;
    }
    m.equation = polynomial_from_json(j.at("equation"));
    for (const auto& e : j.at("normalization_log")) {
      NormalizationEntry entry{e.at("kind").template get<std::string>(), "", "", 0};
      if (e.contains("value")) entry.value = e.at("value").template get<std::string>();
      if (e.contains("poly")) entry.poly = e.at("poly").template get<std::string>();
      if (e.contains("multiplicity")) entry.multiplicity = e.at("multiplicity").template get<unsigned>();
      m.normalization_log.push_back(std::move(entry));
    }
    if (j.contains("metadata")) {
      const auto& meta = j.at("metadata");
      if (meta.contains("curve_degree")) m.degree = meta.at("curve_degree").template get<unsigned>();
      if (meta.contains("family")) m.family = meta.at("family").template get<std::vector<std::string>>();
      if (meta.contains("seed")) m.seed = meta.at("seed").template get<std::uint64_t>();
      if (meta.contains("discriminant_degree"))
        m.homogeneity.family_discriminant = meta.at("discriminant_degree").template get<unsigned>();
      if (meta.contains("tangency_degrees")) {
        for (const auto& [key, d] : meta.at("tangency_degrees").items()) {
          if (key.size() < 2 || key[0] != 'l') throw ParseError("bad tangency key " + key);
          std::optional<unsigned> deg;
          if (!d.is_null()) deg = d.template get<unsigned>();
          m.homogeneity.tangency.emplace_back(static_cast<unsigned>(std::stoul(key.substr(1))), deg);
        }
      }
    }
    return m;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& ex) {
    throw ParseError(std::string("malformed ModularEquation JSON: ") + ex.what());
  }
}

/// Human-readable report; the equation line parses back with parse_polynomial.
inline std::string to_text(const ModularEquation& m) {
  std::ostringstream out;
  out << "config: " << m.config << "\n";
  out << "delta: " << m.delta << "\n";
  out << "specialization:";
  if (m.specialization.empty()) out << " none";
  for (const auto& [v, value] : m.specialization) out << " " << var_name(v) << "=" << value.get_str();
  out << "\n";
  out << "family:";
  for (const auto& f : m.family) out << " [" << f << "]";
  out << "\n";
  if (m.seed) out << "seed: " << *m.seed << "\n";
  for (const auto& e : m.normalization_log) {
    out << "normalization: " << e.kind;
    if (!e.value.empty()) out << " " << e.value;
    if (!e.poly.empty()) {
      std::string p = e.poly.size() > 120 ? e.poly.substr(0, 117) + "..." : e.poly;
      out << " (" << p << ")";
    }
    if (e.multiplicity != 0) out << "^" << e.multiplicity;
    out << "\n";
  }
  out << "terms: " << m.equation.size() << "\n";
  out << "equation: " << to_string(m.equation) << "\n";
  return out.str();
}

} // namespace humbert

#endif // HUMBERT_SERIALIZE_HPP
