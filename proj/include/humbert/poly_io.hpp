#ifndef HUMBERT_POLY_IO_HPP
#define HUMBERT_POLY_IO_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "json.hpp"

#include "humbert/polynomial.hpp"

// Canonical text form:  terms in descending monomial order, `^` for powers,
// `*` for products, e.g. `4*a1^2*x - 3*x*y + 1`.
// Canonical JSON form:  {"vars":[...],"terms":[{"c":"<int>","e":[...]}]}
// where "vars" lists the variables that occur, in global order.

namespace humbert {

inline std::string monomial_to_string(const Monomial& m) {
  std::string out;
  for (auto idx : kPrintOrder) {
    VarId v(idx);
    unsigned e = m[v];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(v);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = t.coeff < 0;
    mpz_class magnitude = abs(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_to_string(t.mono);
    if (mono.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) {
        out += magnitude.get_str();
        out += '*';
      }
      out += mono;
    }
  }
  return out;
}

namespace detail {

class PolyParser {
public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    terms.push_back(parse_term(sign));
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(parse_term(c == '-' ? -1 : 1));
    }
    return Polynomial::from_terms(std::move(terms));
  }

private:
  Term parse_term(int sign) {
    skip_ws();
    Term t{Monomial(), mpz_class(sign)};
    bool need_factor = true;
    while (need_factor) {
      skip_ws();
      if (pos_ >= s_.size()) fail("unexpected end of input");
      if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        t.coeff *= parse_integer();
      } else if (std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        auto name = s_.substr(start, pos_ - start);
        auto v = parse_var(name);
        if (!v) fail("unknown variable '" + std::string(name) + "'");
        unsigned e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          e = static_cast<unsigned>(parse_integer().get_ui());
        }
        t.mono.set(*v, t.mono[*v] + e);
      } else {
        fail("unexpected character");
      }
      skip_ws();
      need_factor = peek() == '*';
      if (need_factor) ++pos_;
    }
    return t;
  }

  mpz_class parse_integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(std::string_view text) {
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
  if (trimmed == "0") return {};
  return detail::PolyParser(text).parse();
}

inline nlohmann::ordered_json to_json(const Polynomial& p) {
  VarSet used = p.variables();
  std::vector<VarId> vars;
  nlohmann::ordered_json names = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (used.test(i)) {
      vars.emplace_back(static_cast<std::uint8_t>(i));
      names.push_back(std::string(var_name(vars.back())));
    }
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& t : p.terms()) {
    nlohmann::ordered_json e = nlohmann::ordered_json::array();
    for (VarId v : vars) e.push_back(t.mono[v]);
    terms.push_back({{"c", t.coeff.get_str()}, {"e", std::move(e)}});
  }
  return {{"vars", std::move(names)}, {"terms", std::move(terms)}};
}

template <class Json>
Polynomial polynomial_from_json(const Json& j) {
  try {
    std::vector<VarId> vars;
    for (const auto& name : j.at("vars")) {
      auto v = parse_var(name.template get<std::string>());
      if (!v) throw ParseError("unknown variable in JSON polynomial");
      vars.push_back(*v);
    }
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      const auto& e = t.at("e");
      if (e.size() != vars.size()) throw ParseError("exponent vector length mismatch");
      Term term{Monomial(), mpz_class(t.at("c").template get<std::string>())};
      for (std::size_t k = 0; k < vars.size(); ++k) term.mono.set(vars[k], e[k].template get<unsigned>());
      terms.push_back(std::move(term));
    }
    return Polynomial::from_terms(std::move(terms));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& ex) {
    throw ParseError(std::string("malformed JSON polynomial: ") + ex.what());
  }
}

} // namespace humbert

#endif // HUMBERT_POLY_IO_HPP
