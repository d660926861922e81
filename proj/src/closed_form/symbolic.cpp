#include "eulerzeta/symbolic.hpp"

#include <cctype>
#include <vector>

#include "eulerzeta/constants.hpp"

namespace eulerzeta {
namespace {

void check_pi_power(int j) {
  if (j < 0 || j % 2 != 0) throw std::invalid_argument("pi power must be even and non-negative");
}

std::string marker_str(const Atom& a) {
  switch (a.marker) {
    case Marker::kUnit:
      return "";
    case Marker::kLog2:
      return "log2";
    case Marker::kLogPi:
      return "logpi";
    case Marker::kZetaOdd:
      return "zeta(" + std::to_string(a.zeta_arg) + ")";
  }
  return "";
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) --e;
  return s.substr(b, e - b);
}

int parse_int(const std::string& s, const std::string& context) {
  if (s.empty() || s.size() > 9) throw std::invalid_argument("bad integer in '" + context + "'");
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) == 0) throw std::invalid_argument("bad integer in '" + context + "'");
  }
  return std::stoi(s);
}

// One "coeff*factor*factor" term without its leading sign.
void parse_term(const std::string& term, bool negative, SymbolicConstant& out) {
  std::vector<std::string> factors;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= term.size(); ++i) {
    if (i == term.size() || term[i] == '*') {
      factors.push_back(trim(term.substr(start, i - start)));
      start = i + 1;
    }
  }
  Rational coeff = Rational::parse(factors.front());
  if (negative) coeff = -coeff;

  int pi_power = 0;
  Atom atom;
  bool have_marker = false;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    const std::string& f = factors[i];
    if (f.rfind("pi^", 0) == 0 && pi_power == 0) {
      pi_power = parse_int(f.substr(3), term);
      if (pi_power == 0) throw std::invalid_argument("pi^0 is not canonical in '" + term + "'");
    } else if (have_marker) {
      throw std::invalid_argument("more than one marker in '" + term + "'");
    } else if (f == "log2") {
      atom.marker = Marker::kLog2;
      have_marker = true;
    } else if (f == "logpi") {
      atom.marker = Marker::kLogPi;
      have_marker = true;
    } else if (f.rfind("zeta(", 0) == 0 && f.back() == ')') {
      atom = Atom::zeta_odd(parse_int(f.substr(5, f.size() - 6), term));
      have_marker = true;
    } else {
      throw std::invalid_argument("unknown factor '" + f + "' in '" + term + "'");
    }
  }
  check_pi_power(pi_power);
  atom.pi_power = pi_power;
  if (!out.coeff(atom).is_zero()) throw std::invalid_argument("duplicate atom in '" + term + "'");
  out.add(atom, coeff);
}

}  // namespace

Atom Atom::unit(int pi_power) {
  check_pi_power(pi_power);
  return {pi_power, Marker::kUnit, 0};
}

Atom Atom::log2(int pi_power) {
  check_pi_power(pi_power);
  return {pi_power, Marker::kLog2, 0};
}

Atom Atom::log_pi(int pi_power) {
  check_pi_power(pi_power);
  return {pi_power, Marker::kLogPi, 0};
}

Atom Atom::zeta_odd(int m, int pi_power) {
  check_pi_power(pi_power);
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("zeta atom needs an odd argument >= 3");
  return {pi_power, Marker::kZetaOdd, m};
}

std::string Atom::str() const {
  std::string s = pi_power > 0 ? "pi^" + std::to_string(pi_power) : "";
  const std::string m = marker_str(*this);
  if (!m.empty()) s += (s.empty() ? "" : "*") + m;
  return s.empty() ? "1" : s;
}

bool AtomOrder::operator()(const Atom& a, const Atom& b) const {
  if (a.pi_power != b.pi_power) return a.pi_power > b.pi_power;
  if (a.marker != b.marker) return a.marker < b.marker;
  return a.zeta_arg < b.zeta_arg;
}

MissingAtomError::MissingAtomError(const Atom& atom)
    : std::invalid_argument("no numeric value supplied for " + marker_str(atom)), atom_(atom) {}

void SymbolicConstant::add(const Atom& atom, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(atom, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational SymbolicConstant::coeff(const Atom& atom) const {
  const auto it = terms_.find(atom);
  return it == terms_.end() ? Rational() : it->second;
}

std::string SymbolicConstant::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [atom, c] : terms_) {
    if (first) {
      out += c.str();
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      out += (c.sign() < 0 ? -c : c).str();
    }
    if (atom.pi_power > 0 || atom.marker != Marker::kUnit) out += "*" + atom.str();
    first = false;
  }
  return out;
}

SymbolicConstant SymbolicConstant::parse(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty symbolic constant");
  SymbolicConstant out;
  if (s == "0") return out;

  // Split on top-level " + " / " - " separators; a leading '-' belongs to the first coefficient.
  std::size_t pos = 0;
  bool negative = false;
  while (pos <= s.size()) {
    std::size_t next = std::string::npos;
    for (std::size_t i = pos + 1; i + 2 < s.size(); ++i) {
      if (s[i] == ' ' && (s[i + 1] == '+' || s[i + 1] == '-') && s[i + 2] == ' ') {
        next = i;
        break;
      }
    }
    const std::string term = trim(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (term.empty()) throw std::invalid_argument("empty term in '" + text + "'");
    parse_term(term, negative, out);
    if (next == std::string::npos) break;
    negative = s[next + 1] == '-';
    pos = next + 3;
  }
  return out;
}

SymbolicConstant sym_combine(const SymbolicConstant& a, const SymbolicConstant& b, const Rational& s,
                             const Rational& t) {
  SymbolicConstant out;
  for (const auto& [atom, c] : a.terms()) out.add(atom, s * c);
  for (const auto& [atom, c] : b.terms()) out.add(atom, t * c);
  return out;
}

BigReal eval_symbolic(const SymbolicConstant& c, const OddZetaValues& odd_values, const PrecisionContext& ctx) {
  BigReal total = BigReal::exact(0, ctx);
  if (c.is_zero()) return total;

  const BigReal pi = const_pi(ctx);
  std::map<int, BigReal> pi_powers;
  for (const auto& [atom, coeff] : c.terms()) {
    BigReal term = to_big_real(coeff, ctx);
    if (atom.pi_power > 0) {
      auto it = pi_powers.find(atom.pi_power);
      if (it == pi_powers.end()) {
        it = pi_powers.emplace(atom.pi_power, pow_int(pi, static_cast<unsigned>(atom.pi_power), ctx)).first;
      }
      term = term * it->second;
    }
    switch (atom.marker) {
      case Marker::kUnit:
        break;
      case Marker::kLog2:
        term = term * const_log2(ctx);
        break;
      case Marker::kLogPi:
        term = term * const_log_pi(ctx);
        break;
      case Marker::kZetaOdd: {
        const auto it = odd_values.find(atom.zeta_arg);
        if (it == odd_values.end()) throw MissingAtomError(atom);
        term = term * it->second;
        break;
      }
    }
    total = total + term;
  }
  return total;
}

}  // namespace eulerzeta
