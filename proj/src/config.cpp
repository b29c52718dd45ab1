#include "ptlat/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ptlat {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

double parse_double(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  double x = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(x)) {
    throw std::invalid_argument(key + ": expected a finite number, got '" +
                                value + "'");
  }
  return x;
}

int parse_int(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  long x = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0') {
    throw std::invalid_argument(key + ": expected an integer, got '" + value +
                                "'");
  }
  return static_cast<int>(x);
}

// Recursive-descent arithmetic: expr := term (('+'|'-') term)*,
// term := factor (('*'|'/') factor)*, factor := unary sign | primary,
// primary := number | pi | sqrt(expr) | (expr).
struct ExprParser {
  const char* p;

  void skip() {
    while (*p == ' ' || *p == '\t') ++p;
  }

  double expr() {
    double x = term();
    for (;;) {
      skip();
      if (*p == '+') {
        ++p;
        x += term();
      } else if (*p == '-') {
        ++p;
        x -= term();
      } else {
        return x;
      }
    }
  }

  double term() {
    double x = factor();
    for (;;) {
      skip();
      if (*p == '*') {
        ++p;
        x *= factor();
      } else if (*p == '/') {
        ++p;
        x /= factor();
      } else {
        return x;
      }
    }
  }

  double factor() {
    skip();
    if (*p == '-') {
      ++p;
      return -factor();
    }
    if (*p == '+') {
      ++p;
      return factor();
    }
    return primary();
  }

  double primary() {
    skip();
    if (*p == '(') {
      ++p;
      double x = expr();
      expect(')');
      return x;
    }
    if (std::strncmp(p, "sqrt", 4) == 0) {
      p += 4;
      skip();
      expect('(');
      double x = expr();
      expect(')');
      return std::sqrt(x);
    }
    if (std::strncmp(p, "pi", 2) == 0) {
      p += 2;
      return std::numbers::pi;
    }
    char* end = nullptr;
    double x = std::strtod(p, &end);
    if (end == p) {
      throw std::invalid_argument("unexpected token");
    }
    p = end;
    return x;
  }

  void expect(char c) {
    skip();
    if (*p != c) {
      throw std::invalid_argument(std::string("expected '") + c + "'");
    }
    ++p;
  }
};

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BetaValue parse_beta(const std::string& value) {
  size_t slash = value.find('/');
  if (slash != std::string::npos) {
    std::string num = trim(value.substr(0, slash));
    std::string den = trim(value.substr(slash + 1));
    if (all_digits(num) && all_digits(den)) {
      long a = std::strtol(num.c_str(), nullptr, 10);
      long b = std::strtol(den.c_str(), nullptr, 10);
      if (b == 0) {
        throw std::invalid_argument("beta: denominator must be nonzero");
      }
      long g = std::gcd(a, b);
      if (g > 0) {
        a /= g;
        b /= g;
      }
      return RationalBeta{a, b};
    }
  }
  try {
    return eval_expression(value);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("beta: cannot parse '" + value + "'");
  }
}

std::string format_beta(const BetaValue& beta) {
  if (const auto* r = std::get_if<RationalBeta>(&beta)) {
    return std::to_string(r->num) + "/" + std::to_string(r->den);
  }
  return fmt17(std::get<double>(beta));
}

std::vector<int> parse_int_list(const std::string& key,
                                const std::string& value) {
  std::vector<int> out;
  if (trim(value).empty()) return out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_int(key, trim(item)));
  }
  return out;
}

std::string format_int_list(const std::vector<int>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

double eval_expression(const std::string& text) {
  ExprParser parser{text.c_str()};
  double x = parser.expr();
  parser.skip();
  if (*parser.p != '\0') {
    throw std::invalid_argument("trailing characters");
  }
  if (!std::isfinite(x)) {
    throw std::invalid_argument("expression is not finite");
  }
  return x;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;

  using Setter = std::function<void(const std::string&)>;
  const std::map<std::string, Setter> setters = {
      {"variant",
       [&](const std::string& v) {
         if (v == "offdiag") {
           cfg.spec.variant = LatticeVariant::OffDiagonalAA;
         } else if (v == "offdiag-nnn") {
           cfg.spec.variant = LatticeVariant::OffDiagonalAANNN;
         } else if (v == "diagonal") {
           cfg.spec.variant = LatticeVariant::DiagonalAA;
         } else {
           throw std::invalid_argument(
               "variant: expected offdiag, offdiag-nnn, or diagonal, got '" +
               v + "'");
         }
       }},
      {"n", [&](const std::string& v) { cfg.spec.n = parse_int("n", v); }},
      {"t", [&](const std::string& v) { cfg.spec.t = parse_double("t", v); }},
      {"lambda",
       [&](const std::string& v) {
         cfg.spec.lambda = parse_double("lambda", v);
       }},
      {"beta", [&](const std::string& v) { cfg.spec.beta = parse_beta(v); }},
      {"phi",
       [&](const std::string& v) { cfg.spec.phi = parse_double("phi", v); }},
      {"j",
       [&](const std::string& v) { cfg.spec.impurity.j = parse_int("j", v); }},
      {"gamma",
       [&](const std::string& v) {
         cfg.spec.impurity.gamma = parse_double("gamma", v);
       }},
      {"t_nnn",
       [&](const std::string& v) {
         cfg.spec.t_nnn = parse_double("t_nnn", v);
       }},
      {"v", [&](const std::string& v) { cfg.spec.v = parse_double("v", v); }},
      {"eps_real",
       [&](const std::string& v) { cfg.eps_real = parse_double("eps_real", v); }},
      {"eps_zero",
       [&](const std::string& v) { cfg.eps_zero = parse_double("eps_zero", v); }},
      {"w_min",
       [&](const std::string& v) { cfg.w_min = parse_double("w_min", v); }},
      {"fraction",
       [&](const std::string& v) { cfg.fraction = parse_double("fraction", v); }},
      {"tol_bisect",
       [&](const std::string& v) {
         cfg.tol_bisect = parse_double("tol_bisect", v);
       }},
      {"phi_points",
       [&](const std::string& v) { cfg.phi_points = parse_int("phi_points", v); }},
      {"gamma_max",
       [&](const std::string& v) { cfg.gamma_max = parse_double("gamma_max", v); }},
      {"policy",
       [&](const std::string& v) {
         if (v != "all-phi" && v != "fixed-phi") {
           throw std::invalid_argument(
               "policy: expected all-phi or fixed-phi, got '" + v + "'");
         }
         cfg.policy = v;
       }},
      {"phi_min",
       [&](const std::string& v) { cfg.phi_min = parse_double("phi_min", v); }},
      {"phi_max",
       [&](const std::string& v) { cfg.phi_max = parse_double("phi_max", v); }},
      {"phi_count",
       [&](const std::string& v) { cfg.phi_count = parse_int("phi_count", v); }},
      {"gamma_min",
       [&](const std::string& v) { cfg.gamma_min = parse_double("gamma_min", v); }},
      {"gamma_count",
       [&](const std::string& v) { cfg.gamma_count = parse_int("gamma_count", v); }},
      {"gamma_probe",
       [&](const std::string& v) {
         cfg.gamma_probe = parse_double("gamma_probe", v);
       }},
      {"n_values",
       [&](const std::string& v) { cfg.n_values = parse_int_list("n_values", v); }},
      {"v_min",
       [&](const std::string& v) { cfg.v_min = parse_double("v_min", v); }},
      {"v_max",
       [&](const std::string& v) { cfg.v_max = parse_double("v_max", v); }},
      {"v_count",
       [&](const std::string& v) { cfg.v_count = parse_int("v_count", v); }},
      {"plot_input", [&](const std::string& v) { cfg.plot_input = v; }},
      {"plot_x", [&](const std::string& v) { cfg.plot_x = v; }},
      {"plot_y", [&](const std::string& v) { cfg.plot_y = v; }},
      {"plot_title", [&](const std::string& v) { cfg.plot_title = v; }},
  };

  std::stringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: malformed line '" + line +
                                  "' (expected key = value)");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = unquote(trim(line.substr(eq + 1)));
    auto it = setters.find(key);
    if (it == setters.end()) {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    it->second(value);
  }

  validate(cfg.spec);
  if (!(cfg.eps_real > 0.0)) {
    throw std::invalid_argument("eps_real: must be positive");
  }
  if (!(cfg.eps_zero > 0.0)) {
    throw std::invalid_argument("eps_zero: must be positive");
  }
  if (!(cfg.w_min > 0.0)) {
    throw std::invalid_argument("w_min: must be positive");
  }
  if (!(cfg.fraction > 0.0) || cfg.fraction > 0.5) {
    throw std::invalid_argument("fraction: must be in (0, 0.5]");
  }
  if (!(cfg.tol_bisect > 0.0)) {
    throw std::invalid_argument("tol_bisect: must be positive");
  }
  if (cfg.phi_points < 1) {
    throw std::invalid_argument("phi_points: must be at least 1");
  }
  if (!(cfg.gamma_max > 0.0)) {
    throw std::invalid_argument("gamma_max: must be positive");
  }
  if (cfg.phi_count < 1) {
    throw std::invalid_argument("phi_count: must be at least 1");
  }
  if (cfg.phi_count >= 2 && !(cfg.phi_max > cfg.phi_min)) {
    throw std::invalid_argument("phi_max: must exceed phi_min");
  }
  if (cfg.gamma_count < 1) {
    throw std::invalid_argument("gamma_count: must be at least 1");
  }
  if (cfg.gamma_count >= 2 && !(cfg.gamma_max > cfg.gamma_min)) {
    throw std::invalid_argument("gamma_max: must exceed gamma_min");
  }
  if (cfg.gamma_probe < 0.0) {
    throw std::invalid_argument("gamma_probe: must be nonnegative");
  }
  if (cfg.v_count < 1) {
    throw std::invalid_argument("v_count: must be at least 1");
  }
  if (cfg.v_count >= 2 && !(cfg.v_max > cfg.v_min)) {
    throw std::invalid_argument("v_max: must exceed v_min");
  }

  const char* variant_name = "offdiag";
  if (cfg.spec.variant == LatticeVariant::OffDiagonalAANNN) {
    variant_name = "offdiag-nnn";
  } else if (cfg.spec.variant == LatticeVariant::DiagonalAA) {
    variant_name = "diagonal";
  }
  cfg.echo = {
      {"variant", variant_name},
      {"n", std::to_string(cfg.spec.n)},
      {"t", fmt17(cfg.spec.t)},
      {"lambda", fmt17(cfg.spec.lambda)},
      {"beta", format_beta(cfg.spec.beta)},
      {"phi", fmt17(cfg.spec.phi)},
      {"j", std::to_string(cfg.spec.impurity.j)},
      {"gamma", fmt17(cfg.spec.impurity.gamma)},
      {"t_nnn", fmt17(cfg.spec.t_nnn)},
      {"v", fmt17(cfg.spec.v)},
      {"eps_real", fmt17(cfg.eps_real)},
      {"eps_zero", fmt17(cfg.eps_zero)},
      {"w_min", fmt17(cfg.w_min)},
      {"fraction", fmt17(cfg.fraction)},
      {"tol_bisect", fmt17(cfg.tol_bisect)},
      {"phi_points", std::to_string(cfg.phi_points)},
      {"gamma_max", fmt17(cfg.gamma_max)},
      {"policy", cfg.policy},
      {"phi_min", fmt17(cfg.phi_min)},
      {"phi_max", fmt17(cfg.phi_max)},
      {"phi_count", std::to_string(cfg.phi_count)},
      {"gamma_min", fmt17(cfg.gamma_min)},
      {"gamma_count", std::to_string(cfg.gamma_count)},
      {"gamma_probe", fmt17(cfg.gamma_probe)},
      {"n_values", format_int_list(cfg.n_values)},
      {"v_min", fmt17(cfg.v_min)},
      {"v_max", fmt17(cfg.v_max)},
      {"v_count", std::to_string(cfg.v_count)},
      {"plot_input", cfg.plot_input},
      {"plot_x", cfg.plot_x},
      {"plot_y", cfg.plot_y},
      {"plot_title", cfg.plot_title},
  };
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("config: cannot open '" + path.string() + "'");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace ptlat
