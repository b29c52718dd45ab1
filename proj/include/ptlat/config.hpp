#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "ptlat/model.hpp"

namespace ptlat {

// Fully resolved run configuration: model fields plus command parameters,
// with defaults applied. `echo` holds the resolved document for provenance;
// feeding it back through parse_config reproduces the same RunConfig.
struct RunConfig {
  ModelSpec spec;

  double eps_real = 1e-8;
  double eps_zero = 1e-3;
  double w_min = 0.5;
  double fraction = 0.1;
  double tol_bisect = 1e-4;
  int phi_points = 64;
  double gamma_max = 2.0;  // bisection cap and gamma-grid upper end
  std::string policy = "all-phi";

  double phi_min = 0.0;
  double phi_max = 2.0 * 3.14159265358979323846;
  int phi_count = 201;
  double gamma_min = 0.0;
  int gamma_count = 21;
  double gamma_probe = 0.1;
  std::vector<int> n_values;
  double v_min = 0.0;
  double v_max = 4.0;
  int v_count = 41;

  std::string plot_input;
  std::string plot_x;
  std::string plot_y;
  std::string plot_title;

  std::map<std::string, std::string> echo;
};

// Parses a flat key=value document ('#' starts a comment, values may be
// double-quoted). Unknown keys are rejected by name. beta accepts "a/b",
// a decimal, or an expression such as sqrt(13)-3.
RunConfig parse_config(const std::string& text);

RunConfig load_config(const std::filesystem::path& path);

// Arithmetic expression evaluator used for beta: numbers, + - * /,
// parentheses, sqrt(), pi.
double eval_expression(const std::string& text);

// 17 significant digits; round-trips through strtod.
std::string fmt17(double x);

}  // namespace ptlat
