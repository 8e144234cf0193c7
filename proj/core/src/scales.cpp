#include "spinmoment/scales.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace spinmoment {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

double parse_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::runtime_error("config value for '" + key + "' is not a number: " + text);
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
  if (used != text.size())
    throw std::runtime_error("config value for '" + key + "' is not a number: " + text);
  return v;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

void PhysicalScales::validate() const {
  const double vals[] = {e, m, m_e, c, hbar, d};
  const char* names[] = {"e", "m", "m_e", "c", "hbar", "d"};
  for (int i = 0; i < 6; ++i)
    if (!positive_finite(vals[i]))
      throw std::domain_error(std::string("physical scale '") + names[i] +
                              "' must be positive and finite");
}

double bohr_magneton(const PhysicalScales& s) { return s.e * s.hbar / (2.0 * s.m * s.c); }

double bohr_magneton_observed(const PhysicalScales& s) {
  return s.e * s.hbar / (2.0 * s.m_e * s.c);
}

double qed_first_order_moment(const PhysicalScales& s) {
  return bohr_magneton(s) * (1.0 + s.alpha() / (2.0 * std::numbers::pi));
}

double g_factor(const PhysicalScales& s, double mu_magnitude, double spin_magnitude) {
  if (spin_magnitude == 0.0) throw std::invalid_argument("g_factor: spin magnitude is zero");
  return 2.0 * s.m * s.c * mu_magnitude / (s.e * spin_magnitude);
}

std::map<std::string, std::string> load_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 'key = value', got: " + t);
    const std::string key = trim(t.substr(0, eq));
    const std::string val = trim(t.substr(eq + 1));
    if (key.empty() || val.empty())
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 'key = value', got: " + t);
    kv[key] = val;
  }
  return kv;
}

void apply_config(PhysicalScales& s, const std::map<std::string, std::string>& kv) {
  const auto set = [&kv](const char* key, double& field) {
    const auto it = kv.find(key);
    if (it != kv.end()) field = parse_double(key, it->second);
  };
  set("e", s.e);
  set("m", s.m);
  set("m_e", s.m_e);
  set("c", s.c);
  set("hbar", s.hbar);
  set("d", s.d);
  const auto it = kv.find("d_compton");
  if (it != kv.end()) s.d = parse_double("d_compton", it->second) * s.compton_radius();
  s.validate();
}

}  // namespace spinmoment
