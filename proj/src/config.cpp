// Copyright 2026 The heraldgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "heraldgate/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace heraldgate {

namespace {

constexpr double kPi = std::numbers::pi;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view v, int line, const std::string& key) {
  double out = 0.0;
  const auto* end = v.data() + v.size();
  const auto res = std::from_chars(v.data(), end, out);
  if (res.ec != std::errc{} || res.ptr != end)
    throw ConfigError(line, key, "expected a number, got '" + std::string(v) + "'");
  return out;
}

std::int64_t parse_int(std::string_view v, int line, const std::string& key) {
  std::int64_t out = 0;
  const auto* end = v.data() + v.size();
  const auto res = std::from_chars(v.data(), end, out);
  if (res.ec != std::errc{} || res.ptr != end)
    throw ConfigError(line, key, "expected an integer, got '" + std::string(v) + "'");
  return out;
}

std::uint64_t parse_uint(std::string_view v, int line, const std::string& key) {
  std::uint64_t out = 0;
  const auto* end = v.data() + v.size();
  const auto res = std::from_chars(v.data(), end, out);
  if (res.ec != std::errc{} || res.ptr != end)
    throw ConfigError(line, key, "expected a non-negative integer, got '" +
                                     std::string(v) + "'");
  return out;
}

bool parse_bool(std::string_view v, int line, const std::string& key) {
  if (v == "true" || v == "1" || v == "on") return true;
  if (v == "false" || v == "0" || v == "off") return false;
  throw ConfigError(line, key, "expected true/false, got '" + std::string(v) + "'");
}

double checked_range(double v, double lo, double hi, bool hi_open, int line,
                     const std::string& key) {
  const bool ok = v >= lo && (hi_open ? v < hi : v <= hi);
  if (!ok) {
    std::ostringstream os;
    os << "value " << v << " out of range [" << lo << ", " << hi
       << (hi_open ? ")" : "]");
    throw ConfigError(line, key, os.str());
  }
  return v;
}

std::vector<BasisSchedule> parse_schedule(std::string_view v, int line,
                                          const std::string& key) {
  std::vector<BasisSchedule> out;
  std::string item;
  std::istringstream ss{std::string(v)};
  while (std::getline(ss, item, ',')) {
    const std::string_view entry = trim(item);
    if (entry.empty()) continue;
    const auto colon = entry.find(':');
    if (colon == std::string_view::npos || colon != 2)
      throw ConfigError(line, key,
                        "expected <pair>:<events> entries like XX:70, got '" +
                            std::string(entry) + "'");
    BasisSchedule s;
    try {
      s.basis = BasisPair{basis_from_letter(entry[0]),
                          basis_from_letter(entry[1])};
    } catch (const std::invalid_argument& e) {
      throw ConfigError(line, key, e.what());
    }
    s.target_events =
        parse_int(trim(entry.substr(colon + 1)), line, key);
    if (s.target_events <= 0)
      throw ConfigError(line, key, "target events must be > 0");
    out.push_back(s);
  }
  if (out.empty())
    throw ConfigError(line, key, "schedule must contain at least one entry");
  return out;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig cfg = default_experiment_config();

  std::string section;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(line_no, std::string(line), "unterminated section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (section != "prep" && section != "errors" && section != "budget" &&
          section != "run")
        throw ConfigError(line_no, section, "unknown section");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(line_no, std::string(line), "expected key = value");
    const std::string key = std::string(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(line_no, key, "empty key");
    const std::string qualified = section.empty() ? key : section + "." + key;

    const auto unit = [&](double v) {
      return checked_range(v, 0.0, 1.0, false, line_no, qualified);
    };

    if (section == "prep") {
      if (key == "theta1")
        cfg.prep1.theta = checked_range(parse_double(value, line_no, qualified),
                                        0.0, kPi, false, line_no, qualified);
      else if (key == "phi1")
        cfg.prep1.phi = checked_range(parse_double(value, line_no, qualified),
                                      0.0, 2.0 * kPi, true, line_no, qualified);
      else if (key == "theta2")
        cfg.prep2.theta = checked_range(parse_double(value, line_no, qualified),
                                        0.0, kPi, false, line_no, qualified);
      else if (key == "phi2")
        cfg.prep2.phi = checked_range(parse_double(value, line_no, qualified),
                                      0.0, 2.0 * kPi, true, line_no, qualified);
      else
        throw ConfigError(line_no, qualified, "unknown key");
    } else if (section == "errors") {
      if (key == "mode_overlap")
        cfg.error_model.mode_overlap = unit(parse_double(value, line_no, qualified));
      else if (key == "eps_det")
        cfg.error_model.eps_det = unit(parse_double(value, line_no, qualified));
      else if (key == "eps_sigma")
        cfg.error_model.eps_sigma = unit(parse_double(value, line_no, qualified));
      else if (key == "p_false_herald")
        cfg.error_model.p_false_herald = unit(parse_double(value, line_no, qualified));
      else
        throw ConfigError(line_no, qualified, "unknown key");
    } else if (section == "budget") {
      if (key == "p_pi")
        cfg.budget.p_pi = unit(parse_double(value, line_no, qualified));
      else if (key == "solid_angle_fraction")
        cfg.budget.solid_angle_fraction = unit(parse_double(value, line_no, qualified));
      else if (key == "t_fiber")
        cfg.budget.t_fiber = unit(parse_double(value, line_no, qualified));
      else if (key == "t_optics")
        cfg.budget.t_optics = unit(parse_double(value, line_no, qualified));
      else if (key == "eta")
        cfg.budget.eta = unit(parse_double(value, line_no, qualified));
      else if (key == "attempt_rate_hz") {
        const double v = parse_double(value, line_no, qualified);
        if (!(v >= 0.0))
          throw ConfigError(line_no, qualified, "must be >= 0");
        cfg.budget.attempt_rate_hz = v;
      } else
        throw ConfigError(line_no, qualified, "unknown key");
    } else if (section == "run") {
      if (key == "seed")
        cfg.seed = parse_uint(value, line_no, qualified);
      else if (key == "fast_mode")
        cfg.fast_mode = parse_bool(value, line_no, qualified);
      else if (key == "basis_schedule")
        cfg.basis_schedule = parse_schedule(value, line_no, qualified);
      else if (key == "attempt_cap") {
        cfg.attempt_cap = parse_int(value, line_no, qualified);
        if (cfg.attempt_cap <= 0)
          throw ConfigError(line_no, qualified, "must be > 0");
      } else if (key == "tomo_events") {
        cfg.tomo_events = parse_int(value, line_no, qualified);
        if (cfg.tomo_events < 16)
          throw ConfigError(line_no, qualified, "must be >= 16");
      } else if (key == "tomo_calibrated")
        cfg.tomo_calibrated = parse_bool(value, line_no, qualified);
      else
        throw ConfigError(line_no, qualified, "unknown key");
    } else {
      throw ConfigError(line_no, qualified, "key outside of any [section]");
    }
  }

  cfg.validate();
  return cfg;
}

std::string serialize_config(const ExperimentConfig& cfg) {
  std::ostringstream os;
  os.precision(17);
  os << "[prep]\n"
     << "theta1 = " << cfg.prep1.theta << "\n"
     << "phi1 = " << cfg.prep1.phi << "\n"
     << "theta2 = " << cfg.prep2.theta << "\n"
     << "phi2 = " << cfg.prep2.phi << "\n\n";
  os << "[errors]\n"
     << "mode_overlap = " << cfg.error_model.mode_overlap << "\n"
     << "eps_det = " << cfg.error_model.eps_det << "\n"
     << "eps_sigma = " << cfg.error_model.eps_sigma << "\n"
     << "p_false_herald = " << cfg.error_model.p_false_herald << "\n\n";
  os << "[budget]\n"
     << "p_pi = " << cfg.budget.p_pi << "\n"
     << "solid_angle_fraction = " << cfg.budget.solid_angle_fraction << "\n"
     << "t_fiber = " << cfg.budget.t_fiber << "\n"
     << "t_optics = " << cfg.budget.t_optics << "\n"
     << "eta = " << cfg.budget.eta << "\n"
     << "attempt_rate_hz = " << cfg.budget.attempt_rate_hz << "\n\n";
  os << "[run]\n"
     << "seed = " << cfg.seed << "\n"
     << "fast_mode = " << (cfg.fast_mode ? "true" : "false") << "\n"
     << "basis_schedule = ";
  for (std::size_t i = 0; i < cfg.basis_schedule.size(); ++i) {
    if (i > 0) os << ", ";
    os << basis_letter(cfg.basis_schedule[i].basis.b1)
       << basis_letter(cfg.basis_schedule[i].basis.b2) << ':'
       << cfg.basis_schedule[i].target_events;
  }
  os << "\n"
     << "attempt_cap = " << cfg.attempt_cap << "\n"
     << "tomo_events = " << cfg.tomo_events << "\n"
     << "tomo_calibrated = " << (cfg.tomo_calibrated ? "true" : "false")
     << "\n";
  return os.str();
}

}  // namespace heraldgate
