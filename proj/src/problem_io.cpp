// Copyright 2026 The su2fac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "su2fac/problem_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "su2fac/error.hpp"

namespace su2fac::io {

using nlohmann::json;

namespace {

double as_number(const json& j, const std::string& what) {
  if (!j.is_number()) throw FormatError(what + " must be a number");
  return j.get<double>();
}

Complex as_complex(const json& j, const std::string& what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2)
    throw FormatError(what + " must be a [re, im] pair");
  return {as_number(j[0], what), as_number(j[1], what)};
}

bool is_matrix_shape(const json& j) {
  return j.is_array() && j.size() == 2 && j[0].is_array() &&
         j[0].size() == 2 && j[1].is_array() && j[1].size() == 2;
}

Mat2 as_matrix(const json& j, const std::string& what) {
  if (!is_matrix_shape(j))
    throw FormatError(what + " must be a 2x2 array of [re, im] pairs");
  return {as_complex(j[0][0], what), as_complex(j[0][1], what),
          as_complex(j[1][0], what), as_complex(j[1][1], what)};
}

json matrix_json(const Mat2& m) {
  json rows = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (int c = 0; c < 2; ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

// A 3-vector of numbers, or a 2x2 complex matrix in su(2).
Vec3 as_generator(const json& j, const std::string& what) {
  if (j.is_array() && j.size() == 3) {
    const Vec3 v{as_number(j[0], what), as_number(j[1], what),
                 as_number(j[2], what)};
    if (!is_finite(v)) throw FormatError(what + " must be finite");
    return v;
  }
  if (is_matrix_shape(j)) {
    try {
      return matrix_to_vec(as_matrix(j, what));
    } catch (const Error& e) {
      throw Error(e.kind(), what + " is not in su(2)");
    }
  }
  throw FormatError(what + " must be a 3-vector or a 2x2 complex matrix");
}

const json& field(const json& obj, const char* key) {
  if (!obj.contains(key))
    throw FormatError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  try {
    std::size_t used = 0;
    const double x = std::stod(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return x;
  } catch (const std::exception&) {
    throw FormatError(what + ": '" + t + "' is not a number");
  }
}

long parse_index(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  try {
    std::size_t used = 0;
    const long k = std::stol(t, &used);
    if (used != t.size()) throw std::invalid_argument(t);
    return k;
  } catch (const std::exception&) {
    throw FormatError(what + ": '" + t + "' is not an integer");
  }
}

void check_record_index(long k, std::size_t expected) {
  if (k != static_cast<long>(expected)) {
    throw FormatError("record index " + std::to_string(k) +
                      " out of sequence (expected " +
                      std::to_string(expected) + ")");
  }
}

Schedule parse_schedule_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw FormatError("schedule must be a JSON object");
  Schedule s;
  s.residual = as_number(field(j, "residual"), "residual");
  s.bound_c = as_number(field(j, "bound_c"), "bound_c");
  s.frame_angle = as_number(field(j, "frame_angle"), "frame_angle");
  s.conjugator = as_matrix(field(j, "conjugator"), "conjugator");
  const json& records = field(j, "factors");
  if (!records.is_array()) throw FormatError("factors must be an array");
  for (const json& rec : records) {
    if (!rec.is_object()) throw FormatError("factor record must be an object");
    const json& k = field(rec, "k");
    if (!k.is_number_integer()) throw FormatError("k must be an integer");
    check_record_index(k.get<long>(), s.factors.size() + 1);
    s.factors.push_back({as_number(field(rec, "a"), "a"),
                         as_number(field(rec, "b"), "b")});
  }
  const json& q = field(j, "Q");
  if (!q.is_number_integer() ||
      q.get<long>() != static_cast<long>(s.factors.size()))
    throw FormatError("Q does not match the number of factor records");
  return s;
}

Schedule parse_schedule_csv(const std::string& text) {
  Schedule s;
  std::optional<long> q;
  bool seen_header = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = trim(line.substr(1));
      const auto eq = body.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = trim(body.substr(0, eq));
      const std::string value = body.substr(eq + 1);
      if (key == "Q") {
        q = parse_index(value, "Q");
      } else if (key == "residual") {
        s.residual = parse_double(value, key);
      } else if (key == "bound_c") {
        s.bound_c = parse_double(value, key);
      } else if (key == "frame_angle") {
        s.frame_angle = parse_double(value, key);
      } else if (key == "conjugator") {
        const auto cells = split(value, ',');
        if (cells.size() != 8)
          throw FormatError("conjugator needs 8 comma-separated reals");
        double v[8];
        for (int i = 0; i < 8; ++i) v[i] = parse_double(cells[i], key);
        s.conjugator = {Complex(v[0], v[1]), Complex(v[2], v[3]),
                        Complex(v[4], v[5]), Complex(v[6], v[7])};
      }
      continue;
    }
    const auto cells = split(line, ',');
    if (cells.size() != 3) throw FormatError("CSV rows need 3 columns: " + line);
    if (!seen_header) {
      if (trim(cells[0]) != "k")
        throw FormatError("CSV header 'k,a_k,b_k' missing");
      seen_header = true;
      continue;
    }
    check_record_index(parse_index(cells[0], "k"), s.factors.size() + 1);
    s.factors.push_back(
        {parse_double(cells[1], "a_k"), parse_double(cells[2], "b_k")});
  }
  if (!seen_header) throw FormatError("CSV header 'k,a_k,b_k' missing");
  if (!q || *q != static_cast<long>(s.factors.size()))
    throw FormatError("Q does not match the number of factor records");
  return s;
}

}  // namespace

Problem parse_problem(const std::string& text, bool require_target) {
  const json j = parse_json(text);
  if (!j.is_object()) throw FormatError("problem must be a JSON object");

  Problem p;
  if (j.contains("target")) {
    const Mat2 target = as_matrix(j.at("target"), "target");
    if (!is_su2(target, 1e-8)) {
      std::ostringstream msg;
      msg << "target is not in SU(2) (residual " << unitary_residual(target)
          << ")";
      throw Error(ErrorKind::NotUnitary, msg.str());
    }
    p.target = target;
  } else if (require_target) {
    throw FormatError("missing field 'target'");
  }

  p.pair.alpha = as_generator(field(j, "generator_a"), "generator_a");
  p.pair.beta = as_generator(field(j, "generator_b"), "generator_b");

  if (j.contains("bound_c")) {
    p.bound_c = as_number(j.at("bound_c"), "bound_c");
    if (!(std::isfinite(p.bound_c) && p.bound_c > 0.0))
      throw Error(ErrorKind::InvalidBound, "bound_c must be positive");
  } else if (require_target) {
    throw FormatError("missing field 'bound_c'");
  }

  if (j.contains("tolerance")) {
    p.tolerance = as_number(j.at("tolerance"), "tolerance");
    if (!(std::isfinite(p.tolerance) && p.tolerance > 0.0))
      throw Error(ErrorKind::InvalidBound, "tolerance must be positive");
  }
  return p;
}

std::string problem_to_json(const Problem& problem) {
  json j;
  if (problem.target) j["target"] = matrix_json(*problem.target);
  j["generator_a"] = {problem.pair.alpha.x, problem.pair.alpha.y,
                      problem.pair.alpha.z};
  j["generator_b"] = {problem.pair.beta.x, problem.pair.beta.y,
                      problem.pair.beta.z};
  j["bound_c"] = problem.bound_c;
  j["tolerance"] = problem.tolerance;
  return j.dump(2) + "\n";
}

Schedule make_schedule(const Factorization& result) {
  Schedule s;
  s.factors = result.sequence.factors;
  s.residual = result.report.residual;
  s.bound_c = result.sequence.bound_c;
  s.frame_angle = result.report.frame_angle;
  s.conjugator = result.report.conjugator;
  return s;
}

std::string schedule_to_json(const Schedule& schedule) {
  json j;
  j["Q"] = schedule.factors.size();
  j["residual"] = schedule.residual;
  j["bound_c"] = schedule.bound_c;
  j["frame_angle"] = schedule.frame_angle;
  j["conjugator"] = matrix_json(schedule.conjugator);
  json records = json::array();
  for (std::size_t k = 0; k < schedule.factors.size(); ++k) {
    records.push_back({{"k", k + 1},
                       {"a", schedule.factors[k].a},
                       {"b", schedule.factors[k].b}});
  }
  j["factors"] = std::move(records);
  return j.dump(2) + "\n";
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string schedule_to_csv(const Schedule& schedule) {
  std::ostringstream out;
  out << "# Q=" << schedule.factors.size() << "\n";
  out << "# residual=" << format_double(schedule.residual) << "\n";
  out << "# bound_c=" << format_double(schedule.bound_c) << "\n";
  out << "# frame_angle=" << format_double(schedule.frame_angle) << "\n";
  out << "# conjugator=";
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      if (r + c > 0) out << ",";
      out << format_double(schedule.conjugator(r, c).real()) << ","
          << format_double(schedule.conjugator(r, c).imag());
    }
  out << "\n";
  out << "k,a_k,b_k\n";
  for (std::size_t k = 0; k < schedule.factors.size(); ++k) {
    out << k + 1 << "," << format_double(schedule.factors[k].a) << ","
        << format_double(schedule.factors[k].b) << "\n";
  }
  return out.str();
}

Schedule parse_schedule(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return parse_schedule_json(text);
  return parse_schedule_csv(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw FormatError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw FormatError("cannot move output into place at '" + path + "'");
  }
}

}  // namespace su2fac::io
