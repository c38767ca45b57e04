#include "oham/problem.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "oham/error.hpp"

namespace oham {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, const std::string& field, int line) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line) + ": field " + field + ": invalid number '" +
                         std::string(text) + "'",
                     field, line);
  }
  return value;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void validate(const ProblemSpec& spec) {
  if (!std::isfinite(spec.a) || spec.a < 0.0) throw InvariantError("field a: must be finite and >= 0", "a");
  if (!std::isfinite(spec.b) || spec.b < 0.0) throw InvariantError("field b: must be finite and >= 0", "b");
  if (!std::isfinite(spec.gamma)) throw InvariantError("field gamma: must be finite", "gamma");
  if (!std::isfinite(spec.lambda)) throw InvariantError("field lambda: must be finite", "lambda");
  if (spec.lambda != 0.0 && spec.power % 2 == 0) {
    throw InvariantError("field power: must be odd when lambda is nonzero", "power");
  }
  if (spec.lambda == 0.0 && spec.forcing.is_zero()) {
    throw InvariantError("field forcing: lambda and forcing cannot both vanish", "forcing");
  }
  if (spec.exact.kind == ExactKind::SampleTable) {
    const auto& s = spec.exact.samples;
    if (s.empty()) throw InvariantError("field exact: sample table is empty", "exact");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i].first < 0.0 || s[i].first > 1.0 || (i > 0 && s[i].first <= s[i - 1].first)) {
        throw InvariantError("field exact: sample abscissae must increase strictly within [0, 1]", "exact");
      }
    }
  }
}

ProblemSpec builtin(int example_id) {
  const double sqrt2 = std::numbers::sqrt2;
  ProblemSpec spec;
  switch (example_id) {
    case 1:
      spec.a = 0.0;
      spec.b = 1.0;
      spec.gamma = 1.0 / 3.0;
      spec.forcing = Polynomial({0.0, 6.0 / std::cbrt(4.0)});
      spec.lambda = 0.0;
      spec.power = 1;
      spec.exact.kind = ExactKind::Cubic;
      break;
    case 2:
      spec.a = 1.0;
      spec.b = sqrt2 / 2.0;
      spec.gamma = -1.0;
      spec.lambda = 3.0 / (4.0 * (2.0 * sqrt2 - 2.0));
      spec.power = 5;
      spec.exact.kind = ExactKind::InvSqrt;
      break;
    case 3:
      spec.a = 1.0;
      spec.b = sqrt2 / 2.0;
      spec.gamma = 1.0;
      spec.lambda = 3.0 * (2.0 * sqrt2 - 2.0) / 4.0;
      spec.power = 5;
      spec.exact.kind = ExactKind::InvSqrt;
      break;
    case 4:
      spec.a = 1.0;
      spec.b = 0.5;
      spec.gamma = -2.0;
      spec.lambda = 2.0 / (std::numbers::ln2 * std::numbers::ln2);
      spec.power = 3;
      spec.exact.kind = ExactKind::InvLinear;
      break;
    default:
      throw DomainError("unknown example id " + std::to_string(example_id) + " (expected 1..4)");
  }
  return spec;
}

double alpha(const ProblemSpec& spec, double p) {
  const double value = std::pow(p, spec.gamma);
  if (!std::isfinite(value) || value <= 0.0) throw NonpositiveNonlocalCoefficient(p, spec.gamma);
  return value;
}

std::optional<double> exact_eval(const ProblemSpec& spec, double x) {
  switch (spec.exact.kind) {
    case ExactKind::None:
      return std::nullopt;
    case ExactKind::Cubic:
      return x * x * x;
    case ExactKind::InvSqrt:
      return 1.0 / std::sqrt(1.0 + x);
    case ExactKind::InvLinear:
      return 1.0 / (1.0 + x);
    case ExactKind::SampleTable: {
      const auto& s = spec.exact.samples;
      if (s.empty()) return std::nullopt;
      if (x <= s.front().first) return s.front().second;
      if (x >= s.back().first) return s.back().second;
      const auto hi = std::lower_bound(s.begin(), s.end(), x,
                                       [](const auto& sample, double v) { return sample.first < v; });
      const auto lo = hi - 1;
      const double t = (x - lo->first) / (hi->first - lo->first);
      return lo->second + t * (hi->second - lo->second);
    }
  }
  return std::nullopt;
}

std::optional<Polynomial> exact_polynomial(const ProblemSpec& spec) {
  if (spec.exact.kind == ExactKind::Cubic) return Polynomial::monomial(3);
  return std::nullopt;
}

ExactSolution parse_sample_table(std::string_view csv) {
  ExactSolution table;
  table.kind = ExactKind::SampleTable;
  std::istringstream in{std::string(csv)};
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty()) continue;
    if (!header) {
      if (t != "x,y") throw ParseError("sample table: expected header 'x,y'", "exact", lineno);
      header = true;
      continue;
    }
    const auto comma = t.find(',');
    if (comma == std::string_view::npos) throw ParseError("sample table line " + std::to_string(lineno) + ": expected x,y", "exact", lineno);
    table.samples.emplace_back(parse_number(t.substr(0, comma), "exact", lineno),
                               parse_number(t.substr(comma + 1), "exact", lineno));
  }
  if (!header) throw ParseError("sample table: missing header 'x,y'", "exact", 0);
  return table;
}

ProblemSpec parse_problem(std::string_view text, const std::filesystem::path& base_dir) {
  static const char* const kKeys[] = {"a", "b", "gamma", "forcing", "lambda", "power", "exact"};
  std::map<std::string, std::pair<std::string, int>> fields;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("line " + std::to_string(lineno) + ": expected key=value", "", lineno);
    }
    std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'", key, lineno);
    }
    if (fields.contains(key)) {
      throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'", key, lineno);
    }
    fields.emplace(std::move(key), std::make_pair(value, lineno));
  }

  for (const char* required : {"a", "b", "gamma"}) {
    if (!fields.contains(required)) {
      throw ParseError(std::string("missing required field ") + required, required);
    }
  }
  auto number = [&](const std::string& key) {
    const auto& [value, line] = fields.at(key);
    return parse_number(value, key, line);
  };

  ProblemSpec spec;
  spec.a = number("a");
  spec.b = number("b");
  spec.gamma = number("gamma");
  if (fields.contains("lambda")) spec.lambda = number("lambda");
  if (fields.contains("power")) {
    const double m = number("power");
    if (m < 0.0 || m != std::floor(m) || m > 1e6) {
      throw ParseError("line " + std::to_string(fields.at("power").second) +
                           ": field power: expected a nonnegative integer",
                       "power", fields.at("power").second);
    }
    spec.power = static_cast<unsigned>(m);
  }
  if (fields.contains("forcing")) {
    const auto& [value, line] = fields.at("forcing");
    std::vector<double> coeffs;
    std::string_view rest = value;
    while (true) {
      const auto comma = rest.find(',');
      coeffs.push_back(parse_number(rest.substr(0, comma), "forcing", line));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    spec.forcing = Polynomial(std::move(coeffs));
  }
  if (fields.contains("exact")) {
    const auto& [value, line] = fields.at("exact");
    if (value == "cubic") {
      spec.exact.kind = ExactKind::Cubic;
    } else if (value == "inv_sqrt") {
      spec.exact.kind = ExactKind::InvSqrt;
    } else if (value == "inv_linear") {
      spec.exact.kind = ExactKind::InvLinear;
    } else if (value == "none") {
      spec.exact.kind = ExactKind::None;
    } else if (value.starts_with("file:")) {
      const std::filesystem::path rel = value.substr(5);
      const auto path = rel.is_absolute() || base_dir.empty() ? rel : base_dir / rel;
      std::ifstream file(path);
      if (!file) {
        throw ParseError("line " + std::to_string(line) + ": field exact: cannot read '" + path.string() + "'",
                         "exact", line);
      }
      std::stringstream buffer;
      buffer << file.rdbuf();
      spec.exact = parse_sample_table(buffer.str());
      spec.exact.source = value.substr(5);
    } else {
      throw ParseError("line " + std::to_string(line) + ": field exact: unknown kind '" + value + "'", "exact",
                       line);
    }
  }
  validate(spec);
  return spec;
}

ProblemSpec load_problem(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw ParseError("cannot read config file '" + path.string() + "'", "");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_problem(buffer.str(), path.parent_path());
}

std::string serialize_problem(const ProblemSpec& spec) {
  std::string out;
  out += "a=" + format_number(spec.a) + "\n";
  out += "b=" + format_number(spec.b) + "\n";
  out += "gamma=" + format_number(spec.gamma) + "\n";
  out += "forcing=";
  if (spec.forcing.is_zero()) {
    out += "0";
  } else {
    const auto c = spec.forcing.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + format_number(c[i]);
  }
  out += "\n";
  out += "lambda=" + format_number(spec.lambda) + "\n";
  out += "power=" + std::to_string(spec.power) + "\n";
  out += "exact=";
  switch (spec.exact.kind) {
    case ExactKind::None: out += "none"; break;
    case ExactKind::Cubic: out += "cubic"; break;
    case ExactKind::InvSqrt: out += "inv_sqrt"; break;
    case ExactKind::InvLinear: out += "inv_linear"; break;
    case ExactKind::SampleTable: out += "file:" + spec.exact.source; break;
  }
  out += "\n";
  return out;
}

}  // namespace oham
