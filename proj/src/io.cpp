#include "torus_transport/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "torus_transport/errors.hpp"

namespace torus_transport {

using nlohmann::json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

json complex_pair(const std::complex<double>& c) { return json::array({c.real(), c.imag()}); }

json atoms_json(const AtomicMeasure& m) {
  json atoms = json::array();
  for (const auto& [x, w] : m.atoms()) atoms.push_back({{"location", x}, {"weight", w}});
  return {{"atoms", atoms}, {"total_mass", m.total_mass()}};
}

}  // namespace

std::string to_json(const TorusDensity& d) {
  return json{{"samples", d.samples()}, {"M", d.grid_size()}, {"signed", d.is_signed()}}.dump();
}

std::string to_json(const AtomicMeasure& m) { return atoms_json(m).dump(); }

std::string to_json(const FourierSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(complex_pair(c));
  return json{{"K", s.max_freq()}, {"coeffs", coeffs}}.dump();
}

std::string to_json(const Cdf& c) {
  return json{{"breakpoints", c.breakpoints()},
              {"values", c.values()},
              {"kind", c.kind() == CdfKind::kStep ? "step" : "piecewise-linear"}}
      .dump();
}

std::string to_json(const TransportCost& t) {
  return json{{"p", t.p}, {"cost", t.cost}, {"shift", t.shift}}.dump();
}

std::string to_json(const SlopeFit& f) {
  return json{{"slope", f.slope}, {"intercept", f.intercept}, {"r_squared", f.r_squared}}.dump();
}

std::string to_json(const BoundReport& r) {
  json entries = json::object();
  for (const auto& [name, value] : r.entries)
    entries[name] = std::isnan(value) ? json() : json(value);
  json flags = json::object();
  for (const auto& [name, note] : r.flags) flags[name] = note;
  return json{{"entries", entries},
              {"flags", flags},
              {"metadata",
               {{"K", r.series_max_freq},
                {"n", r.truncation_n},
                {"p_list", r.p_list},
                {"truncated", r.truncated}}}}
      .dump();
}

TorusDensity density_from_json(const std::string& text) {
  const auto j = json::parse(text);
  std::vector<double> samples = j.at("samples").get<std::vector<double>>();
  const bool is_signed = j.value("signed", false);
  return is_signed ? TorusDensity::signed_density(std::move(samples))
                   : TorusDensity::density(std::move(samples));
}

AtomicMeasure atoms_from_json(const std::string& text) {
  const auto j = json::parse(text);
  std::vector<std::pair<double, double>> atoms;
  for (const auto& a : j.at("atoms"))
    atoms.emplace_back(a.at("location").get<double>(), a.at("weight").get<double>());
  return AtomicMeasure(std::move(atoms));
}

FourierSeries series_from_json(const std::string& text) {
  const auto j = json::parse(text);
  const int K = j.at("K").get<int>();
  std::vector<std::complex<double>> coeffs;
  for (const auto& c : j.at("coeffs"))
    coeffs.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
  return FourierSeries(K, std::move(coeffs));
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

bool looks_numeric(const std::string& s) {
  const auto pos = s.find_first_not_of(" \t");
  if (pos == std::string::npos) return false;
  const char c = s[pos];
  return (c >= '0' && c <= '9') || c == '-' || c == '+' || c == '.';
}

}  // namespace

AtomicMeasure atoms_from_csv_text(const std::string& text) {
  std::vector<std::pair<double, double>> atoms;
  for (const auto& line : split_lines(text)) {
    if (line[0] == '#' || !looks_numeric(line)) continue;  // comments and header
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw io_failure("atoms csv: expected 'location,weight'");
    try {
      atoms.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw io_failure("atoms csv: bad number in line: " + line);
    }
  }
  if (atoms.empty()) throw io_failure("atoms csv: no data rows");
  return AtomicMeasure(std::move(atoms));
}

AtomicMeasure atoms_from_csv_file(const std::string& path) {
  return atoms_from_csv_text(read_file(path));
}

std::string atoms_to_csv(const AtomicMeasure& m) {
  std::string out = "location,weight\n";
  for (const auto& [x, w] : m.atoms())
    out += format_double(x) + "," + format_double(w) + "\n";
  return out;
}

std::vector<double> values_from_csv_text(const std::string& text) {
  std::vector<double> values;
  for (const auto& line : split_lines(text)) {
    if (line[0] == '#' || !looks_numeric(line)) continue;
    try {
      values.push_back(std::stod(line));
    } catch (const std::exception&) {
      throw io_failure("values csv: bad number in line: " + line);
    }
  }
  if (values.empty()) throw io_failure("values csv: no data rows");
  return values;
}

std::vector<double> values_from_csv_file(const std::string& path) {
  return values_from_csv_text(read_file(path));
}

std::string plan_to_csv(const DiscretePlan& plan) {
  std::string out = "source,target,mass\n";
  for (const auto& e : plan.entries)
    out += std::to_string(e.source) + "," + std::to_string(e.target) + "," +
           format_double(e.mass) + "\n";
  return out;
}

std::string bound_report_to_csv(const BoundReport& r) {
  std::string header, row;
  for (const auto& [name, value] : r.entries) {
    if (!header.empty()) {
      header += ",";
      row += ",";
    }
    header += name;
    row += format_double(value);
  }
  return "# schema=1\n" + header + "\n" + row + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_failure("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_failure("cannot write file: " + path);
  out << content;
  if (!out) throw io_failure("write failed: " + path);
}

}  // namespace torus_transport
