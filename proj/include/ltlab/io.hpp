#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ltlab/birman_schwinger.hpp"
#include "ltlab/bounds.hpp"
#include "ltlab/constants.hpp"
#include "ltlab/errors.hpp"
#include "ltlab/kinetic.hpp"
#include "ltlab/potential.hpp"
#include "ltlab/spectrum.hpp"

namespace ltlab {

using json = nlohmann::ordered_json;

// ---- formatting -----------------------------------------------------------

// Shortest exact decimal for CSV cells; parsing it back recovers the double.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---- Potential <-> JSON ----------------------------------------------------
// Schema: {"family": name, "dim": n, "truncation_radius": R, ...family params}
// square_well/harmonic_truncated: depth|curvature + half_width
// poschl_teller: lambda;  gaussian_well: depth + width
// scaled: factor + inner;  sum: terms;  tabulated: x + v
// An optional "label" overrides the generated descriptor.

inline json to_json(const Potential& V) {
  json j;
  j["family"] = family_name(V.family());
  j["dim"] = V.dim();
  j["truncation_radius"] = V.truncation_radius();
  switch (V.family()) {
    case PotentialFamily::SquareWell:
      j["depth"] = V.params()[0];
      j["half_width"] = V.params()[1];
      break;
    case PotentialFamily::PoschlTeller:
      j["lambda"] = V.params()[0];
      break;
    case PotentialFamily::GaussianWell:
      j["depth"] = V.params()[0];
      j["width"] = V.params()[1];
      break;
    case PotentialFamily::HarmonicTruncated:
      j["curvature"] = V.params()[0];
      j["half_width"] = V.params()[1];
      break;
    case PotentialFamily::Scaled:
      j["factor"] = V.params()[0];
      j["inner"] = to_json(V.children()[0]);
      break;
    case PotentialFamily::Sum: {
      json terms = json::array();
      for (const Potential& t : V.children()) terms.push_back(to_json(t));
      j["terms"] = std::move(terms);
      break;
    }
    case PotentialFamily::Tabulated:
      j["x"] = V.table_x();
      j["v"] = V.table_v();
      break;
  }
  j["label"] = V.label();
  return j;
}

// rng is consulted only by the pseudo-family "random_tabulated"
// {points, depth, half_width}; the result is an ordinary tabulated potential,
// so re-serializing records the concrete numbers.
inline Potential potential_from_json(const json& j, std::mt19937* rng = nullptr) {
  if (!j.is_object() || !j.contains("family"))
    throw ConfigError("potential descriptor must be an object with a 'family' field");
  const std::string fam = j.at("family").get<std::string>();
  const int dim = j.value("dim", 1);
  const double R = j.value("truncation_radius", 0.0);
  Potential V = [&]() -> Potential {
    if (fam == "square_well")
      return Potential::square_well(j.at("depth").get<double>(),
                                    j.at("half_width").get<double>(), dim, R);
    if (fam == "poschl_teller")
      return Potential::poschl_teller(j.at("lambda").get<double>(), dim, R);
    if (fam == "gaussian_well")
      return Potential::gaussian_well(j.at("depth").get<double>(), j.at("width").get<double>(),
                                      dim, R);
    if (fam == "harmonic_truncated")
      return Potential::harmonic_truncated(j.at("curvature").get<double>(),
                                           j.at("half_width").get<double>(), dim, R);
    if (fam == "scaled")
      return Potential::scaled(j.at("factor").get<double>(),
                               potential_from_json(j.at("inner"), rng));
    if (fam == "sum") {
      std::vector<Potential> terms;
      for (const json& t : j.at("terms")) terms.push_back(potential_from_json(t, rng));
      return Potential::sum(std::move(terms));
    }
    if (fam == "tabulated")
      return Potential::tabulated(j.at("x").get<std::vector<double>>(),
                                  j.at("v").get<std::vector<double>>(), dim, R);
    if (fam == "random_tabulated") {
      if (!rng) throw ConfigError("random_tabulated requires a seeded context");
      const int points = j.value("points", 9);
      const double depth = j.value("depth", 4.0);
      const double hw = j.value("half_width", 4.0);
      if (points < 3 || !(depth > 0.0) || !(hw > 0.0))
        throw ConfigError("random_tabulated needs points >= 3, depth > 0, half_width > 0");
      std::uniform_real_distribution<double> u(0.0, 1.0);
      std::vector<double> x(points), v(points);
      for (int i = 0; i < points; ++i) {
        x[i] = -hw + 2.0 * hw * i / (points - 1);
        v[i] = (i == 0 || i + 1 == points) ? 0.0 : -depth * u(*rng);
      }
      return Potential::tabulated(std::move(x), std::move(v), dim, R);
    }
    throw ConfigError("unknown potential family '" + fam + "'");
  }();
  if (j.contains("label")) V.set_label(j.at("label").get<std::string>());
  return V;
}

// ---- results -> JSON -------------------------------------------------------

inline json to_json(const SpectralResult& s) {
  json j;
  j["dim"] = s.dim;
  json evs = json::array();
  for (const auto& e : s.eigenvalues)
    evs.push_back(json{{"value", e.value}, {"multiplicity", e.multiplicity}});
  j["eigenvalues"] = std::move(evs);
  j["grid_points"] = s.grid_points;
  j["truncation_radius"] = s.truncation_radius;
  j["tolerance"] = s.tolerance;
  if (s.dim >= 2) {
    j["channels_used"] = s.channels_used;
    j["channel_cutoff"] = s.channel_cutoff;
  }
  return j;
}

inline json to_json(const BoundReport& r) {
  json j;
  j["potential"] = r.potential;
  j["gamma"] = r.gamma;
  j["dim"] = r.dim;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["ratio"] = r.ratio;
  j["constant"] = r.constant;
  j["source"] = source_name(r.source);
  j["verdict"] = verdict_name(r.verdict);
  j["error_budget"] = r.error_budget;
  j["states"] = r.states;
  return j;
}

// ---- CSV -------------------------------------------------------------------

inline const char* bound_report_csv_header() {
  return "potential,gamma,dim,lhs,rhs,ratio,source,verdict,constant,error_budget";
}

inline std::string bound_report_csv_row(const BoundReport& r) {
  std::ostringstream os;
  os << '"' << r.potential << '"' << ',' << format_double(r.gamma) << ',' << r.dim << ','
     << format_double(r.lhs) << ',' << format_double(r.rhs) << ',' << format_double(r.ratio)
     << ',' << source_name(r.source) << ',' << verdict_name(r.verdict) << ','
     << format_double(r.constant) << ',' << format_double(r.error_budget);
  return os.str();
}

// Minimal CSV splitting: quotes protect commas, no embedded quotes in our
// own output.
inline std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == ',' && !quoted) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

inline BoundReport bound_report_from_csv_row(const std::string& line) {
  const std::vector<std::string> f = split_csv_row(line);
  if (f.size() != 10) throw ConfigError("bound report row needs 10 fields");
  BoundReport r;
  r.potential = f[0];
  r.gamma = std::stod(f[1]);
  r.dim = std::stoi(f[2]);
  r.lhs = std::stod(f[3]);
  r.rhs = std::stod(f[4]);
  r.ratio = std::stod(f[5]);
  const std::optional<ConstantSource> src = source_from_name(f[6]);
  if (!src) throw ConfigError("unknown constant source '" + f[6] + "'");
  r.source = *src;
  if (f[7] == "satisfied")
    r.verdict = Verdict::Satisfied;
  else if (f[7] == "violated")
    r.verdict = Verdict::Violated;
  else if (f[7] == "not_applicable")
    r.verdict = Verdict::NotApplicable;
  else
    throw ConfigError("unknown verdict '" + f[7] + "'");
  r.constant = std::stod(f[8]);
  r.error_budget = std::stod(f[9]);
  return r;
}

inline void write_density_csv(std::ostream& os, const DensityProfile& rho) {
  os << "x,rho\n";
  for (std::size_t p = 0; p < rho.values.size(); ++p)
    os << format_double(rho.nodes[p]) << ',' << format_double(rho.values[p]) << '\n';
}

// Families as CSV: header x,f1..fN; one row per node.
inline void write_family_csv(std::ostream& os, const OrthonormalFamily& fam) {
  os << "x";
  for (std::size_t j = 1; j <= fam.size(); ++j) os << ",f" << j;
  os << '\n';
  for (std::size_t p = 0; p < fam.nodes.size(); ++p) {
    os << format_double(fam.nodes[p]);
    for (std::size_t j = 0; j < fam.size(); ++j)
      os << ',' << format_double(fam.functions[j][p]);
    os << '\n';
  }
}

inline OrthonormalFamily family_from_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ConfigError("empty family CSV");
  const std::vector<std::string> header = split_csv_row(line);
  if (header.size() < 2 || header[0] != "x")
    throw ConfigError("family CSV header must be x,f1,...");
  const std::size_t count = header.size() - 1;
  std::vector<double> nodes;
  std::vector<std::vector<double>> funcs(count);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv_row(line);
    if (f.size() != header.size()) throw ConfigError("ragged family CSV row");
    nodes.push_back(std::stod(f[0]));
    for (std::size_t j = 0; j < count; ++j) funcs[j].push_back(std::stod(f[j + 1]));
  }
  if (nodes.size() < 5) throw ConfigError("family CSV needs at least 5 nodes");
  OrthonormalFamily fam;
  fam.nodes = std::move(nodes);
  fam.h = fam.nodes[1] - fam.nodes[0];
  for (std::size_t p = 1; p + 1 < fam.nodes.size(); ++p) {
    const double step = fam.nodes[p + 1] - fam.nodes[p];
    if (std::fabs(step - fam.h) > 1e-9 * std::fabs(fam.h))
      throw ConfigError("family CSV grid must be uniform");
  }
  fam.radius = 0.5 * (fam.nodes.back() - fam.nodes.front());
  fam.functions = std::move(funcs);
  return fam;
}

inline void write_kernel_csv(std::ostream& os, const KernelMatrix& K) {
  os << "x";
  for (std::size_t j = 0; j < K.n; ++j) os << ",k" << j;
  os << '\n';
  for (std::size_t i = 0; i < K.n; ++i) {
    os << format_double(K.nodes[i]);
    for (std::size_t j = 0; j < K.n; ++j) os << ',' << format_double(K.at(i, j));
    os << '\n';
  }
}

// ---- files -----------------------------------------------------------------

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error("short write to '" + path + "'");
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ltlab
