#include "hankelkit/cli/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace hankelkit::cli {

#ifndef HANKELKIT_VERSION
#define HANKELKIT_VERSION "0.0.0"
#endif

std::string to_string(Format f) {
  switch (f) {
  case Format::json: return "json";
  case Format::csv: return "csv";
  case Format::text: return "text";
  }
  return "text";
}

Json config_to_json(const RunConfig& c) {
  Json j;
  j["subcommand"] = c.subcommand;
  if (c.subcommand == "opt") j["objective"] = c.objective;
  if (c.subcommand == "opt" || c.subcommand == "verify-bounds") {
    j["tol"] = c.tol;
    j["budget"] = c.budget;
  }
  if (c.subcommand == "search") {
    j["n"] = c.n;
    j["samples"] = c.samples;
    j["seed"] = c.seed;
    j["a2_zero"] = c.a2_zero;
  }
  if (c.subcommand == "grunsky") {
    j["function"] = c.function;
    j["cutoff"] = c.cutoff;
  }
  j["format"] = to_string(c.format);
  j["acknowledge_discrepancies"] = c.acknowledge_discrepancies;
  return j;
}

void write_json(std::ostream& os, const RunConfig& config, const Report& r) {
  Json doc;
  doc["tool_version"] = HANKELKIT_VERSION;
  doc["config"] = config_to_json(config);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j;
    j["id"] = row.id;
    j["paper_value"] = row.paper_value ? Json(*row.paper_value) : Json(nullptr);
    j["computed_value"] = row.computed_value;
    j["argmax"] = row.argmax;
    j["tolerance"] = row.tolerance;
    j["agreed"] = row.agreed ? Json(*row.agreed) : Json(nullptr);
    if (row.details.is_object()) {
      for (const auto& [k, v] : row.details.items()) j[k] = v;
    }
    rows.push_back(std::move(j));
  }
  doc["results"] = std::move(rows);
  if (r.extra.is_object()) {
    for (const auto& [k, v] : r.extra.items()) doc[k] = v;
  }
  os << doc.dump(2) << '\n';
}

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

std::string agreed_text(const std::optional<bool>& a) {
  return a ? (*a ? "true" : "false") : "";
}

} // namespace

void write_csv(std::ostream& os, const Report& r) {
  os << "id,paper_value,computed_value,argmax,tolerance,agreed\n";
  for (const auto& row : r.rows) {
    os << csv_field(row.id) << ','
       << (row.paper_value ? num(*row.paper_value) : "") << ','
       << num(row.computed_value) << ',' << csv_field(row.argmax_text) << ','
       << num(row.tolerance) << ',' << agreed_text(row.agreed) << '\n';
  }
}

void write_text(std::ostream& os, const Report& r) {
  std::size_t id_width = 2;
  for (const auto& row : r.rows) id_width = std::max(id_width, row.id.size());
  os << std::left << std::setw(static_cast<int>(id_width) + 2) << "id"
     << std::setw(16) << "published" << std::setw(20) << "computed"
     << std::setw(10) << "tol" << std::setw(8) << "agreed" << "argmax\n";
  for (const auto& row : r.rows) {
    std::ostringstream paper, computed, tol;
    if (row.paper_value) paper << std::setprecision(10) << *row.paper_value;
    else paper << "-";
    computed << std::setprecision(13) << row.computed_value;
    tol << std::setprecision(2) << row.tolerance;
    const std::string agreed = row.agreed ? (*row.agreed ? "yes" : "NO") : "-";
    os << std::setw(static_cast<int>(id_width) + 2) << row.id
       << std::setw(16) << paper.str() << std::setw(20) << computed.str()
       << std::setw(10) << tol.str() << std::setw(8) << agreed
       << row.argmax_text << '\n';
  }
  os << std::right;
  if (!r.lines.empty()) os << '\n';
  for (const auto& line : r.lines) os << line << '\n';
}

} // namespace hankelkit::cli
