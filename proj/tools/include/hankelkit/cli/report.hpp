#ifndef HANKELKIT_CLI_REPORT_HPP
#define HANKELKIT_CLI_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hankelkit/cli/cli.hpp"

namespace hankelkit::cli {

/// Keys keep insertion order so the output is stable and readable.
using Json = nlohmann::ordered_json;

struct Row {
  std::string id;
  std::optional<double> paper_value;
  double computed_value = 0.0;
  /// Structured location of the value (point, spec, ...).
  Json argmax;
  /// One-line rendering of argmax for csv and text.
  std::string argmax_text;
  double tolerance = 0.0;
  /// Empty when there is nothing to agree with.
  std::optional<bool> agreed;
  /// Extra per-row fields, emitted in json only.
  Json details;
};

struct Report {
  std::vector<Row> rows;
  /// Extra top-level fields, emitted in json only.
  Json extra;
  /// Free text appended after the rows in text output.
  std::vector<std::string> lines;
};

Json config_to_json(const RunConfig& config);
std::string to_string(Format f);

void write_json(std::ostream& os, const RunConfig& config, const Report& r);
void write_csv(std::ostream& os, const Report& r);
void write_text(std::ostream& os, const Report& r);

} // namespace hankelkit::cli

#endif // HANKELKIT_CLI_REPORT_HPP
