#pragma once

#include "krh/quadrature.hpp"
#include "krh/slicer.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace krh {

inline constexpr std::string_view kToolVersion = "krh 1.0.0";
inline constexpr int kSchemaVersion = 1;

enum class ExportFormat { Csv, Json };

ExportFormat parse_format(std::string_view s);

struct ExportOptions {
  /// Suppresses the creation timestamp, the only non-deterministic field.
  bool reproducible = false;
};

/// 17 significant digits, so the text reads back to the identical double.
std::string format_double(double v);

/// Key/value pairs written as '# key=value' lines in CSV and as the
/// "metadata" object in JSON. Ordered, so output is stable.
using Metadata = std::vector<std::pair<std::string, std::string>>;

Metadata slice_metadata(const SliceResult& slice, const ExportOptions& options);

void write_slice_csv(std::ostream& out, const SliceResult& slice, const ExportOptions& options = {});
void write_slice_json(std::ostream& out, const SliceResult& slice, const ExportOptions& options = {});

/// Writes to `path`; throws std::runtime_error naming the path on failure.
void save_slice(const SliceResult& slice, ExportFormat format, const std::string& path,
                const ExportOptions& options = {});

void write_extrema_csv(std::ostream& out, const SliceResult& slice, const std::vector<ExtremumRecord>& extrema,
                       const ExportOptions& options = {});
void write_extrema_json(std::ostream& out, const SliceResult& slice, const std::vector<ExtremumRecord>& extrema,
                        const ExportOptions& options = {});

void write_report_text(std::ostream& out, const VerificationReport& report);
void write_report_csv(std::ostream& out, const VerificationReport& report, const ExportOptions& options = {});
void write_report_json(std::ostream& out, const VerificationReport& report, const ExportOptions& options = {});

/// Generic reader for the CSV layout above: metadata lines, a header row,
/// then numeric rows.
struct CsvTable {
  std::map<std::string, std::string> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

CsvTable read_csv_table(std::istream& in);

/// Opens `path`, hands the stream to `writer`, and throws
/// std::runtime_error naming the path if anything failed.
template <class Writer> void write_file(const std::string& path, Writer&& writer);

} // namespace krh

#include <fstream>
#include <stdexcept>

template <class Writer> void krh::write_file(const std::string& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  writer(out);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}
