#include "krh/export.hpp"

#include "json.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <istream>
#include <ostream>
#include <sstream>

namespace krh {

using nlohmann::ordered_json;

ExportFormat parse_format(std::string_view s) {
  if (s == "csv") return ExportFormat::Csv;
  if (s == "json") return ExportFormat::Json;
  throw std::invalid_argument("unknown output format: " + std::string(s));
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_metadata_lines(std::ostream& out, const Metadata& md) {
  for (const auto& [k, v] : md) out << "# " << k << '=' << v << '\n';
}

ordered_json metadata_json(const Metadata& md) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : md) j[k] = v;
  return j;
}

Metadata base_metadata(const ExportOptions& options) {
  Metadata md;
  md.emplace_back("tool", std::string(kToolVersion));
  if (!options.reproducible) md.emplace_back("created", utc_timestamp());
  return md;
}

} // namespace

Metadata slice_metadata(const SliceResult& slice, const ExportOptions& options) {
  const auto& s = slice.spec;
  Metadata md = base_metadata(options);
  md.emplace_back("state", s.qn.label());
  md.emplace_back("n", std::to_string(s.qn.n()));
  md.emplace_back("l", std::to_string(s.qn.l()));
  md.emplace_back("m", std::to_string(s.qn.m()));
  md.emplace_back("z", format_double(s.z.value()));
  md.emplace_back("theta", format_double(s.angles.theta));
  md.emplace_back("phi", format_double(s.angles.phi));
  md.emplace_back("theta_p", format_double(s.angles.theta_p));
  md.emplace_back("phi_p", format_double(s.angles.phi_p));
  md.emplace_back("r_min", format_double(s.r_min));
  md.emplace_back("r_max", format_double(s.r_max));
  md.emplace_back("p_min", format_double(s.p_min));
  md.emplace_back("p_max", format_double(s.p_max));
  md.emplace_back("n_r", std::to_string(s.n_r));
  md.emplace_back("n_p", std::to_string(s.n_p));
  md.emplace_back("quantity", std::string(to_string(s.quantity)));
  md.emplace_back("convention", std::string(to_string(s.convention)));
  md.emplace_back("scale", s.paper_scale ? "(2pi)^3" : "1");
  for (const auto& w : slice.warnings) md.emplace_back("warning", w);
  return md;
}

void write_slice_csv(std::ostream& out, const SliceResult& slice, const ExportOptions& options) {
  const auto& s = slice.spec;
  const bool complex = s.quantity == SliceQuantity::Complex;
  write_metadata_lines(out, slice_metadata(slice, options));
  out << (complex ? "r,p,re,im\n" : "r,p,value\n");
  for (int i = 0; i < s.n_r; ++i) {
    const std::string r = format_double(s.r_at(i));
    for (int j = 0; j < s.n_p; ++j) {
      const auto idx = static_cast<std::size_t>(i) * s.n_p + j;
      out << r << ',' << format_double(s.p_at(j)) << ',' << format_double(slice.values[idx]);
      if (complex) out << ',' << format_double(slice.imag[idx]);
      out << '\n';
    }
  }
}

void write_slice_json(std::ostream& out, const SliceResult& slice, const ExportOptions& options) {
  const auto& s = slice.spec;
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "kr_slice";
  doc["metadata"] = metadata_json(slice_metadata(slice, options));
  ordered_json r = ordered_json::array();
  ordered_json p = ordered_json::array();
  for (int i = 0; i < s.n_r; ++i) r.push_back(s.r_at(i));
  for (int j = 0; j < s.n_p; ++j) p.push_back(s.p_at(j));
  doc["r"] = std::move(r);
  doc["p"] = std::move(p);

  const auto grid = [&](const std::vector<double>& v) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < s.n_r; ++i) {
      ordered_json row = ordered_json::array();
      for (int j = 0; j < s.n_p; ++j) row.push_back(v[static_cast<std::size_t>(i) * s.n_p + j]);
      rows.push_back(std::move(row));
    }
    return rows;
  };
  doc["values"] = grid(slice.values);
  if (s.quantity == SliceQuantity::Complex) doc["imag"] = grid(slice.imag);
  out << doc.dump(1) << '\n';
}

void save_slice(const SliceResult& slice, ExportFormat format, const std::string& path,
                const ExportOptions& options) {
  write_file(path, [&](std::ostream& out) {
    if (format == ExportFormat::Csv)
      write_slice_csv(out, slice, options);
    else
      write_slice_json(out, slice, options);
  });
}

void write_extrema_csv(std::ostream& out, const SliceResult& slice, const std::vector<ExtremumRecord>& extrema,
                       const ExportOptions& options) {
  write_metadata_lines(out, slice_metadata(slice, options));
  out << "# count=" << extrema.size() << '\n';
  out << "r,p,value,kind,boundary\n";
  for (const auto& e : extrema) {
    out << format_double(e.r) << ',' << format_double(e.p) << ',' << format_double(e.value) << ','
        << (e.kind == ExtremumKind::Maximum ? "maximum" : "minimum") << ',' << (e.boundary ? 1 : 0) << '\n';
  }
}

void write_extrema_json(std::ostream& out, const SliceResult& slice, const std::vector<ExtremumRecord>& extrema,
                        const ExportOptions& options) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "kr_extrema";
  doc["metadata"] = metadata_json(slice_metadata(slice, options));
  ordered_json list = ordered_json::array();
  for (const auto& e : extrema) {
    list.push_back({{"r", e.r},
                    {"p", e.p},
                    {"value", e.value},
                    {"kind", e.kind == ExtremumKind::Maximum ? "maximum" : "minimum"},
                    {"boundary", e.boundary}});
  }
  doc["extrema"] = std::move(list);
  out << doc.dump(1) << '\n';
}

void write_report_text(std::ostream& out, const VerificationReport& report) {
  for (const auto& c : report.checks()) {
    const char* status = c.expected_divergence ? (c.passed ? "DIVERGES" : "AGREES  ") : (c.passed ? "PASS    " : "FAIL    ");
    out << status << ' ' << c.name << "  target=" << format_double(c.target)
        << " computed=" << format_double(c.computed) << " |err|=" << format_double(c.abs_error)
        << (c.expected_divergence ? " threshold=" : " tol=") << format_double(c.tolerance);
    if (c.expected_divergence) out << " (expected divergence)";
    if (!c.note.empty()) out << "  [" << c.note << ']';
    out << '\n';
  }
  out << report.checks().size() << " checks, " << report.failures() << " failed\n";
}

void write_report_csv(std::ostream& out, const VerificationReport& report, const ExportOptions& options) {
  write_metadata_lines(out, base_metadata(options));
  out << "name,target,computed,abs_error,tolerance,passed,expected_divergence\n";
  for (const auto& c : report.checks()) {
    out << '"' << c.name << "\"," << format_double(c.target) << ',' << format_double(c.computed) << ','
        << format_double(c.abs_error) << ',' << format_double(c.tolerance) << ',' << (c.passed ? 1 : 0) << ','
        << (c.expected_divergence ? 1 : 0) << '\n';
  }
}

void write_report_json(std::ostream& out, const VerificationReport& report, const ExportOptions& options) {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "verification_report";
  doc["metadata"] = metadata_json(base_metadata(options));
  ordered_json list = ordered_json::array();
  for (const auto& c : report.checks()) {
    list.push_back({{"name", c.name},
                    {"target", c.target},
                    {"computed", c.computed},
                    {"abs_error", c.abs_error},
                    {"tolerance", c.tolerance},
                    {"passed", c.passed},
                    {"expected_divergence", c.expected_divergence},
                    {"note", c.note}});
  }
  doc["checks"] = std::move(list);
  doc["all_passed"] = report.all_passed();
  out << doc.dump(1) << '\n';
}

CsvTable read_csv_table(std::istream& in) {
  CsvTable table;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto body = line.substr(line.find_first_not_of("# "));
      const auto eq = body.find('=');
      if (eq != std::string::npos) table.metadata[body.substr(0, eq)] = body.substr(eq + 1);
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!have_header) {
      table.columns = std::move(cells);
      have_header = true;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) {
      double v = 0.0;
      const auto res = std::from_chars(c.data(), c.data() + c.size(), v);
      if (res.ec != std::errc{}) throw std::invalid_argument("non-numeric CSV cell: " + c);
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

} // namespace krh
