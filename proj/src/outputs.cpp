#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "aqoci/bench.hpp"

namespace aqoci {

namespace {

const std::vector<std::string> kMetricNames{"inertia",      "silhouette", "homogeneity",
                                            "completeness", "v_measure",  "n_iter"};

std::string exact(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::string fixed(double value, int precision) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.*f", precision, value);
  return buffer;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io, "cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw Error(ErrorKind::io, "failed writing '" + path.string() + "'");
}

std::string escape_xml(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::vector<MetricRow> metric_rows(const BenchReport& report) {
  std::vector<MetricRow> rows;
  for (const auto& row : report.rows) {
    const MetricReport& m = row.metrics;
    const std::optional<double> values[] = {m.inertia,      m.silhouette,
                                            m.homogeneity,  m.completeness,
                                            m.v_measure,    static_cast<double>(m.n_iter)};
    for (std::size_t i = 0; i < kMetricNames.size(); ++i)
      if (values[i]) rows.push_back({row.method, row.sample_size, kMetricNames[i], *values[i]});
  }
  return rows;
}

std::string metrics_csv(const BenchReport& report) {
  std::string out = "method,size,metric,value\n";
  for (const auto& row : metric_rows(report))
    out += row.method + "," + std::to_string(row.sample_size) + "," + row.metric + "," + exact(row.value) + "\n";
  return out;
}

std::vector<MetricRow> parse_metrics_csv(const std::string& text) {
  std::vector<MetricRow> rows;
  std::istringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (line_no == 1 || line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream cells_stream(line);
    std::string cell;
    while (std::getline(cells_stream, cell, ',')) cells.push_back(cell);
    if (cells.size() != 4)
      throw Error(ErrorKind::parse, "metrics.csv line " + std::to_string(line_no) + ": expected 4 cells");
    MetricRow row{cells[0], 0, cells[2], 0.0};
    const auto parse_ok = [](const std::string& s, auto& out) {
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      return ec == std::errc() && ptr == s.data() + s.size();
    };
    if (!parse_ok(cells[1], row.sample_size) || !parse_ok(cells[3], row.value))
      throw Error(ErrorKind::parse, "metrics.csv line " + std::to_string(line_no) + ": bad number");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string metric_chart_svg(const BenchReport& report, const std::string& metric) {
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  for (const auto& row : metric_rows(report))
    if (row.metric == metric) series[row.method].emplace_back(static_cast<double>(row.sample_size), row.value);

  constexpr double width = 640, height = 400;
  constexpr double left = 70, right = 150, top = 40, bottom = 50;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  bool first = true;
  for (const auto& [method, points] : series) {
    for (const auto& [x, y] : points) {
      if (first) {
        x_min = x_max = x;
        y_min = y_max = y;
        first = false;
      }
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (x_max == x_min) {
    x_min -= 1;
    x_max += 1;
  }
  if (y_max == y_min) {
    y_min -= 1;
    y_max += 1;
  }
  const double pad = 0.05 * (y_max - y_min);
  y_min -= pad;
  y_max += pad;
  const auto sx = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
  const auto sy = [&](double y) { return top + (1.0 - (y - y_min) / (y_max - y_min)) * plot_h; };

  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" << escape_xml(metric) << " vs sample size</text>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
      << top + plot_h << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
      << "\" stroke=\"black\"/>\n";
  for (int tick = 0; tick <= 4; ++tick) {
    const double yv = y_min + (y_max - y_min) * tick / 4.0;
    const double xv = x_min + (x_max - x_min) * tick / 4.0;
    svg << "<text x=\"" << left - 6 << "\" y=\"" << sy(yv) + 4 << "\" text-anchor=\"end\" "
           "font-family=\"sans-serif\" font-size=\"10\">" << fixed(yv, 3) << "</text>\n";
    svg << "<text x=\"" << sx(xv) << "\" y=\"" << top + plot_h + 16 << "\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"10\">" << fixed(xv, 0) << "</text>\n";
  }
  svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"12\">sample size</text>\n";
  svg << "<text x=\"16\" y=\"" << top + plot_h / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\" transform=\"rotate(-90 16 " << top + plot_h / 2 << ")\">" << escape_xml(metric)
      << "</text>\n";

  std::size_t index = 0;
  for (const auto& [method, points] : series) {
    const char* color = palette[index % std::size(palette)];
    svg << "<polyline class=\"series\" data-method=\"" << escape_xml(method) << "\" fill=\"none\" stroke=\""
        << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i)
      svg << (i ? " " : "") << fixed(sx(points[i].first), 2) << "," << fixed(sy(points[i].second), 2);
    svg << "\"/>\n";
    const double ly = top + 10 + 20.0 * static_cast<double>(index);
    svg << "<line x1=\"" << left + plot_w + 15 << "\" y1=\"" << ly << "\" x2=\"" << left + plot_w + 35
        << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << left + plot_w + 40 << "\" y=\"" << ly + 4
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << escape_xml(method) << "</text>\n";
    ++index;
  }
  svg << "</svg>\n";
  return svg.str();
}

std::vector<std::string> emit_outputs(const BenchReport& report, const std::string& directory) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  if (ec) throw Error(ErrorKind::io, "cannot create '" + directory + "': " + ec.message());

  std::vector<std::string> written;
  const auto emit = [&](const std::string& name, const std::string& content) {
    const fs::path path = fs::path(directory) / name;
    write_file(path, content);
    written.push_back(path.string());
  };
  emit("report.json", report_to_json(report));
  emit("metrics.csv", metrics_csv(report));
  std::set<std::string> present;
  for (const auto& row : metric_rows(report)) present.insert(row.metric);
  for (const auto& metric : kMetricNames)
    if (present.count(metric)) emit(metric + ".svg", metric_chart_svg(report, metric));
  return written;
}

}  // namespace aqoci
