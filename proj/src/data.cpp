#include "aqoci/data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "aqoci/error.hpp"
#include "aqoci/kmeans.hpp"
#include "aqoci/random.hpp"

namespace aqoci {

namespace {

Dataset select_columns(const Dataset& source, const std::vector<std::size_t>& columns) {
  Dataset out;
  out.provenance = source.provenance;
  out.points = Matrix(source.dims(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t a = 0; a < source.dims(); ++a) out.points(a, c) = source.points(a, columns[c]);
  if (source.true_labels) {
    std::vector<std::size_t> labels;
    for (auto c : columns) labels.push_back((*source.true_labels)[c]);
    out.true_labels = std::move(labels);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

bool parse_double(std::string_view cell, double& value) {
  if (cell.empty()) return false;
  if (cell.front() == '+') cell.remove_prefix(1);
  const auto* end = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(cell.data(), end, value);
  return ec == std::errc() && ptr == end && std::isfinite(value);
}

}  // namespace

Dataset Dataset::head(std::size_t m) const {
  if (m > size()) throw Error(ErrorKind::configuration, "requested more samples than the dataset holds");
  std::vector<std::size_t> columns(m);
  for (std::size_t i = 0; i < m; ++i) columns[i] = i;
  return select_columns(*this, columns);
}

Dataset Dataset::shuffled(std::uint64_t seed) const {
  return select_columns(*this, random_init_indices(size(), size(), seed));
}

Dataset make_blobs(std::size_t n, std::size_t k, std::uint64_t seed, double std) {
  if (k < 1 || n < k) throw Error(ErrorKind::configuration, "make_blobs needs n >= k >= 1");
  if (!(std >= 0.0) || !std::isfinite(std)) throw Error(ErrorKind::configuration, "std must be non-negative");
  Pcg32 rng(seed);
  Matrix centers(2, k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t a = 0; a < 2; ++a) centers(a, c) = -10.0 + 20.0 * rng.uniform();

  Dataset out;
  out.points = Matrix(2, n);
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = i % k;
    const auto [dx, dy] = rng.normal_pair();
    out.points(0, i) = centers(0, c) + std * dx;
    out.points(1, i) = centers(1, c) + std * dy;
    labels[i] = c;
  }
  out.true_labels = std::move(labels);
  out.provenance = BlobsProvenance{seed, k, n, std};
  return out;
}

Dataset parse_csv(const std::string& text, const std::string& origin) {
  std::vector<std::vector<double>> rows;
  std::size_t width = 0;
  std::istringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  bool seen_first = false;
  while (std::getline(stream, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_commas(line);
    std::vector<double> row;
    row.reserve(cells.size());
    bool numeric = true;
    for (auto cell : cells) {
      double value = 0.0;
      if (!parse_double(cell, value)) {
        numeric = false;
        break;
      }
      row.push_back(value);
    }
    if (!seen_first) {
      seen_first = true;
      width = cells.size();
      if (!numeric) continue;  // header
    } else if (!numeric) {
      throw Error(ErrorKind::parse, origin + ": line " + std::to_string(line_no) + ": non-numeric cell");
    }
    if (cells.size() != width)
      throw Error(ErrorKind::parse, origin + ": line " + std::to_string(line_no) + ": expected " +
                                        std::to_string(width) + " columns, found " +
                                        std::to_string(cells.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorKind::parse, origin + ": no data rows");

  Dataset out;
  out.points = Matrix(width, rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t a = 0; a < width; ++a) out.points(a, j) = rows[j][a];
  out.provenance = CsvProvenance{origin, false};
  return out;
}

Dataset load_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str(), path);
}

void write_csv(const Dataset& dataset, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::io, "cannot write '" + path + "'");
  for (std::size_t a = 0; a < dataset.dims(); ++a) out << (a ? "," : "") << "x" << a;
  out << "\n" << std::setprecision(17);
  for (std::size_t j = 0; j < dataset.size(); ++j) {
    for (std::size_t a = 0; a < dataset.dims(); ++a) out << (a ? "," : "") << dataset.points(a, j);
    out << "\n";
  }
  if (!out) throw Error(ErrorKind::io, "failed writing '" + path + "'");
}

}  // namespace aqoci
