#include "varden/csv_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "varden/error.hpp"
#include "varden/numfmt.hpp"

namespace varden {

namespace {

struct Row {
  std::size_t line = 0;
  std::vector<std::string_view> fields;
};

std::vector<Row> split_rows(std::string_view text) {
  std::vector<Row> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (trim(line).empty()) continue;
    Row row{line_no, {}};
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      row.fields.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& msg) {
  throw Error(Errc::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg,
              line, column);
}

int parse_truth(std::string_view field, std::size_t line, std::size_t column) {
  if (field == "noise") return kNoise;
  const auto v = parse_int(field);
  if (!v || *v < kNoise || *v > 1'000'000'000) {
    parse_fail(line, column, "truth label must be a cluster index or 'noise', got '" + std::string(field) + "'");
  }
  return static_cast<int>(*v);
}

std::string header_for(std::size_t dim) {
  if (dim == 2) return "x,y";
  std::string out;
  for (std::size_t i = 0; i < dim; ++i) out += (i ? ",x" : "x") + std::to_string(i);
  return out;
}

void append_coords(std::string& out, const Point& p) {
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    if (i > 0) out += ',';
    out += format_double(p[i]);
  }
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(Errc::FileNotFound, "cannot open '" + path.string() + "'");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::FileNotFound, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot write '" + path.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(Errc::IoError, "write to '" + path.string() + "' failed");
}

Dataset read_csv(const std::filesystem::path& path) { return parse_csv(read_text_file(path)); }

Dataset parse_csv(std::string_view text) {
  std::vector<Row> rows = split_rows(text);
  Dataset out;
  if (rows.empty()) return out;

  // Without a header rows are x,y[,truth]. A header may name extra columns
  // (e.g. labeled output); then x,y are the first two columns and truth is the
  // column called "truth" or "label", or the third of exactly three.
  std::optional<std::size_t> header_width;
  std::optional<std::size_t> truth_col;
  if (!parse_double(rows.front().fields.front())) {
    const auto& names = rows.front().fields;
    header_width = names.size();
    for (std::size_t c = 2; c < names.size(); ++c) {
      if (names[c] == "truth" || names[c] == "label") truth_col = c;
    }
    if (!truth_col && names.size() == 3) truth_col = 2;
    if (names.size() < 2) parse_fail(rows.front().line, 2, "header needs at least two columns");
    rows.erase(rows.begin());
  }

  std::size_t width = header_width.value_or(0);
  for (const Row& row : rows) {
    const std::size_t cols = row.fields.size();
    if (cols < 2) parse_fail(row.line, 2, "expected at least two columns");
    if (!header_width && cols > 3) parse_fail(row.line, 4, "expected at most three columns (x,y[,truth])");
    if (width == 0) {
      width = cols;
      if (width == 3) truth_col = 2;
    } else if (cols != width) {
      throw Error(Errc::DimensionMismatch,
                  "line " + std::to_string(row.line) + " has " + std::to_string(cols) + " columns, expected " +
                      std::to_string(width),
                  row.line);
    }
    double xy[2];
    for (std::size_t c = 0; c < 2; ++c) {
      const auto v = parse_double(row.fields[c]);
      if (!v || !std::isfinite(*v)) {
        parse_fail(row.line, c + 1, "'" + std::string(row.fields[c]) + "' is not a finite number");
      }
      xy[c] = *v;
    }
    out.points.push_back(Point{xy[0], xy[1]});
    if (truth_col) {
      if (!out.truth) out.truth.emplace();
      out.truth->push_back(parse_truth(row.fields[*truth_col], row.line, *truth_col + 1));
    }
  }
  return out;
}

std::string format_dataset_csv(const Dataset& d) {
  std::string out = header_for(d.dimension());
  if (d.truth) out += ",truth";
  out += '\n';
  for (PointId i = 0; i < d.size(); ++i) {
    append_coords(out, d.points[i]);
    if (d.truth) {
      const int t = (*d.truth)[i];
      out += ',';
      out += t == kNoise ? std::string("noise") : std::to_string(t);
    }
    out += '\n';
  }
  return out;
}

void write_dataset_csv(const Dataset& d, const std::filesystem::path& path) {
  write_text_file(path, format_dataset_csv(d));
}

std::string format_labeled_csv(const Dataset& d, const Labeling& labeling) {
  if (labeling.size() != d.size() || labeling.point_class.size() != d.size()) {
    throw Error(Errc::LengthMismatch, "labeling does not cover the dataset");
  }
  std::string out = header_for(d.dimension()) + ",cluster,class\n";
  for (PointId i = 0; i < d.size(); ++i) {
    append_coords(out, d.points[i]);
    out += ',';
    out += std::to_string(labeling.assignment[i]);
    out += ',';
    out += to_string(labeling.point_class[i]);
    out += '\n';
  }
  return out;
}

void write_csv(const Dataset& d, const Labeling& labeling, const std::filesystem::path& path) {
  write_text_file(path, format_labeled_csv(d, labeling));
}

void write_csv(const Dataset& d, const AdaptiveResult& result, const std::filesystem::path& path) {
  write_csv(d, result.to_labeling(), path);
}

Labeling read_labeling_csv(const std::filesystem::path& path) { return parse_labeling_csv(read_text_file(path)); }

Labeling parse_labeling_csv(std::string_view text) {
  const std::vector<Row> rows = split_rows(text);
  if (rows.empty()) throw Error(Errc::ParseError, "labeled CSV is empty", 1, 1);
  const Row& header = rows.front();
  const auto find_col = [&](std::string_view name) {
    const auto it = std::find(header.fields.begin(), header.fields.end(), name);
    return it == header.fields.end() ? std::optional<std::size_t>{}
                                     : std::optional<std::size_t>(static_cast<std::size_t>(it - header.fields.begin()));
  };
  const auto cluster_col = find_col("cluster");
  if (!cluster_col) parse_fail(header.line, 1, "header has no 'cluster' column");
  const auto class_col = find_col("class");

  Labeling out;
  int max_id = kNoise;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const Row& row = rows[r];
    if (row.fields.size() != header.fields.size()) {
      parse_fail(row.line, std::min(row.fields.size(), header.fields.size()) + 1, "column count differs from header");
    }
    const auto id = parse_int(row.fields[*cluster_col]);
    if (!id || *id < kNoise || *id > 1'000'000'000) parse_fail(row.line, *cluster_col + 1, "bad cluster id");
    const int cluster = static_cast<int>(*id);
    max_id = std::max(max_id, cluster);
    PointClass cls = cluster == kNoise ? PointClass::Noise : PointClass::Border;
    if (class_col) {
      const std::string_view name = row.fields[*class_col];
      if (name == "core") {
        cls = PointClass::Core;
      } else if (name == "border") {
        cls = PointClass::Border;
      } else if (name == "noise") {
        cls = PointClass::Noise;
      } else {
        parse_fail(row.line, *class_col + 1, "class must be core, border or noise");
      }
      if ((cls == PointClass::Noise) != (cluster == kNoise)) {
        parse_fail(row.line, *class_col + 1, "class disagrees with cluster id");
      }
    }
    out.assignment.push_back(cluster);
    out.point_class.push_back(cls);
  }
  out.num_clusters = static_cast<std::size_t>(max_id + 1);
  return out;
}

}  // namespace varden
