#include "pcoh/io.hpp"

#include <charconv>
#include <optional>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include "pcoh/errors.hpp"

namespace pcoh {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool skip_line(const std::vector<std::string_view>& fields) {
  return fields.empty() || fields.front().front() == '#';
}

double parse_double(std::string_view text, const std::string& source, std::size_t line) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw parse_error(source, line, "invalid number '" + std::string(text) + "'");
  return v;
}

vertex_id parse_vertex(std::string_view text, const std::string& source, std::size_t line) {
  vertex_id v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw parse_error(source, line, "invalid vertex '" + std::string(text) + "'");
  return v;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path.string());
  return in;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write " + path.string());
  out << text;
  if (!out) throw input_error("failed writing " + path.string());
}

}  // namespace

std::string format_value(double v) {
  if (v == infinite_value) return "inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

point_cloud parse_points(std::istream& in, const std::string& source) {
  std::optional<point_cloud> cloud;
  std::string line;
  std::vector<double> coords;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    auto fields = split_fields(line);
    if (skip_line(fields)) continue;
    coords.clear();
    for (auto f : fields) coords.push_back(parse_double(f, source, line_no));
    if (!cloud) cloud.emplace(coords.size());
    if (coords.size() != cloud->dimension())
      throw parse_error(source, line_no,
                        "DimensionMismatch: expected " + std::to_string(cloud->dimension()) +
                            " coordinates, got " + std::to_string(coords.size()));
    cloud->add(coords);
  }
  return cloud ? std::move(*cloud) : point_cloud(1);
}

point_cloud read_points(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_points(in, path.string());
}

filtered_complex parse_filtration(std::istream& in, const std::string& source) {
  filtered_complex c;
  std::string line;
  std::vector<vertex_id> verts;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    auto fields = split_fields(line);
    if (skip_line(fields)) continue;
    if (fields.size() < 2) throw parse_error(source, line_no, "expected `value v0 ... vk`");
    double value = parse_double(fields[0], source, line_no);
    verts.clear();
    for (std::size_t k = 1; k < fields.size(); ++k) verts.push_back(parse_vertex(fields[k], source, line_no));
    try {
      c.insert_simplex(verts, value);
    } catch (const invalid_simplex& e) {
      throw parse_error(source, line_no, e.what());
    }
  }
  c.finalize();
  return c;
}

filtered_complex read_filtration(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_filtration(in, path.string());
}

std::string format_filtration(const filtered_complex& c, const std::string& header) {
  std::ostringstream out;
  if (!header.empty()) {
    std::istringstream lines(header);
    for (std::string l; std::getline(lines, l);) out << "# " << l << '\n';
  }
  for (simplex_handle s : c.filtration_order()) {
    out << format_value(c.filtration(s));
    for (vertex_id v : c.vertices(s)) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

void write_filtration(const filtered_complex& c, const std::filesystem::path& path,
                      const std::string& header) {
  write_text(path, format_filtration(c, header));
}

std::string format_diagram(const persistence_diagram& d) {
  std::ostringstream out;
  for (const auto& p : d.points())
    out << p.dim << ' ' << format_value(p.birth) << ' ' << format_value(p.death) << '\n';
  return out.str();
}

void write_diagram(const persistence_diagram& d, const std::filesystem::path& path) {
  write_text(path, format_diagram(d));
}

persistence_diagram parse_diagram(std::istream& in, const std::string& source) {
  persistence_diagram d;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    auto fields = split_fields(line);
    if (skip_line(fields)) continue;
    if (fields.size() != 3) throw parse_error(source, line_no, "expected `dim birth death`");
    auto dim = parse_vertex(fields[0], source, line_no);
    persistence_pair p{static_cast<int>(dim), parse_double(fields[1], source, line_no),
                       parse_double(fields[2], source, line_no), null_simplex, std::nullopt};
    if (p.death != infinite_value) p.killer = null_simplex;
    d.pairs.push_back(p);
  }
  return d;
}

persistence_diagram read_diagram(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_diagram(in, path.string());
}

}  // namespace pcoh
