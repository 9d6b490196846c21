#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "pcoh/diagram.hpp"
#include "pcoh/rips.hpp"
#include "pcoh/simplex_tree.hpp"

namespace pcoh {

// Text formats. Blank lines and lines starting with '#' are ignored.
//   points:     one point per line, D whitespace-separated coordinates
//   filtration: one simplex per line, `value v0 v1 ... vk`
//   diagram:    `dim birth death` per line, `inf` for essential classes,
//               sorted by (dim, birth, death)

point_cloud parse_points(std::istream& in, const std::string& source = "<stream>");
point_cloud read_points(const std::filesystem::path& path);

/// Returns a finalized complex; closure/monotonicity errors propagate.
filtered_complex parse_filtration(std::istream& in, const std::string& source = "<stream>");
filtered_complex read_filtration(const std::filesystem::path& path);

/// Simplices in filtration order. `header` lines are emitted as comments.
std::string format_filtration(const filtered_complex& c, const std::string& header = {});
void write_filtration(const filtered_complex& c, const std::filesystem::path& path,
                      const std::string& header = {});

std::string format_diagram(const persistence_diagram& d);
void write_diagram(const persistence_diagram& d, const std::filesystem::path& path);
/// Pairs carry no creator/killer simplices (null_simplex).
persistence_diagram parse_diagram(std::istream& in, const std::string& source = "<stream>");
persistence_diagram read_diagram(const std::filesystem::path& path);

/// Shortest decimal text that parses back to the same double; `inf` for +inf.
std::string format_value(double v);

/// Adds every missing face with the minimum value over its cofaces and
/// returns the finalized result. Existing simplices keep their values.
filtered_complex close_complex(const filtered_complex& c);

}  // namespace pcoh
