#ifndef TRIADIC_IO_HPP_
#define TRIADIC_IO_HPP_

#include <string>

#include "triadic/presentation.hpp"
#include "triadic/spectral.hpp"

namespace triadic {

/// Graphviz digraph; vertex labels rendered most-significant digit
/// first, marked vertex drawn as a double circle, edges labeled by digit.
std::string to_dot(const Presentation& p);

/// Parses the digraphs emitted by to_dot (not general DOT).
Presentation from_dot(const std::string& text);

/// JSON schema: {"vertices":[{"id","label"}], "marked", "edges":[{"from","to","digit"}]}.
std::string to_json(const Presentation& p);
Presentation from_json(const std::string& text);

std::string dimension_report_json(const DimensionReport& report);

}  // namespace triadic

#endif  // TRIADIC_IO_HPP_
