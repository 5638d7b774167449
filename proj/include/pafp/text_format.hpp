#ifndef PAFP_TEXT_FORMAT_HPP
#define PAFP_TEXT_FORMAT_HPP

#include "pafp/core.hpp"

#include <string>
#include <string_view>

namespace pafp {

/// Parses the line-oriented instance format (see docs/format.md). Throws
/// Error(Syntax) or Error(Semantic) carrying the 1-based line number.
Instance parse_instance(std::string_view text);

/// Header, nodes, source, target, then edges and pairs in ascending order.
std::string serialize_instance(const Instance& instance);

/// Strict 3-CNF in DIMACS form: every clause must have exactly three
/// literals. Clauses may span lines and are terminated by 0.
Formula3Sat parse_dimacs(std::string_view text);

std::string serialize_dimacs(const Formula3Sat& formula);

std::string read_file(const std::string& path);

}  // namespace pafp

#endif
