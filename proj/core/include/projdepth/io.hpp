#pragma once

#include <iosfwd>
#include <string>

#include "projdepth/types.hpp"

namespace projdepth {

/// Shortest representation with `significant` digits ("%.Ng"); 17 digits
/// round-trip any double exactly.
std::string format_double(double value, int significant = 17);

/// Comma-separated numeric CSV, one observation per row. An optional header
/// is detected by a non-numeric first row. Decimal points only, no locale
/// handling. Parse errors name the offending row and column.
Dataset read_dataset_csv(std::istream& in);
Dataset read_dataset_csv_file(const std::string& path);

void write_dataset_csv(std::ostream& out, const Dataset& data, int significant = 17);

/// Parses a comma-separated list of reals, e.g. "0.5,-1,2e-3".
Vector parse_point(const std::string& text);

} // namespace projdepth
