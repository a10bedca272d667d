#pragma once

#include <string>
#include <vector>

namespace mlselect {

// Header row plus data rows, all cells as text. Produced by read_csv; width
// is uniform (ragged input is rejected).
struct RawTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// RFC-4180-style reader: comma delimiter, first row is the header, optional
// double-quoted fields ("" escapes a quote, newlines allowed inside quotes),
// CRLF or LF line endings. Throws DataError on a missing file or a row whose
// width differs from the header.
RawTable read_csv(const std::string& path);

// Parse CSV text (same dialect) from memory.
RawTable parse_csv(const std::string& text, const std::string& origin = "<memory>");

// Quote a field only when it contains a delimiter, quote, or newline.
std::string csv_escape(const std::string& field);

} // namespace mlselect
