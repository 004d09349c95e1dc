#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace joinscout::csv {

using Record = std::vector<std::string>;

/// Parses RFC-4180 text. Accepts CRLF or LF line endings; a trailing line
/// break does not produce an empty record. Throws SchemaMismatchError on an
/// unterminated quoted field.
std::vector<Record> parse(std::string_view text);

std::vector<Record> read_file(const std::filesystem::path& path);

/// Quotes a field when it contains a comma, quote, CR or LF.
std::string escape(std::string_view field);

void write_record(std::ostream& out, const Record& record);

}  // namespace joinscout::csv
