#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

namespace typeqa {

// All record emission goes through ordered_json so that field order in the
// documented schemas is reproduced exactly.
using jobj = nlohmann::ordered_json;

struct JsonlLine {
    std::string text;
    std::uint64_t byte_offset = 0;  // offset of the line start in the stream
    std::uint64_t line_no = 0;      // 1-based, counting every physical line
};

// Reads line-delimited records. Lines starting with '#' and blank lines are
// skipped; byte offsets still account for them.
class JsonlReader {
public:
    explicit JsonlReader(std::istream& in) : in_(&in) {}

    // Returns false at end of stream.
    bool next(JsonlLine& out);

private:
    std::istream* in_;
    std::uint64_t offset_ = 0;
    std::uint64_t line_no_ = 0;
};

// Provenance header written at the top of every generated file.
void write_provenance_header(std::ostream& out, std::string_view config_digest,
                             std::uint64_t seed);

// Opens for writing, failing with input_error if the file cannot be created.
// (Declared here to keep file handling in one place.)
void write_text_file(const std::string& path, std::string_view content);

}  // namespace typeqa
