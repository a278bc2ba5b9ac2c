#include "typeqa/jsonl.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "typeqa/errors.hpp"
#include "typeqa/version.hpp"

namespace typeqa {

bool JsonlReader::next(JsonlLine& out) {
    std::string line;
    while (std::getline(*in_, line)) {
        const std::uint64_t start = offset_;
        ++line_no_;
        offset_ += line.size() + 1;  // getline consumed the '\n'
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        out.text = std::move(line);
        out.byte_offset = start;
        out.line_no = line_no_;
        return true;
    }
    return false;
}

void write_provenance_header(std::ostream& out, std::string_view config_digest,
                             std::uint64_t seed) {
    out << "# typeqa " << k_version << " config=" << config_digest << " seed=" << seed
        << "\n";
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw input_error("write failed: " + path);
}

}  // namespace typeqa
