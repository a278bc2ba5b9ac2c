#include "typeqa/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "typeqa/errors.hpp"
#include "typeqa/rng.hpp"
#include "typeqa/text.hpp"

namespace typeqa {

namespace {

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw input_error("config key " + key + ": expected an unsigned integer, got \"" +
                          value + "\"");
    return out;
}

double parse_weight(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double d = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return d;
    } catch (const std::exception&) {
        throw input_error("config key " + key + ": expected a number, got \"" + value + "\"");
    }
}

bool parse_switch(const std::string& key, const std::string& value) {
    if (value == "on" || value == "true" || value == "1") return true;
    if (value == "off" || value == "false" || value == "0") return false;
    throw input_error("config key " + key + ": expected on/off, got \"" + value + "\"");
}

}  // namespace

void PipelineConfig::apply_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open config file: " + path);

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw input_error("config line " + std::to_string(line_no) +
                              ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));

        if (key == "dump") dump_path = value;
        else if (key == "corpus") corpus_path = value;
        else if (key == "out_dir") out_dir = value;
        else if (key == "human_type") human_type_id = value;
        else if (key == "seed") seed = parse_u64(key, value);
        else if (key == "train_size") sizes.train = parse_u64(key, value);
        else if (key == "test_size") sizes.test = parse_u64(key, value);
        else if (key == "newent_size") sizes.newent = parse_u64(key, value);
        else if (key == "mix_discovery") mix.discovery = parse_weight(key, value);
        else if (key == "mix_typing") mix.typing = parse_weight(key, value);
        else if (key == "mix_recognition") mix.recognition = parse_weight(key, value);
        else if (key == "mix_slotfill") mix.slotfill = parse_weight(key, value);
        else if (key == "relevance_filter") relevance_filter = parse_switch(key, value);
        else if (key == "questions_per_doc") questions_per_doc = parse_u64(key, value);
        else if (key == "workers") workers = parse_u64(key, value);
        else if (key == "template_discovery") templates.discovery = value;
        else if (key == "template_typing") templates.typing = value;
        else if (key == "template_recognition") templates.recognition = value;
        else if (key == "template_slotfill") templates.slotfill = value;
        else throw input_error("unknown config key: " + key);
    }
}

void PipelineConfig::validate() const {
    mix.validate();
    if (!seed.has_value())
        throw input_error("seed is required (set it in the config file or pass --seed)");
    if (human_type_id.size() < 2 || human_type_id[0] != 'Q')
        throw input_error("human_type must be a \"Q\"-prefixed id");
}

std::uint64_t PipelineConfig::require_seed() const {
    if (!seed.has_value())
        throw input_error("seed is required (set it in the config file or pass --seed)");
    return *seed;
}

std::string PipelineConfig::digest() const {
    char mix_buf[128];
    std::snprintf(mix_buf, sizeof mix_buf, "%.9f,%.9f,%.9f,%.9f", mix.discovery, mix.typing,
                  mix.recognition, mix.slotfill);
    std::ostringstream canon;
    canon << "human_type=" << human_type_id << "\n"
          << "mix=" << mix_buf << "\n"
          << "sizes=" << sizes.train << "," << sizes.test << "," << sizes.newent << "\n"
          << "seed=" << (seed ? std::to_string(*seed) : std::string("unset")) << "\n"
          << "relevance_filter=" << (relevance_filter ? "on" : "off") << "\n"
          << "questions_per_doc=" << questions_per_doc << "\n"
          << "template_discovery=" << templates.discovery << "\n"
          << "template_typing=" << templates.typing << "\n"
          << "template_recognition=" << templates.recognition << "\n"
          << "template_slotfill=" << templates.slotfill << "\n";
    char out[17];
    std::snprintf(out, sizeof out, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canon.str())));
    return std::string(out);
}

}  // namespace typeqa
