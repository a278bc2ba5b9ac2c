#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "typeqa/corpus.hpp"
#include "typeqa/qagen.hpp"

namespace typeqa {

// One authoritative record of a run. Loaded from a plain-text key = value
// file; command-line flags override file values. The digest covers the
// semantic parameters only (not paths or worker counts), so identical
// configurations produce identical output headers wherever they run.
struct PipelineConfig {
    std::string dump_path;
    std::string corpus_path;
    std::string out_dir;

    std::string human_type_id = k_default_human_type;
    TaskMix mix;
    SplitSizes sizes;
    std::optional<std::uint64_t> seed;  // required; no wall-clock default
    bool relevance_filter = true;
    std::size_t questions_per_doc = 4;
    std::size_t workers = 1;
    QuestionTemplates templates;

    void apply_file(const std::string& path);
    // Mix and seed invariants; split sizes are validated where they are used.
    void validate() const;
    std::uint64_t require_seed() const;
    std::string digest() const;
};

}  // namespace typeqa
