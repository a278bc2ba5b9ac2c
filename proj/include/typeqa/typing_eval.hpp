#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "typeqa/ontology.hpp"

namespace typeqa {

// One gold typing judgement: a mention span with its gold type names and
// whether the entity was seen in the training split.
struct TypingInstance {
    std::string doc_id;
    std::size_t start = 0;
    std::size_t end = 0;
    std::string surface;
    std::vector<std::string> gold_types;  // non-empty
    bool entity_seen = false;
};

struct PRFReport {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
};

// Lowercase, trim, collapse internal whitespace runs to one space.
std::string normalize_type(std::string_view s);

// Answer-grammar parse + normalization + order-preserving dedup. Blank input
// is an empty prediction, not an error.
std::vector<std::string> parse_prediction(std::string_view s);

// Predictions are keyed by (doc_id, start, end); the value is the raw
// generated string. Instances without a prediction count as empty.
using PredictionKey = std::tuple<std::string, std::size_t, std::size_t>;
using PredictionMap = std::map<PredictionKey, std::string>;

// Micro-averaged over (instance, type) pairs after normalization, exact
// string match. Seen/unseen strata always sum back to the overall counts.
struct TypingScore {
    PRFReport overall;
    PRFReport seen;
    PRFReport unseen;
};

TypingScore score_typing(const std::vector<TypingInstance>& instances,
                         const PredictionMap& predictions);

// Predicted names split by whether their normalized form names an ontology
// type; order preserved.
struct NovelSplit {
    std::vector<std::string> seen;
    std::vector<std::string> novel;
};

std::set<std::string> normalized_type_names(const TypeOntology& ontology);
NovelSplit detect_novel(const std::vector<std::string>& predicted,
                        const std::set<std::string>& normalized_names);
NovelSplit detect_novel(const std::vector<std::string>& predicted,
                        const TypeOntology& ontology);

}  // namespace typeqa
