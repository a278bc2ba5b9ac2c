#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "typeqa/corpus.hpp"
#include "typeqa/ontology.hpp"

namespace typeqa {

struct StatsReport {
    std::uint64_t documents = 0;
    std::uint64_t unique_entities = 0;
    std::uint64_t unique_types = 0;
    std::uint64_t num_mentions = 0;
    // One (mention, relevant type) pair per unit.
    std::uint64_t type_references = 0;
};

// Streaming accumulator: memory grows with the distinct entity/type sets
// only, never with the number of documents.
class StatsAccumulator {
public:
    explicit StatsAccumulator(const EntityTypeIndex& index, bool relevance_filter = true)
        : index_(&index), relevance_filter_(relevance_filter) {}

    void add(const LinkedDocument& doc);
    StatsReport report() const;

private:
    const EntityTypeIndex* index_;
    bool relevance_filter_;
    StatsReport counts_;
    std::set<std::string> entities_;
    std::set<std::string> types_;
};

StatsReport compute_corpus_stats(const std::vector<LinkedDocument>& docs,
                                 const EntityTypeIndex& index, bool relevance_filter = true);

std::string format_stats_report(const StatsReport& report);

}  // namespace typeqa
