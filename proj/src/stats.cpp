#include "typeqa/stats.hpp"

#include <sstream>

#include "typeqa/relevance.hpp"

namespace typeqa {

void StatsAccumulator::add(const LinkedDocument& doc) {
    ++counts_.documents;
    counts_.num_mentions += doc.mentions.size();
    const auto relevant = relevant_types_by_entity(doc, *index_, relevance_filter_);
    for (const Mention& m : doc.mentions) {
        entities_.insert(m.entity_id);
        const std::vector<std::string>& types = relevant.at(m.entity_id);
        counts_.type_references += types.size();
        for (const std::string& t : types) types_.insert(t);
    }
}

StatsReport StatsAccumulator::report() const {
    StatsReport r = counts_;
    r.unique_entities = entities_.size();
    r.unique_types = types_.size();
    return r;
}

StatsReport compute_corpus_stats(const std::vector<LinkedDocument>& docs,
                                 const EntityTypeIndex& index, bool relevance_filter) {
    StatsAccumulator acc(index, relevance_filter);
    for (const LinkedDocument& doc : docs) acc.add(doc);
    return acc.report();
}

std::string format_stats_report(const StatsReport& report) {
    std::ostringstream out;
    out << "documents " << report.documents << "\n"
        << "unique_entities " << report.unique_entities << "\n"
        << "unique_types " << report.unique_types << "\n"
        << "num_mentions " << report.num_mentions << "\n"
        << "type_references " << report.type_references << "\n";
    return out.str();
}

}  // namespace typeqa
