#include "typeqa/relevance.hpp"

#include <set>

#include "typeqa/errors.hpp"

namespace typeqa {

std::map<std::string, std::vector<std::string>> relevant_types_by_entity(
    const LinkedDocument& doc, const EntityTypeIndex& index, bool filter_enabled) {
    const std::vector<std::string> entities = doc_entities(doc);

    // A type t of entity e is shared iff some *other* entity in the document
    // also has t, i.e. t is held by >= 2 distinct entities.
    std::map<std::string, int> holders;
    if (filter_enabled && entities.size() > 1) {
        for (const std::string& e : entities) {
            const std::vector<std::string>& own = types_of(index, e);
            std::set<std::string> distinct(own.begin(), own.end());
            for (const std::string& t : distinct) ++holders[t];
        }
    }

    std::map<std::string, std::vector<std::string>> out;
    for (const std::string& e : entities) {
        const std::vector<std::string>& own = types_of(index, e);
        if (!filter_enabled || entities.size() == 1) {
            out.emplace(e, own);
            continue;
        }
        std::vector<std::string> shared;
        for (const std::string& t : own) {
            auto it = holders.find(t);
            if (it != holders.end() && it->second >= 2) shared.push_back(t);
        }
        out.emplace(e, shared.empty() ? own : std::move(shared));
    }
    return out;
}

std::vector<std::string> relevant_types(const LinkedDocument& doc, const std::string& entity_id,
                                        const EntityTypeIndex& index, bool filter_enabled) {
    bool mentioned = false;
    for (const Mention& m : doc.mentions)
        if (m.entity_id == entity_id) {
            mentioned = true;
            break;
        }
    if (!mentioned)
        throw input_error("entity " + entity_id + " is not mentioned in document " + doc.doc_id);
    return relevant_types_by_entity(doc, index, filter_enabled).at(entity_id);
}

}  // namespace typeqa
