#pragma once

#include <map>
#include <string>
#include <vector>

#include "typeqa/corpus.hpp"
#include "typeqa/ontology.hpp"

namespace typeqa {

// Types of entity_id restricted to those shared with other entities mentioned
// in the same document, in stored order. Falls back to the full type list
// when the intersection is empty (or when the filter is disabled). Throws
// input_error if entity_id is not mentioned in the document.
std::vector<std::string> relevant_types(const LinkedDocument& doc, const std::string& entity_id,
                                        const EntityTypeIndex& index,
                                        bool filter_enabled = true);

// Relevant type lists for every entity mentioned in the document, computed in
// one pass. Map is keyed by entity id.
std::map<std::string, std::vector<std::string>> relevant_types_by_entity(
    const LinkedDocument& doc, const EntityTypeIndex& index, bool filter_enabled = true);

}  // namespace typeqa
