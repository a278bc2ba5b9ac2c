#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "typeqa/kg.hpp"

namespace typeqa {

struct TypeNode {
    std::string name;                  // label from the dump, or the id itself
    std::vector<std::string> parents;  // P279 targets in claim order, deduped
    bool dangling = false;             // referenced but has no record of its own
};

// The type taxonomy: nodes connected by subclass-of edges. Expected acyclic;
// validate_acyclic checks.
struct TypeOntology {
    std::map<std::string, TypeNode> nodes;

    std::size_t node_count() const { return nodes.size(); }
    bool contains(const std::string& id) const { return nodes.count(id) != 0; }
    const TypeNode* find(const std::string& id) const {
        auto it = nodes.find(id);
        return it == nodes.end() ? nullptr : &it->second;
    }
    // Display name for a type id; unknown ids fall back to the id itself.
    const std::string& name_of(const std::string& id) const {
        const TypeNode* n = find(id);
        return n ? n->name : id;
    }
};

// entity id -> ordered type ids. Lists are non-empty and keep claim order.
struct EntityTypeIndex {
    std::map<std::string, std::vector<std::string>> entity_to_types;

    bool contains(const std::string& id) const { return entity_to_types.count(id) != 0; }
};

struct OntologyBuild {
    TypeOntology ontology;
    EntityTypeIndex index;
    std::uint64_t dangling_count = 0;
};

// Nodes are every id appearing as a resolved type target or a P279 target,
// plus every record that has P279 claims. Referenced ids without a record
// become placeholder nodes named by their id and flagged dangling.
OntologyBuild build_ontology(const EntityTable& table,
                             const std::string& human_type_id = k_default_human_type);

// Witness cycle as a node sequence following parent edges; front() == back().
struct CycleReport {
    std::vector<std::string> cycle;
};

// nullopt when a topological order over parent edges exists.
std::optional<CycleReport> validate_acyclic(const TypeOntology& ontology);

// Transitive closure over parent edges, excluding type_id itself.
// Throws input_error for an unknown type id.
std::set<std::string> ancestors(const TypeOntology& ontology, const std::string& type_id);

// Stored type list, verbatim. Throws input_error for unindexed entities.
const std::vector<std::string>& types_of(const EntityTypeIndex& index,
                                         const std::string& entity_id);

// Record-level serialization; callers write the provenance header first.
// Output is sorted by id and byte-identical across runs for identical input.
void save_ontology(std::ostream& out, const TypeOntology& ontology);
TypeOntology load_ontology(std::istream& in);
void save_index(std::ostream& out, const EntityTypeIndex& index);
EntityTypeIndex load_index(std::istream& in);

}  // namespace typeqa
