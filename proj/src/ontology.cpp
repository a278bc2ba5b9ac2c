#include "typeqa/ontology.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "typeqa/errors.hpp"
#include "typeqa/jsonl.hpp"

namespace typeqa {

OntologyBuild build_ontology(const EntityTable& table, const std::string& human_type_id) {
    OntologyBuild out;

    auto ensure_node = [&](const std::string& id) -> TypeNode& {
        auto [it, inserted] = out.ontology.nodes.try_emplace(id);
        if (inserted) {
            it->second.name = id;
            it->second.dangling = true;  // flipped below if a record exists
        }
        return it->second;
    };

    // Table iteration is sorted by id, so the build is deterministic.
    for (const auto& [id, rec] : table.records) {
        std::vector<std::string> resolved = resolve_direct_types(rec, human_type_id);
        if (!resolved.empty()) {
            for (const std::string& t : resolved) ensure_node(t);
            out.index.entity_to_types.emplace(id, std::move(resolved));
        }
        for (const Claim& c : rec.claims) {
            if (c.property != k_subclass_of) continue;
            TypeNode& node = ensure_node(id);
            if (std::find(node.parents.begin(), node.parents.end(), c.target) ==
                node.parents.end())
                node.parents.push_back(c.target);
            ensure_node(c.target);
        }
    }

    // Attach names to nodes that have their own record.
    for (auto& [id, node] : out.ontology.nodes) {
        if (const EntityRecord* rec = table.find(id)) {
            node.name = rec->canonical_name;
            node.dangling = false;
        } else {
            ++out.dangling_count;
        }
    }
    return out;
}

std::optional<CycleReport> validate_acyclic(const TypeOntology& ontology) {
    // Iterative three-color DFS over parent edges; the explicit path stack
    // doubles as the cycle witness.
    enum class Color : unsigned char { white, gray, black };
    std::map<std::string, Color> color;
    for (const auto& [id, _] : ontology.nodes) color[id] = Color::white;

    struct Frame {
        const std::string* id;
        std::size_t next_parent = 0;
    };

    for (const auto& [start, _] : ontology.nodes) {
        if (color[start] != Color::white) continue;
        std::vector<Frame> stack;
        stack.push_back({&start});
        color[start] = Color::gray;
        while (!stack.empty()) {
            Frame& top = stack.back();
            const TypeNode& node = ontology.nodes.at(*top.id);
            if (top.next_parent < node.parents.size()) {
                const std::string& parent = node.parents[top.next_parent++];
                auto it = color.find(parent);
                if (it == color.end()) continue;  // edge out of the node set
                if (it->second == Color::gray) {
                    CycleReport report;
                    auto on_path = std::find_if(stack.begin(), stack.end(),
                                                [&](const Frame& f) { return *f.id == parent; });
                    for (auto f = on_path; f != stack.end(); ++f)
                        report.cycle.push_back(*f->id);
                    report.cycle.push_back(parent);
                    return report;
                }
                if (it->second == Color::white) {
                    it->second = Color::gray;
                    stack.push_back({&it->first});
                }
            } else {
                color[*top.id] = Color::black;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

std::set<std::string> ancestors(const TypeOntology& ontology, const std::string& type_id) {
    const TypeNode* start = ontology.find(type_id);
    if (!start) throw input_error("unknown type id: " + type_id);

    std::set<std::string> out;
    std::vector<const std::string*> frontier;
    for (const std::string& p : start->parents) frontier.push_back(&p);
    while (!frontier.empty()) {
        const std::string& cur = *frontier.back();
        frontier.pop_back();
        if (cur == type_id) continue;  // a node is never its own ancestor, even on cyclic input
        if (!out.insert(cur).second) continue;
        if (const TypeNode* n = ontology.find(cur))
            for (const std::string& p : n->parents) frontier.push_back(&p);
    }
    return out;
}

const std::vector<std::string>& types_of(const EntityTypeIndex& index,
                                         const std::string& entity_id) {
    auto it = index.entity_to_types.find(entity_id);
    if (it == index.entity_to_types.end())
        throw input_error("entity not in type index: " + entity_id);
    return it->second;
}

void save_ontology(std::ostream& out, const TypeOntology& ontology) {
    for (const auto& [id, node] : ontology.nodes) {
        jobj j;
        j["type_id"] = id;
        j["name"] = node.name;
        j["parents"] = node.parents;
        j["dangling"] = node.dangling;
        out << j.dump() << "\n";
    }
}

TypeOntology load_ontology(std::istream& in) {
    TypeOntology ontology;
    JsonlReader reader(in);
    JsonlLine line;
    while (reader.next(line)) {
        jobj j = jobj::parse(line.text, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("type_id") ||
            !j.contains("name") || !j.contains("parents") || !j.contains("dangling"))
            throw input_error("malformed ontology record at line " +
                              std::to_string(line.line_no));
        try {
            TypeNode node;
            node.name = j["name"].get<std::string>();
            node.parents = j["parents"].get<std::vector<std::string>>();
            node.dangling = j["dangling"].get<bool>();
            auto id = j["type_id"].get<std::string>();
            if (!ontology.nodes.emplace(std::move(id), std::move(node)).second)
                throw input_error("duplicate type id in ontology file at line " +
                                  std::to_string(line.line_no));
        } catch (const jobj::exception&) {
            throw input_error("malformed ontology record at line " +
                              std::to_string(line.line_no));
        }
    }
    return ontology;
}

void save_index(std::ostream& out, const EntityTypeIndex& index) {
    for (const auto& [id, types] : index.entity_to_types) {
        jobj j;
        j["entity_id"] = id;
        j["types"] = types;
        out << j.dump() << "\n";
    }
}

EntityTypeIndex load_index(std::istream& in) {
    EntityTypeIndex index;
    JsonlReader reader(in);
    JsonlLine line;
    while (reader.next(line)) {
        jobj j = jobj::parse(line.text, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("entity_id") ||
            !j.contains("types"))
            throw input_error("malformed index record at line " + std::to_string(line.line_no));
        try {
            auto types = j["types"].get<std::vector<std::string>>();
            if (types.empty())
                throw input_error("empty type list in index file at line " +
                                  std::to_string(line.line_no));
            auto id = j["entity_id"].get<std::string>();
            if (!index.entity_to_types.emplace(std::move(id), std::move(types)).second)
                throw input_error("duplicate entity id in index file at line " +
                                  std::to_string(line.line_no));
        } catch (const jobj::exception&) {
            throw input_error("malformed index record at line " + std::to_string(line.line_no));
        }
    }
    return index;
}

}  // namespace typeqa
