#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace typeqa {

inline constexpr const char* k_instance_of = "P31";
inline constexpr const char* k_subclass_of = "P279";
inline constexpr const char* k_occupation = "P106";
inline constexpr const char* k_default_human_type = "Q5";

struct Claim {
    std::string property;  // "P31" | "P279" | "P106"
    std::string target;    // "Q"-prefixed id
    bool operator==(const Claim&) const = default;
};

// One KG node: id, English label, alternative labels, and the typing claims
// in dump order. Claims outside {P31, P279, P106} are dropped at parse time.
struct EntityRecord {
    std::string entity_id;
    std::string canonical_name;
    std::vector<std::string> aliases;
    std::vector<Claim> claims;
};

struct MalformedRecord {
    std::uint64_t byte_offset = 0;
    std::string reason;
};

using ParsedRecord = std::variant<EntityRecord, MalformedRecord>;

// Parses one dump line: {"id": ..., "label": ..., "aliases": [...],
// "claims": [[prop, target], ...]}. Schema violations yield a MalformedRecord
// carrying the given byte offset; this never throws.
ParsedRecord parse_entity_record(std::string_view line, std::uint64_t byte_offset = 0);

// Direct types of a record. Entities whose P31 claims include human_type_id
// are typed by their P106 occupation targets instead (total replacement);
// everyone else by P31 targets then P279 targets. Duplicates drop, first
// occurrence wins. An empty result means "untyped" and the caller discards
// the entity.
std::vector<std::string> resolve_direct_types(
    const EntityRecord& record, const std::string& human_type_id = k_default_human_type);

struct IngestStats {
    std::uint64_t records_read = 0;
    std::uint64_t records_retained = 0;
    std::uint64_t records_skipped_untyped = 0;
    std::uint64_t records_skipped_malformed = 0;
};

struct EntityTable {
    std::map<std::string, EntityRecord> records;  // keyed by entity_id

    bool contains(const std::string& id) const { return records.count(id) != 0; }
    const EntityRecord* find(const std::string& id) const {
        auto it = records.find(id);
        return it == records.end() ? nullptr : &it->second;
    }
};

// Surface form (canonical name or alias) -> entity ids, in dump order.
struct AliasLookup {
    std::map<std::string, std::vector<std::string>> surface_to_ids;

    const std::vector<std::string>* find(const std::string& surface) const {
        auto it = surface_to_ids.find(surface);
        return it == surface_to_ids.end() ? nullptr : &it->second;
    }
};

// Canonical name -> entity id; the first record in dump order wins.
struct PageTable {
    std::map<std::string, std::string> title_to_id;
    std::uint64_t duplicate_titles = 0;
};

struct IngestResult {
    EntityTable table;
    AliasLookup aliases;
    PageTable pages;
    IngestStats stats;
    std::vector<MalformedRecord> first_malformed;  // up to a handful, for diagnostics
};

// Streams a line-delimited dump, holding one input record at a time; only the
// retained tables grow with input. Untyped records (empty resolve_direct_types)
// are dropped and tallied. Throws input_error on a duplicate entity id.
IngestResult ingest_dump(std::istream& in,
                         const std::string& human_type_id = k_default_human_type);

}  // namespace typeqa
