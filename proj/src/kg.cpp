#include "typeqa/kg.hpp"

#include <algorithm>
#include <istream>
#include <set>

#include "typeqa/errors.hpp"
#include "typeqa/jsonl.hpp"

namespace typeqa {

namespace {

bool valid_entity_id(std::string_view id) { return id.size() >= 2 && id[0] == 'Q'; }
bool valid_property_id(std::string_view id) { return id.size() >= 2 && id[0] == 'P'; }

bool is_typing_property(std::string_view prop) {
    return prop == k_instance_of || prop == k_subclass_of || prop == k_occupation;
}

MalformedRecord malformed(std::uint64_t offset, std::string reason) {
    return MalformedRecord{offset, std::move(reason)};
}

}  // namespace

ParsedRecord parse_entity_record(std::string_view line, std::uint64_t byte_offset) {
    const jobj j = jobj::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) return malformed(byte_offset, "invalid JSON");
    if (!j.is_object()) return malformed(byte_offset, "record is not an object");

    auto id = j.find("id");
    auto label = j.find("label");
    auto aliases = j.find("aliases");
    auto claims = j.find("claims");
    if (id == j.end() || label == j.end() || aliases == j.end() || claims == j.end())
        return malformed(byte_offset, "missing one of {id, label, aliases, claims}");
    if (!id->is_string() || !valid_entity_id(id->get_ref<const std::string&>()))
        return malformed(byte_offset, "id must be a \"Q\"-prefixed string");
    if (!label->is_string() || label->get_ref<const std::string&>().empty())
        return malformed(byte_offset, "label must be a non-empty string");
    if (!aliases->is_array()) return malformed(byte_offset, "aliases must be an array");
    if (!claims->is_array()) return malformed(byte_offset, "claims must be an array");

    EntityRecord rec;
    rec.entity_id = id->get<std::string>();
    rec.canonical_name = label->get<std::string>();
    for (const auto& a : *aliases) {
        if (!a.is_string()) return malformed(byte_offset, "alias entries must be strings");
        rec.aliases.push_back(a.get<std::string>());
    }
    for (const auto& c : *claims) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
            return malformed(byte_offset, "claim entries must be [property, target] string pairs");
        std::string prop = c[0].get<std::string>();
        if (!valid_property_id(prop))
            return malformed(byte_offset, "claim property must be \"P\"-prefixed");
        if (!is_typing_property(prop)) continue;  // non-typing claims are discarded
        std::string target = c[1].get<std::string>();
        if (!valid_entity_id(target))
            return malformed(byte_offset, "typing claim target must be a \"Q\"-prefixed id");
        rec.claims.push_back(Claim{std::move(prop), std::move(target)});
    }
    return rec;
}

std::vector<std::string> resolve_direct_types(const EntityRecord& record,
                                              const std::string& human_type_id) {
    bool is_human = false;
    for (const Claim& c : record.claims) {
        if (c.property == k_instance_of && c.target == human_type_id) {
            is_human = true;
            break;
        }
    }

    std::vector<std::string> out;
    std::set<std::string> seen;
    auto push = [&](const std::string& target) {
        if (seen.insert(target).second) out.push_back(target);
    };

    if (is_human) {
        for (const Claim& c : record.claims)
            if (c.property == k_occupation) push(c.target);
        return out;
    }
    for (const Claim& c : record.claims)
        if (c.property == k_instance_of) push(c.target);
    for (const Claim& c : record.claims)
        if (c.property == k_subclass_of) push(c.target);
    return out;
}

IngestResult ingest_dump(std::istream& in, const std::string& human_type_id) {
    IngestResult result;
    JsonlReader reader(in);
    JsonlLine line;
    constexpr std::size_t k_max_reported_malformed = 8;

    while (reader.next(line)) {
        ++result.stats.records_read;
        ParsedRecord parsed = parse_entity_record(line.text, line.byte_offset);
        if (auto* bad = std::get_if<MalformedRecord>(&parsed)) {
            ++result.stats.records_skipped_malformed;
            if (result.first_malformed.size() < k_max_reported_malformed)
                result.first_malformed.push_back(*bad);
            continue;
        }
        EntityRecord rec = std::move(std::get<EntityRecord>(parsed));
        if (resolve_direct_types(rec, human_type_id).empty()) {
            ++result.stats.records_skipped_untyped;
            continue;
        }

        if (result.table.contains(rec.entity_id))
            throw input_error("duplicate entity id in dump: " + rec.entity_id);

        auto add_surface = [&](const std::string& surface) {
            if (surface.empty()) return;
            auto& ids = result.aliases.surface_to_ids[surface];
            if (std::find(ids.begin(), ids.end(), rec.entity_id) == ids.end())
                ids.push_back(rec.entity_id);
        };
        add_surface(rec.canonical_name);
        for (const std::string& a : rec.aliases) add_surface(a);

        if (!result.pages.title_to_id.emplace(rec.canonical_name, rec.entity_id).second)
            ++result.pages.duplicate_titles;

        ++result.stats.records_retained;
        result.table.records.emplace(rec.entity_id, std::move(rec));
    }
    return result;
}

}  // namespace typeqa
