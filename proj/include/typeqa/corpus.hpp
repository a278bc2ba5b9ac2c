#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "typeqa/kg.hpp"
#include "typeqa/ontology.hpp"

namespace typeqa {

// Spans are byte offsets [start, end) into the document text, on UTF-8
// boundaries.
struct Hyperlink {
    std::size_t start = 0;
    std::size_t end = 0;
    std::string target;  // page title or "Q"-prefixed entity id
};

struct RawDocument {
    std::string doc_id;
    std::string text;
    std::vector<Hyperlink> hyperlinks;  // sorted by start, non-overlapping
};

enum class MentionSource { hyperlink, augmented };

std::string_view mention_source_name(MentionSource s);

struct Mention {
    std::size_t start = 0;
    std::size_t end = 0;
    std::string surface;  // equals text[start:end]
    std::string entity_id;
    MentionSource source = MentionSource::hyperlink;
};

struct LinkedDocument {
    std::string doc_id;
    std::string text;
    std::vector<Mention> mentions;  // sorted by start, non-overlapping, >= 1
};

using ParsedRawDocument = std::variant<RawDocument, MalformedRecord>;

// Parses {"doc_id": ..., "text": ..., "links": [[start, end, target], ...]}.
// Span invariant violations (bounds, overlap, order, UTF-8 splits) make the
// record malformed; this never throws.
ParsedRawDocument parse_raw_document(std::string_view line, std::uint64_t byte_offset = 0);

// Linked documents are pipeline-internal, so a bad record is a hard error
// (message carries the line number when the caller supplies one).
LinkedDocument parse_linked_document(std::string_view line, std::uint64_t line_no = 0);
std::string serialize_linked_document(const LinkedDocument& doc);

// Read-only views over the ingest outputs needed for linking.
struct LinkTables {
    const EntityTable* entities = nullptr;
    const AliasLookup* aliases = nullptr;
    const PageTable* pages = nullptr;
    const EntityTypeIndex* index = nullptr;
};

struct LinkCounters {
    std::uint64_t links_resolved = 0;
    std::uint64_t links_dropped = 0;  // unresolvable or untyped targets
    std::uint64_t augmented_mentions = 0;
    std::uint64_t docs_dropped = 0;  // documents with no surviving mention
};

// One mention per resolvable hyperlink; targets that do not resolve to a
// typed entity are dropped and counted.
std::vector<Mention> resolve_hyperlinks(const RawDocument& doc, const LinkTables& tables,
                                        LinkCounters* counters = nullptr);

// Mention augmentation is pluggable so a statistical tagger can replace the
// default dictionary matcher.
class MentionAugmenter {
public:
    virtual ~MentionAugmenter() = default;
    virtual std::vector<Mention> augment(const RawDocument& doc,
                                         const std::vector<Mention>& existing,
                                         const LinkTables& tables) const = 0;
};

// Longest-match, case-sensitive dictionary scan over the canonical names and
// aliases of entities already hyperlinked in the same document. Matches must
// sit on ASCII word boundaries and never overlap existing mentions. A surface
// shared by several document-local entities goes to the entity hyperlinked
// first.
class DictionaryAugmenter final : public MentionAugmenter {
public:
    std::vector<Mention> augment(const RawDocument& doc, const std::vector<Mention>& existing,
                                 const LinkTables& tables) const override;
};

// resolve_hyperlinks + augmentation, merged and sorted by start. Documents
// with no surviving mention are dropped (nullopt).
std::optional<LinkedDocument> link_document(const RawDocument& doc, const LinkTables& tables,
                                            const MentionAugmenter& augmenter,
                                            LinkCounters* counters = nullptr);

// Distinct mentioned entity ids in first-appearance order.
std::vector<std::string> doc_entities(const LinkedDocument& doc);

// Mentions whose entity is absent from the training split; these are the
// evaluation instances of a new-entity document.
std::vector<Mention> unseen_mentions(const LinkedDocument& doc,
                                     const std::set<std::string>& train_entities);

struct SplitSizes {
    std::size_t train = 0;
    std::size_t test = 0;
    std::size_t newent = 0;
};

enum class SplitId { train, test, newent };

// Per-document entity summary used for split assignment.
struct DocEntitySummary {
    std::string doc_id;
    std::vector<std::string> entities;  // distinct, first-appearance order
};

struct SplitAssignment {
    std::map<std::string, SplitId> by_doc;
    // Doc ids per split, in corpus order.
    std::vector<std::string> train;
    std::vector<std::string> test;
    std::vector<std::string> newent;
};

// Deterministic seeded assignment. Splits are disjoint; every test document
// mentions at least one entity also mentioned in train; every new-entity
// document mentions at least one entity absent from train. Throws input_error
// naming the constraint that cannot be met.
SplitAssignment make_splits(const std::vector<DocEntitySummary>& docs, SplitSizes sizes,
                            std::uint64_t seed);

}  // namespace typeqa
