#include "typeqa/corpus.hpp"

#include <algorithm>

#include "typeqa/errors.hpp"
#include "typeqa/jsonl.hpp"
#include "typeqa/rng.hpp"
#include "typeqa/text.hpp"

namespace typeqa {

std::string_view mention_source_name(MentionSource s) {
    return s == MentionSource::hyperlink ? "hyperlink" : "augmented";
}

namespace {

MalformedRecord malformed(std::uint64_t offset, std::string reason) {
    return MalformedRecord{offset, std::move(reason)};
}

// Shared span-sequence validation for hyperlinks and mentions.
// Returns an empty string when valid, otherwise the reason.
std::string check_span(const std::string& text, std::size_t start, std::size_t end) {
    if (start >= end) return "span start must be < end";
    if (end > text.size()) return "span out of bounds";
    if (!utf8_boundary(text, start) || !utf8_boundary(text, end))
        return "span splits a UTF-8 code point";
    return {};
}

}  // namespace

ParsedRawDocument parse_raw_document(std::string_view line, std::uint64_t byte_offset) {
    const jobj j = jobj::parse(line, nullptr, false);
    if (j.is_discarded()) return malformed(byte_offset, "invalid JSON");
    if (!j.is_object()) return malformed(byte_offset, "record is not an object");

    auto doc_id = j.find("doc_id");
    auto text = j.find("text");
    auto links = j.find("links");
    if (doc_id == j.end() || text == j.end() || links == j.end())
        return malformed(byte_offset, "missing one of {doc_id, text, links}");
    if (!doc_id->is_string() || doc_id->get_ref<const std::string&>().empty())
        return malformed(byte_offset, "doc_id must be a non-empty string");
    if (!text->is_string()) return malformed(byte_offset, "text must be a string");
    if (!links->is_array()) return malformed(byte_offset, "links must be an array");

    RawDocument doc;
    doc.doc_id = doc_id->get<std::string>();
    doc.text = text->get<std::string>();

    std::size_t prev_end = 0;
    for (const auto& l : *links) {
        if (!l.is_array() || l.size() != 3 || !l[0].is_number_unsigned() ||
            !l[1].is_number_unsigned() || !l[2].is_string())
            return malformed(byte_offset, "link entries must be [start, end, target]");
        Hyperlink h;
        h.start = l[0].get<std::size_t>();
        h.end = l[1].get<std::size_t>();
        h.target = l[2].get<std::string>();
        if (h.target.empty()) return malformed(byte_offset, "link target must be non-empty");
        if (std::string reason = check_span(doc.text, h.start, h.end); !reason.empty())
            return malformed(byte_offset, reason);
        if (!doc.hyperlinks.empty() && h.start < prev_end)
            return malformed(byte_offset, "links must be sorted by start and non-overlapping");
        prev_end = h.end;
        doc.hyperlinks.push_back(std::move(h));
    }
    return doc;
}

std::string serialize_linked_document(const LinkedDocument& doc) {
    jobj j;
    j["doc_id"] = doc.doc_id;
    j["text"] = doc.text;
    jobj mentions = jobj::array();
    for (const Mention& m : doc.mentions) {
        jobj jm;
        jm["start"] = m.start;
        jm["end"] = m.end;
        jm["surface"] = m.surface;
        jm["entity_id"] = m.entity_id;
        jm["source"] = std::string(mention_source_name(m.source));
        mentions.push_back(std::move(jm));
    }
    j["mentions"] = std::move(mentions);
    return j.dump();
}

LinkedDocument parse_linked_document(std::string_view line, std::uint64_t line_no) {
    auto fail = [line_no](const std::string& reason) -> input_error {
        std::string msg = "malformed linked document";
        if (line_no) msg += " at line " + std::to_string(line_no);
        return input_error(msg + ": " + reason);
    };

    const jobj j = jobj::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw fail("invalid JSON");
    if (!j.contains("doc_id") || !j.contains("text") || !j.contains("mentions"))
        throw fail("missing one of {doc_id, text, mentions}");

    LinkedDocument doc;
    try {
        doc.doc_id = j["doc_id"].get<std::string>();
        doc.text = j["text"].get<std::string>();

        std::size_t prev_end = 0;
        for (const auto& jm : j["mentions"]) {
            Mention m;
            m.start = jm.at("start").get<std::size_t>();
            m.end = jm.at("end").get<std::size_t>();
            m.surface = jm.at("surface").get<std::string>();
            m.entity_id = jm.at("entity_id").get<std::string>();
            const auto source = jm.at("source").get<std::string>();
            if (source == "hyperlink")
                m.source = MentionSource::hyperlink;
            else if (source == "augmented")
                m.source = MentionSource::augmented;
            else
                throw fail("unknown mention source: " + source);
            if (std::string reason = check_span(doc.text, m.start, m.end); !reason.empty())
                throw fail(reason);
            if (doc.text.compare(m.start, m.end - m.start, m.surface) != 0)
                throw fail("surface does not match the text slice");
            if (!doc.mentions.empty() && m.start < prev_end)
                throw fail("mentions must be sorted by start and non-overlapping");
            prev_end = m.end;
            doc.mentions.push_back(std::move(m));
        }
    } catch (const jobj::exception&) {
        throw fail("wrong field shape");
    }
    if (doc.mentions.empty()) throw fail("document has no mentions");
    return doc;
}

std::vector<Mention> resolve_hyperlinks(const RawDocument& doc, const LinkTables& tables,
                                        LinkCounters* counters) {
    std::vector<Mention> out;
    for (const Hyperlink& h : doc.hyperlinks) {
        const std::string* id = nullptr;
        if (h.target.size() >= 2 && h.target[0] == 'Q' && tables.entities->contains(h.target)) {
            id = &tables.entities->find(h.target)->entity_id;
        } else {
            auto it = tables.pages->title_to_id.find(h.target);
            if (it != tables.pages->title_to_id.end()) id = &it->second;
        }
        if (!id || !tables.index->contains(*id)) {
            if (counters) ++counters->links_dropped;
            continue;
        }
        Mention m;
        m.start = h.start;
        m.end = h.end;
        m.surface = doc.text.substr(h.start, h.end - h.start);
        m.entity_id = *id;
        m.source = MentionSource::hyperlink;
        out.push_back(std::move(m));
        if (counters) ++counters->links_resolved;
    }
    return out;
}

std::vector<Mention> DictionaryAugmenter::augment(const RawDocument& doc,
                                                  const std::vector<Mention>& existing,
                                                  const LinkTables& tables) const {
    // Document-local dictionary: surface -> entity, first hyperlinked entity
    // owning the surface wins.
    std::vector<const std::string*> local_entities;
    for (const Mention& m : existing) {
        bool seen = false;
        for (const std::string* e : local_entities)
            if (*e == m.entity_id) {
                seen = true;
                break;
            }
        if (!seen) local_entities.push_back(&m.entity_id);
    }

    struct DictEntry {
        std::string_view surface;
        const std::string* entity_id;
    };
    std::vector<DictEntry> dict;
    for (const std::string* e : local_entities) {
        const EntityRecord* rec = tables.entities->find(*e);
        if (!rec) continue;
        auto add = [&](const std::string& surface) {
            if (surface.empty()) return;
            for (const DictEntry& d : dict)
                if (d.surface == surface) return;  // first owner wins
            dict.push_back({surface, e});
        };
        add(rec->canonical_name);
        for (const std::string& a : rec->aliases) add(a);
    }
    if (dict.empty()) return {};

    // Longest surface first so the scan picks the longest match at a position.
    std::stable_sort(dict.begin(), dict.end(), [](const DictEntry& a, const DictEntry& b) {
        if (a.surface.size() != b.surface.size()) return a.surface.size() > b.surface.size();
        return a.surface < b.surface;
    });

    std::vector<std::pair<std::size_t, std::size_t>> taken;
    for (const Mention& m : existing) taken.emplace_back(m.start, m.end);
    std::sort(taken.begin(), taken.end());
    auto overlaps_taken = [&](std::size_t s, std::size_t e) {
        auto it = std::upper_bound(taken.begin(), taken.end(),
                                   std::make_pair(e, std::size_t{0}));
        if (it != taken.begin()) {
            --it;
            if (it->second > s && it->first < e) return true;
        }
        return false;
    };

    const std::string& text = doc.text;
    std::vector<Mention> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (!utf8_boundary(text, i) || (i > 0 && is_ascii_word_byte(text[i - 1]))) {
            ++i;
            continue;
        }
        const DictEntry* best = nullptr;
        for (const DictEntry& d : dict) {
            const std::size_t end = i + d.surface.size();
            if (end > text.size()) continue;
            if (text.compare(i, d.surface.size(), d.surface) != 0) continue;
            if (end < text.size() && is_ascii_word_byte(text[end])) continue;
            if (overlaps_taken(i, end)) continue;
            best = &d;
            break;  // dict is longest-first
        }
        if (best) {
            Mention m;
            m.start = i;
            m.end = i + best->surface.size();
            m.surface = std::string(best->surface);
            m.entity_id = *best->entity_id;
            m.source = MentionSource::augmented;
            out.push_back(std::move(m));
            i += best->surface.size();
        } else {
            ++i;
        }
    }
    return out;
}

std::optional<LinkedDocument> link_document(const RawDocument& doc, const LinkTables& tables,
                                            const MentionAugmenter& augmenter,
                                            LinkCounters* counters) {
    std::vector<Mention> mentions = resolve_hyperlinks(doc, tables, counters);
    std::vector<Mention> extra = augmenter.augment(doc, mentions, tables);
    if (counters) counters->augmented_mentions += extra.size();
    mentions.insert(mentions.end(), std::make_move_iterator(extra.begin()),
                    std::make_move_iterator(extra.end()));
    std::sort(mentions.begin(), mentions.end(),
              [](const Mention& a, const Mention& b) { return a.start < b.start; });
    if (mentions.empty()) {
        if (counters) ++counters->docs_dropped;
        return std::nullopt;
    }
    LinkedDocument out;
    out.doc_id = doc.doc_id;
    out.text = doc.text;
    out.mentions = std::move(mentions);
    return out;
}

std::vector<std::string> doc_entities(const LinkedDocument& doc) {
    std::vector<std::string> out;
    for (const Mention& m : doc.mentions)
        if (std::find(out.begin(), out.end(), m.entity_id) == out.end())
            out.push_back(m.entity_id);
    return out;
}

std::vector<Mention> unseen_mentions(const LinkedDocument& doc,
                                     const std::set<std::string>& train_entities) {
    std::vector<Mention> out;
    for (const Mention& m : doc.mentions)
        if (train_entities.count(m.entity_id) == 0) out.push_back(m);
    return out;
}

SplitAssignment make_splits(const std::vector<DocEntitySummary>& docs, SplitSizes sizes,
                            std::uint64_t seed) {
    const std::size_t n = docs.size();
    if (sizes.train == 0 || sizes.test == 0 || sizes.newent == 0)
        throw input_error("split sizes must be positive");
    if (sizes.train + sizes.test + sizes.newent > n)
        throw input_error("split sizes exceed corpus size: " + std::to_string(sizes.train) +
                          "+" + std::to_string(sizes.test) + "+" + std::to_string(sizes.newent) +
                          " > " + std::to_string(n));
    {
        std::set<std::string> ids;
        for (const DocEntitySummary& d : docs)
            if (!ids.insert(d.doc_id).second)
                throw input_error("duplicate doc id in corpus: " + d.doc_id);
    }

    // Fisher-Yates over document indices.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    SplitMix64 rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.next_below(i + 1));
        std::swap(order[i], order[j]);
    }

    SplitAssignment out;
    std::set<std::string> train_entities;
    for (std::size_t k = 0; k < sizes.train; ++k) {
        const DocEntitySummary& d = docs[order[k]];
        out.by_doc.emplace(d.doc_id, SplitId::train);
        for (const std::string& e : d.entities) train_entities.insert(e);
    }

    // Remaining docs in shuffled order, bucketed by eligibility. Docs eligible
    // for both splits back-fill whichever quota the exclusive docs left open.
    std::vector<const DocEntitySummary*> test_only, newent_only, both;
    for (std::size_t k = sizes.train; k < n; ++k) {
        const DocEntitySummary& d = docs[order[k]];
        bool has_seen = false, has_unseen = false;
        for (const std::string& e : d.entities) {
            if (train_entities.count(e))
                has_seen = true;
            else
                has_unseen = true;
        }
        if (has_seen && has_unseen)
            both.push_back(&d);
        else if (has_seen)
            test_only.push_back(&d);
        else if (has_unseen)
            newent_only.push_back(&d);
    }

    std::vector<const DocEntitySummary*> test_docs, newent_docs;
    for (const auto* d : test_only) {
        if (test_docs.size() == sizes.test) break;
        test_docs.push_back(d);
    }
    for (const auto* d : newent_only) {
        if (newent_docs.size() == sizes.newent) break;
        newent_docs.push_back(d);
    }
    for (const auto* d : both) {
        if (test_docs.size() < sizes.test)
            test_docs.push_back(d);
        else if (newent_docs.size() < sizes.newent)
            newent_docs.push_back(d);
        else
            break;
    }
    if (test_docs.size() < sizes.test)
        throw input_error("test split infeasible: need " + std::to_string(sizes.test) +
                          " documents mentioning a trained entity, found " +
                          std::to_string(test_docs.size()));
    if (newent_docs.size() < sizes.newent)
        throw input_error("new-entity split infeasible: need " + std::to_string(sizes.newent) +
                          " documents mentioning an entity absent from train, found " +
                          std::to_string(newent_docs.size()));

    for (const auto* d : test_docs) out.by_doc.emplace(d->doc_id, SplitId::test);
    for (const auto* d : newent_docs) out.by_doc.emplace(d->doc_id, SplitId::newent);

    // Report per-split doc ids in corpus order.
    for (const DocEntitySummary& d : docs) {
        auto it = out.by_doc.find(d.doc_id);
        if (it == out.by_doc.end()) continue;
        switch (it->second) {
            case SplitId::train: out.train.push_back(d.doc_id); break;
            case SplitId::test: out.test.push_back(d.doc_id); break;
            case SplitId::newent: out.newent.push_back(d.doc_id); break;
        }
    }
    return out;
}

}  // namespace typeqa
