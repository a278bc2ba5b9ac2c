#pragma once

// Shared fixtures for unit and acceptance tests. Everything is built through
// the real pipeline (parse -> ingest -> ontology -> link) so the fixtures
// double as integration checks.

#include <sstream>
#include <string>
#include <vector>

#include "typeqa/corpus.hpp"
#include "typeqa/jsonl.hpp"
#include "typeqa/kg.hpp"
#include "typeqa/ontology.hpp"

namespace typeqa::testing {

inline std::string kg_line(const std::string& id, const std::string& label,
                           const std::vector<std::string>& aliases,
                           const std::vector<std::pair<std::string, std::string>>& claims) {
    jobj j;
    j["id"] = id;
    j["label"] = label;
    j["aliases"] = aliases;
    jobj jc = jobj::array();
    for (const auto& [prop, target] : claims) jc.push_back({prop, target});
    j["claims"] = std::move(jc);
    return j.dump();
}

inline IngestResult ingest_lines(const std::vector<std::string>& lines,
                                 const std::string& human_type_id = k_default_human_type) {
    std::string blob;
    for (const std::string& line : lines) blob += line + "\n";
    std::istringstream in(blob);
    return ingest_dump(in, human_type_id);
}

// One fully linked world: tables, ontology, index, and a linked document.
struct PipelineFixture {
    IngestResult ingested;
    OntologyBuild built;
    std::vector<LinkedDocument> docs;

    LinkTables tables() const {
        return LinkTables{&ingested.table, &ingested.aliases, &ingested.pages, &built.index};
    }
};

inline Hyperlink find_link(const std::string& text, const std::string& surface,
                           const std::string& target) {
    const std::size_t pos = text.find(surface);
    if (pos == std::string::npos) throw std::logic_error("fixture surface not in text: " + surface);
    return Hyperlink{pos, pos + surface.size(), target};
}

inline PipelineFixture link_fixture(const std::vector<std::string>& kg_lines,
                                    const std::vector<RawDocument>& raw_docs,
                                    const std::string& human_type_id = k_default_human_type) {
    PipelineFixture fx;
    fx.ingested = ingest_lines(kg_lines, human_type_id);
    fx.built = build_ontology(fx.ingested.table, human_type_id);
    DictionaryAugmenter augmenter;
    for (const RawDocument& raw : raw_docs) {
        auto linked = link_document(raw, fx.tables(), augmenter);
        if (linked) fx.docs.push_back(std::move(*linked));
    }
    return fx;
}

// The oxygen-discovery passage with five hyperlinked mentions, two of them
// humans typed through their occupation.
inline const std::vector<std::string>& chemistry_kg_lines() {
    static const std::vector<std::string> lines = {
        kg_line("Q5", "human", {}, {{"P279", "Q900"}}),
        kg_line("Q100", "Joseph Priestley", {"Priestley"}, {{"P31", "Q5"}, {"P106", "Q200"}}),
        kg_line("Q101", "Antoine Lavoisier", {"Lavoisier"}, {{"P31", "Q5"}, {"P106", "Q200"}}),
        kg_line("Q102", "mercuric oxide", {}, {{"P31", "Q201"}}),
        kg_line("Q103", "mercury", {}, {{"P31", "Q202"}}),
        kg_line("Q104", "dephlogisticated air", {}, {{"P31", "Q203"}}),
        kg_line("Q200", "chemist", {}, {{"P279", "Q204"}}),
        kg_line("Q201", "chemical compound", {}, {{"P279", "Q205"}}),
        kg_line("Q202", "chemical element", {}, {{"P279", "Q205"}}),
        kg_line("Q203", "superseded scientific theory", {}, {{"P279", "Q206"}}),
        kg_line("Q204", "scientist", {}, {{"P279", "Q900"}}),
        kg_line("Q205", "chemical substance", {}, {{"P279", "Q900"}}),
        kg_line("Q206", "scientific theory", {}, {{"P279", "Q900"}}),
    };
    return lines;
}

inline RawDocument chemistry_raw_doc() {
    RawDocument doc;
    doc.doc_id = "doc-chemistry";
    doc.text =
        "These included carbon dioxide by burning diamond, and mercuric oxide by heating "
        "mercury. This type of experiment contributed to the discovery of \"dephlogisticated "
        "air\" by Priestley, which became better known as oxygen, following Lavoisier's "
        "investigations.";
    doc.hyperlinks = {
        find_link(doc.text, "mercuric oxide", "mercuric oxide"),
        find_link(doc.text, "mercury", "mercury"),
        find_link(doc.text, "dephlogisticated air", "dephlogisticated air"),
        find_link(doc.text, "Priestley", "Joseph Priestley"),
        find_link(doc.text, "Lavoisier", "Antoine Lavoisier"),
    };
    return doc;
}

inline PipelineFixture chemistry_fixture() {
    return link_fixture(chemistry_kg_lines(), {chemistry_raw_doc()});
}

// Multi-occupation politician co-mentioned with a single-occupation one.
inline const std::vector<std::string>& senate_kg_lines() {
    static const std::vector<std::string> lines = {
        kg_line("Q5", "human", {}, {{"P279", "Q900"}}),
        kg_line("Q400", "Barack Obama", {"Obama"},
                {{"P31", "Q5"},
                 {"P106", "Q500"},
                 {"P106", "Q501"},
                 {"P106", "Q502"},
                 {"P106", "Q503"},
                 {"P106", "Q504"}}),
        kg_line("Q401", "Alice Palmer", {"Palmer"}, {{"P31", "Q5"}, {"P106", "Q500"}}),
        kg_line("Q500", "politician", {}, {{"P279", "Q910"}}),
        kg_line("Q501", "jurist", {}, {{"P279", "Q910"}}),
        kg_line("Q502", "political writer", {}, {{"P279", "Q910"}}),
        kg_line("Q503", "community organizer", {}, {{"P279", "Q910"}}),
        kg_line("Q504", "podcaster", {}, {{"P279", "Q910"}}),
    };
    return lines;
}

inline RawDocument senate_raw_doc() {
    RawDocument doc;
    doc.doc_id = "doc-senate";
    doc.text =
        "Obama was elected to the Illinois Senate in 1996, succeeding Democratic State "
        "Senator Alice Palmer from Illinois's 13th District.";
    doc.hyperlinks = {
        find_link(doc.text, "Obama", "Barack Obama"),
        find_link(doc.text, "Alice Palmer", "Alice Palmer"),
    };
    return doc;
}

inline PipelineFixture senate_fixture() {
    return link_fixture(senate_kg_lines(), {senate_raw_doc()});
}

}  // namespace typeqa::testing
