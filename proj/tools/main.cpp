#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "typeqa/config.hpp"
#include "typeqa/corpus.hpp"
#include "typeqa/dst.hpp"
#include "typeqa/errors.hpp"
#include "typeqa/jsonl.hpp"
#include "typeqa/kg.hpp"
#include "typeqa/ontology.hpp"
#include "typeqa/parallel.hpp"
#include "typeqa/qagen.hpp"
#include "typeqa/relevance.hpp"
#include "typeqa/stats.hpp"
#include "typeqa/typing_eval.hpp"
#include "typeqa/version.hpp"

namespace {

using namespace typeqa;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open input file: " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open output file: " + path);
    return out;
}

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

// Option plumbing shared by every subcommand: a config file plus overriding
// flags. Flags win over file values.
struct ConfigBinder {
    CLI::App* cmd;
    std::string config_path;
    std::uint64_t seed = 0;
    std::string human_type;
    std::string relevance;
    std::size_t workers = 0;

    explicit ConfigBinder(CLI::App* sub) : cmd(sub) {
        cmd->add_option("--config", config_path, "plain-text key = value configuration file");
        cmd->add_option("--seed", seed, "global seed (required here or in the config)");
        cmd->add_option("--human-type", human_type, "type id whose instances are typed by occupation");
        cmd->add_option("--relevance-filter", relevance, "on|off: restrict types to those shared in-document")
            ->check(CLI::IsMember({"on", "off"}));
        cmd->add_option("--workers", workers, "worker threads for per-document stages");
    }

    PipelineConfig resolve() const {
        PipelineConfig cfg;
        if (!config_path.empty()) cfg.apply_file(config_path);
        if (cmd->count("--seed")) cfg.seed = seed;
        if (cmd->count("--human-type")) cfg.human_type_id = human_type;
        if (cmd->count("--relevance-filter")) cfg.relevance_filter = (relevance == "on");
        if (cmd->count("--workers")) cfg.workers = workers;
        return cfg;
    }
};

IngestResult ingest_file(const std::string& path, const std::string& human_type_id) {
    std::ifstream in = open_input(path);
    IngestResult result = ingest_dump(in, human_type_id);
    for (const MalformedRecord& bad : result.first_malformed)
        std::cerr << "malformed record at byte " << bad.byte_offset << ": " << bad.reason
                  << "\n";
    return result;
}

std::string stats_comment(const IngestStats& s) {
    std::ostringstream out;
    out << "# stats read=" << s.records_read << " retained=" << s.records_retained
        << " skipped_untyped=" << s.records_skipped_untyped
        << " skipped_malformed=" << s.records_skipped_malformed << "\n";
    return out.str();
}

int cmd_ingest_kg(const PipelineConfig& cfg, const std::string& dump_path,
                  const std::string& out_path) {
    cfg.validate();
    IngestResult result = ingest_file(dump_path, cfg.human_type_id);

    std::ofstream out = open_output(out_path);
    write_provenance_header(out, cfg.digest(), cfg.require_seed());
    out << stats_comment(result.stats);
    for (const auto& [id, rec] : result.table.records) {
        jobj j;
        j["id"] = rec.entity_id;
        j["label"] = rec.canonical_name;
        j["aliases"] = rec.aliases;
        jobj claims = jobj::array();
        for (const Claim& c : rec.claims) claims.push_back({c.property, c.target});
        j["claims"] = std::move(claims);
        out << j.dump() << "\n";
    }
    std::cout << "read " << result.stats.records_read << "\nretained "
              << result.stats.records_retained << "\nskipped_untyped "
              << result.stats.records_skipped_untyped << "\nskipped_malformed "
              << result.stats.records_skipped_malformed << "\n";
    return 0;
}

int cmd_build_ontology(const PipelineConfig& cfg, const std::string& entities_path,
                       const std::string& ontology_path, const std::string& index_path) {
    cfg.validate();
    IngestResult ingested = ingest_file(entities_path, cfg.human_type_id);
    OntologyBuild built = build_ontology(ingested.table, cfg.human_type_id);

    if (auto cycle = validate_acyclic(built.ontology)) {
        std::string path;
        for (const std::string& node : cycle->cycle) {
            if (!path.empty()) path += " -> ";
            path += node;
        }
        throw input_error("type ontology contains a cycle: " + path);
    }

    std::ofstream onto_out = open_output(ontology_path);
    write_provenance_header(onto_out, cfg.digest(), cfg.require_seed());
    save_ontology(onto_out, built.ontology);

    std::ofstream index_out = open_output(index_path);
    write_provenance_header(index_out, cfg.digest(), cfg.require_seed());
    save_index(index_out, built.index);

    std::cout << "types " << built.ontology.node_count() << "\ndangling "
              << built.dangling_count << "\nindexed_entities "
              << built.index.entity_to_types.size() << "\n";
    return 0;
}

int cmd_link_corpus(const PipelineConfig& cfg, const std::string& corpus_path,
                    const std::string& entities_path, const std::string& out_path) {
    cfg.validate();
    IngestResult ingested = ingest_file(entities_path, cfg.human_type_id);
    OntologyBuild built = build_ontology(ingested.table, cfg.human_type_id);
    LinkTables tables{&ingested.table, &ingested.aliases, &ingested.pages, &built.index};
    DictionaryAugmenter augmenter;

    std::atomic<std::uint64_t> resolved{0}, dropped{0}, augmented{0}, docs_dropped{0},
        malformed_docs{0};

    std::ifstream in = open_input(corpus_path);
    std::ofstream out = open_output(out_path);
    write_provenance_header(out, cfg.digest(), cfg.require_seed());

    transform_lines_parallel(in, out, cfg.workers, [&](const JsonlLine& line) -> std::string {
        ParsedRawDocument parsed = parse_raw_document(line.text, line.byte_offset);
        if (auto* bad = std::get_if<MalformedRecord>(&parsed)) {
            ++malformed_docs;
            static std::atomic<int> reported{0};
            if (reported.fetch_add(1) < 8)
                std::cerr << "malformed document at byte " << bad->byte_offset << ": "
                          << bad->reason << "\n";
            return {};
        }
        LinkCounters counters;
        std::optional<LinkedDocument> linked =
            link_document(std::get<RawDocument>(parsed), tables, augmenter, &counters);
        resolved += counters.links_resolved;
        dropped += counters.links_dropped;
        augmented += counters.augmented_mentions;
        docs_dropped += counters.docs_dropped;
        if (!linked) return {};
        return serialize_linked_document(*linked) + "\n";
    });

    std::cout << "links_resolved " << resolved << "\nlinks_dropped " << dropped
              << "\naugmented_mentions " << augmented << "\ndocs_dropped " << docs_dropped
              << "\nmalformed_docs " << malformed_docs << "\n";
    return 0;
}

int cmd_make_splits(const PipelineConfig& cfg, const std::string& linked_path,
                    const std::string& train_path, const std::string& test_path,
                    const std::string& newent_path) {
    cfg.validate();
    if (cfg.sizes.train == 0 || cfg.sizes.test == 0 || cfg.sizes.newent == 0)
        throw input_error("train_size, test_size and newent_size must be positive");

    // Pass 1: per-document entity summaries.
    std::vector<DocEntitySummary> summaries;
    {
        std::ifstream in = open_input(linked_path);
        JsonlReader reader(in);
        JsonlLine line;
        while (reader.next(line)) {
            LinkedDocument doc = parse_linked_document(line.text, line.line_no);
            summaries.push_back({doc.doc_id, doc_entities(doc)});
        }
    }
    SplitAssignment assignment = make_splits(summaries, cfg.sizes, cfg.require_seed());

    // Pass 2: route records to their split files in corpus order.
    std::ifstream in = open_input(linked_path);
    std::ofstream train_out = open_output(train_path);
    std::ofstream test_out = open_output(test_path);
    std::ofstream newent_out = open_output(newent_path);
    for (std::ofstream* out : {&train_out, &test_out, &newent_out})
        write_provenance_header(*out, cfg.digest(), cfg.require_seed());

    JsonlReader reader(in);
    JsonlLine line;
    while (reader.next(line)) {
        LinkedDocument doc = parse_linked_document(line.text, line.line_no);
        auto it = assignment.by_doc.find(doc.doc_id);
        if (it == assignment.by_doc.end()) continue;
        switch (it->second) {
            case SplitId::train: train_out << line.text << "\n"; break;
            case SplitId::test: test_out << line.text << "\n"; break;
            case SplitId::newent: newent_out << line.text << "\n"; break;
        }
    }
    std::cout << "train " << assignment.train.size() << "\ntest " << assignment.test.size()
              << "\nnewent " << assignment.newent.size() << "\n";
    return 0;
}

int cmd_gen_qa(const PipelineConfig& cfg, const std::string& linked_path,
               const std::string& entities_path, const std::string& ontology_path,
               const std::string& index_path, const std::string& out_path,
               std::size_t per_doc) {
    cfg.validate();
    if (per_doc == 0) throw input_error("--per-doc must be positive");

    IngestResult ingested = ingest_file(entities_path, cfg.human_type_id);
    std::ifstream onto_in = open_input(ontology_path);
    const TypeOntology ontology = load_ontology(onto_in);
    std::ifstream index_in = open_input(index_path);
    const EntityTypeIndex index = load_index(index_in);
    const std::uint64_t seed = cfg.require_seed();

    std::atomic<std::uint64_t> skipped{0}, generated{0};

    std::ifstream in = open_input(linked_path);
    std::ofstream out = open_output(out_path);
    write_provenance_header(out, cfg.digest(), seed);

    transform_lines_parallel(in, out, cfg.workers, [&](const JsonlLine& line) -> std::string {
        LinkedDocument doc = parse_linked_document(line.text, line.line_no);
        GenContext ctx =
            make_gen_context(doc, ingested.table, ontology, index, cfg.relevance_filter);
        SampleResult sample = sample_examples(ctx, cfg.mix, per_doc, seed, cfg.templates);
        skipped += sample.skipped;
        generated += sample.examples.size();
        std::string blob;
        for (const QAExample& ex : sample.examples) {
            blob += serialize_qa_example(ex);
            blob += "\n";
        }
        return blob;
    });

    std::cout << "examples " << generated << "\nskipped_draws " << skipped << "\n";
    return 0;
}

int cmd_stats(const PipelineConfig& cfg, const std::string& linked_path,
              const std::string& index_path, const std::string& out_path) {
    cfg.validate();
    std::ifstream index_in = open_input(index_path);
    const EntityTypeIndex index = load_index(index_in);

    StatsAccumulator acc(index, cfg.relevance_filter);
    std::ifstream in = open_input(linked_path);
    JsonlReader reader(in);
    JsonlLine line;
    while (reader.next(line)) acc.add(parse_linked_document(line.text, line.line_no));

    std::ostringstream report;
    write_provenance_header(report, cfg.digest(), cfg.require_seed());
    report << format_stats_report(acc.report());
    if (out_path.empty())
        std::cout << report.str();
    else
        write_text_file(out_path, report.str());
    return 0;
}

std::vector<TypingInstance> load_typing_gold(const std::string& path) {
    std::vector<TypingInstance> out;
    std::set<PredictionKey> keys;
    std::ifstream in = open_input(path);
    JsonlReader reader(in);
    JsonlLine line;
    while (reader.next(line)) {
        jobj j = jobj::parse(line.text, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw input_error("malformed gold record at line " + std::to_string(line.line_no));
        try {
            TypingInstance inst;
            inst.doc_id = j.at("doc_id").get<std::string>();
            inst.start = j.at("start").get<std::size_t>();
            inst.end = j.at("end").get<std::size_t>();
            inst.surface = j.at("surface").get<std::string>();
            inst.gold_types = j.at("gold_types").get<std::vector<std::string>>();
            inst.entity_seen = j.at("entity_seen").get<bool>();
            if (inst.gold_types.empty())
                throw input_error("gold_types must be non-empty at line " +
                                  std::to_string(line.line_no));
            if (!keys.emplace(inst.doc_id, inst.start, inst.end).second)
                throw input_error("duplicate gold instance at line " +
                                  std::to_string(line.line_no));
            out.push_back(std::move(inst));
        } catch (const jobj::exception&) {
            throw input_error("malformed gold record at line " + std::to_string(line.line_no));
        }
    }
    return out;
}

PredictionMap load_typing_predictions(const std::string& path) {
    PredictionMap out;
    std::ifstream in = open_input(path);
    JsonlReader reader(in);
    JsonlLine line;
    while (reader.next(line)) {
        jobj j = jobj::parse(line.text, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw input_error("malformed prediction record at line " +
                              std::to_string(line.line_no));
        try {
            PredictionKey key{j.at("doc_id").get<std::string>(),
                              j.at("start").get<std::size_t>(),
                              j.at("end").get<std::size_t>()};
            if (!out.emplace(std::move(key), j.at("predicted").get<std::string>()).second)
                throw input_error("duplicate prediction at line " +
                                  std::to_string(line.line_no));
        } catch (const jobj::exception&) {
            throw input_error("malformed prediction record at line " +
                              std::to_string(line.line_no));
        }
    }
    return out;
}

void append_prf(std::ostringstream& out, const char* label, const PRFReport& r) {
    out << label << " tp " << r.tp << "\n"
        << label << " fp " << r.fp << "\n"
        << label << " fn " << r.fn << "\n"
        << label << " precision " << fixed4(r.precision) << "\n"
        << label << " recall " << fixed4(r.recall) << "\n"
        << label << " f1 " << fixed4(r.f1) << "\n";
}

int cmd_eval_typing(const PipelineConfig& cfg, const std::string& gold_path,
                    const std::string& pred_path, const std::string& ontology_path,
                    const std::string& out_path) {
    cfg.validate();
    const std::vector<TypingInstance> gold = load_typing_gold(gold_path);
    const PredictionMap predictions = load_typing_predictions(pred_path);
    const TypingScore score = score_typing(gold, predictions);

    std::ostringstream report;
    write_provenance_header(report, cfg.digest(), cfg.require_seed());
    report << "# typing evaluation: micro-averaged over (instance, type) pairs, exact string "
              "match after normalization\n";
    report << "instances " << gold.size() << "\n";
    report << "predictions " << predictions.size() << "\n";
    append_prf(report, "overall", score.overall);
    append_prf(report, "seen", score.seen);
    append_prf(report, "unseen", score.unseen);

    if (!ontology_path.empty()) {
        std::ifstream onto_in = open_input(ontology_path);
        const std::set<std::string> names = normalized_type_names(load_ontology(onto_in));
        std::set<std::string> novel;
        for (const auto& [key, raw] : predictions) {
            NovelSplit split = detect_novel(parse_prediction(raw), names);
            novel.insert(split.novel.begin(), split.novel.end());
        }
        report << "novel_types " << novel.size() << "\n";
        for (const std::string& name : novel) report << "novel " << name << "\n";
    }

    if (out_path.empty())
        std::cout << report.str();
    else
        write_text_file(out_path, report.str());
    return 0;
}

std::vector<DialogTurn> load_dialogs(const std::string& path) {
    std::vector<DialogTurn> out;
    std::set<std::string> ids;
    std::ifstream in = open_input(path);
    JsonlReader reader(in);
    JsonlLine line;
    while (reader.next(line)) {
        jobj j = jobj::parse(line.text, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw input_error("malformed dialog record at line " + std::to_string(line.line_no));
        try {
            DialogTurn turn;
            turn.turn_id = j.at("turn_id").get<std::string>();
            for (const auto& h : j.at("history")) {
                if (!h.is_array() || h.size() != 2)
                    throw input_error("history entries must be [speaker, utterance] at line " +
                                      std::to_string(line.line_no));
                turn.history.emplace_back(h[0].get<std::string>(), h[1].get<std::string>());
            }
            if (turn.history.empty())
                throw input_error("history must be non-empty at line " +
                                  std::to_string(line.line_no));
            for (std::size_t i = 1; i < turn.history.size(); ++i)
                if (turn.history[i].first == turn.history[i - 1].first)
                    throw input_error("speakers must alternate in turn " + turn.turn_id);
            turn.gold = parse_belief(j.at("gold").get<std::string>());
            if (!ids.insert(turn.turn_id).second)
                throw input_error("duplicate turn id: " + turn.turn_id);
            out.push_back(std::move(turn));
        } catch (const jobj::exception&) {
            throw input_error("malformed dialog record at line " + std::to_string(line.line_no));
        }
    }
    return out;
}

std::vector<SlotSchema> load_schemas(const std::string& path) {
    std::vector<SlotSchema> out;
    std::ifstream in = open_input(path);
    JsonlReader reader(in);
    JsonlLine line;
    while (reader.next(line)) {
        jobj j = jobj::parse(line.text, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw input_error("malformed schema record at line " + std::to_string(line.line_no));
        try {
            SlotSchema schema;
            schema.domain = j.at("domain").get<std::string>();
            schema.slots = j.at("slots").get<std::vector<std::string>>();
            out.push_back(std::move(schema));
        } catch (const jobj::exception&) {
            throw input_error("malformed schema record at line " + std::to_string(line.line_no));
        }
    }
    return out;
}

std::map<std::string, BeliefState> load_dst_predictions(const std::string& path) {
    std::map<std::string, BeliefState> out;
    std::ifstream in = open_input(path);
    JsonlReader reader(in);
    JsonlLine line;
    while (reader.next(line)) {
        jobj j = jobj::parse(line.text, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw input_error("malformed prediction record at line " +
                              std::to_string(line.line_no));
        try {
            std::string id = j.at("turn_id").get<std::string>();
            BeliefState state = parse_belief(j.at("predicted").get<std::string>());
            if (!out.emplace(std::move(id), std::move(state)).second)
                throw input_error("duplicate prediction for turn at line " +
                                  std::to_string(line.line_no));
        } catch (const jobj::exception&) {
            throw input_error("malformed prediction record at line " +
                              std::to_string(line.line_no));
        }
    }
    return out;
}

// Shells out once per turn: one JSON request on the command's stdin, one
// predicted belief string on its stdout.
std::map<std::string, BeliefState> run_external_predictor(
    const std::vector<DialogTurn>& turns, const std::vector<SlotSchema>& schemas,
    const std::string& target_domain, const std::string& command) {
    const SlotSchema* schema = nullptr;
    for (const SlotSchema& s : schemas)
        if (s.domain == target_domain) schema = &s;
    if (!schema) throw input_error("unknown target domain: " + target_domain);

    namespace fs = std::filesystem;
    const fs::path dir =
        fs::temp_directory_path() / ("typeqa-dst-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const fs::path in_path = dir / "turn-in.json";
    const fs::path out_path = dir / "turn-out.txt";

    std::map<std::string, BeliefState> out;
    for (const DialogTurn& turn : turns) {
        jobj request;
        request["turn_id"] = turn.turn_id;
        jobj history = jobj::array();
        for (const auto& [speaker, utterance] : turn.history)
            history.push_back({speaker, utterance});
        request["history"] = std::move(history);
        jobj questions = jobj::array();
        for (const std::string& slot : schema->slots)
            questions.push_back(slot_question(target_domain, slot));
        request["questions"] = std::move(questions);
        write_text_file(in_path.string(), request.dump() + "\n");

        const std::string cmd = command + " < " + in_path.string() + " > " + out_path.string();
        const int rc = std::system(cmd.c_str());
        if (rc != 0)
            throw input_error("predictor command failed on turn " + turn.turn_id + " (exit " +
                              std::to_string(rc) + ")");
        std::ifstream result(out_path);
        std::string belief;
        std::getline(result, belief);
        out.emplace(turn.turn_id, parse_belief(belief));
    }
    fs::remove_all(dir);
    return out;
}

int cmd_eval_dst(const PipelineConfig& cfg, const std::string& dialogs_path,
                 const std::string& pred_path, const std::string& schema_path,
                 const std::string& domain, const std::string& predict_cmd,
                 const std::string& out_path) {
    cfg.validate();
    const std::vector<DialogTurn> turns = load_dialogs(dialogs_path);
    const std::vector<SlotSchema> schemas = load_schemas(schema_path);

    std::map<std::string, BeliefState> predictions;
    if (!predict_cmd.empty())
        predictions = run_external_predictor(turns, schemas, domain, predict_cmd);
    else if (!pred_path.empty())
        predictions = load_dst_predictions(pred_path);
    else
        throw input_error("eval-dst needs --pred or --predict-cmd");

    const double jga = joint_goal_accuracy(turns, predictions, schemas, domain);
    std::size_t correct = 0;
    for (const DialogTurn& turn : turns) {
        std::map<std::string, BeliefState> one{{turn.turn_id, predictions.at(turn.turn_id)}};
        if (joint_goal_accuracy({turn}, one, schemas, domain) > 0.5) ++correct;
    }

    std::ostringstream report;
    write_provenance_header(report, cfg.digest(), cfg.require_seed());
    report << "# joint goal accuracy: exact (slot, value) set agreement on the target domain; "
              "\"none\" and absent are equivalent\n";
    report << "domain " << domain << "\n";
    report << "turns " << turns.size() << "\n";
    report << "correct " << correct << "\n";
    report << "jga " << fixed4(jga) << "\n";
    if (out_path.empty())
        std::cout << report.str();
    else
        write_text_file(out_path, report.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knowledge-graph to type-centric QA corpus pipeline"};
    app.set_version_flag("--version", typeqa::k_version);
    app.require_subcommand(1);

    int rc = 0;

    // ingest-kg
    auto* ingest = app.add_subcommand("ingest-kg", "stream a KG dump into the entity table");
    auto ingest_cfg = std::make_shared<ConfigBinder>(ingest);
    auto ingest_dump_path = std::make_shared<std::string>();
    auto ingest_out = std::make_shared<std::string>();
    ingest->add_option("--dump", *ingest_dump_path, "line-delimited entity dump")->required();
    ingest->add_option("--out", *ingest_out, "retained entity table (jsonl)")->required();
    ingest->callback([=, &rc] {
        rc = cmd_ingest_kg(ingest_cfg->resolve(), *ingest_dump_path, *ingest_out);
    });

    // build-ontology
    auto* build = app.add_subcommand("build-ontology", "build the type DAG and entity-type index");
    auto build_cfg = std::make_shared<ConfigBinder>(build);
    auto build_entities = std::make_shared<std::string>();
    auto build_onto_out = std::make_shared<std::string>();
    auto build_index_out = std::make_shared<std::string>();
    build->add_option("--entities", *build_entities, "entity table from ingest-kg")->required();
    build->add_option("--ontology-out", *build_onto_out)->required();
    build->add_option("--index-out", *build_index_out)->required();
    build->callback([=, &rc] {
        rc = cmd_build_ontology(build_cfg->resolve(), *build_entities, *build_onto_out,
                                *build_index_out);
    });

    // link-corpus
    auto* link = app.add_subcommand("link-corpus", "resolve hyperlinks and augment mentions");
    auto link_cfg = std::make_shared<ConfigBinder>(link);
    auto link_corpus = std::make_shared<std::string>();
    auto link_entities = std::make_shared<std::string>();
    auto link_out = std::make_shared<std::string>();
    link->add_option("--corpus", *link_corpus, "raw hyperlinked documents (jsonl)")->required();
    link->add_option("--entities", *link_entities, "entity table from ingest-kg")->required();
    link->add_option("--out", *link_out, "linked documents (jsonl)")->required();
    link->callback([=, &rc] {
        rc = cmd_link_corpus(link_cfg->resolve(), *link_corpus, *link_entities, *link_out);
    });

    // make-splits
    auto* splits = app.add_subcommand("make-splits", "deterministic train/test/new-entity splits");
    auto splits_cfg = std::make_shared<ConfigBinder>(splits);
    auto splits_linked = std::make_shared<std::string>();
    auto splits_train = std::make_shared<std::string>();
    auto splits_test = std::make_shared<std::string>();
    auto splits_newent = std::make_shared<std::string>();
    auto splits_sizes = std::make_shared<std::vector<std::size_t>>();
    splits->add_option("--linked", *splits_linked, "linked documents (jsonl)")->required();
    splits->add_option("--train-out", *splits_train)->required();
    splits->add_option("--test-out", *splits_test)->required();
    splits->add_option("--newent-out", *splits_newent)->required();
    auto* train_size_opt = splits->add_option("--train-size", "");
    auto* test_size_opt = splits->add_option("--test-size", "");
    auto* newent_size_opt = splits->add_option("--newent-size", "");
    splits->callback([=, &rc] {
        PipelineConfig cfg = splits_cfg->resolve();
        if (train_size_opt->count()) cfg.sizes.train = train_size_opt->as<std::size_t>();
        if (test_size_opt->count()) cfg.sizes.test = test_size_opt->as<std::size_t>();
        if (newent_size_opt->count()) cfg.sizes.newent = newent_size_opt->as<std::size_t>();
        rc = cmd_make_splits(cfg, *splits_linked, *splits_train, *splits_test, *splits_newent);
    });

    // gen-qa
    auto* gen = app.add_subcommand("gen-qa", "sample pre-training questions from linked docs");
    auto gen_cfg = std::make_shared<ConfigBinder>(gen);
    auto gen_linked = std::make_shared<std::string>();
    auto gen_entities = std::make_shared<std::string>();
    auto gen_ontology = std::make_shared<std::string>();
    auto gen_index = std::make_shared<std::string>();
    auto gen_out = std::make_shared<std::string>();
    gen->add_option("--linked", *gen_linked)->required();
    gen->add_option("--entities", *gen_entities)->required();
    gen->add_option("--ontology", *gen_ontology)->required();
    gen->add_option("--index", *gen_index)->required();
    gen->add_option("--out", *gen_out)->required();
    auto* per_doc_opt = gen->add_option("--per-doc", "questions sampled per document");
    auto* mix_opt = gen->add_option("--mix", "discovery,typing,recognition,slotfill weights")
                        ->expected(1);
    gen->callback([=, &rc] {
        PipelineConfig cfg = gen_cfg->resolve();
        if (per_doc_opt->count()) cfg.questions_per_doc = per_doc_opt->as<std::size_t>();
        if (mix_opt->count()) {
            const std::string spec = mix_opt->as<std::string>();
            std::istringstream ss(spec);
            std::string part;
            std::vector<double> weights;
            try {
                while (std::getline(ss, part, ',')) weights.push_back(std::stod(part));
            } catch (const std::exception&) {
                throw typeqa::input_error("--mix expects four comma-separated weights");
            }
            if (weights.size() != 4)
                throw typeqa::input_error("--mix expects four comma-separated weights");
            cfg.mix = TaskMix{weights[0], weights[1], weights[2], weights[3]};
        }
        rc = cmd_gen_qa(cfg, *gen_linked, *gen_entities, *gen_ontology, *gen_index, *gen_out,
                        cfg.questions_per_doc);
    });

    // stats
    auto* stats = app.add_subcommand("stats", "corpus statistics in one streaming pass");
    auto stats_cfg = std::make_shared<ConfigBinder>(stats);
    auto stats_linked = std::make_shared<std::string>();
    auto stats_index = std::make_shared<std::string>();
    auto stats_out = std::make_shared<std::string>();
    stats->add_option("--linked", *stats_linked)->required();
    stats->add_option("--index", *stats_index)->required();
    stats->add_option("--out", *stats_out, "report file (stdout when omitted)");
    stats->callback([=, &rc] {
        rc = cmd_stats(stats_cfg->resolve(), *stats_linked, *stats_index, *stats_out);
    });

    // eval-typing
    auto* etyping = app.add_subcommand("eval-typing", "score generative typing predictions");
    auto etyping_cfg = std::make_shared<ConfigBinder>(etyping);
    auto etyping_gold = std::make_shared<std::string>();
    auto etyping_pred = std::make_shared<std::string>();
    auto etyping_onto = std::make_shared<std::string>();
    auto etyping_out = std::make_shared<std::string>();
    etyping->add_option("--gold", *etyping_gold)->required();
    etyping->add_option("--pred", *etyping_pred)->required();
    etyping->add_option("--ontology", *etyping_onto, "enables novel-type detection");
    etyping->add_option("--out", *etyping_out, "report file (stdout when omitted)");
    etyping->callback([=, &rc] {
        rc = cmd_eval_typing(etyping_cfg->resolve(), *etyping_gold, *etyping_pred,
                             *etyping_onto, *etyping_out);
    });

    // eval-dst
    auto* edst = app.add_subcommand("eval-dst", "zero-shot DST joint goal accuracy");
    auto edst_cfg = std::make_shared<ConfigBinder>(edst);
    auto edst_dialogs = std::make_shared<std::string>();
    auto edst_pred = std::make_shared<std::string>();
    auto edst_schema = std::make_shared<std::string>();
    auto edst_domain = std::make_shared<std::string>();
    auto edst_cmd = std::make_shared<std::string>();
    auto edst_out = std::make_shared<std::string>();
    edst->add_option("--dialogs", *edst_dialogs)->required();
    edst->add_option("--pred", *edst_pred, "prediction file (jsonl)");
    edst->add_option("--schema", *edst_schema)->required();
    edst->add_option("--domain", *edst_domain, "target domain")->required();
    edst->add_option("--predict-cmd", *edst_cmd,
                     "external predictor command, one JSON request per turn on stdin");
    edst->add_option("--out", *edst_out, "report file (stdout when omitted)");
    edst->callback([=, &rc] {
        rc = cmd_eval_dst(edst_cfg->resolve(), *edst_dialogs, *edst_pred, *edst_schema,
                          *edst_domain, *edst_cmd, *edst_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const typeqa::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
