#include "typeqa/qagen.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "typeqa/errors.hpp"
#include "typeqa/jsonl.hpp"
#include "typeqa/relevance.hpp"
#include "typeqa/rng.hpp"

namespace typeqa {

std::string_view task_name(TaskKind t) {
    switch (t) {
        case TaskKind::discovery: return "discovery";
        case TaskKind::typing: return "typing";
        case TaskKind::recognition: return "recognition";
        case TaskKind::slotfill: return "slotfill";
    }
    return "unknown";
}

std::optional<TaskKind> task_from_name(std::string_view name) {
    for (TaskKind t : k_all_tasks)
        if (task_name(t) == name) return t;
    return std::nullopt;
}

double TaskMix::weight(TaskKind t) const {
    switch (t) {
        case TaskKind::discovery: return discovery;
        case TaskKind::typing: return typing;
        case TaskKind::recognition: return recognition;
        case TaskKind::slotfill: return slotfill;
    }
    return 0.0;
}

void TaskMix::validate() const {
    double sum = 0.0;
    for (TaskKind t : k_all_tasks) {
        const double w = weight(t);
        if (!(w >= 0.0))
            throw input_error("task mix weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw input_error("task mix weights must sum to 1.0, got " + std::to_string(sum));
}

std::string serialize_answer(const std::vector<std::string>& items) {
    if (items.empty()) throw input_error("cannot serialize an empty answer list");
    if (items.size() == 1) return items[0];
    if (items.size() == 2) return items[0] + " and " + items[1];
    std::string out;
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
        out += items[i];
        out += ", ";
    }
    out += "and ";
    out += items.back();
    return out;
}

namespace {

std::vector<std::string> split_on(std::string_view s, std::string_view sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t hit = s.find(sep, pos);
        if (hit == std::string_view::npos) break;
        out.emplace_back(s.substr(pos, hit - pos));
        pos = hit + sep.size();
    }
    out.emplace_back(s.substr(pos));
    return out;
}

}  // namespace

std::vector<std::string> parse_answer(std::string_view s) {
    if (s.empty()) throw input_error("cannot parse an empty answer string");

    // Serial-comma form first: "A, B, and Z". Only consistent when the head
    // holds at least two items; otherwise fall back to the two-item form so
    // that items with a trailing comma still round-trip.
    const std::size_t serial = s.rfind(", and ");
    if (serial != std::string_view::npos) {
        std::vector<std::string> head = split_on(s.substr(0, serial), ", ");
        if (head.size() >= 2) {
            head.emplace_back(s.substr(serial + 6));
            return head;
        }
    }
    const std::size_t pair_sep = s.rfind(" and ");
    if (pair_sep != std::string_view::npos) {
        return {std::string(s.substr(0, pair_sep)), std::string(s.substr(pair_sep + 5))};
    }
    return split_on(s, ", ");
}

namespace {

const std::map<std::string, std::string>& irregular_plurals() {
    static const std::map<std::string, std::string> table = {
        {"person", "people"},     {"man", "men"},           {"woman", "women"},
        {"child", "children"},    {"foot", "feet"},         {"tooth", "teeth"},
        {"goose", "geese"},       {"mouse", "mice"},        {"ox", "oxen"},
        {"wolf", "wolves"},       {"knife", "knives"},      {"leaf", "leaves"},
        {"life", "lives"},        {"wife", "wives"},        {"half", "halves"},
        {"shelf", "shelves"},     {"thief", "thieves"},     {"hero", "heroes"},
        {"potato", "potatoes"},   {"tomato", "tomatoes"},   {"echo", "echoes"},
        {"analysis", "analyses"}, {"basis", "bases"},       {"crisis", "crises"},
        {"thesis", "theses"},     {"hypothesis", "hypotheses"},
        {"criterion", "criteria"}, {"phenomenon", "phenomena"},
        {"datum", "data"},        {"fungus", "fungi"},      {"nucleus", "nuclei"},
        {"cactus", "cacti"},      {"species", "species"},   {"series", "series"},
        {"sheep", "sheep"},       {"fish", "fish"},         {"deer", "deer"},
        {"aircraft", "aircraft"},
    };
    return table;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

}  // namespace

std::string pluralize(std::string_view noun) {
    if (noun.empty()) return std::string(noun);
    const std::size_t last_space = noun.rfind(' ');
    const std::size_t word_at = last_space == std::string_view::npos ? 0 : last_space + 1;
    const std::string prefix(noun.substr(0, word_at));
    const std::string word(noun.substr(word_at));
    if (word.empty()) return std::string(noun);

    const auto& irregular = irregular_plurals();
    if (auto it = irregular.find(word); it != irregular.end()) return prefix + it->second;

    auto ends_with = [&](std::string_view suffix) {
        return word.size() >= suffix.size() &&
               word.compare(word.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with("s") || ends_with("x") || ends_with("z") || ends_with("ch") ||
        ends_with("sh"))
        return prefix + word + "es";
    if (word.size() >= 2 && word.back() == 'y' && !is_vowel(word[word.size() - 2]))
        return prefix + word.substr(0, word.size() - 1) + "ies";
    return prefix + word + "s";
}

namespace {

std::string instantiate(std::string_view tmpl, std::string_view placeholder,
                        std::string_view value) {
    std::string out(tmpl);
    const std::size_t pos = out.find(placeholder);
    if (pos != std::string::npos) out.replace(pos, placeholder.size(), value);
    return out;
}

QAExample finish(const GenContext& ctx, TaskKind task, std::string question,
                 std::string answer) {
    QAExample ex;
    ex.doc_id = ctx.doc->doc_id;
    ex.task = task;
    ex.context = ctx.doc->text;
    ex.question = std::move(question);
    ex.answer = std::move(answer);
    ex.target = ex.question + " " + ex.answer;
    return ex;
}

const std::vector<std::string>& relevant_of(const GenContext& ctx, const std::string& entity) {
    auto it = ctx.relevant.find(entity);
    if (it == ctx.relevant.end())
        throw input_error("entity " + entity + " has no relevant types in document " +
                          ctx.doc->doc_id);
    return it->second;
}

const std::string& first_type_name(const GenContext& ctx, const std::string& entity) {
    return ctx.ontology->name_of(relevant_of(ctx, entity).front());
}

const Mention& checked_mention(const GenContext& ctx, const Mention& mention) {
    for (const Mention& m : ctx.doc->mentions)
        if (m.start == mention.start && m.end == mention.end &&
            m.entity_id == mention.entity_id)
            return m;
    throw input_error("mention \"" + mention.surface + "\" is not part of document " +
                      ctx.doc->doc_id);
}

const std::string& canonical_name(const GenContext& ctx, const std::string& entity) {
    const EntityRecord* rec = ctx.entities->find(entity);
    if (!rec) throw input_error("entity " + entity + " missing from the entity table");
    return rec->canonical_name;
}

}  // namespace

GenContext make_gen_context(const LinkedDocument& doc, const EntityTable& entities,
                            const TypeOntology& ontology, const EntityTypeIndex& index,
                            bool relevance_filter) {
    GenContext ctx;
    ctx.doc = &doc;
    ctx.entities = &entities;
    ctx.ontology = &ontology;
    ctx.relevant = relevant_types_by_entity(doc, index, relevance_filter);
    return ctx;
}

QAExample gen_discovery(const GenContext& ctx, const QuestionTemplates& templates) {
    std::vector<std::string> items;
    std::set<std::pair<std::string, std::string>> seen;
    for (const Mention& m : ctx.doc->mentions) {
        if (!seen.emplace(m.surface, m.entity_id).second) continue;
        items.push_back(m.surface + " (" + first_type_name(ctx, m.entity_id) + ")");
    }
    return finish(ctx, TaskKind::discovery, templates.discovery, serialize_answer(items));
}

QAExample gen_typing(const GenContext& ctx, const Mention& mention,
                     const QuestionTemplates& templates) {
    const Mention& m = checked_mention(ctx, mention);
    std::vector<std::string> names;
    for (const std::string& t : relevant_of(ctx, m.entity_id))
        names.push_back(ctx.ontology->name_of(t));
    return finish(ctx, TaskKind::typing,
                  instantiate(templates.typing, "{surface}", m.surface),
                  serialize_answer(names));
}

QAExample gen_recognition(const GenContext& ctx, const Mention& mention,
                          const QuestionTemplates& templates) {
    const Mention& m = checked_mention(ctx, mention);
    std::string answer =
        canonical_name(ctx, m.entity_id) + " (" + first_type_name(ctx, m.entity_id) + ")";
    return finish(ctx, TaskKind::recognition,
                  instantiate(templates.recognition, "{surface}", m.surface),
                  std::move(answer));
}

QAExample gen_slotfill(const GenContext& ctx, const std::string& type_id,
                       const QuestionTemplates& templates) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (const Mention& m : ctx.doc->mentions) {
        if (!seen.insert(m.entity_id).second) continue;
        const std::vector<std::string>& rel = relevant_of(ctx, m.entity_id);
        if (std::find(rel.begin(), rel.end(), type_id) != rel.end())
            names.push_back(canonical_name(ctx, m.entity_id));
    }
    if (names.empty())
        throw input_error("no mentioned entity in document " + ctx.doc->doc_id +
                          " has relevant type " + type_id);
    const std::string plural = pluralize(ctx.ontology->name_of(type_id));
    return finish(ctx, TaskKind::slotfill, instantiate(templates.slotfill, "{types}", plural),
                  serialize_answer(names));
}

SampleResult sample_examples(const GenContext& ctx, const TaskMix& mix, std::size_t n,
                             std::uint64_t global_seed, const QuestionTemplates& templates) {
    mix.validate();
    SplitMix64 rng(derive_seed(global_seed, ctx.doc->doc_id));

    // Slot-filling candidates: relevant types in first-appearance order.
    std::vector<std::string> slot_types;
    {
        std::set<std::string> seen_entities, seen_types;
        for (const Mention& m : ctx.doc->mentions) {
            if (!seen_entities.insert(m.entity_id).second) continue;
            for (const std::string& t : relevant_of(ctx, m.entity_id))
                if (seen_types.insert(t).second) slot_types.push_back(t);
        }
    }
    const std::size_t n_mentions = ctx.doc->mentions.size();

    auto draw_task = [&]() -> TaskKind {
        const double u = rng.next_double();
        double cum = 0.0;
        for (TaskKind t : k_all_tasks) {
            cum += mix.weight(t);
            if (u < cum) return t;
        }
        return TaskKind::slotfill;  // numerical residue
    };

    constexpr int k_max_retries = 16;
    SampleResult result;
    result.examples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        bool emitted = false;
        for (int attempt = 0; attempt < k_max_retries && !emitted; ++attempt) {
            switch (draw_task()) {
                case TaskKind::discovery:
                    if (n_mentions == 0) break;
                    result.examples.push_back(gen_discovery(ctx, templates));
                    emitted = true;
                    break;
                case TaskKind::typing:
                    if (n_mentions == 0) break;
                    result.examples.push_back(gen_typing(
                        ctx, ctx.doc->mentions[rng.next_below(n_mentions)], templates));
                    emitted = true;
                    break;
                case TaskKind::recognition:
                    if (n_mentions == 0) break;
                    result.examples.push_back(gen_recognition(
                        ctx, ctx.doc->mentions[rng.next_below(n_mentions)], templates));
                    emitted = true;
                    break;
                case TaskKind::slotfill:
                    if (slot_types.empty()) break;
                    result.examples.push_back(gen_slotfill(
                        ctx, slot_types[rng.next_below(slot_types.size())], templates));
                    emitted = true;
                    break;
            }
        }
        if (!emitted) ++result.skipped;
    }
    return result;
}

std::string serialize_qa_example(const QAExample& ex) {
    jobj j;
    j["doc_id"] = ex.doc_id;
    j["task"] = std::string(task_name(ex.task));
    j["context"] = ex.context;
    j["question"] = ex.question;
    j["answer"] = ex.answer;
    j["target"] = ex.target;
    return j.dump();
}

}  // namespace typeqa
