#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "typeqa/corpus.hpp"
#include "typeqa/ontology.hpp"

namespace typeqa {

enum class TaskKind { discovery, typing, recognition, slotfill };

inline constexpr TaskKind k_all_tasks[] = {TaskKind::discovery, TaskKind::typing,
                                           TaskKind::recognition, TaskKind::slotfill};

std::string_view task_name(TaskKind t);
std::optional<TaskKind> task_from_name(std::string_view name);

// Sampling weights over the four tasks. Must be nonnegative and sum to 1.
struct TaskMix {
    double discovery = 0.20;
    double typing = 0.30;
    double recognition = 0.20;
    double slotfill = 0.30;

    double weight(TaskKind t) const;
    void validate() const;  // throws input_error
};

// Question templates are configuration data, not code. {surface} and {types}
// are the substitution points.
struct QuestionTemplates {
    std::string discovery = "List all concepts and types mentioned here.";
    std::string typing = "What is {surface} an example of?";
    std::string recognition = "What does {surface} refer to?";
    std::string slotfill = "Which {types} are mentioned here?";
};

// One generated training record. target = question + " " + answer.
struct QAExample {
    std::string doc_id;
    TaskKind task = TaskKind::discovery;
    std::string context;
    std::string question;
    std::string answer;
    std::string target;
};

// Answer list grammar: one item plain, two joined by " and ", three or more
// comma-separated with a serial comma before the final "and".
std::string serialize_answer(const std::vector<std::string>& items);

// Left inverse of serialize_answer for items containing neither ", " nor
// " and "; best-effort split otherwise. Plain ", "-separated sequences (no
// "and") also parse, since generative models emit those.
std::vector<std::string> parse_answer(std::string_view s);

// Rule-based English pluralizer: sibilant -> +es, consonant+y -> -ies,
// otherwise +s, with a small irregulars table. Multi-word nouns pluralize
// their last word.
std::string pluralize(std::string_view noun);

// Per-document generation context: the document plus everything needed to
// name entities and types, with relevant-type lists precomputed.
struct GenContext {
    const LinkedDocument* doc = nullptr;
    const EntityTable* entities = nullptr;
    const TypeOntology* ontology = nullptr;
    std::map<std::string, std::vector<std::string>> relevant;  // entity -> types
};

GenContext make_gen_context(const LinkedDocument& doc, const EntityTable& entities,
                            const TypeOntology& ontology, const EntityTypeIndex& index,
                            bool relevance_filter = true);

// Every mention's surface with its first relevant type, in order of
// appearance, deduplicated by (surface, entity).
QAExample gen_discovery(const GenContext& ctx, const QuestionTemplates& templates = {});

// All relevant types of the mention's entity, in stored claim order.
QAExample gen_typing(const GenContext& ctx, const Mention& mention,
                     const QuestionTemplates& templates = {});

// Canonical entity name with its first relevant type.
QAExample gen_recognition(const GenContext& ctx, const Mention& mention,
                          const QuestionTemplates& templates = {});

// Canonical names of all mentioned entities holding type_id among their
// relevant types, deduplicated, in appearance order. Throws input_error when
// no mentioned entity qualifies.
QAExample gen_slotfill(const GenContext& ctx, const std::string& type_id,
                       const QuestionTemplates& templates = {});

struct SampleResult {
    std::vector<QAExample> examples;
    std::uint64_t skipped = 0;  // draws abandoned after bounded retries
};

// n examples with tasks drawn independently from the mix and candidates drawn
// uniformly. Fully deterministic given (global_seed, doc_id) and independent
// of any other document.
SampleResult sample_examples(const GenContext& ctx, const TaskMix& mix, std::size_t n,
                             std::uint64_t global_seed, const QuestionTemplates& templates = {});

std::string serialize_qa_example(const QAExample& ex);

}  // namespace typeqa
