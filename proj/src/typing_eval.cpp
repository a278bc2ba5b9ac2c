#include "typeqa/typing_eval.hpp"

#include "typeqa/errors.hpp"
#include "typeqa/qagen.hpp"
#include "typeqa/text.hpp"

namespace typeqa {

std::string normalize_type(std::string_view s) { return collapse_whitespace(ascii_lower(s)); }

std::vector<std::string> parse_prediction(std::string_view s) {
    if (trim(s).empty()) return {};
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (const std::string& item : parse_answer(s)) {
        std::string norm = normalize_type(item);
        if (norm.empty()) continue;
        if (seen.insert(norm).second) out.push_back(std::move(norm));
    }
    return out;
}

namespace {

PRFReport finalize(std::uint64_t tp, std::uint64_t fp, std::uint64_t fn) {
    PRFReport r;
    r.tp = tp;
    r.fp = fp;
    r.fn = fn;
    r.precision = (tp + fp) ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
    r.recall = (tp + fn) ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
    r.f1 = (r.precision + r.recall) > 0.0
               ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
               : 0.0;
    return r;
}

}  // namespace

TypingScore score_typing(const std::vector<TypingInstance>& instances,
                         const PredictionMap& predictions) {
    std::uint64_t tp[2] = {0, 0}, fp[2] = {0, 0}, fn[2] = {0, 0};  // [entity_seen]

    for (const TypingInstance& inst : instances) {
        if (inst.gold_types.empty())
            throw input_error("gold types must be non-empty (doc " + inst.doc_id + ")");
        std::set<std::string> gold;
        for (const std::string& g : inst.gold_types) gold.insert(normalize_type(g));

        std::set<std::string> pred;
        auto it = predictions.find({inst.doc_id, inst.start, inst.end});
        if (it != predictions.end())
            for (const std::string& p : parse_prediction(it->second)) pred.insert(p);

        const int stratum = inst.entity_seen ? 1 : 0;
        for (const std::string& p : pred)
            ++(gold.count(p) ? tp[stratum] : fp[stratum]);
        for (const std::string& g : gold)
            if (!pred.count(g)) ++fn[stratum];
    }

    TypingScore score;
    score.seen = finalize(tp[1], fp[1], fn[1]);
    score.unseen = finalize(tp[0], fp[0], fn[0]);
    score.overall = finalize(tp[0] + tp[1], fp[0] + fp[1], fn[0] + fn[1]);
    return score;
}

std::set<std::string> normalized_type_names(const TypeOntology& ontology) {
    std::set<std::string> out;
    for (const auto& [id, node] : ontology.nodes) out.insert(normalize_type(node.name));
    return out;
}

NovelSplit detect_novel(const std::vector<std::string>& predicted,
                        const std::set<std::string>& normalized_names) {
    NovelSplit out;
    for (const std::string& p : predicted) {
        if (normalized_names.count(normalize_type(p)))
            out.seen.push_back(p);
        else
            out.novel.push_back(p);
    }
    return out;
}

NovelSplit detect_novel(const std::vector<std::string>& predicted,
                        const TypeOntology& ontology) {
    return detect_novel(predicted, normalized_type_names(ontology));
}

}  // namespace typeqa
