#include "typeqa/dst.hpp"

#include <set>

#include "typeqa/errors.hpp"
#include "typeqa/text.hpp"

namespace typeqa {

std::string slot_question(std::string_view domain, std::string_view slot) {
    return "What " + ascii_lower(domain) + " " + ascii_lower(slot) +
           " is the user interested in?";
}

std::string serialize_belief(const BeliefState& state) {
    std::string out;
    for (const auto& [key, value] : state.values) {
        if (!out.empty()) out += "; ";
        out += "[" + key.first + " " + key.second + "]: " + value;
    }
    return out;
}

BeliefState parse_belief(std::string_view s) {
    BeliefState state;
    if (trim(s).empty()) return state;

    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find("; ", pos);
        const std::string_view segment =
            s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
        auto fail = [&](const char* why) -> input_error {
            return input_error("malformed belief segment \"" + std::string(segment) +
                               "\": " + why);
        };
        if (segment.empty() || segment.front() != '[') throw fail("expected leading '['");
        const std::size_t close = segment.find(']');
        if (close == std::string_view::npos) throw fail("missing ']'");
        const std::string_view key = segment.substr(1, close - 1);
        const std::size_t space = key.find(' ');
        if (space == std::string_view::npos || space == 0 || space + 1 >= key.size())
            throw fail("expected \"[domain slot]\"");
        if (segment.size() < close + 3 || segment.substr(close + 1, 2) != ": ")
            throw fail("expected \": \" after ']'");
        std::string domain(key.substr(0, space));
        std::string slot(key.substr(space + 1));
        std::string value(segment.substr(close + 3));
        if (value.empty()) throw fail("empty value");
        if (!state.values.emplace(std::make_pair(std::move(domain), std::move(slot)),
                                  std::move(value)).second)
            throw fail("duplicate slot");
        if (next == std::string_view::npos) break;
        pos = next + 2;
    }
    return state;
}

namespace {

// Restrict to the target domain, normalize values, drop "none".
std::map<std::string, std::string> restricted(const BeliefState& state,
                                              const std::string& domain) {
    std::map<std::string, std::string> out;
    for (const auto& [key, value] : state.values) {
        if (key.first != domain) continue;
        std::string v = ascii_lower(trim(value));
        if (v == "none") continue;
        out[key.second] = std::move(v);
    }
    return out;
}

}  // namespace

double joint_goal_accuracy(const std::vector<DialogTurn>& turns,
                           const std::map<std::string, BeliefState>& predicted_by_turn,
                           const std::vector<SlotSchema>& schemas,
                           const std::string& target_domain) {
    std::set<std::pair<std::string, std::string>> known_keys;
    bool known_domain = false;
    for (const SlotSchema& schema : schemas) {
        std::set<std::string> names(schema.slots.begin(), schema.slots.end());
        if (names.size() != schema.slots.size())
            throw input_error("duplicate slot name in domain " + schema.domain);
        for (const std::string& slot : schema.slots) known_keys.emplace(schema.domain, slot);
        if (schema.domain == target_domain) known_domain = true;
    }
    if (!known_domain) throw input_error("unknown target domain: " + target_domain);
    if (turns.empty()) throw input_error("no dialog turns to score");

    std::size_t correct = 0;
    for (const DialogTurn& turn : turns) {
        // Gold states must stay within the schema; predictions are model
        // output and out-of-schema slots there simply never match.
        for (const auto& [key, _] : turn.gold.values)
            if (!known_keys.count(key))
                throw input_error("gold slot [" + key.first + " " + key.second +
                                  "] of turn " + turn.turn_id + " is not in any schema");
        auto it = predicted_by_turn.find(turn.turn_id);
        if (it == predicted_by_turn.end())
            throw input_error("missing prediction for turn " + turn.turn_id);
        if (restricted(turn.gold, target_domain) == restricted(it->second, target_domain))
            ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(turns.size());
}

}  // namespace typeqa
