#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace typeqa {

struct SlotSchema {
    std::string domain;
    std::vector<std::string> slots;  // unique within the domain
};

// Slots expressed so far: (domain, slot) -> value. Absent means
// "not expressed"; a literal value "none" is canonicalized to absence.
struct BeliefState {
    std::map<std::pair<std::string, std::string>, std::string> values;

    bool operator==(const BeliefState&) const = default;
};

struct DialogTurn {
    std::string turn_id;
    std::vector<std::pair<std::string, std::string>> history;  // (speaker, utterance)
    BeliefState gold;
};

// "What {domain} {slot} is the user interested in?", tokens lowercased.
std::string slot_question(std::string_view domain, std::string_view slot);

// Entries rendered as "[domain slot]: value", joined by "; ", ordered by
// (domain, slot). parse_belief is the left inverse for values free of "; "
// and "]". Parse errors name the offending segment.
std::string serialize_belief(const BeliefState& state);
BeliefState parse_belief(std::string_view s);

// Fraction of turns whose predicted state, restricted to the target domain,
// agrees with gold on the exact (slot, value) set after value normalization
// (lowercase, trim, "none" -> absent). Every turn must have a prediction.
double joint_goal_accuracy(const std::vector<DialogTurn>& turns,
                           const std::map<std::string, BeliefState>& predicted_by_turn,
                           const std::vector<SlotSchema>& schemas,
                           const std::string& target_domain);

}  // namespace typeqa
