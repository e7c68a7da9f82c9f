#pragma once

#include "qfray/tableau.hpp"

#include <vector>

namespace qfray {

struct WalkState {
    int x = 0;
    int y = 0;
    bool operator==(const WalkState&) const = default;
    bool on_axis() const { return x == 0 || y == 0; }
};

enum class Role { low_unprimed, low_primed, high_unprimed, high_primed };
enum class Direction { E, W, N, S };

char to_char(Direction d);

struct Step {
    Direction dir;
    WalkState state;
};

/// i' is E, i+1 is N, i is E on an axis and S otherwise, (i+1)' is N on an axis and W otherwise.
Step step(WalkState state, Role role);

/// Role of a letter in the i/(i+1)-walk; only meaningful when value is i or i+1.
Role role_of(Letter l, int i);

/// Letters of value i or i+1, in order. Throws std::invalid_argument if i < 1.
Word subword(const Word& word, int i);

struct WalkTraceEntry {
    Letter letter;
    Direction dir;
    WalkState state;
};

using WalkTrace = std::vector<WalkTraceEntry>;

/// The i/(i+1)-walk of a word, starting at the origin.
WalkTrace walk(const Word& word, int i);
WalkState walk_end(const Word& word, int i);

/// Every i/(i+1)-walk ends on the x axis.
bool is_ballot(const Word& word);

/// False only when y exceeds the number of steps left.
inline bool prefix_can_return(WalkState state, int remaining_letters) { return state.y <= remaining_letters; }

} // namespace qfray
