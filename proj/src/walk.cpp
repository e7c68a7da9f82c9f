#include "qfray/walk.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfray {

char to_char(Direction d)
{
    switch (d) {
    case Direction::E: return 'E';
    case Direction::W: return 'W';
    case Direction::N: return 'N';
    case Direction::S: return 'S';
    }
    return '?';
}

Step step(WalkState s, Role role)
{
    switch (role) {
    case Role::low_primed: return {Direction::E, {s.x + 1, s.y}};
    case Role::high_unprimed: return {Direction::N, {s.x, s.y + 1}};
    case Role::low_unprimed:
        if (s.on_axis())
            return {Direction::E, {s.x + 1, s.y}};
        return {Direction::S, {s.x, s.y - 1}};
    case Role::high_primed:
        if (s.on_axis())
            return {Direction::N, {s.x, s.y + 1}};
        return {Direction::W, {s.x - 1, s.y}};
    }
    throw std::logic_error("unknown walk role");
}

Role role_of(Letter l, int i)
{
    if (l.value == i)
        return l.primed ? Role::low_primed : Role::low_unprimed;
    return l.primed ? Role::high_primed : Role::high_unprimed;
}

Word subword(const Word& word, int i)
{
    if (i < 1)
        throw std::invalid_argument("walk level must be at least 1");
    Word out;
    for (const Letter& l : word)
        if (l.value == i || l.value == i + 1)
            out.push_back(l);
    return out;
}

WalkTrace walk(const Word& word, int i)
{
    WalkTrace trace;
    WalkState s;
    for (const Letter& l : subword(word, i)) {
        Step st = step(s, role_of(l, i));
        s = st.state;
        trace.push_back({l, st.dir, s});
    }
    return trace;
}

WalkState walk_end(const Word& word, int i)
{
    WalkState s;
    for (const Letter& l : word)
        if (l.value == i || l.value == i + 1)
            s = step(s, role_of(l, i)).state;
    return s;
}

bool is_ballot(const Word& word)
{
    int top = 0;
    for (const Letter& l : word)
        top = std::max(top, l.value);
    for (int i = 1; i <= top; ++i)
        if (walk_end(word, i).y != 0)
            return false;
    return true;
}

} // namespace qfray
