#include "qfray/checked.hpp"
#include "qfray/tableau.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace qfray {

namespace {

bool touches(Cell a, Cell b)
{
    return a != b && std::abs(a.row - b.row) <= 1 && std::abs(a.col - b.col) <= 1;
}

} // namespace

GreedyResult greedy_filling(const ShiftedSkewShape& shape)
{
    if (shape.empty())
        throw std::invalid_argument("greedy filling of the empty shape");
    auto cells = shape.cells();
    std::vector<Cell> removed;
    for (int i = 1; i <= shape.inner().length(); ++i)
        for (int j = i; j < i + shape.inner()[static_cast<std::size_t>(i - 1)]; ++j)
            removed.push_back({i, j});

    GreedyResult out;
    out.labels.assign(cells.size(), 0);
    std::vector<std::size_t> frontier;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        bool first = cells[i].row == 1 ||
                     std::any_of(removed.begin(), removed.end(), [&](Cell m) { return touches(cells[i], m); });
        if (first) {
            out.labels[i] = 1;
            frontier.push_back(i);
        }
    }

    std::size_t labeled = frontier.size();
    int layer = 1;
    while (true) {
        std::vector<Cell> members;
        for (std::size_t i : frontier)
            members.push_back(cells[i]);
        // split the layer into edge-connected pieces
        std::vector<char> used(members.size(), 0);
        for (std::size_t s = 0; s < members.size(); ++s) {
            if (used[s])
                continue;
            std::vector<Cell> piece{members[s]};
            used[s] = 1;
            for (std::size_t k = 0; k < piece.size(); ++k)
                for (std::size_t t = 0; t < members.size(); ++t)
                    if (!used[t] && std::abs(piece[k].row - members[t].row) + std::abs(piece[k].col - members[t].col) == 1) {
                        used[t] = 1;
                        piece.push_back(members[t]);
                    }
            if (!cells_are_ribbon(piece))
                throw std::logic_error("greedy layer " + std::to_string(layer) + " of " + shape.str() +
                                       " has a component that is not a ribbon");
            ++out.ribbon_count;
        }
        out.content.push_back(static_cast<int>(members.size()));
        if (labeled == cells.size())
            break;

        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (out.labels[i] != 0)
                continue;
            if (std::any_of(frontier.begin(), frontier.end(), [&](std::size_t f) { return touches(cells[i], cells[f]); }))
                next.push_back(i);
        }
        if (next.empty())
            throw std::logic_error("greedy filling of " + shape.str() + " left cells unreachable");
        ++layer;
        for (std::size_t i : next)
            out.labels[i] = layer;
        labeled += next.size();
        frontier = std::move(next);
    }
    return out;
}

std::int64_t GreedyResult::coefficient() const { return checked_pow2(ribbon_count); }

std::string GreedyResult::monomial_str() const
{
    std::string out = std::to_string(coefficient());
    for (std::size_t i = 0; i < content.size(); ++i) {
        out += " x" + std::to_string(i + 1);
        if (content[i] != 1)
            out += "^" + std::to_string(content[i]);
    }
    return out;
}

} // namespace qfray
