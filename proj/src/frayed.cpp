#include "qfray/shape.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qfray {

namespace {

bool is_staircase(Cell c) { return c.row == c.col; }

void require_frayed(const ShiftedSkewShape& shape, const char* op)
{
    if (shape.empty() || classify(shape).kind != ShapeKind::frayed_ribbon)
        throw std::invalid_argument(std::string(op) + ": " + shape.str() + " is not a frayed ribbon");
}

std::vector<Cell> decode_right_then_up(const std::vector<int>& rows)
{
    int r = static_cast<int>(rows.size());
    std::vector<Cell> cells;
    int start = r;
    int row = r;
    for (int len : rows) {
        for (int j = 0; j < len; ++j)
            cells.push_back({row, start + j});
        start = start + len - 1;
        --row;
    }
    cells.push_back({r + 1, r + 1});
    return cells;
}

// RightThenUp code read directly off the cells, if the shape has that layout.
std::optional<std::vector<int>> read_right_then_up(const ShiftedSkewShape& shape)
{
    auto stairs = staircase_cells(shape);
    if (stairs.size() != 2)
        return std::nullopt;
    int s = stairs[0].row;
    if (stairs[1].row != s + 1 || shape.row_count() != s + 1)
        return std::nullopt;
    if (shape.row_start(s + 1) != s + 1 || shape.row_end(s + 1) != s + 1)
        return std::nullopt;
    std::vector<int> rows;
    for (int r = s; r >= 1; --r) {
        int len = shape.row_end(r) - shape.row_start(r) + 1;
        if (len <= 0)
            return std::nullopt;
        rows.push_back(len);
    }
    if (rows[0] < 2)
        return std::nullopt;
    if (ShiftedSkewShape::from_cells(decode_right_then_up(rows)) != shape)
        return std::nullopt;
    return rows;
}

} // namespace

int FrayedRibbonCode::size() const
{
    return 1 + std::accumulate(rows.begin(), rows.end(), 0);
}

ShiftedSkewShape from_frayed_code(const FrayedRibbonCode& code)
{
    if (code.rows.empty() || code.rows[0] < 2)
        throw std::invalid_argument("frayed ribbon code needs a bottom row of at least 2 cells");
    for (int len : code.rows)
        if (len < 1)
            throw std::invalid_argument("frayed ribbon code rows must be positive");
    auto shape = ShiftedSkewShape::from_cells(decode_right_then_up(code.rows));
    if (code.orientation == Orientation::UpThenRight)
        return antipodal(shape);
    return shape;
}

std::optional<FrayedRibbonCode> encode_frayed(const ShiftedSkewShape& shape)
{
    if (shape.empty() || classify(shape).kind != ShapeKind::frayed_ribbon)
        return std::nullopt;
    if (auto rows = read_right_then_up(shape))
        return FrayedRibbonCode{Orientation::RightThenUp, *rows};
    if (auto rows = read_right_then_up(antipodal(shape)))
        return FrayedRibbonCode{Orientation::UpThenRight, *rows};
    return std::nullopt;
}

ShiftedSkewShape normalize_frayed(const ShiftedSkewShape& shape)
{
    require_frayed(shape, "normalize_frayed");
    for (const auto& cand : {shape, antipodal(shape)}) {
        auto rows = read_right_then_up(cand);
        if (rows && (*rows)[0] >= 3)
            return cand;
    }
    throw std::invalid_argument("normalize_frayed: " + shape.str() + " has no orientation with a long bottom row");
}

TurnReport count_turns(const ShiftedSkewShape& shape)
{
    require_frayed(shape, "count_turns");
    TurnReport report;
    for (const Cell& c : shape.cells()) {
        Cell up{c.row - 1, c.col}, left{c.row, c.col - 1};
        if (shape.contains(up) && shape.contains(left) && !is_staircase(c) && !is_staircase(up) &&
            !is_staircase(left)) {
            ++report.outer_turns;
            report.outer_corners.push_back(c);
        }
        Cell right{c.row, c.col + 1}, down{c.row + 1, c.col};
        if (shape.contains(right) && shape.contains(down) && !is_staircase(c) && !is_staircase(right) &&
            !is_staircase(down)) {
            ++report.inner_turns;
            report.inner_corners.push_back(c);
        }
    }
    return report;
}

int count_turn_squares_alt(const ShiftedSkewShape& shape)
{
    require_frayed(shape, "count_turn_squares_alt");
    auto stairs = staircase_cells(shape);
    std::vector<Cell> ribbon;
    for (const Cell& drop : stairs) {
        ribbon.clear();
        for (const Cell& c : shape.cells())
            if (c != drop)
                ribbon.push_back(c);
        if (cells_are_ribbon(ribbon))
            break;
        ribbon.clear();
    }
    if (ribbon.empty())
        throw std::logic_error("frayed ribbon without a removable staircase cell");
    std::map<int, int> row_len, col_len;
    for (const Cell& c : ribbon) {
        ++row_len[c.row];
        ++col_len[c.col];
    }
    Cell shared{stairs[0].row, stairs[0].col + 1};
    int count = 0;
    for (const Cell& c : ribbon)
        if (row_len[c.row] >= 2 && col_len[c.col] >= 2 && c != shared)
            ++count;
    return count;
}

int one_turn_column_height(const ShiftedSkewShape& shape)
{
    auto norm = normalize_frayed(shape);
    auto turns = count_turns(norm);
    if (turns.total() == 0)
        return 0;
    if (turns.total() != 1 || turns.outer_turns != 1)
        throw std::invalid_argument("one_turn_column_height: " + shape.str() + " has " +
                                    std::to_string(turns.total()) + " turns");
    Cell corner = turns.outer_corners.front();
    int h = 0;
    for (int r = corner.row - 1; r >= 1 && norm.contains(r, corner.col); --r)
        ++h;
    return h;
}

TwoTurnParams two_turn_params(const ShiftedSkewShape& shape)
{
    auto norm = normalize_frayed(shape);
    if (count_turns(norm).total() != 2)
        throw std::invalid_argument("two_turn_params: " + shape.str() + " does not have two turns");
    auto rows = *read_right_then_up(norm);
    if (rows.size() < 2 || rows.back() < 2 ||
        !std::all_of(rows.begin() + 1, rows.end() - 1, [](int len) { return len == 1; }))
        throw std::logic_error("two-turn frayed ribbon with unexpected row profile: " + norm.str());
    TwoTurnParams p{rows.back(), static_cast<int>(rows.size()) - 2, rows.front()};
    if (p.w1 + p.h + p.w2 + 1 != shape.size())
        throw std::logic_error("two-turn parameters do not add up to the shape size");
    return p;
}

} // namespace qfray
