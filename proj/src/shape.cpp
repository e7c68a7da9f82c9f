#include "qfray/shape.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qfray {

std::vector<Cell> shifted_cells(const StrictPartition& outer, const StrictPartition& inner)
{
    std::vector<Cell> cells;
    for (int i = 1; i <= outer.length(); ++i) {
        int first = i + inner[static_cast<std::size_t>(i - 1)];
        int last = i + outer[static_cast<std::size_t>(i - 1)] - 1;
        for (int j = first; j <= last; ++j)
            cells.push_back({i, j});
    }
    return cells;
}

ShiftedSkewShape ShiftedSkewShape::from_partitions(const StrictPartition& outer, const StrictPartition& inner)
{
    if (!qfray::contains(outer, inner))
        throw std::invalid_argument("inner partition " + inner.str() + " is not contained in " + outer.str());
    return from_cells(shifted_cells(outer, inner));
}

ShiftedSkewShape ShiftedSkewShape::from_cells(std::vector<Cell> cells)
{
    ShiftedSkewShape shape;
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    if (cells.empty())
        return shape;
    for (const Cell& c : cells)
        if (c.row < 1 || c.col < c.row)
            throw std::invalid_argument("cell lies left of the staircase");

    int lift = cells.front().row - 1;
    for (Cell& c : cells) {
        c.row -= lift;
        c.col -= lift;
    }

    int rows = cells.back().row;
    std::vector<int> first(static_cast<std::size_t>(rows + 1), 0);
    std::vector<int> last(static_cast<std::size_t>(rows + 1), -1);
    std::vector<int> count(static_cast<std::size_t>(rows + 1), 0);
    for (const Cell& c : cells) {
        auto r = static_cast<std::size_t>(c.row);
        if (count[r] == 0)
            first[r] = c.col;
        last[r] = c.col;
        ++count[r];
    }
    for (int r = 1; r <= rows; ++r) {
        auto ri = static_cast<std::size_t>(r);
        if (count[ri] > 0 && count[ri] != last[ri] - first[ri] + 1)
            throw std::invalid_argument("row " + std::to_string(r) + " is not an interval");
    }

    int slide = first[static_cast<std::size_t>(rows)] - rows;
    for (Cell& c : cells)
        c.col -= slide;
    for (int r = 1; r <= rows; ++r) {
        auto ri = static_cast<std::size_t>(r);
        if (count[ri] > 0) {
            first[ri] -= slide;
            last[ri] -= slide;
        }
    }

    std::vector<int> lambda(static_cast<std::size_t>(rows));
    std::vector<int> mu(static_cast<std::size_t>(rows));
    for (int r = rows; r >= 1; --r) {
        auto ri = static_cast<std::size_t>(r);
        auto k = ri - 1;
        if (count[ri] > 0) {
            mu[k] = first[ri] - r;
            lambda[k] = last[ri] - r + 1;
        } else {
            // smallest choice that keeps both partitions strict below this row
            lambda[k] = mu[k] = lambda[k + 1] + 1;
        }
    }
    if (!is_strict(lambda) || !is_strict(mu) || lambda.back() <= 0)
        throw std::invalid_argument("cells do not form a shifted skew shape");
    while (!mu.empty() && mu.back() == 0)
        mu.pop_back();

    shape.outer_ = StrictPartition(std::move(lambda));
    shape.inner_ = StrictPartition(std::move(mu));
    shape.cells_ = std::move(cells);
    return shape;
}

int ShiftedSkewShape::max_col() const
{
    int m = 0;
    for (const Cell& c : cells_)
        m = std::max(m, c.col);
    return m;
}

bool ShiftedSkewShape::contains(Cell c) const
{
    if (c.row < 1 || c.row > row_count())
        return false;
    return c.col >= row_start(c.row) && c.col <= row_end(c.row);
}

std::string ShiftedSkewShape::str() const
{
    if (inner_.empty())
        return outer_.str();
    return outer_.str() + "/" + inner_.str();
}

ShiftedSkewShape parse_shape(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view outer_text = text.substr(0, slash);
    std::string_view inner_text;
    if (slash != std::string_view::npos) {
        inner_text = text.substr(slash + 1);
        if (inner_text.find('/') != std::string_view::npos)
            throw std::invalid_argument("more than one '/' in shape");
    }
    StrictPartition outer = parse_partition(outer_text);
    if (outer.empty())
        throw std::invalid_argument("shape has no outer partition");
    StrictPartition inner = parse_partition(inner_text);
    return ShiftedSkewShape::from_partitions(outer, inner);
}

// --- predicates ---

namespace {

bool has_cell(std::span<const Cell> sorted, int r, int c)
{
    return std::binary_search(sorted.begin(), sorted.end(), Cell{r, c});
}

std::vector<Cell> sorted_copy(std::span<const Cell> cells)
{
    std::vector<Cell> v(cells.begin(), cells.end());
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

bool cells_connected(std::span<const Cell> cells)
{
    if (cells.empty())
        return false;
    auto sorted = sorted_copy(cells);
    std::vector<char> seen(sorted.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Cell c = sorted[stack.back()];
        stack.pop_back();
        const Cell nbrs[4] = {{c.row - 1, c.col}, {c.row + 1, c.col}, {c.row, c.col - 1}, {c.row, c.col + 1}};
        for (const Cell& n : nbrs) {
            auto it = std::lower_bound(sorted.begin(), sorted.end(), n);
            if (it == sorted.end() || *it != n)
                continue;
            auto idx = static_cast<std::size_t>(it - sorted.begin());
            if (!seen[idx]) {
                seen[idx] = 1;
                ++reached;
                stack.push_back(idx);
            }
        }
    }
    return reached == sorted.size();
}

bool cells_have_2x2(std::span<const Cell> cells)
{
    auto sorted = sorted_copy(cells);
    for (const Cell& c : sorted)
        if (has_cell(sorted, c.row, c.col + 1) && has_cell(sorted, c.row + 1, c.col) &&
            has_cell(sorted, c.row + 1, c.col + 1))
            return true;
    return false;
}

bool cells_ordinary_skew(std::span<const Cell> cells)
{
    if (cells.empty())
        return true;
    auto sorted = sorted_copy(cells);
    int prev_row = 0, prev_first = 0, prev_last = 0;
    std::size_t i = 0;
    bool first_row = true;
    while (i < sorted.size()) {
        int r = sorted[i].row;
        int lo = sorted[i].col;
        int hi = lo;
        std::size_t j = i + 1;
        while (j < sorted.size() && sorted[j].row == r) {
            if (sorted[j].col != hi + 1)
                return false;
            hi = sorted[j].col;
            ++j;
        }
        if (!first_row) {
            if (r != prev_row + 1 || lo > prev_first || hi > prev_last)
                return false;
        }
        first_row = false;
        prev_row = r;
        prev_first = lo;
        prev_last = hi;
        i = j;
    }
    return true;
}

bool cells_are_ribbon(std::span<const Cell> cells)
{
    return cells_connected(cells) && !cells_have_2x2(cells) && cells_ordinary_skew(cells);
}

namespace {

bool near_ribbon_cells(std::span<const Cell> cells)
{
    if (!cells_connected(cells) || cells_are_ribbon(cells))
        return false;
    std::vector<Cell> rest;
    rest.reserve(cells.size());
    for (std::size_t skip = 0; skip < cells.size(); ++skip) {
        rest.clear();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (i != skip)
                rest.push_back(cells[i]);
        if (cells_are_ribbon(rest))
            return true;
    }
    return false;
}

} // namespace

std::string_view to_string(ShapeKind kind)
{
    switch (kind) {
    case ShapeKind::ribbon: return "ribbon";
    case ShapeKind::near_ribbon_ordinary: return "near_ribbon_ordinary";
    case ShapeKind::frayed_ribbon: return "frayed_ribbon";
    case ShapeKind::other: return "other";
    }
    return "other";
}

std::optional<ShapeKind> shape_kind_from_string(std::string_view text)
{
    for (ShapeKind k : {ShapeKind::ribbon, ShapeKind::near_ribbon_ordinary, ShapeKind::frayed_ribbon,
                        ShapeKind::other})
        if (to_string(k) == text)
            return k;
    return std::nullopt;
}

std::vector<Cell> staircase_cells(const ShiftedSkewShape& shape)
{
    std::vector<Cell> out;
    for (const Cell& c : shape.cells())
        if (c.col == c.row)
            out.push_back(c);
    return out;
}

ShapeClass classify(const ShiftedSkewShape& shape)
{
    if (shape.empty())
        throw std::invalid_argument("cannot classify the empty shape");
    ShapeClass out;
    auto cells = shape.cells();
    out.connected = cells_connected(cells);
    out.staircase_count = static_cast<int>(staircase_cells(shape).size());
    if (cells_are_ribbon(cells))
        out.kind = ShapeKind::ribbon;
    else if (near_ribbon_cells(cells))
        out.kind = out.staircase_count >= 2 ? ShapeKind::frayed_ribbon : ShapeKind::near_ribbon_ordinary;
    else
        out.kind = ShapeKind::other;
    return out;
}

bool is_near_ribbon(const ShiftedSkewShape& shape)
{
    return !shape.empty() && near_ribbon_cells(shape.cells());
}

bool is_frayed_ribbon(const ShiftedSkewShape& shape)
{
    return !shape.empty() && classify(shape).kind == ShapeKind::frayed_ribbon;
}

ShiftedSkewShape antipodal(const ShiftedSkewShape& shape)
{
    if (shape.empty())
        return shape;
    int n = shape.max_col();
    std::vector<Cell> out;
    out.reserve(shape.cells().size());
    for (const Cell& c : shape.cells())
        out.push_back({n + 1 - c.col, n + 1 - c.row});
    return ShiftedSkewShape::from_cells(std::move(out));
}

ShiftedSkewShape shift_top_rows(const ShiftedSkewShape& shape, int k)
{
    if (k < 0 || k > shape.row_count())
        throw std::invalid_argument("row count out of range for shift_top_rows");
    std::vector<int> lambda(shape.outer().parts().begin(), shape.outer().parts().end());
    std::vector<int> mu(static_cast<std::size_t>(shape.row_count()), 0);
    for (int i = 0; i < shape.inner().length(); ++i)
        mu[static_cast<std::size_t>(i)] = shape.inner()[static_cast<std::size_t>(i)];
    for (int i = 0; i < k; ++i) {
        ++lambda[static_cast<std::size_t>(i)];
        ++mu[static_cast<std::size_t>(i)];
    }
    if (!is_strict(lambda) || !is_strict(mu))
        throw std::invalid_argument("shifting the top " + std::to_string(k) + " rows of " + shape.str() +
                                    " is not a shifted skew shape");
    while (!mu.empty() && mu.back() == 0)
        mu.pop_back();
    return ShiftedSkewShape::from_partitions(StrictPartition(lambda), StrictPartition(mu));
}

ShiftedSkewShape append_detached_row(const ShiftedSkewShape& shape, int r)
{
    if (r < 1)
        throw std::invalid_argument("detached row length must be positive");
    std::vector<Cell> out;
    int right = 1;
    for (const Cell& c : shape.cells()) {
        out.push_back({c.row + 1, c.col + 1});
        right = std::max(right, c.col + 1);
    }
    for (int j = 1; j <= r; ++j)
        out.push_back({1, right + j});
    return ShiftedSkewShape::from_cells(std::move(out));
}

} // namespace qfray
