#include "qfray/shape.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace qfray {

namespace {

void compositions(int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = 1; part <= remaining; ++part) {
        cur.push_back(part);
        compositions(remaining - part, cur, out);
        cur.pop_back();
    }
}

struct RowBuilder {
    int n;
    bool connected_only;
    int max_col;
    std::vector<std::pair<int, int>> rows; // [first, last] per row, top row first
    std::vector<ShiftedSkewShape> out;

    void emit()
    {
        int r = static_cast<int>(rows.size());
        if (rows.back().first != r)
            return; // bottom row must start on the staircase
        if (!connected_only) {
            std::vector<char> used(static_cast<std::size_t>(max_col + 2), 0);
            int lo = max_col + 1, hi = 0;
            for (auto [a, b] : rows) {
                for (int j = a; j <= b; ++j)
                    used[static_cast<std::size_t>(j)] = 1;
                lo = std::min(lo, a);
                hi = std::max(hi, b);
            }
            for (int j = lo; j <= hi; ++j)
                if (!used[static_cast<std::size_t>(j)])
                    return;
        }
        std::vector<Cell> cells;
        for (int i = 0; i < r; ++i)
            for (int j = rows[static_cast<std::size_t>(i)].first; j <= rows[static_cast<std::size_t>(i)].second; ++j)
                cells.push_back({i + 1, j});
        out.push_back(ShiftedSkewShape::from_cells(std::move(cells)));
    }

    void extend(int remaining)
    {
        if (remaining == 0) {
            emit();
            return;
        }
        int row = static_cast<int>(rows.size()) + 1;
        if (row == 1) {
            for (int a = 1; a <= max_col; ++a)
                for (int b = a; b <= std::min(max_col, a + remaining - 1); ++b) {
                    rows.emplace_back(a, b);
                    extend(remaining - (b - a + 1));
                    rows.pop_back();
                }
            return;
        }
        auto [pa, pb] = rows.back();
        // once a row starts on the staircase, every row below does too
        int a_hi = pa == row - 1 ? row : pa;
        for (int a = row; a <= a_hi; ++a) {
            int lo = connected_only ? std::max(a, pa) : a;
            for (int b = lo; b <= std::min(pb, a + remaining - 1); ++b) {
                rows.emplace_back(a, b);
                extend(remaining - (b - a + 1));
                rows.pop_back();
            }
        }
    }
};

} // namespace

std::vector<ShiftedSkewShape> enumerate_frayed_ribbons(int n, bool one_per_antipodal_pair)
{
    std::map<std::string, ShiftedSkewShape> found;
    if (n < 4)
        return {};
    std::vector<std::vector<int>> codes;
    std::vector<int> cur;
    compositions(n - 1, cur, codes);
    for (const auto& rows : codes) {
        if (rows[0] < 2)
            continue;
        for (Orientation o : {Orientation::RightThenUp, Orientation::UpThenRight}) {
            auto shape = from_frayed_code({o, rows});
            if (one_per_antipodal_pair) {
                auto twin = antipodal(shape);
                if (twin.str() < shape.str())
                    shape = twin;
            }
            found.emplace(shape.str(), shape);
        }
    }
    std::vector<ShiftedSkewShape> out;
    out.reserve(found.size());
    for (auto& [key, shape] : found)
        out.push_back(std::move(shape));
    return out;
}

std::vector<ShiftedSkewShape> enumerate_shifted_skew_shapes(int n, bool connected_only)
{
    if (n < 1)
        return {};
    RowBuilder builder{n, connected_only, 2 * n - 1, {}, {}};
    builder.extend(n);
    std::sort(builder.out.begin(), builder.out.end(), ShapeStringLess{});
    builder.out.erase(std::unique(builder.out.begin(), builder.out.end()), builder.out.end());
    return std::move(builder.out);
}

} // namespace qfray
