#include "qfray/checked.hpp"
#include "qfray/expansion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace qfray {

namespace {

void require_variables(int m)
{
    if (m < 1)
        throw std::invalid_argument("variable count must be at least 1");
    if (2 * m > 120)
        throw std::invalid_argument("too many variables");
}

} // namespace

MonomialSeries monomial_series(const ShiftedSkewShape& shape, int m)
{
    require_variables(m);
    ReadingLayout layout(shape);
    const std::size_t n = layout.size();
    if (n > 120)
        throw std::invalid_argument("shape too large for the series kernel");

    // frontier[p]: earlier cells whose codes are still needed at step p or later
    std::vector<int> last_use(n, -1);
    for (std::size_t q = 0; q < n; ++q) {
        if (layout.left[q] >= 0)
            last_use[static_cast<std::size_t>(layout.left[q])] = static_cast<int>(q);
        if (layout.below[q] >= 0)
            last_use[static_cast<std::size_t>(layout.below[q])] = static_cast<int>(q);
    }
    std::vector<std::vector<std::size_t>> frontier(n + 1);
    for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t j = 0; j < p; ++j)
            if (last_use[j] >= static_cast<int>(p))
                frontier[p].push_back(j);
    auto slot_of = [&](std::size_t p, int cell) {
        if (cell < 0)
            return -1;
        auto& f = frontier[p];
        auto it = std::find(f.begin(), f.end(), static_cast<std::size_t>(cell));
        if (it == f.end())
            throw std::logic_error("series kernel lost a needed cell");
        return static_cast<int>(it - f.begin());
    };

    // key: frontier codes followed by the m content counts, one byte each
    std::unordered_map<std::string, std::int64_t> states;
    states.emplace(std::string(static_cast<std::size_t>(m), '\0'), 1);
    const int max_code = 2 * m;
    for (std::size_t p = 0; p < n; ++p) {
        const int left_slot = slot_of(p, layout.left[p]);
        const int below_slot = slot_of(p, layout.below[p]);
        const auto& out = frontier[p + 1];
        std::vector<int> source(out.size()); // slot in frontier[p], or -1 for the new cell
        for (std::size_t k = 0; k < out.size(); ++k)
            source[k] = out[k] == p ? -1 : slot_of(p, static_cast<int>(out[k]));

        std::unordered_map<std::string, std::int64_t> next;
        next.reserve(states.size() * 2);
        std::string key(out.size() + static_cast<std::size_t>(m), '\0');
        for (const auto& [state, count] : states) {
            int lo = 1, hi = max_code;
            if (left_slot >= 0) {
                int c = state[static_cast<std::size_t>(left_slot)];
                lo = c % 2 == 1 ? c + 1 : c;
            }
            if (below_slot >= 0) {
                int c = state[static_cast<std::size_t>(below_slot)];
                hi = std::min(hi, c % 2 == 1 ? c : c - 1);
            }
            for (int code = lo; code <= hi; ++code) {
                for (std::size_t k = 0; k < out.size(); ++k)
                    key[k] = source[k] < 0 ? static_cast<char>(code) : state[static_cast<std::size_t>(source[k])];
                std::copy(state.end() - m, state.end(), key.begin() + static_cast<long>(out.size()));
                ++key[out.size() + static_cast<std::size_t>((code + 1) / 2 - 1)];
                auto& slot = next[key];
                slot = checked_add(slot, count);
            }
        }
        states = std::move(next);
    }

    MonomialSeries series(m);
    MonomialSeries::Exponents e(static_cast<std::size_t>(m));
    for (const auto& [state, count] : states) {
        for (int i = 0; i < m; ++i)
            e[static_cast<std::size_t>(i)] = static_cast<unsigned char>(state[state.size() - static_cast<std::size_t>(m) + static_cast<std::size_t>(i)]);
        series.add(e, count);
    }
    return series;
}

MonomialSeries monomial_series_reference(const ShiftedSkewShape& shape, int m)
{
    require_variables(m);
    MonomialSeries series(m);
    if (shape.empty()) {
        series.add(MonomialSeries::Exponents(static_cast<std::size_t>(m), 0), 1);
        return series;
    }
    MonomialSeries::Exponents e(static_cast<std::size_t>(m));
    enumerate_shssyt(shape, m, [&](const ShiftedTableau& t) {
        std::fill(e.begin(), e.end(), 0);
        for (const Letter& l : t.entries())
            ++e[static_cast<std::size_t>(l.value - 1)];
        series.add(e, 1);
        return true;
    });
    return series;
}

} // namespace qfray
