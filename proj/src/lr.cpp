#include "qfray/checked.hpp"
#include "qfray/expansion.hpp"
#include "qfray/walk.hpp"

#include <stdexcept>

namespace qfray {

namespace {

template <class Sink>
struct BallotSearch {
    const ReadingLayout& layout;
    LrOptions opts;
    Sink& sink;
    int values;
    std::vector<int> codes;
    std::vector<int> remaining; // by value
    std::vector<char> seen;     // by value
    std::vector<WalkState> walks; // walks[i] is the i/(i+1)-walk
    bool stopped = false;

    BallotSearch(const ReadingLayout& l, const StrictPartition& nu, LrOptions o, Sink& s)
        : layout(l), opts(o), sink(s), values(nu.length()), codes(l.size(), 0),
          remaining(static_cast<std::size_t>(values + 1), 0), seen(static_cast<std::size_t>(values + 2), 0),
          walks(static_cast<std::size_t>(values + 1))
    {
        for (int v = 1; v <= values; ++v)
            remaining[static_cast<std::size_t>(v)] = nu[static_cast<std::size_t>(v - 1)];
    }

    bool walk_ok(int i) const
    {
        if (i < 1 || i >= values)
            return true;
        // only a down step from an unprimed i lowers y
        return prefix_can_return(walks[static_cast<std::size_t>(i)], remaining[static_cast<std::size_t>(i)]);
    }

    void run(std::size_t p)
    {
        if (stopped)
            return;
        if (p == layout.size()) {
            for (int i = 1; i < values; ++i)
                if (walks[static_cast<std::size_t>(i)].y != 0)
                    return;
            if (!sink(codes))
                stopped = true;
            return;
        }
        auto [lo, hi] = layout.allowed_codes(p, codes, 2 * values);
        if (opts.prune && layout.top_row[p])
            hi = std::min(hi, 2);
        for (int code = lo; code <= hi && !stopped; ++code) {
            int v = (code + 1) / 2;
            auto vi = static_cast<std::size_t>(v);
            if (remaining[vi] == 0)
                continue;
            bool primed = code % 2 == 1;
            bool first = !seen[vi];
            if (first && primed)
                continue;
            Letter letter{v, primed};
            WalkState save_low = walks[vi];
            WalkState save_high = walks[vi - 1];
            if (v < values)
                walks[vi] = step(walks[vi], role_of(letter, v)).state;
            if (v > 1)
                walks[vi - 1] = step(walks[vi - 1], role_of(letter, v - 1)).state;
            codes[p] = code;
            --remaining[vi];
            seen[vi] = 1;
            if (!opts.prune || (walk_ok(v) && walk_ok(v - 1)))
                run(p + 1);
            ++remaining[vi];
            if (first)
                seen[vi] = 0;
            walks[vi] = save_low;
            walks[vi - 1] = save_high;
        }
    }
};

void check_sizes(const ShiftedSkewShape& shape, const StrictPartition& nu)
{
    if (shape.size() != nu.size())
        throw std::invalid_argument("content " + nu.str() + " does not match the size of " + shape.str());
}

} // namespace

std::int64_t count_ballot_tableaux(const ShiftedSkewShape& shape, const StrictPartition& nu, LrOptions opts)
{
    check_sizes(shape, nu);
    ReadingLayout layout(shape);
    std::int64_t count = 0;
    auto sink = [&](const std::vector<int>&) {
        count = checked_add(count, 1);
        return true;
    };
    BallotSearch<decltype(sink)> search(layout, nu, opts, sink);
    search.run(0);
    return count;
}

void enumerate_ballot_tableaux(const ShiftedSkewShape& shape, const StrictPartition& nu, LrOptions opts,
                               const TableauVisitor& visit)
{
    check_sizes(shape, nu);
    ReadingLayout layout(shape);
    ShiftedTableau tableau(shape, std::vector<Letter>(layout.size()));
    auto sink = [&](const std::vector<int>& codes) {
        auto& entries = tableau.mutable_entries();
        for (std::size_t i = 0; i < codes.size(); ++i)
            entries[static_cast<std::size_t>(layout.shape_index[i])] = Letter::from_code(codes[i]);
        return visit(tableau);
    };
    BallotSearch<decltype(sink)> search(layout, nu, opts, sink);
    search.run(0);
}

std::int64_t lr_coefficient(const StrictPartition& lambda, const StrictPartition& mu, const StrictPartition& nu,
                            LrOptions opts)
{
    if (!contains(lambda, mu))
        throw std::invalid_argument(mu.str() + " is not contained in " + lambda.str());
    if (mu.size() + nu.size() != lambda.size())
        throw std::invalid_argument("sizes of lambda, mu, nu do not match");
    return count_ballot_tableaux(ShiftedSkewShape::from_partitions(lambda, mu), nu, opts);
}

} // namespace qfray
