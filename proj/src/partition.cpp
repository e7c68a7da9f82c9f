#include "qfray/partition.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace qfray {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] >= parts_[i - 1])
            throw std::invalid_argument("partition is not strictly decreasing");
    }
}

int StrictPartition::size() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string StrictPartition::str() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool is_strict(std::span<const int> parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            return false;
        if (i > 0 && parts[i - 1] > 0 && parts[i] >= parts[i - 1])
            return false;
        if (i > 0 && parts[i - 1] == 0 && parts[i] != 0)
            return false;
    }
    return true;
}

bool contains(const StrictPartition& lambda, const StrictPartition& mu)
{
    if (mu.length() > lambda.length())
        return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > lambda[i])
            return false;
    return true;
}

namespace {

void strict_partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                           std::vector<StrictPartition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // the parts below p can sum to at most p(p-1)/2
        if (p + p * (p - 1) / 2 < remaining)
            break;
        cur.push_back(p);
        strict_partitions_rec(remaining - p, p - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<StrictPartition> strict_partitions(int n)
{
    std::vector<StrictPartition> out;
    if (n < 0)
        return out;
    std::vector<int> cur;
    strict_partitions_rec(n, n, cur, out);
    return out;
}

StrictPartition parse_partition(std::string_view text)
{
    std::vector<int> parts;
    std::size_t i = 0;
    bool expect_value = true;
    bool saw_comma = false;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        if (c == ',') {
            if (expect_value || saw_comma)
                throw std::invalid_argument("misplaced ',' in partition");
            saw_comma = true;
            ++i;
            continue;
        }
        if (c < '0' || c > '9')
            throw std::invalid_argument("non-integer token in partition: '" + std::string(text) + "'");
        std::size_t j = i;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9')
            ++j;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
        if (ec != std::errc())
            throw std::invalid_argument("integer out of range in partition");
        parts.push_back(value);
        expect_value = false;
        saw_comma = false;
        i = j;
    }
    if (saw_comma)
        throw std::invalid_argument("trailing ',' in partition");
    return StrictPartition(std::move(parts));
}

} // namespace qfray
