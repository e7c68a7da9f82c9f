#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qfray {

/// Strictly decreasing sequence of positive integers. The empty partition is allowed.
class StrictPartition {
public:
    StrictPartition() = default;
    /// Throws std::invalid_argument unless `parts` is strictly decreasing and positive.
    explicit StrictPartition(std::vector<int> parts);
    StrictPartition(std::initializer_list<int> parts) : StrictPartition(std::vector<int>(parts)) {}

    std::span<const int> parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    /// Part at 0-based index i, or 0 past the end.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Space-separated parts, e.g. "6 5 2 1"; empty string for the empty partition.
    std::string str() const;

    /// Lexicographic on the parts; descending order of this relation is the
    /// canonical term order for expansions.
    auto operator<=>(const StrictPartition&) const = default;

private:
    std::vector<int> parts_;
};

/// True iff every part sequence is nonnegative and strictly decreasing while positive.
bool is_strict(std::span<const int> parts);

/// mu contained in lambda, part by part.
bool contains(const StrictPartition& lambda, const StrictPartition& mu);

/// All strict partitions of n in descending lexicographic order.
std::vector<StrictPartition> strict_partitions(int n);

/// Parses "a b c" or "a,b,c". Empty text yields the empty partition.
StrictPartition parse_partition(std::string_view text);

} // namespace qfray
