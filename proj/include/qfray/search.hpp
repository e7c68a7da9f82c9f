#pragma once

#include "qfray/expansion.hpp"
#include "qfray/shape.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qfray {

inline constexpr std::string_view kSchema = "qfray.v1";

/// SHA-256 of text, lowercase hex.
std::string sha256_hex(std::string_view text);

/// One line of campaign output: a shape with its full expansion.
struct ResultRecord {
    int size = 0;
    std::string shape;
    std::string cls;
    std::optional<int> turns; ///< frayed ribbons only
    std::vector<std::pair<std::string, std::int64_t>> expansion;
    std::string fp; ///< sha256_hex of the expansion text

    static ResultRecord from_shape(const ShiftedSkewShape& shape, const QExpansion& exp);
    QExpansion to_expansion() const;

    std::string to_json_line() const;
    /// Throws std::invalid_argument on malformed input or a schema mismatch.
    static ResultRecord from_json_line(std::string_view line);

    bool operator==(const ResultRecord&) const = default;
};

enum class ScanClass { frayed, near_ribbon };

std::string_view to_string(ScanClass c);
std::optional<ScanClass> scan_class_from_string(std::string_view text);

struct SearchOptions {
    int threads = 0; ///< 0: OpenMP default
    LrOptions lr;
};

struct Group {
    std::string fp;
    std::vector<ResultRecord> members; ///< sorted by shape string
};

struct VerificationReport {
    int size = 0;
    ScanClass scanned = ScanClass::frayed;
    int shape_count = 0;
    int group_count = 0;
    std::vector<Group> violations;
    double seconds = 0.0;
    bool pruning = true;
};

/// Shapes scanned by a class: frayed ribbons, or every connected shape.
std::vector<ShiftedSkewShape> scan_shapes(ScanClass c, int n);

/// Expansion of every shape, computed in parallel one shape per task, sorted by shape string.
std::vector<ResultRecord> compute_records(const std::vector<ShiftedSkewShape>& shapes, const SearchOptions& opts);

/// Records grouped by fingerprint; groups ordered by their first member.
std::vector<Group> group_records(const std::vector<ResultRecord>& records);

/// Applies the property of the class to grouped records.
/// frayed: every group is {D} or {D, antipodal(D)}.
/// near_ribbon: a group containing a near-ribbon contains only near-ribbons, and
/// all members share one greedy monomial.
VerificationReport report_from_records(ScanClass c, int n, const std::vector<ResultRecord>& records);

VerificationReport verify_frayed_distinctness(int n, const SearchOptions& opts = {});
VerificationReport verify_near_ribbon_closure(int n, const SearchOptions& opts = {});

enum class PairFilter { connected, two_staircase, near_ribbon, frayed };

std::optional<PairFilter> pair_filter_from_string(std::string_view text);

/// Groups of at least two equal-Q shapes that are not all antipodal images of one shape.
std::vector<Group> find_equal_pairs(int n, PairFilter filter, const SearchOptions& opts = {});

struct CampaignOptions {
    int min_size = 4;
    int max_size = 9;
    ScanClass scanned = ScanClass::frayed;
    std::string out_path;
    bool resume = false;
    SearchOptions search;
};

struct CampaignSummary {
    std::vector<VerificationReport> reports;
    std::vector<int> skipped_sizes;
    int violation_count() const;
};

/// Thrown for any failure reading or writing the campaign file.
class StorageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Appends records size by size; each finished size ends with a sentinel line and
/// an fsync. With resume, sizes already closed by a sentinel are read back instead
/// of recomputed, and lines of an unfinished size are dropped.
CampaignSummary run_campaign(const CampaignOptions& opts);

} // namespace qfray
