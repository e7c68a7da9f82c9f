#include "qfray/search.hpp"

#include "qfray/tableau.hpp"

#include <json.hpp>
#include <openssl/evp.h>
#include <omp.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

namespace qfray {

using ordered_json = nlohmann::ordered_json;

std::string sha256_hex(std::string_view text)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

ResultRecord ResultRecord::from_shape(const ShiftedSkewShape& shape, const QExpansion& exp)
{
    ResultRecord r;
    r.size = shape.size();
    r.shape = shape.str();
    auto kind = classify(shape).kind;
    r.cls = std::string(to_string(kind));
    if (kind == ShapeKind::frayed_ribbon)
        r.turns = count_turns(shape).total();
    for (const auto& [nu, c] : exp.terms())
        r.expansion.emplace_back(nu.str(), c);
    r.fp = sha256_hex(exp.str());
    return r;
}

QExpansion ResultRecord::to_expansion() const
{
    QExpansion exp;
    for (const auto& [nu, c] : expansion)
        exp.add(parse_partition(nu), c);
    return exp;
}

namespace {

ordered_json expansion_json(const std::vector<std::pair<std::string, std::int64_t>>& expansion)
{
    ordered_json arr = ordered_json::array();
    for (const auto& [nu, c] : expansion)
        arr.push_back(ordered_json::array({nu, c}));
    return arr;
}

ordered_json record_json(const ResultRecord& r)
{
    ordered_json j;
    j["schema"] = kSchema;
    j["size"] = r.size;
    j["shape"] = r.shape;
    j["class"] = r.cls;
    if (r.turns)
        j["turns"] = *r.turns;
    j["expansion"] = expansion_json(r.expansion);
    j["fp"] = r.fp;
    return j;
}

ResultRecord record_from_json(const ordered_json& j)
{
    if (!j.is_object() || j.value("schema", "") != kSchema)
        throw std::invalid_argument("record has a missing or unknown schema");
    ResultRecord r;
    r.size = j.at("size").get<int>();
    r.shape = j.at("shape").get<std::string>();
    r.cls = j.at("class").get<std::string>();
    if (j.contains("turns"))
        r.turns = j.at("turns").get<int>();
    for (const auto& term : j.at("expansion")) {
        if (!term.is_array() || term.size() != 2)
            throw std::invalid_argument("malformed expansion term");
        r.expansion.emplace_back(term[0].get<std::string>(), term[1].get<std::int64_t>());
    }
    r.fp = j.at("fp").get<std::string>();
    return r;
}

} // namespace

std::string ResultRecord::to_json_line() const { return record_json(*this).dump(); }

ResultRecord ResultRecord::from_json_line(std::string_view line)
{
    try {
        return record_from_json(ordered_json::parse(line));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed record: ") + e.what());
    }
}

std::string_view to_string(ScanClass c)
{
    return c == ScanClass::frayed ? "frayed" : "near-ribbon";
}

std::optional<ScanClass> scan_class_from_string(std::string_view text)
{
    if (text == "frayed")
        return ScanClass::frayed;
    if (text == "near-ribbon")
        return ScanClass::near_ribbon;
    return std::nullopt;
}

std::optional<PairFilter> pair_filter_from_string(std::string_view text)
{
    if (text == "connected")
        return PairFilter::connected;
    if (text == "two-staircase")
        return PairFilter::two_staircase;
    if (text == "near-ribbon")
        return PairFilter::near_ribbon;
    if (text == "frayed")
        return PairFilter::frayed;
    return std::nullopt;
}

std::vector<ShiftedSkewShape> scan_shapes(ScanClass c, int n)
{
    if (c == ScanClass::frayed)
        return enumerate_frayed_ribbons(n);
    return enumerate_shifted_skew_shapes(n, true);
}

std::vector<ResultRecord> compute_records(const std::vector<ShiftedSkewShape>& shapes, const SearchOptions& opts)
{
    std::vector<ResultRecord> records(shapes.size());
    std::exception_ptr error;
    const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
    const auto count = static_cast<long>(shapes.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < count; ++i) {
        try {
            const auto& shape = shapes[static_cast<std::size_t>(i)];
            records[static_cast<std::size_t>(i)] = ResultRecord::from_shape(shape, q_expansion_serial(shape, opts.lr));
        } catch (...) {
#pragma omp critical(qfray_search_error)
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
    std::sort(records.begin(), records.end(),
              [](const ResultRecord& a, const ResultRecord& b) { return a.shape < b.shape; });
    return records;
}

std::vector<Group> group_records(const std::vector<ResultRecord>& records)
{
    std::map<std::string, Group> by_fp;
    for (const auto& r : records) {
        auto& g = by_fp[r.fp];
        g.fp = r.fp;
        g.members.push_back(r);
    }
    std::vector<Group> groups;
    for (auto& [fp, g] : by_fp) {
        std::sort(g.members.begin(), g.members.end(),
                  [](const ResultRecord& a, const ResultRecord& b) { return a.shape < b.shape; });
        groups.push_back(std::move(g));
    }
    std::sort(groups.begin(), groups.end(),
              [](const Group& a, const Group& b) { return a.members.front().shape < b.members.front().shape; });
    return groups;
}

namespace {

// Members are all one shape and its antipodal image.
bool antipodal_class(const Group& g)
{
    auto first = parse_shape(g.members.front().shape);
    auto twin = antipodal(first).str();
    for (const auto& m : g.members)
        if (m.shape != g.members.front().shape && m.shape != twin)
            return false;
    return g.members.size() <= 2;
}

} // namespace

VerificationReport report_from_records(ScanClass c, int n, const std::vector<ResultRecord>& records)
{
    VerificationReport report;
    report.size = n;
    report.scanned = c;
    report.shape_count = static_cast<int>(records.size());
    auto groups = group_records(records);
    report.group_count = static_cast<int>(groups.size());
    for (auto& g : groups) {
        bool bad = false;
        if (c == ScanClass::frayed) {
            bad = !antipodal_class(g);
        } else {
            std::size_t near = 0;
            std::set<std::string> monomials;
            for (const auto& m : g.members) {
                auto shape = parse_shape(m.shape);
                if (is_near_ribbon(shape))
                    ++near;
                monomials.insert(greedy_filling(shape).monomial_str());
            }
            bad = (near > 0 && near < g.members.size()) || monomials.size() > 1;
        }
        if (bad)
            report.violations.push_back(std::move(g));
    }
    return report;
}

namespace {

VerificationReport timed_verify(ScanClass c, int n, const SearchOptions& opts)
{
    auto start = std::chrono::steady_clock::now();
    auto report = report_from_records(c, n, compute_records(scan_shapes(c, n), opts));
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.pruning = opts.lr.prune;
    return report;
}

} // namespace

VerificationReport verify_frayed_distinctness(int n, const SearchOptions& opts)
{
    if (n < 4)
        throw std::invalid_argument("frayed ribbons need size at least 4");
    return timed_verify(ScanClass::frayed, n, opts);
}

VerificationReport verify_near_ribbon_closure(int n, const SearchOptions& opts)
{
    if (n < 1)
        throw std::invalid_argument("size must be positive");
    return timed_verify(ScanClass::near_ribbon, n, opts);
}

std::vector<Group> find_equal_pairs(int n, PairFilter filter, const SearchOptions& opts)
{
    std::vector<ShiftedSkewShape> shapes;
    auto pool = filter == PairFilter::frayed ? enumerate_frayed_ribbons(n) : enumerate_shifted_skew_shapes(n, true);
    for (auto& s : pool) {
        bool keep = true;
        if (filter == PairFilter::two_staircase)
            keep = staircase_cells(s).size() >= 2;
        else if (filter == PairFilter::near_ribbon)
            keep = is_near_ribbon(s);
        if (keep)
            shapes.push_back(std::move(s));
    }
    std::vector<Group> out;
    for (auto& g : group_records(compute_records(shapes, opts)))
        if (g.members.size() >= 2 && !antipodal_class(g))
            out.push_back(std::move(g));
    return out;
}

int CampaignSummary::violation_count() const
{
    int total = 0;
    for (const auto& r : reports)
        total += static_cast<int>(r.violations.size());
    return total;
}

namespace {

std::string sentinel_line(int size)
{
    ordered_json j;
    j["schema"] = kSchema;
    j["size"] = size;
    j["complete"] = true;
    return j.dump();
}

std::string violation_line(int size, const Group& g)
{
    ordered_json j;
    j["schema"] = kSchema;
    j["size"] = size;
    j["violation"] = true;
    j["fp"] = g.fp;
    ordered_json members = ordered_json::array();
    for (const auto& m : g.members)
        members.push_back(record_json(m));
    j["members"] = std::move(members);
    return j.dump();
}

struct ExistingFile {
    std::map<int, std::vector<std::string>> lines;   // by size, complete sizes only
    std::map<int, std::vector<ResultRecord>> records; // by size, complete sizes only
};

ExistingFile read_existing(const std::string& path)
{
    ExistingFile out;
    std::ifstream in(path);
    if (!in)
        return out;
    std::map<int, std::vector<std::string>> pending;
    std::map<int, std::vector<ResultRecord>> pending_records;
    std::set<int> complete;
    std::string line;
    bool torn = false;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (torn)
            throw StorageError("unparseable line before the end of " + path);
        ordered_json j;
        try {
            j = ordered_json::parse(line);
        } catch (const nlohmann::json::exception&) {
            torn = true; // only tolerated as the last line of an interrupted write
            continue;
        }
        if (!j.is_object() || j.value("schema", "") != kSchema || !j.contains("size"))
            throw StorageError("unrecognized line in " + path);
        int size = j.at("size").get<int>();
        if (j.value("complete", false)) {
            complete.insert(size);
        } else if (!j.value("violation", false)) {
            pending_records[size].push_back(record_from_json(j));
        }
        pending[size].push_back(line);
    }
    if (in.bad())
        throw StorageError("failed reading " + path);
    for (int size : complete) {
        out.lines[size] = std::move(pending[size]);
        out.records[size] = std::move(pending_records[size]);
    }
    return out;
}

class Writer {
public:
    Writer(const std::string& path, const char* mode) : path_(path), file_(std::fopen(path.c_str(), mode))
    {
        if (!file_)
            throw StorageError("cannot open " + path + " for writing");
    }
    ~Writer()
    {
        if (file_)
            std::fclose(file_);
    }
    Writer(const Writer&) = delete;
    Writer& operator=(const Writer&) = delete;

    void line(const std::string& text)
    {
        if (std::fputs(text.c_str(), file_) < 0 || std::fputc('\n', file_) == EOF)
            throw StorageError("write failed on " + path_);
    }

    void sync()
    {
        if (std::fflush(file_) != 0 || ::fsync(fileno(file_)) != 0)
            throw StorageError("fsync failed on " + path_);
    }

    void close()
    {
        sync();
        if (std::fclose(file_) != 0) {
            file_ = nullptr;
            throw StorageError("close failed on " + path_);
        }
        file_ = nullptr;
    }

private:
    std::string path_;
    std::FILE* file_;
};

} // namespace

CampaignSummary run_campaign(const CampaignOptions& opts)
{
    if (opts.out_path.empty())
        throw StorageError("campaign needs an output path");
    if (opts.min_size > opts.max_size)
        throw std::invalid_argument("empty size range");

    ExistingFile existing;
    if (opts.resume) {
        existing = read_existing(opts.out_path);
        // rewrite without the lines of any unfinished size
        std::string tmp = opts.out_path + ".tmp";
        {
            Writer w(tmp, "w");
            for (const auto& [size, lines] : existing.lines)
                for (const auto& l : lines)
                    w.line(l);
            w.close();
        }
        std::error_code ec;
        std::filesystem::rename(tmp, opts.out_path, ec);
        if (ec)
            throw StorageError("cannot replace " + opts.out_path + ": " + ec.message());
    }

    Writer out(opts.out_path, opts.resume ? "a" : "w");
    CampaignSummary summary;
    for (int n = opts.min_size; n <= opts.max_size; ++n) {
        if (auto it = existing.records.find(n); it != existing.records.end()) {
            summary.reports.push_back(report_from_records(opts.scanned, n, it->second));
            summary.skipped_sizes.push_back(n);
            continue;
        }
        auto start = std::chrono::steady_clock::now();
        auto records = compute_records(scan_shapes(opts.scanned, n), opts.search);
        auto report = report_from_records(opts.scanned, n, records);
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.pruning = opts.search.lr.prune;
        for (const auto& r : records)
            out.line(r.to_json_line());
        for (const auto& g : report.violations)
            out.line(violation_line(n, g));
        out.line(sentinel_line(n));
        out.sync();
        summary.reports.push_back(std::move(report));
    }
    out.close();
    return summary;
}

} // namespace qfray
