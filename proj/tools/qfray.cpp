// qfray: command-line driver for shifted skew Schur Q computations.
//
// Exit codes: 0 ok, 1 property violated, 2 usage or parse error,
// 3 arithmetic overflow, 4 storage failure.

#include "qfray/checked.hpp"
#include "qfray/closedform.hpp"
#include "qfray/expansion.hpp"
#include "qfray/search.hpp"
#include "qfray/shape.hpp"
#include "qfray/tableau.hpp"
#include "qfray/walk.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace qfray;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOverflow = 3;
constexpr int kExitStorage = 4;

int default_threads()
{
    if (const char* env = std::getenv("QFRAY_THREADS")) {
        try {
            int t = std::stoi(env);
            if (t > 0)
                return t;
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring invalid QFRAY_THREADS=" << env << "\n";
    }
    return 0;
}

void print_classify(const ShiftedSkewShape& shape)
{
    auto cls = classify(shape);
    std::cout << "shape: " << shape.str() << "\n";
    std::cout << "class: " << to_string(cls.kind) << "\n";
    std::cout << "connected: " << (cls.connected ? "true" : "false") << "\n";
    std::cout << "staircase: " << cls.staircase_count << "\n";
    if (cls.kind != ShapeKind::frayed_ribbon)
        return;
    auto turns = count_turns(shape);
    std::cout << "turns: " << turns.total() << " (outer " << turns.outer_turns << ", inner " << turns.inner_turns
              << ")\n";
    if (auto code = encode_frayed(shape)) {
        std::cout << "code: " << (code->orientation == Orientation::RightThenUp ? "right-then-up" : "up-then-right");
        for (int r : code->rows)
            std::cout << " " << r;
        std::cout << "\n";
    }
    if (turns.total() <= 1)
        std::cout << "column height: " << one_turn_column_height(shape) << "\n";
    if (turns.total() == 2) {
        auto p = two_turn_params(shape);
        std::cout << "w1: " << p.w1 << " h: " << p.h << " w2: " << p.w2 << "\n";
    }
}

void print_walk(const Word& word, int level)
{
    std::cout << "level " << level << ":\n";
    for (const auto& e : walk(word, level))
        std::cout << e.letter.str() << " " << to_char(e.dir) << " (" << e.state.x << "," << e.state.y << ")\n";
}

void print_report(const VerificationReport& r)
{
    std::cout << "size " << r.size << ": " << r.shape_count << " shapes, " << r.group_count << " groups, "
              << r.violations.size() << " violations\n";
    for (const auto& g : r.violations) {
        std::cout << "  violation " << g.fp.substr(0, 16) << ":";
        for (const auto& m : g.members)
            std::cout << " [" << m.shape << "]";
        std::cout << "\n";
        std::cout << "    " << g.members.front().to_expansion().str() << "\n";
    }
    std::cerr << "size " << r.size << " took " << r.seconds << " s\n";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Schur Q functions of shifted skew shapes"};
    app.require_subcommand(1);

    std::string shape_text, other_text, word_text;
    bool json = false, show_tableaux = false, no_prune = false;

    auto* classify_cmd = app.add_subcommand("classify", "Classify a shape and report its turns");
    classify_cmd->add_option("shape", shape_text, "Shape such as \"4 3 1/3\"")->required();

    auto* expand_cmd = app.add_subcommand("expand", "Expand Q of a shape in the straight-shape Q basis");
    expand_cmd->add_option("shape", shape_text)->required();
    expand_cmd->add_flag("--json", json, "Print a result record");
    expand_cmd->add_flag("--show-tableaux", show_tableaux, "Print every ballot tableau");
    expand_cmd->add_flag("--no-prune", no_prune, "Disable walk and top-row pruning");

    int variables = 2;
    auto* series_cmd = app.add_subcommand("series", "Monomial expansion in finitely many variables");
    series_cmd->add_option("shape", shape_text)->required();
    series_cmd->add_option("-m,--vars", variables, "Variable count")->check(CLI::Range(1, 60));

    int level = 0;
    auto* walk_cmd = app.add_subcommand("walk", "Lattice walks of a word and its ballot status");
    walk_cmd->add_option("word", word_text, "Letters such as \"2 1 2' 1\"")->required();
    walk_cmd->add_option("--level", level, "Only the i/(i+1) walk")->check(CLI::PositiveNumber);

    auto* greedy_cmd = app.add_subcommand("greedy", "Greedy filling and greedy monomial");
    greedy_cmd->add_option("shape", shape_text)->required();

    auto* diff_cmd = app.add_subcommand("diff", "Q_D - Q_E in the straight-shape Q basis");
    diff_cmd->add_option("d", shape_text)->required();
    diff_cmd->add_option("e", other_text)->required();

    auto* antipodal_cmd = app.add_subcommand("antipodal", "Antipodal reflection of a shape");
    antipodal_cmd->add_option("shape", shape_text)->required();

    std::string family_text;
    int cf_n = 0, cf_k = 0, cf_w1 = 0, cf_w2 = 0, cf_h = 0;
    auto* closed_cmd = app.add_subcommand("closedform", "Evaluate a coefficient formula for frayed ribbons");
    closed_cmd->add_option("family", family_text,
                           "turns_n22 | one_turn_full | h0_two_row | h0_hook | h1_two_row | h1_k2")
        ->required();
    closed_cmd->add_option("--n", cf_n, "Shape size")->required();
    closed_cmd->add_option("--k", cf_k, "Turn count (turns_n22) or second part of the target");
    closed_cmd->add_option("--w1", cf_w1, "Top width");
    closed_cmd->add_option("--w2", cf_w2, "Bottom width");
    closed_cmd->add_option("--height", cf_h, "Column height (one_turn_full)");

    int enum_size = 4;
    std::string enum_class = "frayed";
    bool enum_one_per_pair = false;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "List shapes of a given size");
    enumerate_cmd->add_option("--size", enum_size)->required()->check(CLI::Range(1, 20));
    enumerate_cmd->add_option("--class", enum_class, "frayed | connected | gap-free")
        ->check(CLI::IsMember({"frayed", "connected", "gap-free"}));
    enumerate_cmd->add_flag("--one-per-pair", enum_one_per_pair, "Frayed only: one shape per antipodal pair");

    std::string scan_text = "frayed", out_path;
    int min_size = 0, max_size = 9, threads = default_threads();
    bool resume = false;
    auto add_scan_options = [&](CLI::App* cmd) {
        cmd->add_option("--class", scan_text, "frayed | near-ribbon")
            ->check(CLI::IsMember({"frayed", "near-ribbon"}));
        cmd->add_option("--min-size", min_size, "Smallest size (default 4 for frayed, 1 otherwise)");
        cmd->add_option("--max-size", max_size)->check(CLI::Range(1, 16));
        cmd->add_option("--threads", threads, "Worker threads (default QFRAY_THREADS or all cores)")
            ->check(CLI::NonNegativeNumber);
        cmd->add_flag("--no-prune", no_prune, "Disable walk and top-row pruning");
        return cmd->add_flag("--resume", resume, "Skip sizes already completed in the output file");
    };
    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive verification over a size range");
    auto* verify_resume = add_scan_options(verify_cmd);
    verify_resume->needs(verify_cmd->add_option("--out", out_path, "JSONL output file"));
    auto* campaign_cmd = app.add_subcommand("campaign", "Checkpointed verification campaign writing JSONL");
    add_scan_options(campaign_cmd);
    campaign_cmd->add_option("--out", out_path, "JSONL output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    LrOptions lr{!no_prune};
    try {
        if (*classify_cmd) {
            print_classify(parse_shape(shape_text));
        } else if (*expand_cmd) {
            auto shape = parse_shape(shape_text);
            auto exp = q_expansion(shape, lr);
            if (json)
                std::cout << ResultRecord::from_shape(shape, exp).to_json_line() << "\n";
            else
                std::cout << exp.str() << "\n";
            if (show_tableaux) {
                for (const auto& [nu, c] : exp.terms()) {
                    std::cout << "\ncontent " << nu.str() << ": " << c << " ballot tableaux\n";
                    enumerate_ballot_tableaux(shape, nu, lr, [](const ShiftedTableau& t) {
                        std::cout << "\n" << render(t);
                        return true;
                    });
                }
            }
        } else if (*series_cmd) {
            std::cout << monomial_series(parse_shape(shape_text), variables).str() << "\n";
        } else if (*walk_cmd) {
            auto word = parse_word(word_text);
            if (level > 0) {
                print_walk(word, level);
            } else {
                int top = 0;
                for (const auto& l : word)
                    top = std::max(top, l.value);
                for (int i = 1; i < top; ++i)
                    print_walk(word, i);
            }
            std::cout << "ballot: " << (is_ballot(word) ? "true" : "false") << "\n";
        } else if (*greedy_cmd) {
            auto shape = parse_shape(shape_text);
            auto g = greedy_filling(shape);
            std::cout << render_labels(shape, g.labels);
            std::cout << "ribbons: " << g.ribbon_count << "\n";
            std::cout << "monomial: " << g.monomial_str() << "\n";
        } else if (*diff_cmd) {
            auto d = q_diff(parse_shape(shape_text), parse_shape(other_text), lr);
            std::cout << d.str() << "\n";
            std::cout << "positive: " << (is_q_positive(d) ? "true" : "false") << (d.is_zero() ? " (zero)" : "")
                      << "\n";
        } else if (*antipodal_cmd) {
            std::cout << antipodal(parse_shape(shape_text)).str() << "\n";
        } else if (*closed_cmd) {
            auto family = family_from_string(family_text);
            if (!family)
                throw std::invalid_argument("unknown family " + family_text);
            switch (*family) {
            case Family::turns_n22: std::cout << coeff_n22(cf_n, cf_k) << "\n"; break;
            case Family::one_turn_full: std::cout << one_turn_expansion(cf_n, cf_h).str() << "\n"; break;
            case Family::h0_two_row: std::cout << h0_two_row_coeff(cf_n, cf_w1, cf_w2, cf_k) << "\n"; break;
            case Family::h0_hook: std::cout << h0_hook_coeff(cf_n, cf_w1, cf_w2, cf_k) << "\n"; break;
            case Family::h1_two_row: std::cout << h1_two_row_coeff(cf_n, cf_w1, cf_w2, cf_k) << "\n"; break;
            case Family::h1_k2: std::cout << h1_k2_coeff(cf_n, cf_w1, cf_w2, cf_k) << "\n"; break;
            }
        } else if (*enumerate_cmd) {
            std::vector<ShiftedSkewShape> shapes;
            if (enum_class == "frayed")
                shapes = enumerate_frayed_ribbons(enum_size, enum_one_per_pair);
            else
                shapes = enumerate_shifted_skew_shapes(enum_size, enum_class == "connected");
            for (const auto& s : shapes)
                std::cout << s.str() << "\n";
        } else if (*verify_cmd || *campaign_cmd) {
            auto scanned = *scan_class_from_string(scan_text);
            int lo = min_size > 0 ? min_size : (scanned == ScanClass::frayed ? 4 : 1);
            SearchOptions search{threads, lr};
            int violations = 0;
            if (!out_path.empty()) {
                CampaignOptions opts{lo, max_size, scanned, out_path, resume, search};
                auto summary = run_campaign(opts);
                for (int n : summary.skipped_sizes)
                    std::cerr << "size " << n << " already complete, skipped\n";
                for (const auto& r : summary.reports)
                    print_report(r);
                violations = summary.violation_count();
            } else {
                for (int n = lo; n <= max_size; ++n) {
                    auto r = scanned == ScanClass::frayed ? verify_frayed_distinctness(n, search)
                                                          : verify_near_ribbon_closure(n, search);
                    print_report(r);
                    violations += static_cast<int>(r.violations.size());
                }
            }
            std::cout << "class " << scan_text << ", sizes " << lo << ".." << max_size << ": "
                      << (violations == 0 ? "no violations" : std::to_string(violations) + " violations") << "\n";
            return violations == 0 ? 0 : kExitViolation;
        }
    } catch (const OverflowError& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return kExitOverflow;
    } catch (const StorageError& e) {
        std::cerr << "storage error: " << e.what() << "\n";
        return kExitStorage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitViolation;
    }
    return 0;
}
