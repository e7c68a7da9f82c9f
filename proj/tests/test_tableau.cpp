#include "oracle.hpp"

#include "qfray/shape.hpp"
#include "qfray/tableau.hpp"

#include <doctest.h>

#include <set>

using namespace qfray;

namespace {

// Rows given top to bottom, each left to right.
ShiftedTableau from_rows(const ShiftedSkewShape& shape, const std::vector<std::string>& rows)
{
    std::vector<Letter> entries;
    for (const auto& row : rows)
        for (const Letter& l : parse_word(row))
            entries.push_back(l);
    return ShiftedTableau(shape, entries);
}

ShiftedTableau near_ribbon_tableau()
{
    return from_rows(ShiftedSkewShape::from_partitions({8, 5, 3, 1}, {4, 3, 1}), {"1' 1 1 1", "1' 2", "1' 1", "1"});
}

ShiftedTableau ballot_example()
{
    return from_rows(ShiftedSkewShape::from_partitions({10, 8, 6, 5, 1}, {7, 5, 4, 1}),
                     {"1' 1 1", "1' 1 2", "1' 3'", "1 2' 2 3", "2"});
}

oracle::Filling as_filling(const ShiftedTableau& t)
{
    oracle::Filling f;
    auto cells = t.shape().cells();
    for (std::size_t i = 0; i < cells.size(); ++i)
        f[cells[i]] = t.entries()[i].code();
    return f;
}

std::vector<Cell> cells_of(const ShiftedSkewShape& s) { return {s.cells().begin(), s.cells().end()}; }

} // namespace

TEST_CASE("letters and words")
{
    CHECK(Letter{1, true} < Letter{1, false});
    CHECK(Letter{1, false} < Letter{2, true});
    CHECK(Letter::from_code(3) == Letter{2, true});
    CHECK(word_to_string(parse_word("2,1' 3")) == "2 1' 3");
    CHECK_THROWS_AS(parse_word("2''"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("0"), std::invalid_argument);
    CHECK(parse_word("").empty());
}

TEST_CASE("semistandard examples")
{
    CHECK(is_semistandard(near_ribbon_tableau()));
    CHECK(is_semistandard(ballot_example()));
    auto column = ShiftedSkewShape::from_partitions({2, 1}, {1});
    CHECK_FALSE(is_semistandard(ShiftedTableau(column, {{1, false}, {1, false}})));
    CHECK(is_semistandard(ShiftedTableau(column, {{1, true}, {1, true}})));
    auto row = parse_shape("2");
    CHECK_FALSE(is_semistandard(ShiftedTableau(row, {{1, true}, {1, true}})));
    CHECK(is_semistandard(ShiftedTableau(row, {{1, true}, {1, false}})));
}

TEST_CASE("reading words")
{
    CHECK(word_to_string(reading_word(near_ribbon_tableau())) == "1 1' 1 1' 2 1' 1 1 1");
    CHECK(word_to_string(reading_word(ballot_example())) == "2 1 2' 2 3 1' 3' 1' 1 2 1' 1 1");
    auto one = ShiftedTableau(parse_shape("1"), {{3, true}});
    CHECK(word_to_string(reading_word(one)) == "3'");
}

TEST_CASE("canonical form and content")
{
    CHECK(is_canonical(ballot_example()));
    CHECK(is_canonical(ShiftedTableau()));
    auto starts_primed = ShiftedTableau(parse_shape("2"), {{2, true}, {2, false}});
    CHECK_FALSE(is_canonical(starts_primed));
    CHECK(content(near_ribbon_tableau()) == ContentVector{8, 1});
    CHECK(content(ballot_example()) == ContentVector{7, 4, 2});
    CHECK(content(ShiftedTableau()).empty());
}

TEST_CASE("render places tokens at shifted columns")
{
    auto t = ShiftedTableau(parse_shape("2 1/1"), {{1, true}, {1, true}});
    CHECK(render(t) == "   1'\n   1'\n");
}

TEST_CASE("fillings match the brute-force filter")
{
    CHECK(oracle::count_semistandard(cells_of(parse_shape("2 1")), 2, {2, 1}, true, false) > 0);
    for (int n = 1; n <= 5; ++n)
        for (const auto& shape : enumerate_shifted_skew_shapes(n, false))
            for (const ContentVector& c : {ContentVector{n}, ContentVector{n - 1, 1}, ContentVector{1, n - 1},
                                           ContentVector{n - 2, 1, 1}, ContentVector{1, 1, n - 2}}) {
                if (std::any_of(c.begin(), c.end(), [](int m) { return m < 0; }))
                    continue;
                for (bool canonical : {false, true}) {
                    std::vector<int> want(c.begin(), c.end());
                    while (!want.empty() && want.back() == 0)
                        want.pop_back();
                    std::set<std::vector<int>> seen;
                    std::int64_t count = 0;
                    enumerate_fillings(shape, c, canonical, [&](const ShiftedTableau& t) {
                        CHECK(is_semistandard(t));
                        CHECK(content(t) == ContentVector(want.begin(), want.end()));
                        if (canonical)
                            CHECK(is_canonical(t));
                        std::vector<int> codes;
                        for (const Letter& l : t.entries())
                            codes.push_back(l.code());
                        CHECK(seen.insert(codes).second);
                        ++count;
                        return true;
                    });
                    int values = static_cast<int>(c.size());
                    REQUIRE(count == oracle::count_semistandard(cells_of(shape), values, want, canonical, false));
                }
            }
}

TEST_CASE("filling edge cases")
{
    auto row = parse_shape("4");
    int all = 0, canon = 0;
    enumerate_fillings(row, {4}, false, [&](const ShiftedTableau&) { return ++all, true; });
    enumerate_fillings(row, {4}, true, [&](const ShiftedTableau&) { return ++canon, true; });
    CHECK(all == 2);
    CHECK(canon == 1);
    CHECK_THROWS_AS(enumerate_fillings(row, {3}, false, [](const ShiftedTableau&) { return true; }),
                    std::invalid_argument);
    int visited = 0;
    enumerate_fillings(parse_shape("3 1"), {2, 2}, false, [&](const ShiftedTableau&) { return ++visited < 1; });
    CHECK(visited == 1);
}

TEST_CASE("all tableaux with bounded values")
{
    int one = 0;
    enumerate_shssyt(parse_shape("1"), 2, [&](const ShiftedTableau&) { return ++one, true; });
    CHECK(one == 4);
    int row = 0;
    enumerate_shssyt(parse_shape("5"), 1, [&](const ShiftedTableau&) { return ++row, true; });
    CHECK(row == 2);
    for (int n = 1; n <= 4; ++n)
        for (const auto& shape : enumerate_shifted_skew_shapes(n, false)) {
            std::int64_t count = 0;
            enumerate_shssyt(shape, 2, [&](const ShiftedTableau&) { return ++count, true; });
            CHECK(count == oracle::count_semistandard(cells_of(shape), 2, {}, false, false));
        }
    CHECK_THROWS_AS(enumerate_shssyt(parse_shape("1"), 0, [](const ShiftedTableau&) { return true; }),
                    std::invalid_argument);
}

TEST_CASE("library predicates agree with the oracle on random fillings")
{
    auto shape = ShiftedSkewShape::from_partitions({6, 4, 2}, {3, 1});
    std::uint64_t state = 12345;
    auto next = [&] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<int>((state >> 33) % 6) + 1;
    };
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<Letter> entries;
        for (int i = 0; i < shape.size(); ++i)
            entries.push_back(Letter::from_code(next()));
        ShiftedTableau t(shape, entries);
        auto f = as_filling(t);
        CHECK(is_semistandard(t) == oracle::semistandard(f));
        std::vector<int> w;
        for (const Letter& l : reading_word(t))
            w.push_back(l.code());
        CHECK(w == oracle::reading_word(f));
        CHECK(is_canonical(t) == oracle::canonical(w));
    }
}

TEST_CASE("greedy filling of the layered example")
{
    auto shape = ShiftedSkewShape::from_partitions({8, 7, 5, 2}, {3, 1});
    auto g = greedy_filling(shape);
    CHECK(g.content == ContentVector{8, 7, 3});
    CHECK(g.ribbon_count == 4);
    CHECK(g.coefficient() == 16);
    CHECK(g.monomial_str() == "16 x1^8 x2^7 x3^3");
    CHECK(render_labels(shape, g.labels) == "         1  1  1  1  1\n      1  1  2  2  2  2\n      1  2  2  3  3\n"
                                            "         2  3\n");
}

TEST_CASE("greedy monomial of near-ribbons and rows")
{
    for (int n = 2; n <= 8; ++n)
        for (const auto& s : enumerate_shifted_skew_shapes(n, true))
            if (is_near_ribbon(s)) {
                auto g = greedy_filling(s);
                CHECK(g.coefficient() == 4);
                CHECK(g.content == ContentVector{n - 1, 1});
            }
    for (int n = 1; n <= 6; ++n) {
        auto g = greedy_filling(parse_shape(std::to_string(n)));
        CHECK(g.ribbon_count == 1);
        CHECK(g.content == ContentVector{n});
    }
    CHECK_THROWS_AS(greedy_filling(ShiftedSkewShape{}), std::invalid_argument);
}

TEST_CASE("greedy layers partition the shape and agree under reflection")
{
    for (int n = 1; n <= 8; ++n)
        for (const auto& s : enumerate_shifted_skew_shapes(n, false)) {
            auto g = greedy_filling(s);
            int total = 0;
            for (int m : g.content)
                total += m;
            CHECK(total == n);
            CHECK(std::none_of(g.labels.begin(), g.labels.end(), [](int v) { return v == 0; }));
            CHECK(greedy_filling(antipodal(s)).monomial_str() == g.monomial_str());
        }
}
