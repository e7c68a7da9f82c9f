#include "oracle.hpp"

#include "qfray/walk.hpp"

#include <doctest.h>

using namespace qfray;

namespace {

std::vector<int> codes(const Word& w)
{
    std::vector<int> out;
    for (const Letter& l : w)
        out.push_back(l.code());
    return out;
}

} // namespace

TEST_CASE("single steps")
{
    WalkState origin;
    CHECK(step(origin, Role::low_primed).dir == Direction::E);
    CHECK(step(origin, Role::low_unprimed).dir == Direction::E);
    CHECK(step(origin, Role::high_unprimed).dir == Direction::N);
    CHECK(step(origin, Role::high_primed).dir == Direction::N);
    WalkState inside{2, 2};
    CHECK(step(inside, Role::low_primed).state == WalkState{3, 2});
    CHECK(step(inside, Role::low_unprimed).state == WalkState{2, 1});
    CHECK(step(inside, Role::high_unprimed).state == WalkState{2, 3});
    CHECK(step(inside, Role::high_primed).state == WalkState{1, 2});
    CHECK(step(WalkState{0, 3}, Role::low_unprimed).dir == Direction::E);
    CHECK(step(WalkState{3, 0}, Role::high_primed).dir == Direction::N);
    CHECK(to_char(Direction::W) == 'W');
}

TEST_CASE("roles and subwords")
{
    CHECK(role_of({2, true}, 2) == Role::low_primed);
    CHECK(role_of({3, false}, 2) == Role::high_unprimed);
    auto w = parse_word("2 1 2' 2 3 1' 3' 1' 1 2 1' 1 1");
    CHECK(word_to_string(subword(w, 1)) == "2 1 2' 2 1' 1' 1 2 1' 1 1");
    CHECK(word_to_string(subword(w, 2)) == "2 2' 2 3 3' 2");
    CHECK(subword(w, 4).empty());
    CHECK_THROWS_AS(subword(w, 0), std::invalid_argument);
}

TEST_CASE("walks of a ballot word")
{
    auto w = parse_word("2 1 2' 2 3 1' 3' 1' 1 2 1' 1 1");
    CHECK(walk_end(w, 1) == WalkState{3, 0});
    CHECK(walk_end(w, 2) == WalkState{2, 0});
    CHECK(walk_end(w, 3) == WalkState{2, 0});
    CHECK(is_ballot(w));
    auto trace = walk(w, 2);
    REQUIRE(trace.size() == 6);
    std::string dirs;
    for (const auto& e : trace)
        dirs += to_char(e.dir);
    CHECK(dirs == "EEENWS");
}

TEST_CASE("walk of the mixed example word")
{
    auto w = parse_word("2 1 1' 1 2' 2 2' 1' 1'");
    CHECK(walk_end(w, 1) == WalkState{3, 2});
    CHECK_FALSE(is_ballot(w));
    std::string dirs;
    for (const auto& e : walk(w, 1))
        dirs += to_char(e.dir);
    CHECK(dirs == "NEESNNWEE");
}

TEST_CASE("ballot edge cases")
{
    CHECK(is_ballot(Word{}));
    CHECK(is_ballot(parse_word("1 1 1")));
    CHECK_FALSE(is_ballot(parse_word("2")));
    CHECK(is_ballot(parse_word("1 2'")) == false);
    CHECK(is_ballot(parse_word("1 1 2' 2")) == (walk_end(parse_word("1 1 2' 2"), 1).y == 0));
}

TEST_CASE("walks stay in the first quadrant and match the oracle")
{
    std::uint64_t state = 777;
    auto next = [&](int bound) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<int>((state >> 33) % static_cast<std::uint64_t>(bound));
    };
    for (int trial = 0; trial < 5000; ++trial) {
        Word w;
        int len = next(41);
        for (int j = 0; j < len; ++j)
            w.push_back(Letter::from_code(next(8) + 1));
        for (int i = 1; i <= 3; ++i) {
            for (const auto& e : walk(w, i)) {
                CHECK(e.state.x >= 0);
                CHECK(e.state.y >= 0);
            }
            auto [x, y] = oracle::walk_end(codes(w), i);
            CHECK(walk_end(w, i) == WalkState{x, y});
        }
        CHECK(is_ballot(w) == oracle::ballot(codes(w)));
    }
}

TEST_CASE("prefix_can_return bounds the height")
{
    CHECK(prefix_can_return({1, 2}, 2));
    CHECK_FALSE(prefix_can_return({1, 3}, 2));
    CHECK(prefix_can_return({5, 0}, 0));
    // a walk at height y needs at least y more letters of value i to come down
    auto w = parse_word("2 2 1");
    CHECK(walk_end(w, 1).y == 2);
    CHECK_FALSE(prefix_can_return(walk_end(w, 1), 1));
}
