#pragma once

#include "qfray/shape.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qfray {

/// A letter of the doubled alphabet 1' < 1 < 2' < 2 < ...
struct Letter {
    int value = 1;
    bool primed = false;

    /// Position in the total order: i' -> 2i-1, i -> 2i.
    int code() const { return 2 * value - (primed ? 1 : 0); }
    static Letter from_code(int code) { return {(code + 1) / 2, code % 2 == 1}; }

    std::string str() const { return std::to_string(value) + (primed ? "'" : ""); }

    friend bool operator==(Letter a, Letter b) { return a.code() == b.code(); }
    friend auto operator<=>(Letter a, Letter b) { return a.code() <=> b.code(); }
};

using Word = std::vector<Letter>;

/// Tokens such as "2", "1'", separated by spaces or commas.
Word parse_word(std::string_view text);
std::string word_to_string(const Word& word);

/// (m_1, m_2, ...) with trailing zeros trimmed.
using ContentVector = std::vector<int>;

class ShiftedTableau {
public:
    ShiftedTableau() = default;
    /// entries aligned with shape.cells(); throws std::invalid_argument on a size mismatch.
    ShiftedTableau(ShiftedSkewShape shape, std::vector<Letter> entries);

    const ShiftedSkewShape& shape() const { return shape_; }
    std::span<const Letter> entries() const { return entries_; }
    std::vector<Letter>& mutable_entries() { return entries_; }

    /// Throws std::out_of_range for a cell outside the shape.
    Letter at(Cell c) const;

private:
    ShiftedSkewShape shape_;
    std::vector<Letter> entries_;
};

/// Rows and columns weakly increase, no unprimed letter repeats in a column
/// and no primed letter repeats in a row.
bool is_semistandard(const ShiftedTableau& t);

/// Rows from bottom to top, each left to right.
Word reading_word(const ShiftedTableau& t);

/// The first occurrence of every value in reading order is unprimed.
bool is_canonical(const ShiftedTableau& t);

ContentVector content(const ShiftedTableau& t);
ContentVector content_of_word(const Word& word);

/// One line per row, tokens in 3-wide slots at their shifted columns.
std::string render(const ShiftedTableau& t);

/// Cells of a shape listed in reading order with the indices of the
/// neighbours that constrain them when filling in that order.
struct ReadingLayout {
    std::vector<Cell> cells;          ///< reading order
    std::vector<int> left;            ///< index of (r, c-1) or -1
    std::vector<int> below;           ///< index of (r+1, c) or -1
    std::vector<int> shape_index;     ///< index into shape.cells()
    std::vector<char> top_row;        ///< cell lies in row 1

    explicit ReadingLayout(const ShiftedSkewShape& shape);
    std::size_t size() const { return cells.size(); }

    /// Inclusive range of letter codes allowed at position p given the
    /// already-placed codes of its left and lower neighbours.
    std::pair<int, int> allowed_codes(std::size_t p, std::span<const int> codes, int max_code) const;
};

/// Return false from the visitor to stop the enumeration.
using TableauVisitor = std::function<bool(const ShiftedTableau&)>;

/// All semistandard tableaux with the given content, depth-first in reading order.
/// Throws std::invalid_argument if the content does not sum to the shape size.
void enumerate_fillings(const ShiftedSkewShape& shape, const ContentVector& content, bool require_canonical,
                        const TableauVisitor& visit);

/// All semistandard tableaux with letter values at most max_value.
void enumerate_shssyt(const ShiftedSkewShape& shape, int max_value, const TableauVisitor& visit);

struct GreedyResult {
    std::vector<int> labels; ///< aligned with shape.cells()
    int ribbon_count = 0;
    ContentVector content;
    std::int64_t coefficient() const;
    std::string monomial_str() const;
};

/// Layered greedy filling: layer 1 is the top row plus every cell sharing an
/// edge or corner with the removed inner diagram; each further layer is every
/// unlabeled cell touching the previous layer. Throws std::logic_error if a
/// layer component is not a ribbon.
GreedyResult greedy_filling(const ShiftedSkewShape& shape);

std::string render_labels(const ShiftedSkewShape& shape, std::span<const int> labels);

} // namespace qfray
