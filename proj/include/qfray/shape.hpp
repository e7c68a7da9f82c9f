#pragma once

#include "qfray/partition.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qfray {

/// A box in shifted coordinates, 1-indexed from the top-left; always col >= row.
struct Cell {
    int row = 1;
    int col = 1;
    auto operator<=>(const Cell&) const = default;
};

/// Cell set of a shifted skew diagram lambda/mu.
///
/// Every instance is stored in canonical position: the top nonempty row is
/// row 1 and the bottom row starts on the staircase. Both moves are
/// translations, so rows and columns keep their relative positions and the
/// Schur Q function is unchanged. Two shapes compare equal iff their cell sets do.
class ShiftedSkewShape {
public:
    ShiftedSkewShape() = default;

    /// Throws std::invalid_argument if mu is not contained in lambda.
    static ShiftedSkewShape from_partitions(const StrictPartition& outer, const StrictPartition& inner);

    /// Throws std::invalid_argument if the cells do not form a shifted skew diagram
    /// in any position.
    static ShiftedSkewShape from_cells(std::vector<Cell> cells);

    const StrictPartition& outer() const { return outer_; }
    const StrictPartition& inner() const { return inner_; }

    /// Sorted by row, then column.
    std::span<const Cell> cells() const { return cells_; }
    int size() const { return static_cast<int>(cells_.size()); }
    bool empty() const { return cells_.empty(); }
    int row_count() const { return outer_.length(); }
    int max_col() const;

    bool contains(Cell c) const;
    bool contains(int row, int col) const { return contains(Cell{row, col}); }

    /// First and last column of row r (1-indexed); empty rows give first > last.
    int row_start(int r) const { return r + inner_[static_cast<std::size_t>(r - 1)]; }
    int row_end(int r) const { return r + outer_[static_cast<std::size_t>(r - 1)] - 1; }

    /// "lambda/mu" with single spaces, e.g. "6 5 2 1/5 1"; straight shapes omit "/".
    std::string str() const;

    bool operator==(const ShiftedSkewShape& o) const { return cells_ == o.cells_; }

private:
    StrictPartition outer_;
    StrictPartition inner_;
    std::vector<Cell> cells_;
};

/// Orders shapes by their serialized form.
struct ShapeStringLess {
    bool operator()(const ShiftedSkewShape& a, const ShiftedSkewShape& b) const { return a.str() < b.str(); }
};

/// Raw cells of lambda/mu in place (no canonical translation).
std::vector<Cell> shifted_cells(const StrictPartition& outer, const StrictPartition& inner);

/// Grammar: parts ("/" parts?)? with parts separated by spaces or commas.
ShiftedSkewShape parse_shape(std::string_view text);

// --- cell-set predicates (edge adjacency throughout) ---

bool cells_connected(std::span<const Cell> cells);
bool cells_have_2x2(std::span<const Cell> cells);
/// Rows are intervals on consecutive rows, with left and right ends weakly
/// decreasing going down: the cell set is an ordinary (unshifted) skew diagram.
bool cells_ordinary_skew(std::span<const Cell> cells);
bool cells_are_ribbon(std::span<const Cell> cells);

enum class ShapeKind { ribbon, near_ribbon_ordinary, frayed_ribbon, other };

std::string_view to_string(ShapeKind kind);
std::optional<ShapeKind> shape_kind_from_string(std::string_view text);

struct ShapeClass {
    ShapeKind kind = ShapeKind::other;
    bool connected = false;
    int staircase_count = 0;
};

/// Throws std::invalid_argument on the empty shape.
ShapeClass classify(const ShiftedSkewShape& shape);

bool is_near_ribbon(const ShiftedSkewShape& shape);
bool is_frayed_ribbon(const ShiftedSkewShape& shape);

std::vector<Cell> staircase_cells(const ShiftedSkewShape& shape);

/// Reflection across the northeast-southwest diagonal, canonicalized.
ShiftedSkewShape antipodal(const ShiftedSkewShape& shape);

struct TurnReport {
    int outer_turns = 0;
    int inner_turns = 0;
    std::vector<Cell> outer_corners;
    std::vector<Cell> inner_corners;
    int total() const { return outer_turns + inner_turns; }
};

/// L-shaped three-cell corners avoiding both staircase cells.
/// Outer corner (i,j): (i-1,j) and (i,j-1) present. Inner corner (i,j): (i,j+1) and (i+1,j) present.
/// Throws std::invalid_argument if the shape is not a frayed ribbon.
TurnReport count_turns(const ShiftedSkewShape& shape);

/// Alternative turn count: cells of the underlying ribbon lying in a row and a
/// column of length >= 2 within the ribbon, skipping the cell adjacent to both
/// staircase cells. Diagnostic only.
int count_turn_squares_alt(const ShiftedSkewShape& shape);

enum class Orientation { RightThenUp, UpThenRight };

/// Row lengths of the underlying ribbon, bottom row first. RightThenUp places
/// the bottom ribbon row on the staircase with the extra cell diagonally below
/// its first cell; UpThenRight is the antipodal image.
struct FrayedRibbonCode {
    Orientation orientation = Orientation::RightThenUp;
    std::vector<int> rows;
    int size() const;
    bool operator==(const FrayedRibbonCode&) const = default;
};

/// Throws std::invalid_argument if rows is empty, has a nonpositive entry, or rows[0] < 2.
ShiftedSkewShape from_frayed_code(const FrayedRibbonCode& code);

/// Inverse of from_frayed_code; nullopt if the shape is not a frayed ribbon.
/// Prefers RightThenUp when a shape decodes both ways (antipodally symmetric shapes).
std::optional<FrayedRibbonCode> encode_frayed(const ShiftedSkewShape& shape);

/// The member of {shape, antipodal(shape)} whose RightThenUp code has a bottom
/// row of at least three cells. Throws if neither does.
ShiftedSkewShape normalize_frayed(const ShiftedSkewShape& shape);

/// Cells strictly above the outer-turn corner of a one-turn frayed ribbon,
/// after normalization. A no-turn frayed ribbon has height 0.
int one_turn_column_height(const ShiftedSkewShape& shape);

struct TwoTurnParams {
    int w1 = 0; ///< top row length
    int h = 0;  ///< rows strictly between the two long rows
    int w2 = 0; ///< second-to-bottom row length, >= 3 after normalization
    bool operator==(const TwoTurnParams&) const = default;
};

TwoTurnParams two_turn_params(const ShiftedSkewShape& shape);

/// Adds one to lambda_i and mu_i for the top k rows.
ShiftedSkewShape shift_top_rows(const ShiftedSkewShape& shape, int k);

/// Shape translated one step down-right with a new top row of r cells placed
/// diagonally above its upper-right corner, sharing no row or column with it.
ShiftedSkewShape append_detached_row(const ShiftedSkewShape& shape, int r);

/// Every frayed ribbon of size n (n >= 4), sorted by string.
std::vector<ShiftedSkewShape> enumerate_frayed_ribbons(int n, bool one_per_antipodal_pair = false);

/// Canonical shapes of size n. With connected_only, all edge-connected shapes;
/// otherwise all gap-free shapes (no empty row or column inside the bounding box),
/// which includes every connected shape. Sorted by string.
std::vector<ShiftedSkewShape> enumerate_shifted_skew_shapes(int n, bool connected_only);

} // namespace qfray
