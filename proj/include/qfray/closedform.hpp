#pragma once

#include "qfray/expansion.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace qfray {

// Coefficient formulas for frayed ribbons, used as oracles for the generic engine.
// Every function throws std::invalid_argument when its target partition is not
// strict or the parameters do not describe a shape in the family.

/// Coefficient of Q_(n-2,2) for a frayed ribbon with k turns.
std::int64_t coeff_n22(int n, int k);

/// Full expansion of a frayed ribbon of size n with one turn and column height h
/// (h = 0 gives the no-turn shape (n-1,1)). Valid for 0 <= h <= n-4.
QExpansion one_turn_expansion(int n, int h);

/// Two turns, height 0 (n = w1 + w2 + 1): coefficient of Q_(n-k,k).
std::int64_t h0_two_row_coeff(int n, int w1, int w2, int k);
/// Two turns, height 0: coefficient of Q_(n-k-1,k,1).
std::int64_t h0_hook_coeff(int n, int w1, int w2, int k);
/// Two turns, height 1 (n = w1 + w2 + 2): coefficient of Q_(n-k,k), k >= 3.
std::int64_t h1_two_row_coeff(int n, int w1, int w2, int k);
/// Two turns, height 1: coefficient of Q_(n-k-2,k,2), k >= 3.
std::int64_t h1_k2_coeff(int n, int w1, int w2, int k);

enum class Family { turns_n22, one_turn_full, h0_two_row, h0_hook, h1_two_row, h1_k2 };

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view text);

/// Target basis element whose coefficient a scalar family computes.
StrictPartition family_target(Family f, int n, int k);

} // namespace qfray
