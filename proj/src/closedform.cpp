#include "qfray/closedform.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qfray {

namespace {

StrictPartition strict_target(std::vector<int> parts)
{
    if (!is_strict(parts) || std::any_of(parts.begin(), parts.end(), [](int p) { return p <= 0; }))
        throw std::invalid_argument("target partition is not strict");
    return StrictPartition(std::move(parts));
}

void require_two_turn(int n, int w1, int w2, int h)
{
    if (w1 < 2 || w2 < 3)
        throw std::invalid_argument("two-turn widths need w1 >= 2 and w2 >= 3");
    if (n != w1 + h + w2 + 1)
        throw std::invalid_argument("n must equal w1 + h + w2 + 1 = " + std::to_string(w1 + h + w2 + 1));
}

} // namespace

std::int64_t coeff_n22(int n, int k)
{
    if (k < 0)
        throw std::invalid_argument("turn count must be nonnegative");
    strict_target({n - 2, 2});
    return 2 * static_cast<std::int64_t>(k);
}

QExpansion one_turn_expansion(int n, int h)
{
    if (h < 0 || h > n - 4)
        throw std::invalid_argument("column height must satisfy 0 <= h <= n-4");
    int m1 = std::min(h + 1, n - h - 2);
    int m2 = std::min(h, n - h - 2);
    QExpansion out;
    out.add(StrictPartition{n - 1, 1}, 1);
    for (int i = 2; i <= m1; ++i)
        out.add(strict_target({n - i, i}), 2);
    // the hook terms have size n, so their first part is n-i-1
    for (int i = 2; i <= m2; ++i)
        out.add(strict_target({n - i - 1, i, 1}), 1);
    return out;
}

std::int64_t h0_two_row_coeff(int n, int w1, int w2, int k)
{
    require_two_turn(n, w1, w2, 0);
    strict_target({n - k, k});
    if (k < 2)
        throw std::invalid_argument("the height-0 two-row formula needs k >= 2");
    int t = std::min(w1 + 1, w2);
    if (k <= t - 1)
        return 4;
    if (k == t)
        return 2;
    return 0;
}

std::int64_t h0_hook_coeff(int n, int w1, int w2, int k)
{
    require_two_turn(n, w1, w2, 0);
    strict_target({n - k - 1, k, 1});
    int t = std::min(w1, w2);
    if (k <= t - 1)
        return 2;
    if (k == t)
        return 1;
    return 0;
}

std::int64_t h1_two_row_coeff(int n, int w1, int w2, int k)
{
    require_two_turn(n, w1, w2, 1);
    strict_target({n - k, k});
    if (k < 3)
        throw std::invalid_argument("the height-1 two-row formula needs k >= 3");
    int t = std::min(w1, w2 - 1);
    if (k <= t)
        return 8;
    if (k == t + 1)
        return w1 != w2 - 1 ? 6 : 4;
    if (k == t + 2)
        return 2;
    return 0;
}

std::int64_t h1_k2_coeff(int n, int w1, int w2, int k)
{
    require_two_turn(n, w1, w2, 1);
    strict_target({n - k - 2, k, 2});
    int t = std::min(w1, w2);
    if (k <= t - 1)
        return 4;
    if (k == t)
        return 2;
    return 0;
}

std::string_view to_string(Family f)
{
    switch (f) {
    case Family::turns_n22: return "turns_n22";
    case Family::one_turn_full: return "one_turn_full";
    case Family::h0_two_row: return "h0_two_row";
    case Family::h0_hook: return "h0_hook";
    case Family::h1_two_row: return "h1_two_row";
    case Family::h1_k2: return "h1_k2";
    }
    return "";
}

std::optional<Family> family_from_string(std::string_view text)
{
    for (Family f : {Family::turns_n22, Family::one_turn_full, Family::h0_two_row, Family::h0_hook,
                     Family::h1_two_row, Family::h1_k2})
        if (to_string(f) == text)
            return f;
    return std::nullopt;
}

StrictPartition family_target(Family f, int n, int k)
{
    switch (f) {
    case Family::turns_n22: return strict_target({n - 2, 2});
    case Family::h0_two_row:
    case Family::h1_two_row: return strict_target({n - k, k});
    case Family::h0_hook: return strict_target({n - k - 1, k, 1});
    case Family::h1_k2: return strict_target({n - k - 2, k, 2});
    case Family::one_turn_full: break;
    }
    throw std::invalid_argument("family has no single target partition");
}

} // namespace qfray
