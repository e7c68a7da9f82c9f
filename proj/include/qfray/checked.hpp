#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qfray {

/// Raised whenever an exact coefficient leaves the signed 64-bit range.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

inline std::int64_t checked_pow2(int e)
{
    if (e < 0)
        throw std::logic_error("negative power of two");
    if (e > 62)
        throw OverflowError("power of two exceeds 64-bit range");
    return std::int64_t{1} << e;
}

} // namespace qfray
