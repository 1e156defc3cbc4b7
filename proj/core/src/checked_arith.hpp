#pragma once

#include <cstdint>

#include "mss/errors.hpp"

namespace mss::detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw overflow_error("64-bit addition overflow");
    }
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw overflow_error("64-bit subtraction overflow");
    }
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw overflow_error("64-bit multiplication overflow");
    }
    return r;
}

}  // namespace mss::detail
