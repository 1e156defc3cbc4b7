#pragma once

#include <stdexcept>
#include <string>

namespace mss {

// Base class of every error this library raises on purpose.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A character was looked up that is not part of the alphabet.
class not_in_alphabet : public error {
public:
    using error::error;
};

// An exact-membership score fell outside [0, m].
class score_out_of_range : public error {
public:
    using error::error;
};

// kam_multiply was handed operands whose length is not a power of two.
class not_power_of_two : public error {
public:
    using error::error;
};

// A score, an accumulation, or an instance size left the 63-bit budget.
class overflow_error : public error {
public:
    using error::error;
};

// Malformed input: text files, pattern files, assignment tables.
class input_format_error : public error {
public:
    using error::error;
};

// A character class or value multiset was empty where it must not be.
class empty_class_error : public error {
public:
    using error::error;
};

}  // namespace mss
