#pragma once

#include <stdexcept>
#include <string>

namespace qtp {

// Malformed or inconsistent input: bad permutation word, subset out of range,
// shard with S outside its interval, unparseable text, mismatched sizes.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds the supported size envelope for the operation.
class scale_guard_error : public std::runtime_error {
public:
    explicit scale_guard_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural claim checked at runtime failed; carries a witness in the message.
class verification_error : public std::runtime_error {
public:
    explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

// Square solve hit a rank deficiency. rank is the row rank found; dependent_row
// is the 0-based index of the first input row that is a combination of earlier ones.
class singular_matrix_error : public std::runtime_error {
public:
    singular_matrix_error(const std::string& what, int rank, int dependent_row)
        : std::runtime_error(what), rank(rank), dependent_row(dependent_row) {}
    int rank;
    int dependent_row;
};

}  // namespace qtp
