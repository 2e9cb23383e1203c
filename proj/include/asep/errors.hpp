#ifndef ASEP_ERRORS_HPP
#define ASEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace asep {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two values from different ring contexts were combined.
struct RingMismatchError : Error {
    using Error::Error;
};

// exact_div was asked for a quotient that leaves a remainder.
struct NotDivisibleError : Error {
    using Error::Error;
};

// A kernel solve found a null space of dimension != 1.
struct KernelRankError : Error {
    KernelRankError(std::size_t rank, std::size_t size)
        : Error("kernel dimension is " + std::to_string(size - rank) +
                " (rank " + std::to_string(rank) + " of " + std::to_string(size) +
                "), expected exactly 1"),
          rank(rank) {}
    std::size_t rank;
};

// The strong-lumping condition failed; carries a witnessing pair of
// source states whose row sums over the same fiber differ.
struct LumpingError : Error {
    LumpingError(std::string x0, std::string x1, std::string target)
        : Error("lumping condition violated: states '" + x0 + "' and '" + x1 +
                "' have different total rates into target class '" + target + "'"),
          witness_a(std::move(x0)), witness_b(std::move(x1)),
          target_state(std::move(target)) {}
    std::string witness_a;
    std::string witness_b;
    std::string target_state;
};

// Parse failure for the canonical polynomial text format.
struct ParseError : Error {
    using Error::Error;
};

// Arborescence enumeration hit the configured cap.
struct EnumerationCapError : Error {
    using Error::Error;
};

} // namespace asep

#endif
