#ifndef ASEP_POLY_HPP
#define ASEP_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "asep/ring.hpp"

namespace asep {

using Int = mpz_class;
using Rat = mpq_class;

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients over a fixed Ring.  Terms are kept in strictly decreasing
// lexicographic exponent order and never carry a zero coefficient, so
// structural equality is polynomial equality.  Values are immutable in
// spirit: every operation returns a fresh polynomial.
class MultiPoly {
public:
    using Exponents = std::vector<std::uint32_t>;
    using Term = std::pair<Exponents, Int>;

    MultiPoly() = default; // zero over a null ring; assign before use

    static MultiPoly zero(RingPtr ring);
    static MultiPoly constant(RingPtr ring, Int value);
    static MultiPoly variable(RingPtr ring, std::size_t index);
    static MultiPoly variable(RingPtr ring, std::string_view name);
    static MultiPoly monomial(RingPtr ring, Exponents exps, Int coeff);

    // Parses the canonical text format, e.g. "2*q^3 + q^2 - q + 2".
    static MultiPoly parse(RingPtr ring, std::string_view text);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const; // zero or a pure integer
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    // Total degree of the polynomial; -1 for the zero polynomial.
    long total_degree() const;
    long degree_in(std::size_t var) const;

    // Leading coefficient w.r.t. the canonical (lex) order; 0 for zero.
    Int leading_coefficient() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly operator*(const Int& c) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Exact quotient; throws NotDivisibleError if a remainder is left.
    MultiPoly exact_div(const MultiPoly& divisor) const;
    bool divisible_by(const MultiPoly& divisor) const;

    // GCD, normalized primitive (integer content 1) with positive leading
    // coefficient in the canonical order.  Throws if both inputs are zero.
    static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

    // Exact evaluation; the assignment must cover every variable that
    // actually appears.  Keys are variable names.
    Rat evaluate(const std::map<std::string, Rat>& assignment) const;

    // Substitutes an integer for one variable; stays in the same ring.
    MultiPoly substitute(std::size_t var, const Int& value) const;

    // Re-expresses the polynomial in another ring, matching variables by
    // name.  Variables appearing with positive exponent must exist in the
    // target ring; others are dropped.
    MultiPoly map_to(const RingPtr& target) const;

    // GCD of all integer coefficients (non-negative); 0 for zero.
    Int integer_content() const;
    // Divided by integer content, leading coefficient made positive.
    MultiPoly normalized() const;

    bool has_negative_coefficient() const;

    std::string to_string() const;

private:
    friend class PolyMatrix;
    RingPtr ring_;
    std::vector<Term> terms_; // strictly decreasing lex order, no zeros
};

inline MultiPoly operator*(const Int& c, const MultiPoly& p) { return p * c; }

// True iff a is lexicographically greater than b (ring order).
bool lex_greater(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b);

} // namespace asep

#endif
