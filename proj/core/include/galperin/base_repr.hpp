#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "galperin/interval.hpp"
#include "galperin/precision.hpp"
#include "galperin/rational.hpp"
#include "galperin/real.hpp"

namespace galperin {

enum class Exactness { Finite, Truncated };

/// Positional expansion sum d_i b^i, most significant digit first.
struct DigitExpansion {
    Real base;
    std::vector<int> digits;
    /// Power of b of the leading digit.
    long radix_offset = 0;
    Exactness exactness = Exactness::Finite;

    /// Power of b of the last digit.
    long lowest_power() const noexcept {
        return radix_offset - static_cast<long>(digits.size()) + 1;
    }
    /// Number of emitted digits below the radix point.
    long fractional_digits() const noexcept { return lowest_power() < 0 ? -lowest_power() : 0; }

    /// Digits with a radix point; digits above 9 print as A, B, ... The point
    /// is omitted for integer bases without fractional digits and kept
    /// ("101.") for non-integer bases.
    std::string str() const;

    /// The expansion of x / b^k: the same digits with the radix moved k places.
    DigitExpansion shifted(long k) const;

    /// Certified enclosure of the represented value.
    Interval value(long prec) const;
};

/// Greedy expansion of x >= 0 in an integer base b >= 2, truncated after
/// frac_digits fractional digits.
DigitExpansion expand_integer_base(const Real& x, long b, long frac_digits,
                                   long cap_bits = kDefaultPrecisionCap);

/// Greedy (beta) expansion of x >= 0 in a real base b > 1. Exact when x and b
/// are rational or lie in Q(phi); otherwise certified by interval arithmetic
/// with precision escalation, raising FloorAmbiguity at the cap.
DigitExpansion expand_noninteger_base(const Real& x, const Real& b, long frac_digits,
                                      long cap_bits = kDefaultPrecisionCap);

/// Dispatches to the integer or non-integer expansion.
DigitExpansion expand(const Real& x, const Real& b, long frac_digits,
                      long cap_bits = kDefaultPrecisionCap);

/// Collision count written in base b.
struct PiDigits {
    mpz_class count;
    /// count in base b, no fractional digits.
    DigitExpansion integer_form;
    /// count / b^N: pi with N fractional digits.
    DigitExpansion digits;
    /// exact - approx count; the last digit is uncertain by epsilon / b^N.
    long epsilon = 0;
    /// Set when count is the formula value of a submultiple angle.
    bool degenerate = false;
};

/// Digits of pi from the collision count. Throws SubmultipleDegeneracy for
/// N = 0 and FloorAmbiguity when a digit cannot be certified.
PiDigits pi_digits(const Real& b, long N, long cap_bits = kDefaultPrecisionCap);

/// As pi_digits, but a submultiple degeneracy is reported through the
/// degenerate flag and the formula value is expanded, as in printed tables.
PiDigits pi_digits_row(const Real& b, long N, long cap_bits = kDefaultPrecisionCap);

/// exact count - int[pi b^N].
long systematic_error(const Real& b, const Rational& N, long cap_bits = kDefaultPrecisionCap);

/// 1/b^N written in base b: "1", "0.1", "0.01", ...
std::string error_unit(long N);

/// Certified epsilon / b^N.
Interval systematic_error_value(const Real& b, long N, long epsilon, long prec);

/// Two base-phi expansions of x >= phi^2: the greedy one (leading block 100)
/// and the one whose leading block is rewritten to 011 by phi^2 = phi + 1,
/// continued greedily with digits capped at 1.
std::pair<DigitExpansion, DigitExpansion> golden_dual_forms(const Real& x, long frac_digits,
                                                            long cap_bits = kDefaultPrecisionCap);

/// One cell of the systematic error map; epsilon is -1 when undecided.
struct ErrorCell {
    Rational b;
    Rational N;
    long epsilon = 0;
};

struct ErrorMap {
    std::vector<Rational> bases;
    std::vector<Rational> mantissas;
    /// Row-major: cells[i * bases.size() + j] is (bases[j], mantissas[i]).
    std::vector<ErrorCell> cells;
    /// Indices of undecided cells.
    std::vector<std::size_t> ambiguous;

    const ErrorCell& at(std::size_t n_index, std::size_t b_index) const {
        return cells[n_index * bases.size() + b_index];
    }
};

/// Evenly spaced closed ranges [lo, hi] with the given number of points
/// (at least 2, or 1 when lo == hi).
std::vector<Rational> linspace(const Rational& lo, const Rational& hi, std::size_t points);

/// epsilon over the grid bases x mantissas, cells evaluated concurrently.
/// workers = 0 uses the hardware concurrency.
ErrorMap error_map(const std::vector<Rational>& bases, const std::vector<Rational>& mantissas,
                   unsigned workers = 0, long cap_bits = 4096);

}  // namespace galperin
