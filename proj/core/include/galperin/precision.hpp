#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "galperin/errors.hpp"

namespace galperin {

inline constexpr long kDefaultPrecisionCap = 1L << 20;
inline constexpr long kDefaultWorkingPrecision = 128;

/// Precision (bits) used when constants and rationals are converted to
/// intervals on the calling thread.
long working_precision() noexcept;
void set_working_precision(long bits);

/// Sets the thread's working precision for the lifetime of the object.
class PrecisionScope {
public:
    explicit PrecisionScope(long bits) : saved_(working_precision()) { set_working_precision(bits); }
    ~PrecisionScope() { set_working_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    long saved_;
};

struct PrecisionPolicy {
    long start_bits = 64;
    long cap_bits = kDefaultPrecisionCap;
};

/// Runs fn(bits) at start_bits, doubling on AmbiguousPredicate until the
/// cap. Throws PrecisionExhausted once the run at the cap is still ambiguous.
template <class Fn>
auto with_escalation(const PrecisionPolicy& policy, Fn&& fn) -> decltype(fn(0L)) {
    long bits = policy.start_bits < 2 ? 2 : policy.start_bits;
    if (bits > policy.cap_bits) bits = policy.cap_bits;
    for (;;) {
        try {
            PrecisionScope scope(bits);
            return fn(bits);
        } catch (const AmbiguousPredicate& e) {
            if (bits >= policy.cap_bits)
                throw PrecisionExhausted(std::string("precision cap reached: ") + e.what(),
                                         policy.cap_bits);
            bits = bits * 2 > policy.cap_bits ? policy.cap_bits : bits * 2;
        }
    }
}

}  // namespace galperin
