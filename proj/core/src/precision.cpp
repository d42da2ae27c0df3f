#include "galperin/precision.hpp"

namespace galperin {

namespace {
thread_local long tls_precision = kDefaultWorkingPrecision;
}

long working_precision() noexcept { return tls_precision; }

void set_working_precision(long bits) {
    if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX)
        throw InvalidArgument("working precision out of range: " + std::to_string(bits));
    tls_precision = bits;
}

}  // namespace galperin
