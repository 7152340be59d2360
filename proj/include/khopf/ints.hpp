#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace khopf {

// Exact integer coefficients everywhere. Tableau counts grow fast enough
// with the degree bound that fixed-width arithmetic is not an option.
using Int = mpz_class;

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline bool fits_int64(const Int& v) { return v.fits_slong_p(); }

inline std::int64_t to_int64(const Int& v) { return static_cast<std::int64_t>(v.get_si()); }

}  // namespace khopf
