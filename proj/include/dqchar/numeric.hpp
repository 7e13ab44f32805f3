#ifndef DQCHAR_NUMERIC_HPP
#define DQCHAR_NUMERIC_HPP

#include <gmpxx.h>

#include <string>

namespace dqchar {

// Exact arbitrary-precision integer; coefficients and dimension counts
// never truncate.
using Int = mpz_class;

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow2(unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace dqchar

#endif
