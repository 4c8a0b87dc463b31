#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace samelson {

using Int = mpz_class;
using Rat = mpq_class;

struct RingMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonPLocalCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInSpan : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnderdeterminedRow : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconsistentSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotQuasiPRegular : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutOfValidRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UndeterminedCrossTerm : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoResolvingIdentity : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PartialImageUnusable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PipelineOracleMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* mpq_class(n, d) does not canonicalize; this does */
inline Rat frac(const Int& n, const Int& d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

/* exponent of p in a nonzero integer */
inline long p_valuation(Int a, long p) {
    if (a == 0) throw std::invalid_argument("p_valuation of zero");
    long v = 0;
    Int q, r;
    while (true) {
        mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p);
        if (r != 0) break;
        a = q;
        ++v;
    }
    return v;
}

/* nu_p(num) - nu_p(den) for a nonzero rational */
inline long p_valuation(const Rat& a, long p) {
    if (a == 0) throw std::invalid_argument("p_valuation of zero");
    long v = p_valuation(Int(a.get_num()), p);
    if (a.get_den() != 1) v -= p_valuation(Int(a.get_den()), p);
    return v;
}

/* canonical representative in [0, p^e) of a p-local rational; throws
   NonPLocalCoefficient when the denominator is divisible by p */
inline Int mod_prime_power(const Rat& a, long p, int e) {
    Int m = pow_int(Int(p), e);
    Int den = a.get_den();
    Int deninv;
    if (mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw NonPLocalCoefficient("denominator not invertible mod " + std::to_string(p) + "^" +
                                   std::to_string(e));
    Int r = (a.get_num() * deninv) % m;
    if (r < 0) r += m;
    return r;
}

inline std::string rat_str(const Rat& a) { return a.get_str(); }

}  // namespace samelson
