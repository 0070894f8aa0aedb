#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ellk3 {

using Int = mpz_class;
using Rat = mpq_class;

// Raised for mathematically invalid requests (singular curve, failed
// invariance, non-integral glue, ...).  The CLI maps this to exit code 2.
class domain_error : public std::runtime_error {
  public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency failures (classification table missed a case, Euler
// sum mismatch, ...).  These indicate a bug, not bad input.
class internal_error : public std::logic_error {
  public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }

// Reduce r into [0, m) modulo m, for rational m > 0.  Used for values in
// Q/Z (m = 1) and Q/2Z (m = 2).
inline Rat mod_reduce(const Rat& r, const Rat& m) {
    Rat q = r / m;
    return r - Rat(rat_floor(q)) * m;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace ellk3
