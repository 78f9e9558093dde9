#pragma once

// Exact arithmetic base layer: arbitrary-precision integers and rationals
// (GMP), parsing/printing in p/q form, and the closed rational interval
// type used for counting fractions and measuring densities.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dlab {

using Int = mpz_class;
using Rat = mpq_class;

class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_of(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num);
  r /= Rat(den);
  return r;
}

inline Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

inline Int ceil_rat(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// base^e for integer e (negative allowed when base != 0).
inline Rat pow_rat(const Rat& base, long e) {
  if (e == 0) return rat(1);
  Rat r;
  unsigned long a = e > 0 ? static_cast<unsigned long>(e)
                          : static_cast<unsigned long>(-e);
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), a);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), a);
  r.canonicalize();
  if (e < 0) {
    if (r == 0) throw std::domain_error("0 raised to negative power");
    r = 1 / r;
  }
  return r;
}

inline uint64_t to_u64(const Int& n) {
  if (n < 0 || !n.fits_ulong_p()) {
    if (n < 0) throw std::domain_error("negative value where u64 expected");
    // fits_ulong_p is exact on LP64; reject anything wider.
    throw resource_error("integer too large for 64-bit fast path");
  }
  return mpz_get_ui(n.get_mpz_t());
}

inline double to_double(const Rat& x) { return x.get_d(); }

// Parses "p/q", plain integers, and exact decimals like "0.25".
inline Rat parse_rat(std::string_view s) {
  auto bad = [&] {
    throw std::invalid_argument("cannot parse rational: '" + std::string(s) +
                                "'");
  };
  if (s.empty()) bad();
  std::string str(s);
  auto slash = str.find('/');
  if (slash != std::string::npos) {
    Int num, den;
    if (num.set_str(str.substr(0, slash), 10) != 0) bad();
    if (den.set_str(str.substr(slash + 1), 10) != 0) bad();
    if (den == 0) bad();
    return rat_of(num, den);
  }
  auto dot = str.find('.');
  if (dot != std::string::npos) {
    std::string digits = str.substr(0, dot) + str.substr(dot + 1);
    size_t frac_len = str.size() - dot - 1;
    if (frac_len == 0 || digits.empty()) bad();
    Int num;
    if (num.set_str(digits, 10) != 0) bad();
    return rat_of(num, pow_int(Int(10), frac_len));
  }
  Int num;
  if (num.set_str(str, 10) != 0) bad();
  return Rat(num);
}

inline std::string to_string(const Int& n) { return n.get_str(); }

inline std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

// Closed interval [lo, hi] with rational endpoints, kept inside [0,1].
// Used where the quantity of interest is a count or a measure density;
// for measures the open/closed distinction is immaterial.
struct RatInterval {
  Rat lo, hi;

  RatInterval(Rat lo_, Rat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    if (lo < 0 || hi > 1)
      throw std::invalid_argument("interval not contained in [0,1]");
  }

  Rat length() const { return hi - lo; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool trivial() const { return lo == hi; }
};

}  // namespace dlab
