#pragma once

#include <cstdint>
#include <string>

#include "mwb/errors.hpp"

namespace mwb {

// Exact rational with reduced numerator/denominator, denominator > 0.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) { *this = make(n, d); }

  static Rat make(__int128 n, __int128 d) {
    if (d == 0) throw input_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a == 0) a = 1;
    n /= a;
    d /= a;
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw input_error("rational out of range");
    Rat r;
    r.num = (long long)n;
    r.den = (long long)d;
    return r;
  }

  Rat operator+(const Rat& o) const {
    return make((__int128)num * o.den + (__int128)o.num * den, (__int128)den * o.den);
  }
  Rat operator-(const Rat& o) const {
    return make((__int128)num * o.den - (__int128)o.num * den, (__int128)den * o.den);
  }
  Rat operator*(const Rat& o) const {
    return make((__int128)num * o.num, (__int128)den * o.den);
  }
  Rat operator/(const Rat& o) const {
    if (o.num == 0) throw input_error("rational division by zero");
    return make((__int128)num * o.den, (__int128)den * o.num);
  }
  Rat operator-() const { return make(-(__int128)num, den); }

  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const {
    return (__int128)num * o.den < (__int128)o.num * den;
  }
  bool operator<=(const Rat& o) const { return *this < o || *this == o; }

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }
  double as_double() const { return (double)num / (double)den; }

  // Representative in [0, 1) of the class mod 1.
  Rat mod1() const {
    long long r = num % den;
    if (r < 0) r += den;
    return Rat(r, den);
  }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace mwb
