/*
 * Exact rational arithmetic for the typing algebra.
 *
 * All capacities, interval endpoints and polytope coefficients in this
 * library are values of `rat`.  Numerator/denominator are kept in int64
 * with __int128 intermediates; every operation either produces the exact
 * reduced result or throws rat_overflow.  Exactness is never traded for
 * range silently.
 *
 * The multiply/divide operators keep global audit counters.  The
 * composition engine is required to work with {max, min, +, -, compare}
 * only; tests reset the counters, run the pipeline, and assert they are
 * still zero.
 */
#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fnt {

struct rat_overflow : std::runtime_error {
  rat_overflow() : std::runtime_error("rational overflow (value exceeds 64-bit range)") {}
};

struct rat_parse_error : std::runtime_error {
  explicit rat_parse_error(const std::string& what) : std::runtime_error(what) {}
};

namespace audit {
// Counters bumped by rat::operator* and rat::operator/.  See note above.
inline std::uint64_t& mul_count() { static std::uint64_t c = 0; return c; }
inline std::uint64_t& div_count() { static std::uint64_t c = 0; return c; }
inline void reset() { mul_count() = 0; div_count() = 0; }
}  // namespace audit

class rat {
 public:
  rat() : num_(0), den_(1) {}
  rat(long long n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
  rat(long long n, long long d) { assign(n, d); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  static rat from_i128(__int128 n, __int128 d) {
    if (d == 0) throw rat_parse_error("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (!fits(n) || !fits(d)) throw rat_overflow();
    rat r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  friend rat operator+(const rat& a, const rat& b) {
    return from_i128(static_cast<__int128>(a.num_) * b.den_ +
                         static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend rat operator-(const rat& a, const rat& b) {
    return from_i128(static_cast<__int128>(a.num_) * b.den_ -
                         static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend rat operator-(const rat& a) {
    rat r;
    r.num_ = -a.num_;  // -INT64_MIN cannot occur: from_i128 rejects it
    r.den_ = a.den_;
    return r;
  }
  friend rat operator*(const rat& a, const rat& b) {
    ++audit::mul_count();
    return from_i128(static_cast<__int128>(a.num_) * b.num_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend rat operator/(const rat& a, const rat& b) {
    ++audit::div_count();
    if (b.num_ == 0) throw rat_parse_error("division by zero");
    return from_i128(static_cast<__int128>(a.num_) * b.den_,
                     static_cast<__int128>(a.den_) * b.num_);
  }

  rat& operator+=(const rat& b) { *this = *this + b; return *this; }
  rat& operator-=(const rat& b) { *this = *this - b; return *this; }

  friend bool operator==(const rat& a, const rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form
  }
  friend bool operator!=(const rat& a, const rat& b) { return !(a == b); }
  friend bool operator<(const rat& a, const rat& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const rat& a, const rat& b) { return b < a; }
  friend bool operator<=(const rat& a, const rat& b) { return !(b < a); }
  friend bool operator>=(const rat& a, const rat& b) { return !(a < b); }

  bool is_zero() const { return num_ == 0; }
  bool is_neg() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  rat abs() const { return num_ < 0 ? -*this : *this; }

  // Accepts "p", "p/q", and decimals like "-3.25" (exact tenth-power fraction).
  static rat parse(const std::string& s) {
    if (s.empty()) throw rat_parse_error("empty rational");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      long long n = parse_int(s.substr(0, slash));
      long long d = parse_int(s.substr(slash + 1));
      if (d == 0) throw rat_parse_error("zero denominator in '" + s + "'");
      return rat(n, d);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return rat(parse_int(s));
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (tail.empty() || tail.size() > 18)
      throw rat_parse_error("bad decimal '" + s + "'");
    for (char c : tail)
      if (c < '0' || c > '9') throw rat_parse_error("bad decimal '" + s + "'");
    bool neg = !head.empty() && head[0] == '-';
    long long whole = head.empty() || head == "-" ? 0 : parse_int(head);
    long long scale = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) scale *= 10;
    __int128 n = static_cast<__int128>(whole < 0 ? -whole : whole) * scale +
                 parse_int(tail);
    if (neg || whole < 0) n = -n;
    return from_i128(n, scale);
  }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  void assign(long long n, long long d) {
    if (d == 0) throw rat_parse_error("zero denominator");
    *this = from_i128(n, d);
  }

  static bool fits(__int128 v) {
    return v >= INT64_MIN + 1 && v <= INT64_MAX;  // keep -x representable
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  static long long parse_int(const std::string& s) {
    if (s.empty()) throw rat_parse_error("empty integer");
    std::size_t pos = 0;
    long long v;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw rat_parse_error("bad integer '" + s + "'");
    }
    if (pos != s.size()) throw rat_parse_error("bad integer '" + s + "'");
    return v;
  }

  long long num_;
  long long den_;
};

inline rat min(const rat& a, const rat& b) { return a < b ? a : b; }
inline rat max(const rat& a, const rat& b) { return a < b ? b : a; }

}  // namespace fnt
