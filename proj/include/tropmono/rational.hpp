#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "tropmono/error.hpp"

namespace tropmono {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rat {
public:
  Rat() = default;
  Rat(int v) : q_(v) {}            // NOLINT(google-explicit-constructor)
  Rat(long v) : q_(v) {}           // NOLINT(google-explicit-constructor)
  Rat(long long v) : q_(static_cast<long>(v)) {} // NOLINT
  Rat(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rat(const mpq_class &q) : q_(q) { q_.canonicalize(); }
  explicit Rat(const mpz_class &z) : q_(z) {}

  /// Parses "a", "-a", "a/b". Whitespace is not accepted.
  static Rat parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw DomainError("empty rational literal");
    auto slash = s.find('/');
    auto valid_int = [](const std::string &t, bool allow_sign) {
      if (t.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
      throw DomainError("malformed rational literal '" + s + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw DomainError("rational with zero denominator '" + s + "'");
    return Rat(mpq_class(n, d));
  }

  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] const mpq_class &raw() const { return q_; }
  [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }

  /// "a/b", or "a" when the denominator is one.
  [[nodiscard]] std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rat &operator+=(const Rat &o) { q_ += o.q_; return *this; }
  Rat &operator-=(const Rat &o) { q_ -= o.q_; return *this; }
  Rat &operator*=(const Rat &o) { q_ *= o.q_; return *this; }
  Rat &operator/=(const Rat &o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat &b) { return a += b; }
  friend Rat operator-(Rat a, const Rat &b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat &b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat &b) { return a /= b; }
  friend Rat operator-(const Rat &a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat &a, const Rat &b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat &a, const Rat &b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream &operator<<(std::ostream &os, const Rat &r) { return os << r.str(); }

private:
  mpq_class q_{0};
};

inline Rat abs(const Rat &r) { return r.sign() < 0 ? -r : r; }

/// n! as an exact rational.
inline Rat factorial(int n) {
  Rat out(1);
  for (int k = 2; k <= n; ++k) out *= Rat(k);
  return out;
}

/// (-1)^e for any integer e.
constexpr int minus_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace tropmono
