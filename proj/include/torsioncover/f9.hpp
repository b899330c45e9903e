#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace tc {

// F9 = F3(i) with i^2 = -1. An element a + b*i is encoded as a + 3b,
// a, b in {0,1,2}. Conjugation is the Frobenius x -> x^3, i.e. b -> -b.
struct F9 {
  uint8_t v = 0;

  constexpr F9() = default;
  constexpr explicit F9(uint8_t code) : v(code) {}
  static constexpr F9 make(int re, int im) {
    return F9(static_cast<uint8_t>(((re % 3 + 3) % 3) + 3 * ((im % 3 + 3) % 3)));
  }
  constexpr int re() const { return v % 3; }
  constexpr int im() const { return v / 3; }
  constexpr bool is_zero() const { return v == 0; }

  friend constexpr bool operator==(F9 a, F9 b) { return a.v == b.v; }
  friend constexpr bool operator!=(F9 a, F9 b) { return a.v != b.v; }
  friend constexpr bool operator<(F9 a, F9 b) { return a.v < b.v; }

  friend constexpr F9 operator+(F9 a, F9 b) {
    return make(a.re() + b.re(), a.im() + b.im());
  }
  friend constexpr F9 operator-(F9 a, F9 b) {
    return make(a.re() - b.re(), a.im() - b.im());
  }
  constexpr F9 operator-() const { return make(-re(), -im()); }
  friend constexpr F9 operator*(F9 a, F9 b) {
    return make(a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re());
  }

  constexpr F9 conj() const { return make(re(), -im()); }
  // field norm to F3, as an integer 0..2
  constexpr int norm() const { return (re() * re() + im() * im()) % 3; }

  F9 inverse() const;
  std::string str() const;  // "0", "1", "-1", "i", "1+i", ...
};

inline constexpr F9 F9_ZERO = F9::make(0, 0);
inline constexpr F9 F9_ONE = F9::make(1, 0);
inline constexpr F9 F9_I = F9::make(0, 1);

F9 parse_f9(const std::string& s);

}  // namespace tc
