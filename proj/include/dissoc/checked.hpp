#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dissoc {

using Count = std::uint64_t;

/// Raised when a count no longer fits in 64 bits.
class CountOverflow : public std::overflow_error {
 public:
  explicit CountOverflow(const std::string& what) : std::overflow_error("count overflow: " + what) {}
};

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw CountOverflow(std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw CountOverflow(std::to_string(a) + " * " + std::to_string(b));
  return r;
}

inline Count checked_pow(Count base, unsigned exp) {
  Count r = 1;
  while (exp-- > 0) r = checked_mul(r, base);
  return r;
}

}  // namespace dissoc
