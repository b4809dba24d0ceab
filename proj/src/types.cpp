#include "pdcut/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdcut {

std::string to_string(Wide value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Wide parse_wide(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  Wide value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not an unsigned integer: " +
                                  std::string(text));
    }
    Wide next;
    if (__builtin_mul_overflow(value, Wide{10}, &next) ||
        __builtin_add_overflow(next, Wide(c - '0'), &next)) {
      throw std::invalid_argument("integer too large: " + std::string(text));
    }
    value = next;
  }
  return value;
}

Wide checked_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("128-bit addition overflow");
  }
  return r;
}

Wide checked_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("128-bit multiplication overflow");
  }
  return r;
}

}  // namespace pdcut
