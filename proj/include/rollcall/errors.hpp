#pragma once

#include <stdexcept>
#include <string>

namespace rollcall {

// Thrown when an exact enumeration or table would exceed its configured
// ceiling (table entries, call-order/profile pairs, partial-assignment
// masks, recursion nodes). The message names the offending size and, where
// one exists, the Monte-Carlo fallback.
class enumeration_guard_error : public std::runtime_error {
 public:
  explicit enumeration_guard_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace rollcall
