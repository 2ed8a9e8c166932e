#pragma once

#include <string>

namespace terw {

// Outcome of a structural check: pass/fail plus a short human-readable
// reason on failure (empty on success unless the check reports a summary).
struct Verdict {
  bool ok = true;
  std::string detail;

  static Verdict pass(std::string d = {}) { return {true, std::move(d)}; }
  static Verdict fail(std::string d) { return {false, std::move(d)}; }

  // Keeps the first failure; concatenates nothing on success.
  void merge(const Verdict& o) {
    if (ok && !o.ok) *this = o;
  }
};

}  // namespace terw
