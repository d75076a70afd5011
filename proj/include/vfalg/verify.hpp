#pragma once

// Seeded property suites over every module. Items run in a fixed order and
// the run stops at the first exact mismatch.

#include <cstdint>
#include <string>
#include <vector>

namespace vfalg {

struct SuiteItem {
  std::string id;
  bool passed = false;
  std::size_t cases = 0;
  // Offending input in field grammar when the item fails.
  std::string counterexample;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<SuiteItem> items;

  bool passed() const;
};

// "poly", "exactla", "witt", "derivations", "textio".
const std::vector<std::string>& suite_names();

// `suite` is one of suite_names() or "all". Throws InvalidArgument otherwise.
VerifyReport run_verify(const std::string& suite, std::uint64_t seed);

}  // namespace vfalg
