// verify.hpp - named invariant suites behind the `verify` subcommand.

#pragma once

#include <string>
#include <vector>

namespace tfl {

struct SuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::string first_failure; // empty when clean
};

// fast: small sizes (L <= 16 plus the tiny odd Weyl sizes); full adds the
// L=63 acceptance instances and the L=32 convolution batch. Suites run in
// registry order; the STFT oracle suite is first.
std::vector<SuiteResult> run_verify_suites(bool full);

} // namespace tfl
