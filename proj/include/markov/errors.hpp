#pragma once

#include <stdexcept>
#include <string>

namespace markov {

// bad input: shape mismatch, owner mismatch, malformed file. Exit code 2 in the cli.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace markov
