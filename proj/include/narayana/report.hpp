#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace narayana {

// Outcome of one identity check, serialised as
// {"identity", "n", "status": "pass"|"fail", "witness", "elapsed_ms"}.
struct CheckResult {
  std::string identity;
  int n = 0;
  bool pass = false;
  std::optional<std::string> witness;
  std::int64_t elapsed_ms = 0;

  std::string to_json() const;
};

// Runs `body`, which returns a witness on failure and nullopt on success.
// Exceptions thrown by the body become failures carrying the message.
CheckResult run_check(std::string identity, int n,
                      const std::function<std::optional<std::string>()>& body);

}  // namespace narayana
