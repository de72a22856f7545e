#include "narayana/report.hpp"

#include <chrono>
#include <exception>

#include "json.hpp"

namespace narayana {

std::string CheckResult::to_json() const {
  nlohmann::json j{{"identity", identity},
                   {"n", n},
                   {"status", pass ? "pass" : "fail"},
                   {"witness", nullptr},
                   {"elapsed_ms", elapsed_ms}};
  if (witness) j["witness"] = *witness;
  return j.dump();
}

CheckResult run_check(std::string identity, int n,
                      const std::function<std::optional<std::string>()>& body) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult out{std::move(identity), n, false, std::nullopt, 0};
  try {
    out.witness = body();
    out.pass = !out.witness.has_value();
  } catch (const std::exception& e) {
    out.witness = std::string("exception: ") + e.what();
  }
  out.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return out;
}

}  // namespace narayana
