#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace bettikit {

/// Outcome of one verification on one instance.
///
/// On failure `witness` names the offending position and both side values;
/// together with `instance`, `characteristic` and `seed` it is enough to
/// rerun the single check.
struct VerificationReport {
  std::string theorem;
  std::string instance;
  bool pass = true;
  std::string witness;
  std::uint32_t characteristic = 0;
  std::optional<std::uint64_t> seed;

  /// Records the first failure; later ones are ignored.
  void fail(std::string why) {
    if (!pass) return;
    pass = false;
    witness = std::move(why);
  }

  /// "THEOREM instance=<...> PASS|FAIL witness=<...>"
  std::string to_line() const;
  nlohmann::json to_json() const;
};

}  // namespace bettikit
