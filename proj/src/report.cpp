#include "bettikit/report.hpp"

namespace bettikit {

std::string VerificationReport::to_line() const {
  std::string line = theorem + " instance=<" + instance + "> " + (pass ? "PASS" : "FAIL");
  if (!witness.empty()) line += " witness=<" + witness + ">";
  line += " p=" + std::to_string(characteristic);
  if (seed) line += " seed=" + std::to_string(*seed);
  return line;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j{
      {"theorem", theorem}, {"instance", instance}, {"pass", pass}, {"witness", witness}, {"p", characteristic}};
  if (seed) j["seed"] = *seed;
  return j;
}

}  // namespace bettikit
