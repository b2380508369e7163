#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "koszul/intpoly.hpp"
#include "koszul/numbers.hpp"
#include "koszul/resolution.hpp"

namespace koszul {

using Json = nlohmann::ordered_json;

// Uniform command output. The JSON layout is fixed:
//   {command, parameters, verdicts, certificates, bounds, characteristic,
//    toolkitVersion}
// and integers too wide for 64 bits serialize as decimal strings.
struct Report {
  std::string command;
  Json parameters = Json::object();
  Json verdicts = Json::array();
  Json certificates = Json::array();
  Json bounds = Json::object();
  long characteristic = 0;
  std::vector<std::string> lines;  // human-readable rendering

  std::string json_dump() const;
  std::string text_dump() const;

  void line(const std::string& s) { lines.push_back(s); }
};

// Decimal string beyond 64-bit range, plain number inside it.
Json json_int(const Int& v);
Json json_poly(const IntPolynomial& p);
Json json_betti(const BettiTable& t);

}  // namespace koszul
