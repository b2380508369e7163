#include "koszul/report.hpp"

#include "koszul/version.hpp"

namespace koszul {

Json json_int(const Int& v) {
  if (v.fits_slong_p()) return Json(static_cast<long long>(v.get_si()));
  return Json(to_string(v));
}

Json json_poly(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const Int& c : p.coeff) arr.push_back(json_int(c));
  return arr;
}

Json json_betti(const BettiTable& t) {
  Json cells = Json::array();
  for (const auto& [cell, beta] : t.cells) {
    if (beta == 0) continue;
    cells.push_back(Json::array({cell.first, cell.second, json_int(beta)}));
  }
  return Json{{"homologicalBound", t.h},
              {"internalDegreeBound", t.D},
              {"aborted", t.aborted},
              {"cells", cells}};
}

std::string Report::json_dump() const {
  Json j{{"command", command},
         {"parameters", parameters},
         {"verdicts", verdicts},
         {"certificates", certificates},
         {"bounds", bounds},
         {"characteristic", characteristic},
         {"toolkitVersion", kToolkitVersion}};
  return j.dump(2) + "\n";
}

std::string Report::text_dump() const {
  std::string out = "[" + command + "]\n";
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace koszul
