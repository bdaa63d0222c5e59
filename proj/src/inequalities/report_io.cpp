#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "lsg/inequalities/report.hpp"

namespace lsg {

namespace {

nlohmann::ordered_json number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  return v;
}

}  // namespace

nlohmann::ordered_json reports_to_json(const std::vector<InequalityReport>& reports) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["lhs"] = number(r.lhs);
    j["rhs"] = number(r.rhs);
    j["slack"] = number(r.slack);
    j["satisfied"] = r.satisfied;
    j["rigidity"] = r.rigidity;
    j["params"] = {{"n", r.params.n}, {"m", number(r.params.m)}, {"p", number(r.params.p)},
                   {"t", number(r.params.t)}};
    j["note"] = r.note;
    j["tolerances"] = {{"tol", r.tolerances.tol}, {"rigidity_tol", r.tolerances.rigidity_tol}};
    arr.push_back(std::move(j));
  }
  return arr;
}

void write_reports_text(const std::vector<InequalityReport>& reports, std::ostream& out) {
  std::size_t width = 4;
  for (const auto& r : reports) width = std::max(width, r.name.size());
  out << fmt::format("{:<{}}  {:>4} {:>6} {:>6} {:>8}  {:>22} {:>22} {:>11}  {:<3} {:<3}  {}\n", "name",
                     width, "n", "m", "p", "t", "lhs", "rhs", "slack", "ok", "eq", "note");
  for (const auto& r : reports) {
    out << fmt::format("{:<{}}  {:>4} {:>6.3g} {:>6.3g} {:>8.4g}  {:>22.15g} {:>22.15g} {:>11.3e}  {:<3} {:<3}  {}\n",
                       r.name, width, r.params.n, r.params.m, r.params.p, r.params.t, r.lhs, r.rhs,
                       r.slack, r.satisfied ? "yes" : "NO", r.rigidity ? "yes" : "-", r.note);
  }
}

}  // namespace lsg
