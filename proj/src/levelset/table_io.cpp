#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "lsg/levelset/sweep.hpp"

namespace lsg {

std::string format_exponent(double p) {
  if (std::isinf(p)) return "inf";
  return fmt::format("{}", p);
}

std::vector<std::string> FunctionalTable::column_names() const {
  std::vector<std::string> names = {"t", "s"};
  for (double p : p_values) {
    const std::string e = format_exponent(p);
    names.push_back("U_" + e);
    names.push_back("Phi_" + e);
    names.push_back("dU_" + e + "_formula");
    names.push_back("dU_" + e + "_fd");
  }
  names.push_back("excluded_area");
  names.push_back("perturbation");
  return names;
}

namespace {

std::string num(double v) { return fmt::format("{:.17g}", v == 0.0 ? 0.0 : v); }

}  // namespace

void write_table_csv(const FunctionalTable& table, std::ostream& out) {
  const auto names = table.column_names();
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
  out << '\n';
  for (const auto& r : table.rows) {
    out << num(r.t) << ',' << num(r.s);
    for (std::size_t i = 0; i < table.p_values.size(); ++i) {
      out << ',' << num(r.up[i]) << ',' << num(r.phip[i]) << ',' << num(r.dup_formula[i]) << ','
          << num(r.dup_fd[i]);
    }
    out << ',' << num(r.excluded_area) << ',' << num(r.perturbation) << '\n';
  }
}

nlohmann::ordered_json table_to_json(const FunctionalTable& table) {
  nlohmann::ordered_json doc;
  doc["p_values"] = table.p_values;
  doc["fd_step"] = table.fd_step;
  doc["columns"] = table.column_names();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : table.rows) {
    nlohmann::ordered_json row;
    row["t"] = r.t;
    row["s"] = r.s;
    for (std::size_t i = 0; i < table.p_values.size(); ++i) {
      const std::string e = format_exponent(table.p_values[i]);
      row["U_" + e] = r.up[i];
      row["Phi_" + e] = r.phip[i];
      row["dU_" + e + "_formula"] = r.dup_formula[i];
      row["dU_" + e + "_fd"] = r.dup_fd[i];
    }
    row["excluded_area"] = r.excluded_area;
    row["perturbation"] = r.perturbation;
    row["components"] = r.components;
    row["ok"] = r.ok;
    row["error"] = r.error;
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

}  // namespace lsg
