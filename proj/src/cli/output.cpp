#include "lsg/cli/output.hpp"

#include <fstream>

#include "lsg/core/errors.hpp"
#include "lsg/levelset/sweep.hpp"

namespace lsg::cli {

namespace fs = std::filesystem;

namespace {

std::ofstream open_output(const fs::path& path) {
  // Binary mode keeps LF line endings on every platform.
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  return out;
}

}  // namespace

void write_json_file(const fs::path& path, const nlohmann::ordered_json& doc) {
  auto out = open_output(path);
  out << doc.dump(2) << '\n';
}

std::vector<fs::path> write_artifacts(const RunResult& result, const RunConfig& config) {
  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec) throw Error("cannot create '" + config.out_dir.string() + "': " + ec.message());
  std::vector<fs::path> written;
  if (config.write_csv) {
    const fs::path path = config.out_dir / "table.csv";
    auto out = open_output(path);
    write_table_csv(result.table, out);
    written.push_back(path);
  }
  if (config.write_json) {
    written.push_back(config.out_dir / "table.json");
    write_json_file(written.back(), table_to_json(result.table));
    written.push_back(config.out_dir / "reports.json");
    write_json_file(written.back(), reports_to_json(result.reports));
  }
  {
    const fs::path path = config.out_dir / "reports.txt";
    auto out = open_output(path);
    write_reports_text(result.reports, out);
    written.push_back(path);
  }
  written.push_back(config.out_dir / "manifest.json");
  write_json_file(written.back(), result.manifest);
  written.push_back(config.out_dir / "timings.json");
  write_json_file(written.back(), result.timings);
  return written;
}

}  // namespace lsg::cli
