#include "hyperjaya/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "hyperjaya/errors.hpp"

namespace hyperjaya {
namespace {

std::string cell_prefix(const ExperimentSpec& spec, std::size_t threads) {
  return fmt::format("{},{},{},{},{},{}", objective(spec.function).name, spec.n, spec.m, threads,
                     spec.conf_h, spec.conf_v);
}

std::string real(double v) { return fmt::format("{:.17g}", v); }

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    fields.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

template <class T>
T parse_integer(std::string_view field, std::size_t line_no) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw IoError(fmt::format("line {}: expected an integer, got '{}'", line_no, field));
  }
  return value;
}

double parse_real(std::string_view field, std::size_t line_no) {
  const std::string copy(field);
  char* end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size()) {
    throw IoError(fmt::format("line {}: expected a number, got '{}'", line_no, field));
  }
  return value;
}

}  // namespace

std::string format_runs_csv(const ExperimentResult& result) {
  std::string out(kRunsHeader);
  out += '\n';
  for (const auto& cell : result.cells) {
    const std::string prefix = cell_prefix(result.spec, cell.threads);
    if (!cell.valid()) {
      out += prefix + ",NA,NA,NA,NA,NA,NA\n";
      continue;
    }
    for (std::size_t r = 0; r < cell.records.size(); ++r) {
      const auto& rec = cell.records[r];
      out += fmt::format("{},{},{},{},{},{},{}\n", prefix, r, rec.seed, real(rec.best_fitness),
                         rec.iterations, rec.evaluations, real(rec.wall_time_s));
    }
  }
  return out;
}

std::string format_summary_csv(const ExperimentResult& result) {
  std::string out(kSummaryHeader);
  out += '\n';
  for (const auto& cell : result.cells) {
    const std::string prefix = cell_prefix(result.spec, cell.threads);
    if (!cell.summary) {
      out += prefix + ",NA,NA,NA,NA,NA,NA,NA\n";
      continue;
    }
    const auto& s = *cell.summary;
    out += fmt::format("{},{},{},{},{},{},{},{}\n", prefix, s.runs, real(s.mean_fitness),
                       real(s.stddev_fitness), real(s.mean_time_s), real(s.stddev_time_s),
                       real(s.mean_iterations), real(s.success_rate));
  }
  return out;
}

std::vector<CsvRun> parse_runs_csv(std::string_view text) {
  std::vector<CsvRun> runs;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1) {
      if (line != kRunsHeader) throw IoError("unexpected per-run CSV header");
      continue;
    }
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 12) {
      throw IoError(fmt::format("line {}: expected 12 fields, got {}", line_no, f.size()));
    }
    CsvRun run;
    run.function = std::string(f[0]);
    run.n = parse_integer<std::size_t>(f[1], line_no);
    run.m = parse_integer<std::size_t>(f[2], line_no);
    run.threads = parse_integer<std::size_t>(f[3], line_no);
    run.conf_h = parse_integer<std::size_t>(f[4], line_no);
    run.conf_v = parse_integer<std::size_t>(f[5], line_no);
    run.valid = f[6] != "NA";
    if (run.valid) {
      run.repeat = parse_integer<std::size_t>(f[6], line_no);
      run.seed = parse_integer<std::uint64_t>(f[7], line_no);
      run.best_fitness = parse_real(f[8], line_no);
      run.iterations = parse_integer<std::uint64_t>(f[9], line_no);
      run.evaluations = parse_integer<std::uint64_t>(f[10], line_no);
      run.wall_time_s = parse_real(f[11], line_no);
    }
    runs.push_back(std::move(run));
  }
  if (line_no == 0) throw IoError("empty per-run CSV");
  return runs;
}

std::vector<CsvRun> read_runs_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}' for reading", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_runs_csv(buffer.str());
  } catch (const IoError& e) {
    throw IoError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError(fmt::format("write to '{}' failed", path.string()));
}

std::optional<PlotFormat> parse_plot_format(std::string_view name) {
  if (name == "dat") return PlotFormat::dat;
  if (name == "svg") return PlotFormat::svg;
  return std::nullopt;
}

OutputPaths output_paths(const std::filesystem::path& runs_path, PlotFormat format) {
  const auto dir = runs_path.parent_path();
  const auto stem = runs_path.stem().string();
  return {runs_path, dir / (stem + "_summary.csv"),
          dir / (stem + (format == PlotFormat::svg ? "_speedup.svg" : "_speedup.dat"))};
}

OutputPaths emit_csv(const ExperimentResult& result, const std::filesystem::path& runs_path) {
  auto paths = output_paths(runs_path, PlotFormat::dat);
  write_text_file(paths.runs, format_runs_csv(result));
  write_text_file(paths.summary, format_summary_csv(result));
  return paths;
}

std::string format_speedup_dat(std::string_view title, const std::vector<SpeedupRow>& rows) {
  std::string out = fmt::format("# {}\n# threads mean_time_s speedup\n", title);
  for (const auto& r : rows) {
    out += fmt::format("{} {} {}\n", r.threads, real(r.mean_time_s), real(r.speedup));
  }
  return out;
}

std::string format_speedup_svg(std::string_view title, const std::vector<SpeedupRow>& rows) {
  constexpr double width = 480.0;
  constexpr double height = 320.0;
  constexpr double margin = 48.0;
  double max_threads = 1.0;
  double max_speedup = 1.0;
  for (const auto& r : rows) {
    max_threads = std::max(max_threads, static_cast<double>(r.threads));
    max_speedup = std::max(max_speedup, r.speedup);
  }
  // Axes share the same scale so the ideal-speedup diagonal is meaningful.
  const double top = std::max(max_threads, max_speedup);
  auto px = [&](double t) { return margin + (t / top) * (width - 2 * margin); };
  auto py = [&](double s) { return height - margin - (s / top) * (height - 2 * margin); };

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\">\n"
      "<text x=\"{}\" y=\"20\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n"
      "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n"
      "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>\n"
      "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#bbb\" stroke-dasharray=\"4\"/>\n"
      "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">threads</text>\n"
      "<text x=\"12\" y=\"{}\" font-size=\"12\">speedup</text>\n",
      width, height, width / 2, title, margin, height - margin, width - margin, height - margin,
      margin, height - margin, margin, margin, px(0), py(0), px(top), py(top), width / 2,
      height - 12, margin - 8);
  std::string points;
  for (const auto& r : rows) {
    const double x = px(static_cast<double>(r.threads));
    const double y = py(r.speedup);
    points += fmt::format("{:.1f},{:.1f} ", x, y);
    out += fmt::format("<circle cx=\"{:.1f}\" cy=\"{:.1f}\" r=\"3\" fill=\"steelblue\"/>\n", x, y);
    out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"10\" text-anchor=\"middle\">{}</text>\n",
                       x, height - margin + 14, r.threads);
  }
  out += fmt::format("<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"{}\"/>\n",
                     points);
  out += "</svg>\n";
  return out;
}

}  // namespace hyperjaya
