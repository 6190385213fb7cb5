#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "fermat/classifier.hpp"
#include "fermat/enumerator.hpp"
#include "fermat/intersection_ring.hpp"
#include "fermat/picard.hpp"
#include "svg_plot.hpp"

namespace fermat::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool write_file(const std::string& path, const std::string& contents, std::ostream& err) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    err << "error: cannot open '" << path << "' for writing\n";
    return false;
  }
  f << contents;
  f.close();
  if (!f) {
    err << "error: failed writing '" << path << "'\n";
    return false;
  }
  return true;
}

std::array<Int, 4> parse_coefficients(const std::vector<std::string>& raw) {
  if (raw.size() != 4) throw UsageError("expected four integer coefficients");
  std::array<Int, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    std::size_t used = 0;
    try {
      out[i] = std::stoll(raw[i], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != raw[i].size()) throw UsageError("bad coefficient '" + raw[i] + "'");
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

void print_picard(const DiagonalCubic& s, const PicardReport& r, std::ostream& out) {
  out << "surface=" << s.to_string() << "\n"
      << "rank=" << r.rank_over_Q << "\n"
      << "segre=" << (r.segre_rank_one ? "rank-one" : "rank-at-least-two") << "\n"
      << "agreement=" << (r.agreement ? "true" : "false") << "\n"
      << "group_order=" << r.group_order << "\n"
      << "orbit_sizes=" << join(r.orbit_sizes) << "\n";
}

// ---------------------------------------------------------------------------

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Classifier classifier;
  const CountSeries series = count_series(cfg.bounds_grid, classifier, cfg.workers);
  const std::string csv = to_csv(series);

  if (cfg.output_path.empty()) {
    out << csv;
  } else if (!write_file(cfg.output_path, csv, err)) {
    return kIoError;
  }

  if (cfg.emit_points) {
    std::ostringstream dump;
    for (const auto& p : enumerate_X(cfg.bounds_grid.back(), cfg.workers)) {
      dump << point_dump_line(classifier.classify(p)) << "\n";
    }
    const std::string path = (cfg.output_path.empty() ? std::string("counts.csv") : cfg.output_path) + ".points";
    if (!write_file(path, dump.str(), err)) return kIoError;
  }

  if (!cfg.output_path.empty()) {
    out << std::setw(10) << "B" << std::setw(12) << "ALL" << std::setw(12) << "IN_Z"
        << std::setw(12) << "NOT_IN_Z" << std::setw(12) << "IN_Z/ALL" << "\n";
    for (std::size_t i = 0; i < series.bounds.size(); ++i) {
      const auto all = series.of(CountClass::All)[i];
      const auto inz = series.of(CountClass::InZ)[i];
      out << std::setw(10) << series.bounds[i] << std::setw(12) << all << std::setw(12) << inz
          << std::setw(12) << series.of(CountClass::NotInZ)[i] << std::setw(12) << std::fixed
          << std::setprecision(6) << (all ? double(inz) / double(all) : 0.0) << "\n";
    }
  }
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Classifier classifier;
  std::ostringstream dump;
  for (const auto& p : enumerate_X(cfg.height_bound, cfg.workers)) {
    dump << point_dump_line(classifier.classify(p)) << "\n";
  }
  if (cfg.output_path.empty()) {
    out << dump.str();
    return kOk;
  }
  return write_file(cfg.output_path, dump.str(), err) ? kOk : kIoError;
}

int cmd_classify(const std::string& xs, const std::string& ys, std::ostream& out, std::ostream& err) {
  P3Point x = parse_point<4>("1:0:0:0");
  P3Point y = x;
  try {
    x = parse_point<4>(xs);
    y = parse_point<4>(ys);
  } catch (const InvalidPoint& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  if (!on_X(x, y)) {
    err << "error: point (" << x.to_string() << ", " << y.to_string() << ") is not on X\n";
    return kDomainError;
  }
  out << classify_point({x, y}).to_string();
  return kOk;
}

int cmd_fiber_rank(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  const auto coeffs = parse_coefficients(raw);
  try {
    const DiagonalCubic s(coeffs);
    print_picard(s, picard_rank(s), out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

int cmd_lines(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  const auto coeffs = parse_coefficients(raw);
  std::optional<DiagonalCubic> s;
  try {
    s.emplace(coeffs);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  print_picard(*s, picard_rank(*s), out);

  const auto matrix = incidence_matrix();
  out << "lines:\n";
  for (const auto& l : all_lines()) {
    const auto& row = matrix[l.index()];
    const int meets = static_cast<int>(std::count(row.begin(), row.end(), 1));
    out << "  " << l.to_string() << " meets=" << meets << "\n";
  }
  out << "orbits:\n";
  for (const auto& orbit : line_orbits(*s)) {
    out << "  [" << orbit.size() << "]";
    for (const auto& l : orbit) out << " " << l.to_string();
    out << "\n";
  }
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  bool ok = true;
  for (const auto& r : verify_intersection_identities(cfg.rng_seed, cfg.sample_count)) {
    out << (r.passed() ? "PASS" : "FAIL") << "  " << r.formula << "  (" << r.samples
        << " samples, " << r.failures << " failures)\n";
    ok = ok && r.passed();
  }
  const std::array<DivisorClass, 5> top{anticanonical_class(), anticanonical_class(),
                                        anticanonical_class(), anticanonical_class(),
                                        anticanonical_class()};
  out << "info  (-K_X)^5 = " << intersect_on_X(top) << "\n";
  return ok ? kOk : kDomainError;
}

int cmd_rank_survey(const RunConfig& cfg, std::ostream& out) {
  std::mt19937_64 rng(cfg.rng_seed);
  std::uniform_int_distribution<Int> coeff(-20, 19);
  std::map<int, int> ranks;
  std::map<std::size_t, int> orders;
  int disagreements = 0;
  for (int i = 0; i < cfg.sample_count; ++i) {
    std::array<Int, 4> a{};
    for (auto& v : a) {
      v = coeff(rng);
      if (v >= 0) ++v;  // skip zero
    }
    const auto report = picard_rank(DiagonalCubic(a));
    ++ranks[report.rank_over_Q];
    ++orders[report.group_order];
    if (!report.agreement) ++disagreements;
  }
  out << "samples=" << cfg.sample_count << " seed=" << cfg.rng_seed << "\n";
  out << "rank distribution:\n";
  for (const auto& [rank, n] : ranks) {
    out << "  rank " << rank << ": " << n << " (" << std::fixed << std::setprecision(4)
        << double(n) / cfg.sample_count << ")\n";
  }
  out << "galois group orders:\n";
  for (const auto& [order, n] : orders) out << "  " << order << ": " << n << "\n";
  out << "disagreements=" << disagreements << "\n";
  return disagreements == 0 ? kOk : kDomainError;
}

int cmd_plot(const std::string& csv_path, const std::string& svg_path, std::ostream& out,
             std::ostream& err) {
  std::ifstream in(csv_path, std::ios::binary);
  if (!in) {
    err << "error: cannot read '" << csv_path << "'\n";
    return kMissingInput;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  CountSeries series;
  try {
    series = parse_csv(buf.str());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  if (series.bounds.empty()) {
    err << "error: no rows in '" << csv_path << "'\n";
    return kDomainError;
  }
  if (!write_file(svg_path, render_svg(series), err)) return kIoError;
  out << "wrote " << svg_path << " (" << series.bounds.size() << " rows)\n";
  return kOk;
}

}  // namespace

std::vector<Int> parse_bounds(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size() || v < 1) {
      throw UsageError("bad bound '" + part + "' (positive integers expected)");
    }
    if (!out.empty() && v <= out.back()) throw UsageError("bounds must be strictly ascending");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty bounds list");
  if (out.back() > kMaxFiberBound) throw UsageError("largest bound exceeds supported range");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational points, exceptional sets and Picard ranks on the Fermat cubic surface bundle"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string bounds_text;
  std::string point_x, point_y, csv_path, svg_path;
  std::vector<std::string> coefficients;

  auto* count = app.add_subcommand("count", "Counting series N(B) per class, as CSV");
  count->add_option("--bounds", bounds_text, "Ascending comma-separated height bounds")->required();
  count->add_option("--out", cfg.output_path, "CSV output path (stdout if omitted)");
  count->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  count->add_flag("--emit-points", cfg.emit_points, "Also write <out>.points with every point");

  auto* enumerate = app.add_subcommand("enumerate", "Dump every point up to a height bound");
  enumerate->add_option("--bound", cfg.height_bound, "Anticanonical height bound")
      ->required()
      ->check(CLI::Range(Int{1}, kMaxFiberBound));
  enumerate->add_option("--out", cfg.output_path, "Output path (stdout if omitted)");
  enumerate->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("classify", "Classify one point of X against Z");
  classify->add_option("x", point_x, "x as a:b:c:d")->required();
  classify->add_option("y", point_y, "y as a:b:c:d")->required();

  auto* fiber_rank = app.add_subcommand("fiber-rank", "Picard rank of a diagonal cubic surface");
  fiber_rank->add_option("coefficients", coefficients, "a0 a1 a2 a3")->required()->expected(4);

  auto* lines = app.add_subcommand("lines", "27 lines, Galois orbits and incidences");
  lines->add_option("coefficients", coefficients, "a0 a1 a2 a3")->required()->expected(4);

  auto* verify = app.add_subcommand("verify-intersections", "Check the intersection identities");
  cfg.sample_count = 20;
  verify->add_option("--samples", cfg.sample_count, "Random parameter points per identity")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.rng_seed, "RNG seed");

  auto* survey = app.add_subcommand("rank-survey", "Empirical Picard rank distribution");
  int survey_samples = 200;
  survey->add_option("--samples", survey_samples, "Random surfaces")->check(CLI::PositiveNumber);
  survey->add_option("--seed", cfg.rng_seed, "RNG seed");

  auto* plot = app.add_subcommand("plot", "Render a count CSV as a log-log SVG chart");
  plot->add_option("csv", csv_path, "Input CSV")->required();
  plot->add_option("svg", svg_path, "Output SVG")->required();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*count) {
      cfg.command = Command::Count;
      cfg.bounds_grid = parse_bounds(bounds_text);
      return cmd_count(cfg, out, err);
    }
    if (*enumerate) return cmd_enumerate(cfg, out, err);
    if (*classify) return cmd_classify(point_x, point_y, out, err);
    if (*fiber_rank) return cmd_fiber_rank(coefficients, out, err);
    if (*lines) return cmd_lines(coefficients, out, err);
    if (*verify) return cmd_verify(cfg, out);
    if (*survey) {
      cfg.sample_count = survey_samples;
      return cmd_rank_survey(cfg, out);
    }
    if (*plot) return cmd_plot(csv_path, svg_path, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const InvalidPoint& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kUsage;
}

}  // namespace fermat::cli
