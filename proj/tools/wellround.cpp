#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wellround/asympt.hpp"
#include "wellround/general.hpp"
#include "wellround/io.hpp"
#include "wellround/sublattice.hpp"
#include "wellround/wr_hex.hpp"
#include "wellround/wr_square.hpp"

using namespace wellround;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitUnsupported = 4;

struct InvariantBreach : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnsupportedDimension:
    case ErrorKind::UnsupportedDiscriminant:
    case ErrorKind::NotApplicable:
    case ErrorKind::NotRational:
    case ErrorKind::NoFrame:
      return kExitUnsupported;
    default:
      return kExitBadInput;
  }
}

enum class Format { Text, Csv, Json };

struct Common {
  std::string gram;
  std::string preset;
  std::string format = "auto";
  int threads = 1;

  Format resolve(Format fallback) const {
    if (format == "csv") return Format::Csv;
    if (format == "json") return Format::Json;
    if (format == "text") return Format::Text;
    return fallback;
  }
};

void add_lattice_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--gram,--lattice", c.gram, "Gram matrix: JSON, [[a,b],[b,c]], {t:..., n:...} or diag(a,c;D=n)");
  cmd->add_option("--preset", c.preset, "square or hexagonal")->check(CLI::IsMember({"square", "hexagonal", "hex"}));
}

void add_output_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"auto", "text", "csv", "json"}))
      ->envname("WELLROUND_FORMAT");
  cmd->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber)->envname("WELLROUND_THREADS");
}

GramForm lattice_of(const Common& c) {
  if (!c.gram.empty() && !c.preset.empty()) throw Error(ErrorKind::Parse, "give either --gram or --preset, not both");
  if (!c.preset.empty()) return parse_lattice_spec(c.preset);
  if (!c.gram.empty()) return parse_lattice_spec(c.gram);
  throw Error(ErrorKind::Parse, "a lattice is required (--gram or --preset)");
}

std::string with_error(double value, double error) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.10g \xC2\xB1 %.2g", value, error);
  return buf;
}

Json estimate_json(const Estimate& e) {
  Json j;
  j["value"] = e.value;
  j["error"] = e.error;
  j["text"] = with_error(e.value, e.error);
  return j;
}

void print_series(const ArithSeq& f, const std::string& column, Format fmt) {
  if (fmt == Format::Json) {
    Json rows = Json::array();
    std::int64_t acc = 0;
    for (std::int64_t n = 1; n <= f.bound(); ++n) {
      acc += f(n);
      rows.push_back({{"n", n}, {column, f(n)}, {"summatory", acc}});
    }
    std::cout << rows.dump(2) << "\n";
    return;
  }
  write_csv_row(std::cout, {"n", column, "summatory"});
  std::int64_t acc = 0;
  for (std::int64_t n = 1; n <= f.bound(); ++n) {
    acc += f(n);
    write_csv_row(std::cout, {std::to_string(n), std::to_string(f(n)), std::to_string(acc)});
  }
}

bool is_preset(const Common& c, const char* name) {
  return c.preset == name || (std::string(name) == "hexagonal" && c.preset == "hex");
}

/// Well-rounded counts from the generating-function side.
ArithSeq formula_counts(const Common& c, const GramForm& g, std::int64_t n) {
  if (is_preset(c, "square")) return a_square(n);
  if (is_preset(c, "hexagonal")) return a_hex(n);
  if (is_rational(g)) return count_wr_rational(g, n);
  const auto verdict = existence(g);
  if (verdict.kind == ExistenceKind::NoWellRounded) return ArithSeq(n);
  return count_wr_nonrational(g, n);
}

int cmd_reduce(const Common& c, bool show_gram) {
  const GramForm g = lattice_of(c);
  const auto [red, u] = gauss_reduce(g);
  const LatticeType t = classify_reduced(red.a, red.b, red.c);
  const Format fmt = c.resolve(Format::Text);
  if (fmt == Format::Json) {
    Json j;
    j["gram"] = gram_to_json(g);
    j["reduced"] = gram_to_json(red);
    j["basis"] = {{u(0, 0), u(0, 1)}, {u(1, 0), u(1, 1)}};
    j["type"] = to_string(t);
    j["well_rounded"] = is_well_rounded_type(t);
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    write_csv_row(std::cout, {"a", "b", "c", "type"});
    write_csv_row(std::cout, {red.a.to_string(), red.b.to_string(), red.c.to_string(), to_string(t)});
  } else if (show_gram) {
    std::cout << red.to_string() << " (" << display_name(t) << ")\n";
  } else {
    std::cout << display_name(t) << "\n";
  }
  return kExitOk;
}

int cmd_census(const Common& c, std::int64_t n, const std::string& mode, bool primitive) {
  const GramForm g = lattice_of(c);
  const Format fmt = c.resolve(Format::Csv);
  std::optional<CensusReport> census;
  std::optional<ArithSeq> formula;
  if (mode != "formula") census = wr_census_bruteforce(g, n, {primitive, c.threads});
  if (mode != "bruteforce") {
    if (primitive) throw Error(ErrorKind::NotApplicable, "the formula pipeline counts all sublattices, not primitive ones");
    formula = formula_counts(c, g, n);
  }
  std::int64_t mismatches = 0;
  if (fmt == Format::Json) {
    Json rows = census ? census_to_json(*census) : Json::array();
    for (std::int64_t k = 1; k <= n; ++k) {
      if (!census) rows.push_back({{"n", k}});
      if (formula) {
        rows[k - 1]["formula"] = (*formula)(k);
        if (census) {
          const std::int64_t d = (*formula)(k) - census->well_rounded(k);
          rows[k - 1]["diff"] = d;
          mismatches += d != 0;
        }
      }
    }
    std::cout << rows.dump(2) << "\n";
  } else {
    std::vector<std::string> header = census ? census_columns() : std::vector<std::string>{"n"};
    if (formula) header.emplace_back("formula");
    if (census && formula) header.emplace_back("diff");
    write_csv_row(std::cout, header);
    for (std::int64_t k = 1; k <= n; ++k) {
      std::vector<std::string> row = census ? census_row(*census, k) : std::vector<std::string>{std::to_string(k)};
      if (formula) row.push_back(std::to_string((*formula)(k)));
      if (census && formula) {
        const std::int64_t d = (*formula)(k) - census->well_rounded(k);
        row.push_back(std::to_string(d));
        mismatches += d != 0;
      }
      write_csv_row(std::cout, row);
    }
  }
  if (mismatches != 0) {
    throw InvariantBreach("formula and census disagree at " + std::to_string(mismatches) + " indices");
  }
  return kExitOk;
}

int cmd_series(const Common& c, const std::string& name, std::int64_t n) {
  const Format fmt = c.resolve(Format::Csv);
  ArithSeq f;
  if (name == "b_square") f = b_square(n);
  else if (name == "b_square_primitive") f = b_square_primitive(n);
  else if (name == "a_square") f = a_square(n);
  else if (name == "rhombic_square") f = rhombic_square_series(n).all;
  else if (name == "rhombic_square_primitive") f = rhombic_square_series(n).primitive;
  else if (name == "b_hex") f = b_hex(n);
  else if (name == "b_hex_primitive") f = b_hex_primitive(n);
  else if (name == "a_hex") f = a_hex(n);
  else if (name == "divisors") f = convolve(ones_seq(n), ones_seq(n));
  else f = formula_counts(c, lattice_of(c), n);
  print_series(f, name == "wr" ? "a" : name, fmt);
  return kExitOk;
}

std::vector<std::int64_t> parse_checkpoints(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = 0.0;
    try {
      v = std::stod(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad checkpoint '" + item + "'");
    }
    if (!(v >= 2.0) || v != std::floor(v)) throw Error(ErrorKind::Parse, "checkpoints must be integers >= 2, got '" + item + "'");
    out.push_back(static_cast<std::int64_t>(v));
  }
  if (out.empty()) throw Error(ErrorKind::Parse, "no checkpoints given");
  return out;
}

int cmd_asympt(const Common& c, const std::string& lattice, const std::string& checkpoints, std::int64_t terms) {
  const auto points = parse_checkpoints(checkpoints);
  std::int64_t top = 0;
  for (auto p : points) top = std::max(top, p);
  ArithSeq counts;
  AsymptoticModel model;
  if (lattice == "square") {
    counts = a_square(top);
    model = square_model(c_square_eval(terms));
  } else if (lattice == "hex" || lattice == "hexagonal") {
    counts = a_hex(top);
    model = hex_model(c_triangle_eval(terms));
  } else if (lattice == "similar-square") {
    counts = b_square(top);
    model = similar_square_model();
  } else if (lattice == "similar-hex") {
    counts = b_hex(top);
    model = similar_hex_model();
  } else {
    const GramForm g = lattice_of(c);
    if (is_rational(g)) {
      counts = count_wr_rational(g, top);
      model = fitted_model(counts, std::max<std::int64_t>(2, top / 100));
    } else {
      const auto frame = unique_frame(g);
      counts = count_wr_nonrational(g, top);
      model = nonrational_model(gamma_tilde_and_csl(frame).index);
    }
  }
  const auto rep = model_report(counts, model, points);
  const Format fmt = c.resolve(Format::Csv);
  if (fmt == Format::Json) {
    Json j;
    j["model"] = {{"c1", model.c1}, {"c2", model.c2}, {"error_exponent", model.error_exponent}, {"description", model.description}};
    j["flagged"] = rep.flagged;
    j["rows"] = Json::array();
    for (const auto& r : rep.rows) {
      j["rows"].push_back({{"x", r.x},
                           {"count", r.count},
                           {"model", r.model},
                           {"residual", r.residual},
                           {"relative", r.relative},
                           {"normalized", r.normalized},
                           {"normalized_sqrt", r.normalized_sqrt}});
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  write_csv_row(std::cout, {"x", "count", "model", "residual", "relative", "residual_over_x34_log_x", "residual_over_sqrt_x"});
  for (const auto& r : rep.rows) {
    char buf[5][40];
    std::snprintf(buf[0], 40, "%.3f", r.model);
    std::snprintf(buf[1], 40, "%.3f", r.residual);
    std::snprintf(buf[2], 40, "%.3e", r.relative);
    std::snprintf(buf[3], 40, "%.4f", r.normalized);
    std::snprintf(buf[4], 40, "%.4f", r.normalized_sqrt);
    write_csv_row(std::cout, {std::to_string(r.x), std::to_string(r.count), buf[0], buf[1], buf[2], buf[3], buf[4]});
  }
  if (rep.flagged) std::cerr << "note: normalized residuals are not flat across checkpoints\n";
  return kExitOk;
}

int cmd_constants(const Common& c, std::int64_t terms) {
  const auto t = constants_table(terms);
  const std::vector<std::pair<const char*, Estimate>> rows = {
      {"L1_chi4", t.L1_chi4},          {"L1_chi3", t.L1_chi3},       {"Lp_over_L_chi4", t.Lp_over_L_chi4},
      {"Lp_over_L_chi3", t.Lp_over_L_chi3}, {"euler_gamma", t.euler_gamma}, {"zeta2", t.zeta2},
      {"zetap2_over_zeta2", t.zetap2_over_zeta2}, {"c_square", t.c_square}, {"c_triangle", t.c_triangle}};
  const Format fmt = c.resolve(Format::Json);
  if (fmt == Format::Json) {
    Json j;
    for (const auto& [name, e] : rows) j[name] = estimate_json(e);
    std::cout << j.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    write_csv_row(std::cout, {"name", "value", "error"});
    for (const auto& [name, e] : rows) {
      char v[40], er[40];
      std::snprintf(v, sizeof v, "%.12g", e.value);
      std::snprintf(er, sizeof er, "%.2g", e.error);
      write_csv_row(std::cout, {name, v, er});
    }
  } else {
    for (const auto& [name, e] : rows) std::cout << name << " " << with_error(e.value, e.error) << "\n";
  }
  return kExitOk;
}

int cmd_exists(const Common& c) {
  const GramForm g = lattice_of(c);
  const auto v = existence(g);
  std::optional<ReflectionFrame> frame;
  if (v.kind == ExistenceKind::TraceRationalOnly || v.kind == ExistenceKind::NormConditionHolds) frame = unique_frame(g);
  const Format fmt = c.resolve(Format::Text);
  if (fmt == Format::Json) {
    Json j;
    j["gram"] = gram_to_json(g);
    j["verdict"] = to_string(v.kind);
    if (v.kind == ExistenceKind::NormConditionHolds) {
      j["q"] = v.q.get_str();
      j["r"] = v.r.get_str();
    }
    if (frame) j["frame"] = frame_to_json(*frame);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(v.kind);
    if (v.kind == ExistenceKind::NormConditionHolds) std::cout << " q=" << v.q.get_str() << " r=" << v.r.get_str();
    if (frame) std::cout << " frame w=" << to_string(frame->w) << " z=" << to_string(frame->z) << " sigma=" << frame->sigma;
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_frames(const Common& c, std::int64_t bound) {
  const GramForm g = lattice_of(c);
  const auto frames = is_rational(g) ? enumerate_frames(g, bound) : std::vector<ReflectionFrame>{unique_frame(g)};
  const Format fmt = c.resolve(Format::Json);
  if (fmt == Format::Json) {
    Json j = Json::array();
    for (const auto& f : frames) j.push_back(frame_to_json(f));
    std::cout << j.dump(2) << "\n";
  } else {
    write_csv_row(std::cout, {"w", "z", "sigma", "kappa_sq", "parity"});
    for (const auto& f : frames) {
      write_csv_row(std::cout, {to_string(f.w), to_string(f.z), std::to_string(f.sigma), f.kappa_sq.to_string(), to_string(f.parity)});
    }
  }
  return kExitOk;
}

int cmd_count(const Common& c, std::int64_t n) {
  const GramForm g = lattice_of(c);
  const WrCount r = is_rational(g) ? count_wr_rational_report(g, n) : count_wr_nonrational_report(g, n);
  const Format fmt = c.resolve(Format::Csv);
  if (fmt == Format::Json) {
    Json j;
    j["frames"] = r.frames;
    j["rows"] = Json::array();
    std::int64_t acc = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
      acc += r.counts(k);
      j["rows"].push_back({{"n", k}, {"a", r.counts(k)}, {"summatory", acc}, {"boundary_hits", r.boundary_hits(k)}});
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  print_series(r.counts, "a", fmt);
  return kExitOk;
}

int cmd_epstein(const Common& c, const std::vector<double>& form, double s, double radius, bool residue, bool primitive) {
  if (form.size() != 3) throw Error(ErrorKind::Parse, "--form needs a,b,c");
  const EpsteinForm q{form[0], form[1], form[2]};
  Json j;
  j["form"] = {{"a", q.a}, {"b", q.b}, {"c", q.c}, {"d", q.det()}};
  if (residue) {
    const auto r = epstein_residue_estimate(q, 8, radius, c.threads);
    j["residue"] = estimate_json({r.value, r.error});
    j["target"] = M_PI / std::sqrt(q.det());
    j["monotone"] = r.monotone;
    j["ladder"] = Json::array();
    for (std::size_t i = 0; i < r.ladder.size(); ++i) j["ladder"].push_back({{"s", r.s_values[i]}, {"scaled", r.ladder[i]}});
  } else {
    const auto v = primitive ? epstein_primitive_truncated(q, s, radius, c.threads) : epstein_truncated(q, s, radius, c.threads);
    j["s"] = s;
    j["radius"] = radius;
    j["value"] = estimate_json({v.value, std::abs(v.tail)});
    j["partial"] = v.partial;
    j["points"] = v.points;
  }
  const Format fmt = c.resolve(Format::Json);
  if (fmt == Format::Json) {
    std::cout << j.dump(2) << "\n";
  } else if (residue) {
    std::cout << "residue " << j["residue"]["text"].get<std::string>() << " (pi/sqrt(d) = " << j["target"].get<double>() << ")\n";
  } else {
    std::cout << "zeta_Q(" << s << ") " << j["value"]["text"].get<std::string>() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Well-rounded sublattices of planar lattices: census, generating functions, asymptotics"};
  app.require_subcommand(1);
  Common common;

  auto* reduce = app.add_subcommand("reduce", "Gauss-Lagrange reduced Gram matrix and type");
  auto* classify = app.add_subcommand("classify", "Geometric type of a lattice");
  for (auto* cmd : {reduce, classify}) {
    add_lattice_options(cmd, common);
    add_output_options(cmd, common);
  }

  std::int64_t max_index = 1000;
  std::string mode = "bruteforce";
  bool primitive = false;
  auto* census = app.add_subcommand("census", "Count sublattices of each index by type");
  add_lattice_options(census, common);
  add_output_options(census, common);
  census->add_option("--max,-N", max_index, "Largest index")->check(CLI::PositiveNumber)->envname("WELLROUND_MAX");
  census->add_option("--mode", mode, "bruteforce, formula or both")->check(CLI::IsMember({"bruteforce", "formula", "both"}));
  census->add_flag("--primitive", primitive, "Only primitive sublattices");

  std::string series_name = "wr";
  auto* series = app.add_subcommand("series", "Coefficients a(n) and partial sums of a counting series");
  add_lattice_options(series, common);
  add_output_options(series, common);
  series->add_option("--max,-N", max_index, "Largest index")->check(CLI::PositiveNumber)->envname("WELLROUND_MAX");
  series->add_option("--name", series_name, "Series name")
      ->check(CLI::IsMember({"wr", "b_square", "b_square_primitive", "a_square", "rhombic_square", "rhombic_square_primitive",
                             "b_hex", "b_hex_primitive", "a_hex", "divisors"}));

  std::string lattice_kind = "square";
  std::string checkpoints = "1e3,1e4,1e5";
  std::int64_t terms = 1'000'000;
  auto* asympt = app.add_subcommand("asympt", "Residuals of the counts against the asymptotic law");
  asympt->add_subcommand("report", "Residual table (default action)")->fallthrough();
  add_lattice_options(asympt, common);
  add_output_options(asympt, common);
  asympt->add_option("--kind", lattice_kind, "square, hex, similar-square, similar-hex or custom")
      ->check(CLI::IsMember({"square", "hex", "hexagonal", "similar-square", "similar-hex", "custom"}));
  asympt->add_option("--checkpoints", checkpoints, "Comma-separated checkpoints")->envname("WELLROUND_CHECKPOINTS");
  asympt->add_option("--terms", terms, "Bracket-sum terms for the constants")->check(CLI::Range(100, 100'000'000));

  auto* constants = app.add_subcommand("constants", "Numerical constants with error bounds");
  add_output_options(constants, common);
  constants->add_option("--terms", terms, "Bracket-sum terms")->check(CLI::Range(100, 100'000'000));

  auto* exists = app.add_subcommand("exists", "Decide whether well-rounded sublattices exist");
  add_lattice_options(exists, common);
  add_output_options(exists, common);

  std::int64_t bound = 1;
  auto* frames = app.add_subcommand("frames", "Primitive orthogonal frames with a member in the coordinate box");
  add_lattice_options(frames, common);
  add_output_options(frames, common);
  frames->add_option("--bound,-H", bound, "Coordinate bound")->check(CLI::NonNegativeNumber);

  auto* count = app.add_subcommand("count", "Well-rounded counts from the reflection-frame sum");
  add_lattice_options(count, common);
  add_output_options(count, common);
  count->add_option("--max-index,--max,-N", max_index, "Largest index")->check(CLI::PositiveNumber)->envname("WELLROUND_MAX");

  std::vector<double> form{1.0, 0.0, 1.0};
  double s = 2.0, radius = 1e5;
  bool residue = false, epstein_primitive = false;
  auto* epstein = app.add_subcommand("epstein", "Truncated Epstein zeta values and residue estimate");
  add_output_options(epstein, common);
  epstein->add_option("--form", form, "Coefficients a,b,c of a m^2 + 2 b m n + c n^2")->delimiter(',')->expected(3);
  epstein->add_option("--s", s, "Real s > 1");
  epstein->add_option("--radius,-R", radius, "Truncation radius");
  epstein->add_flag("--residue", residue, "Estimate the residue at s = 1");
  epstein->add_flag("--primitive", epstein_primitive, "Sum over coprime (m, n) only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (reduce->parsed()) return cmd_reduce(common, true);
    if (classify->parsed()) return cmd_reduce(common, false);
    if (census->parsed()) return cmd_census(common, max_index, mode, primitive);
    if (series->parsed()) return cmd_series(common, series_name, max_index);
    if (asympt->parsed()) {
      if (lattice_kind != "custom" && (!common.gram.empty() || !common.preset.empty())) lattice_kind = "custom";
      return cmd_asympt(common, lattice_kind, checkpoints, terms);
    }
    if (constants->parsed()) return cmd_constants(common, terms);
    if (exists->parsed()) return cmd_exists(common);
    if (frames->parsed()) return cmd_frames(common, bound);
    if (count->parsed()) return cmd_count(common, max_index);
    if (epstein->parsed()) return cmd_epstein(common, form, s, radius, residue, epstein_primitive);
  } catch (const InvariantBreach& e) {
    std::cerr << "wellround: invariant breach: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const Error& e) {
    std::cerr << "wellround: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "wellround: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}
