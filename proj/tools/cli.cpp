#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <climits>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cjones/asymptotics.hpp"
#include "cjones/fig8.hpp"
#include "cjones/special_functions.hpp"
#include "cjones/statesum.hpp"
#include "cjones/tangle.hpp"
#include "csv.hpp"

namespace cjones::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("--n-list: '" + item + "' is not an integer");
    }
    if (used != item.size()) throw UsageError("--n-list: '" + item + "' is not an integer");
    if (v < 1) throw UsageError("--n-list: N must be >= 1");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--n-list: empty list");
  return out;
}

Complex parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("--t: expected <re>,<im>, got '" + s + "'");
  }
}

CsvTable volume_csv(const VolumeTable& t) {
  CsvTable csv{{"n", "log_jn", "a_n"}, {}};
  for (const auto& r : t.rows) {
    csv.rows.push_back({std::to_string(r.n), format_number(r.log_jn), format_number(r.a_n)});
  }
  return csv;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Colored Jones function state sums and figure-eight volume checks", "cjones"};
  app.require_subcommand(1);
  const auto positive = CLI::Range(1, INT_MAX);

  std::string tangle_path;
  int n = 0;
  int endpoint = 0;
  unsigned workers = 1;
  auto* jones = app.add_subcommand("jones", "Evaluate the state sum of a tangle file");
  jones->add_option("--tangle", tangle_path, "Tangle file")->required();
  jones->add_option("--n", n, "Color N (>= 1)")->required()->check(positive);
  jones->add_option("--endpoint", endpoint, "Label of both endpoints")->check(CLI::NonNegativeNumber);
  jones->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 256u));

  std::string form = "single";
  std::string t_text;
  auto* fig8 = app.add_subcommand("fig8", "Closed forms of J_N for the figure-eight knot");
  fig8->add_option("--n", n, "Color N (>= 1)")->required()->check(positive);
  fig8->add_option("--form", form, "double | single | le")
      ->check(CLI::IsMember({"double", "single", "le"}));
  fig8->add_option("--t", t_text, "Evaluation point <re>,<im> for --form le (default exp(2 pi i / N))");

  std::string n_list;
  std::string out_path;
  bool extrapolate = false;
  auto* volume = app.add_subcommand("volume", "Write 2 pi log J_N / N as CSV");
  volume->add_option("--n-list", n_list, "Comma separated N values")->required();
  volume->add_flag("--extrapolate", extrapolate, "Fit and report the N -> infinity limit");
  volume->add_option("--out", out_path, "Output file or - for stdout")->required();

  auto* ekholm = app.add_subcommand("ekholm", "Max-term bounds on J_N(4_1)");
  ekholm->add_option("--n", n, "Color N (>= 1)")->required()->check(positive);

  auto* saddle = app.add_subcommand("saddle", "Saddle point / hyperbolicity equation report");

  auto* ratios = app.add_subcommand("ratios", "Difference-equation analysis of the double sum");
  ratios->add_option("--n", n, "Color N (>= 2)")->required()->check(CLI::Range(2, INT_MAX));

  double theta = 0.0;
  auto* lob = app.add_subcommand("lob", "Lobachevsky function");
  lob->add_option("--theta", theta, "Angle in radians")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*jones) {
      const auto d = load_tangle(tangle_path);
      const RootContext ctx(n);
      const auto r = evaluate(d, ctx, {endpoint, workers});
      out << format_complex(r.value.real(), r.value.imag()) << '\n';
      out << "admissible_terms=" << r.admissible_terms << '\n';
    } else if (*fig8) {
      if (!t_text.empty() && form != "le") throw UsageError("--t is only valid with --form le");
      const RootContext ctx(n);
      if (form == "single") {
        const double v = fig8_single_sum(ctx);
        if (!std::isfinite(v)) {
          throw std::range_error("J_N overflows a double at N=" + std::to_string(n) +
                                 "; use the volume command for log J_N");
        }
        out << format_number(v) << '\n';
      } else {
        const Complex v = form == "double"
                              ? fig8_double_sum(ctx)
                              : le_colored_jones(n, t_text.empty() ? ctx.q() : parse_complex(t_text));
        out << format_complex(v.real(), v.imag()) << '\n';
      }
    } else if (*volume) {
      auto table = volume_sequence(parse_int_list(n_list));
      if (extrapolate) extrapolate_volume(table);
      const auto csv = volume_csv(table);
      std::ostream* summary = &out;
      if (out_path == "-") {
        write_csv(csv, out);
        summary = &err;
      } else {
        std::ofstream file(out_path);
        if (!file) throw std::runtime_error("cannot open '" + out_path + "' for writing");
        write_csv(csv, file);
      }
      if (table.extrapolated) {
        *summary << "extrapolated=" << format_number(*table.extrapolated) << '\n'
                 << "fit_residual=" << format_number(table.fit_residual) << '\n';
      }
    } else if (*ekholm) {
      const auto r = ekholm_report(n);
      out << "n=" << r.n << '\n'
          << "k_star=" << r.k_star << '\n'
          << "log_g2=" << format_number(r.log_g2) << '\n'
          << "log_jn=" << format_number(r.log_jn) << '\n'
          << "lower_ok=" << yes_no(r.lower_ok) << '\n'
          << "upper_ok=" << yes_no(r.upper_ok) << '\n'
          << "unimodal=" << yes_no(r.unimodal) << '\n'
          << "riemann_sum=" << format_number(r.riemann_sum) << '\n'
          << "riemann_limit=" << format_number(riemann_limit()) << '\n';
    } else if (*saddle) {
      const auto r = saddle_solve();
      out << "u1=" << format_complex(r.roots_u[0].real(), r.roots_u[0].imag()) << '\n'
          << "u2=" << format_complex(r.roots_u[1].real(), r.roots_u[1].imag()) << '\n'
          << "im_F0=" << format_number(r.im_f0) << '\n'
          << "six_lobachevsky_pi_3=" << format_number(6.0 * lobachevsky(std::numbers::pi / 3.0)) << '\n';
    } else if (*ratios) {
      const auto r = summand_ratio_analysis(n);
      out << "n=" << r.n << '\n'
          << "samples=" << r.samples << '\n'
          << "max_ratio_residual=" << format_number(r.max_ratio_residual) << '\n'
          << "k_designated=" << r.k_designated << '\n'
          << "log_f_max=" << format_number(r.log_f_max) << '\n'
          << "v_n=" << format_number(r.v_n) << '\n'
          << "argmax_i=" << r.argmax_i << '\n'
          << "argmax_j=" << r.argmax_j << '\n'
          << "log_abs_f_argmax=" << format_number(r.log_abs_f_argmax) << '\n';
    } else if (*lob) {
      out << format_number(lobachevsky(theta)) << '\n';
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace cjones::cli
