// Command-line front end: tables and reports for polynomial values, the
// asymptotic envelope/phase, convergence studies, orthogonality checks, the
// bound-state spectrum, and generating-function verification.  CSV or JSON,
// deterministic output, numbers at 15 significant digits.

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cdhahn/cdhahn.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string fmt(long long v) { return std::to_string(v); }

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  // Extra top-level scalars for the JSON rendering (e.g. fitted exponent).
  std::vector<std::pair<std::string, double>> extras;
};

std::string to_csv(const Table& table) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ',';
    out << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << row[i];
    }
    out << '\n';
  }
  return out.str();
}

// Cells hold preformatted strings; numeric ones become JSON numbers again so
// consumers see the same 15-digit values in both formats.  Integer-looking
// cells (degrees, levels) stay integers rather than picking up a ".0".
ordered_json cell_value(const std::string& cell) {
  if (cell.find_first_not_of("-0123456789") == std::string::npos && !cell.empty()) {
    char* end = nullptr;
    errno = 0;
    const long long i = std::strtoll(cell.c_str(), &end, 10);
    if (errno == 0 && end != cell.c_str() && *end == '\0') return i;
  }
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() && *end == '\0') return v;
  return cell;
}

std::string to_json(const Table& table, const ordered_json& config) {
  ordered_json root;
  root["config"] = config;
  for (const auto& [key, value] : table.extras) {
    if (std::isfinite(value)) {
      root[key] = cell_value(fmt(value));
    } else {
      root[key] = nullptr;
    }
  }
  root["rows"] = ordered_json::array();
  for (const auto& row : table.rows) {
    ordered_json obj;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      obj[table.columns[i]] = cell_value(row[i]);
    }
    root["rows"].push_back(std::move(obj));
  }
  return root.dump(2) + "\n";
}

int emit(const Table& table, const ordered_json& config, const std::string& format,
         const std::string& out_path) {
  const std::string text = format == "json" ? to_json(table, config) : to_csv(table);
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return 2;
  }
  out << text;
  return 0;
}

// Re-reads a CSV produced by this tool, reformats every numeric field, and
// verifies the result is byte-identical to the input.
int run_check(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string original = buffer.str();

  std::string rebuilt;
  rebuilt.reserve(original.size());
  std::size_t line_start = 0;
  std::size_t line_no = 0;
  long long rows = 0;
  while (line_start <= original.size()) {
    const std::size_t nl = original.find('\n', line_start);
    const bool has_newline = nl != std::string::npos;
    const std::string line =
        original.substr(line_start, has_newline ? nl - line_start : std::string::npos);
    if (!has_newline && line.empty()) break;
    std::string out_line;
    std::size_t field_start = 0;
    while (true) {
      const std::size_t comma = line.find(',', field_start);
      const std::string field = line.substr(
          field_start, comma == std::string::npos ? std::string::npos : comma - field_start);
      if (line_no == 0) {
        out_line += field;  // header tokens pass through verbatim
      } else {
        const ordered_json v = cell_value(field);
        out_line += v.is_number() ? fmt(v.get<double>()) : field;
      }
      if (comma == std::string::npos) break;
      out_line += ',';
      field_start = comma + 1;
    }
    if (line_no > 0 && !line.empty()) ++rows;
    rebuilt += out_line;
    if (has_newline) rebuilt += '\n';
    if (!has_newline) break;
    line_start = nl + 1;
    ++line_no;
  }

  if (rebuilt != original) {
    std::cerr << "check failed: re-serialized CSV differs from " << path << "\n";
    return 1;
  }
  std::cout << "round-trip clean: " << rows << " rows\n";
  return 0;
}

struct CommonFlags {
  double mu = 0.0, a = 0.0, b = 0.0;
  std::string format = "csv";
  std::string out_path;
  double tol = 1e-8;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--mu", f.mu, "parameter mu")->required();
  cmd->add_option("--a", f.a, "parameter a")->required();
  cmd->add_option("--b", f.b, "parameter b")->required();
  cmd->add_option("--format", f.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->default_val("csv");
  cmd->add_option("--out", f.out_path, "output path (default: standard output)");
  cmd->add_option("--tol", f.tol, "quadrature tolerance")->default_val(1e-8);
}

ordered_json base_config(const std::string& command, const CommonFlags& f) {
  ordered_json config;
  config["command"] = command;
  config["mu"] = f.mu;
  config["a"] = f.a;
  config["b"] = f.b;
  return config;
}

bool ascending(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1])) return false;
  }
  return true;
}

bool ascending(const std::vector<long long>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] <= v[i - 1]) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"continuous dual Hahn polynomial tables and asymptotic reports"};
  app.require_subcommand(0, 1);

  std::string check_path;
  app.add_option("--check", check_path,
                 "re-read a CSV emitted by this tool and verify it round-trips");

  CommonFlags eval_flags;
  long long eval_n = 0;
  double eval_y = 0.0;
  CLI::App* eval = app.add_subcommand("eval", "evaluate one polynomial value");
  add_common(eval, eval_flags);
  eval->add_option("--n", eval_n, "degree")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--y", eval_y, "spectral variable")->required();

  CommonFlags table_flags;
  std::vector<long long> table_n;
  std::vector<double> table_y;
  CLI::App* table = app.add_subcommand("table", "tabulate values over a degree/y grid");
  add_common(table, table_flags);
  table->add_option("--n", table_n, "degree list")->required()->delimiter(',');
  table->add_option("--y", table_y, "y grid")->required()->delimiter(',');

  CommonFlags asym_flags;
  std::vector<double> asym_y;
  long long asym_n = 0;
  CLI::App* asym = app.add_subcommand("asym", "asymptotic envelope, phase and value");
  add_common(asym, asym_flags);
  asym->add_option("--y", asym_y, "y grid")->required()->delimiter(',');
  asym->add_option("--n", asym_n, "degree")->required();

  CommonFlags conv_flags;
  std::vector<long long> conv_n;
  double conv_y = 0.0;
  CLI::App* conv = app.add_subcommand("converge", "exact vs asymptotic convergence report");
  add_common(conv, conv_flags);
  conv->add_option("--n", conv_n, "ascending degree list")->required()->delimiter(',');
  conv->add_option("--y", conv_y, "spectral variable")->required();

  CommonFlags ortho_flags;
  long long ortho_n = 4;
  CLI::App* ortho = app.add_subcommand("ortho", "orthogonality integrals up to a degree");
  add_common(ortho, ortho_flags);
  ortho->add_option("--n", ortho_n, "maximum degree")->check(CLI::Range(0, 20));

  CommonFlags spectrum_flags;
  CLI::App* spectrum = app.add_subcommand("spectrum", "bound-state spectrum");
  add_common(spectrum, spectrum_flags);

  CommonFlags gen_flags;
  double gen_y = 0.0;
  std::vector<double> gen_t{0.1, 0.3, 0.5};
  CLI::App* genfun = app.add_subcommand("genfun-check",
                                        "generating function vs partial sums");
  add_common(genfun, gen_flags);
  genfun->add_option("--y", gen_y, "spectral variable")->required();
  genfun->add_option("--t", gen_t, "expansion points in (0,1)")
      ->delimiter(',')
      ->check(CLI::Range(1e-12, 1.0 - 1e-12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!check_path.empty()) return run_check(check_path);
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 2;
  }

  try {
    if (eval->parsed()) {
      const cdhahn::cdh::CdhParams p(eval_flags.mu, eval_flags.a, eval_flags.b);
      Table t;
      t.columns = {"n", "y", "value"};
      const std::vector<double> s = cdhahn::cdh::evaluate_recurrence(p, eval_n, eval_y);
      t.rows.push_back({fmt(eval_n), fmt(eval_y), fmt(s.back())});
      ordered_json config = base_config("eval", eval_flags);
      config["n"] = eval_n;
      config["y"] = eval_y;
      return emit(t, config, eval_flags.format, eval_flags.out_path);
    }

    if (table->parsed()) {
      if (table_n.empty() || !ascending(table_n) || table_n.front() < 0 ||
          table_y.empty() || !ascending(table_y)) {
        std::cerr << "error: --n and --y must be non-empty ascending lists\n";
        return 2;
      }
      const cdhahn::cdh::CdhParams p(table_flags.mu, table_flags.a, table_flags.b);
      Table t;
      t.columns = {"n", "y", "value"};
      for (double y : table_y) {
        const std::vector<double> s = cdhahn::cdh::evaluate_recurrence(p, table_n.back(), y);
        for (long long n : table_n) {
          t.rows.push_back({fmt(n), fmt(y), fmt(s[static_cast<std::size_t>(n)])});
        }
      }
      ordered_json config = base_config("table", table_flags);
      config["n"] = table_n;
      config["y"] = table_y;
      return emit(t, config, table_flags.format, table_flags.out_path);
    }

    if (asym->parsed()) {
      if (asym_y.empty() || !ascending(asym_y)) {
        std::cerr << "error: --y must be a non-empty ascending list\n";
        return 2;
      }
      const cdhahn::cdh::CdhParams p(asym_flags.mu, asym_flags.a, asym_flags.b);
      Table t;
      t.columns = {"y", "energy", "amplitude", "phase", "asymptotic"};
      for (double y : asym_y) {
        const auto data = cdhahn::asymptotics::scattering_data(p, y, asym_n);
        const double value = cdhahn::asymptotics::asymptotic_value(p, asym_n, y);
        t.rows.push_back({fmt(y), fmt(data.energy), fmt(data.amplitude), fmt(data.phase),
                          fmt(value)});
      }
      ordered_json config = base_config("asym", asym_flags);
      config["y"] = asym_y;
      config["n"] = asym_n;
      return emit(t, config, asym_flags.format, asym_flags.out_path);
    }

    if (conv->parsed()) {
      const cdhahn::cdh::CdhParams p(conv_flags.mu, conv_flags.a, conv_flags.b);
      const auto report = cdhahn::asymptotics::convergence_report(p, conv_y, conv_n);
      Table t;
      t.columns = {"n", "exact", "asymptotic", "amplitude", "phase", "env_error"};
      for (const auto& e : report.entries) {
        t.rows.push_back({fmt(e.n), fmt(e.exact), fmt(e.asymptotic), fmt(e.amplitude),
                          fmt(e.phase), fmt(e.env_error)});
      }
      t.extras.emplace_back("fitted_exponent", report.fitted_exponent);
      ordered_json config = base_config("converge", conv_flags);
      config["n"] = conv_n;
      config["y"] = conv_y;
      return emit(t, config, conv_flags.format, conv_flags.out_path);
    }

    if (ortho->parsed()) {
      const cdhahn::cdh::CdhParams p(ortho_flags.mu, ortho_flags.a, ortho_flags.b);
      Table t;
      t.columns = {"m", "n", "integral", "bound"};
      for (long long m = 0; m <= ortho_n; ++m) {
        for (long long n = m; n <= ortho_n; ++n) {
          const double integral =
              cdhahn::quadrature::orthogonality_check(p, m, n, ortho_flags.tol);
          const double bound = 1e-7 * std::sqrt(cdhahn::cdh::norm_squared(p, m) *
                                                cdhahn::cdh::norm_squared(p, n));
          t.rows.push_back({fmt(m), fmt(n), fmt(integral), fmt(bound)});
        }
      }
      ordered_json config = base_config("ortho", ortho_flags);
      config["n"] = ortho_n;
      config["tol"] = ortho_flags.tol;
      return emit(t, config, ortho_flags.format, ortho_flags.out_path);
    }

    if (spectrum->parsed()) {
      const auto p =
          cdhahn::cdh::CdhParams::relaxed(spectrum_flags.mu, spectrum_flags.a, spectrum_flags.b);
      Table t;
      t.columns = {"channel", "level", "energy"};
      for (const auto& entry : cdhahn::asymptotics::bound_state_spectrum(p)) {
        t.rows.push_back({cdhahn::asymptotics::channel_name(entry.channel),
                          fmt(entry.level), fmt(entry.energy)});
      }
      ordered_json config = base_config("spectrum", spectrum_flags);
      return emit(t, config, spectrum_flags.format, spectrum_flags.out_path);
    }

    if (genfun->parsed()) {
      const cdhahn::cdh::CdhParams p(gen_flags.mu, gen_flags.a, gen_flags.b);
      Table t;
      t.columns = {"t", "rhs", "partial_sum", "abs_diff"};
      constexpr long long kTerms = 200;
      const std::vector<double> s = cdhahn::cdh::evaluate_recurrence(p, kTerms, gen_y);
      for (double tt : gen_t) {
        double partial = 0.0, tn = 1.0;
        for (long long n = 0; n <= kTerms; ++n) {
          partial += s[static_cast<std::size_t>(n)] * tn;
          tn *= tt;
        }
        const auto rhs = cdhahn::cdh::generating_function_rhs(
            p, gen_y, cdhahn::cdh::Complex(tt, 0.0));
        t.rows.push_back(
            {fmt(tt), fmt(rhs.real()), fmt(partial), fmt(std::abs(rhs.real() - partial))});
      }
      ordered_json config = base_config("genfun-check", gen_flags);
      config["y"] = gen_y;
      config["t"] = gen_t;
      return emit(t, config, gen_flags.format, gen_flags.out_path);
    }
  } catch (const cdhahn::NoConvergence& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return 4;
  } catch (const cdhahn::Error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  }

  std::cerr << app.help();
  return 2;
}
