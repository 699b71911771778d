#include "cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "psiell/elliptic.hpp"
#include "psiell/errors.hpp"
#include "psiell/format.hpp"
#include "psiell/psi.hpp"
#include "psiell/rectangle.hpp"
#include "psiell/verify.hpp"

namespace psiell::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { plain, csv, json };

struct Config {
  int digits = 12;
  Format format = Format::plain;
};

// Usage problems that CLI11 cannot see (bad numeric literals).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A number as printed, so JSON and text agree digit for digit.
Json json_number(double v, int digits) {
  const std::string s = format_number(v, digits);
  if (!std::isfinite(v)) return s;
  return std::stod(s);
}

// One record of named numbers: a single line for plain, header plus row
// for csv, one object for json.
void print_record(std::ostream& out, const Config& cfg, const std::vector<std::string>& names,
                  const std::vector<double>& values) {
  switch (cfg.format) {
    case Format::plain:
      if (values.size() == 1) {
        out << format_number(values[0], cfg.digits) << '\n';
        return;
      }
      for (std::size_t i = 0; i < values.size(); ++i) {
        out << names[i] << ' ' << format_number(values[i], cfg.digits) << '\n';
      }
      return;
    case Format::csv:
      for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
      out << '\n';
      for (std::size_t i = 0; i < values.size(); ++i) {
        out << (i ? "," : "") << format_number(values[i], cfg.digits);
      }
      out << '\n';
      return;
    case Format::json: {
      Json obj = Json::object();
      for (std::size_t i = 0; i < values.size(); ++i) obj[names[i]] = json_number(values[i], cfg.digits);
      out << obj.dump() << '\n';
      return;
    }
  }
}

double eval_function(const std::string& fn, double r) {
  if (fn == "K") return ellip_k(r);
  if (fn == "E") return ellip_e(r);
  if (fn == "Kc") {
    if (!(r > 0.0 && r <= 1.0)) throw DomainError("Kc: domain is (0,1]");
    return ellip_k(Modulus(r).complementary());
  }
  if (fn == "Ec") {
    if (!(r >= 0.0 && r <= 1.0)) throw DomainError("Ec: domain is [0,1]");
    return ellip_e(Modulus(r).complementary());
  }
  if (fn == "psi") return psi(r);
  if (fn == "psi_prime") return psi_prime(r);
  if (fn == "mu") return mu(r);
  return f8(r);
}

using Row = std::vector<double>;

struct Quantity {
  std::vector<std::string> header;
  std::function<Row(double)> row;
};

const std::map<std::string, Quantity>& quantities() {
  static const std::map<std::string, Quantity> table{
      {"psi", {{"r", "psi"}, [](double r) { return Row{r, psi(r)}; }}},
      {"psi_bounds",
       {{"r", "lower", "psi", "upper"},
        [](double r) {
          const BoundPair b = psi_bounds(r);
          return Row{r, b.lower, psi(r), b.upper};
        }}},
      {"modulus",
       {{"b", "exterior", "interior"},
        [](double b) { return Row{b, exterior_modulus(b), interior_modulus(b)}; }}},
      {"modulus_bounds",
       {{"b", "lower", "exterior", "upper"},
        [](double b) {
          const ModulusResult m = modulus_result(b);
          return Row{b, m.lower, m.exterior, m.upper};
        }}},
      {"comparison_gap", {{"r", "gap"}, [](double r) { return Row{r, comparison_gap(r)}; }}},
  };
  return table;
}

void print_table(std::ostream& out, const Config& cfg, const Quantity& q,
                 const std::vector<Row>& rows) {
  if (cfg.format == Format::json) {
    Json arr = Json::array();
    for (const Row& row : rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < row.size(); ++i) obj[q.header[i]] = json_number(row[i], cfg.digits);
      arr.push_back(std::move(obj));
    }
    out << arr.dump() << '\n';
    return;
  }
  for (std::size_t i = 0; i < q.header.size(); ++i) out << (i ? "," : "") << q.header[i];
  out << '\n';
  for (const Row& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_number(row[i], cfg.digits);
    }
    out << '\n';
  }
}

int print_reports(std::ostream& out, const Config& cfg, const std::vector<CheckReport>& reports) {
  std::size_t failed = 0;
  if (cfg.format == Format::csv) out << csv_header() << '\n';
  for (const CheckReport& r : reports) {
    if (!passed(r)) ++failed;
    switch (cfg.format) {
      case Format::plain: out << to_text_line(r, cfg.digits) << '\n'; break;
      case Format::csv: out << to_csv_line(r, cfg.digits) << '\n'; break;
      case Format::json: out << to_json_line(r) << '\n'; break;
    }
  }
  if (cfg.format == Format::plain) {
    out << reports.size() << " claims, " << reports.size() - failed << " pass, " << failed
        << " fail\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

double parse_real(const std::string& text) {
  constexpr double kSqrt2 = std::numbers::sqrt2;
  static const std::map<std::string, double> literals{
      {"3-2sqrt2", 3.0 - 2.0 * kSqrt2},
      {"sqrt2-1", kSqrt2 - 1.0},
      {"1/sqrt2", 1.0 / kSqrt2},
      {"pi", std::numbers::pi},
      {"pi/2", 0.5 * std::numbers::pi},
  };
  if (auto it = literals.find(text); it != literals.end()) return it->second;
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (text.empty() || end != begin + text.size() || errno == ERANGE) {
    throw UsageError("not a number: '" + text + "'");
  }
  return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic integrals, the psi function and rectangle moduli"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--digits", cfg.digits, "Decimals printed (1-17)")->check(CLI::Range(1, 17));
  std::string format_name = "plain";
  app.add_option("--format", format_name, "plain, csv or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));

  std::string fn;
  std::string arg;
  auto* eval = app.add_subcommand("eval", "Evaluate K, E, Kc, Ec, psi, psi_prime, mu or f8 at r");
  eval->add_option("function", fn)
      ->required()
      ->check(CLI::IsMember({"K", "E", "Kc", "Ec", "psi", "psi_prime", "mu", "f8"}));
  eval->add_option("r", arg)->required();

  auto* invert = app.add_subcommand("invert", "Solve psi(r) = y or mu(r) = y for r");
  invert->add_option("function", fn)->required()->check(CLI::IsMember({"psi", "mu"}));
  invert->add_option("y", arg)->required();

  auto* modulus = app.add_subcommand("modulus", "Exterior and interior moduli of [0,1] x [0,b]");
  modulus->add_option("b", arg)->required();

  std::string lo_text;
  std::string hi_text;
  std::size_t n = 0;
  bool log_grid = false;
  auto* table = app.add_subcommand("table", "Tabulate a quantity on a grid");
  table->add_option("quantity", fn)
      ->required()
      ->check(CLI::IsMember({"psi", "psi_bounds", "modulus", "modulus_bounds", "comparison_gap"}));
  table->add_option("lo", lo_text)->required();
  table->add_option("hi", hi_text)->required();
  table->add_option("n", n)->required();
  table->add_flag("--log", log_grid, "Logarithmic spacing");

  std::string prefix;
  std::optional<std::size_t> points;
  auto* verify = app.add_subcommand("verify", "Run the claim checks whose id starts with prefix");
  verify->add_option("prefix", prefix);
  verify->add_option("--points", points, "Grid points per claim (per axis for pair claims)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));

  std::vector<const char*> argv{"psiell"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  cfg.format = format_name == "csv" ? Format::csv : format_name == "json" ? Format::json : Format::plain;

  try {
    if (*eval) {
      const double r = parse_real(arg);
      print_record(out, cfg, {"value"}, {eval_function(fn, r)});
      return 0;
    }
    if (*invert) {
      const double y = parse_real(arg);
      const Modulus r = fn == "psi" ? psi_inv(y) : mu_inv(y);
      print_record(out, cfg, {"r"}, {r.r()});
      return 0;
    }
    if (*modulus) {
      const ModulusResult m = modulus_result(parse_real(arg));
      print_record(out, cfg, {"exterior", "interior", "lower", "upper"},
                   {m.exterior, m.interior, m.lower, m.upper});
      return 0;
    }
    if (*table) {
      const GridSpec grid{parse_real(lo_text), parse_real(hi_text), n,
                          log_grid ? GridLaw::logarithmic : GridLaw::uniform};
      const Quantity& q = quantities().at(fn);
      std::vector<Row> rows;
      for (double x : grid_points(grid)) rows.push_back(q.row(x));
      print_table(out, cfg, q, rows);
      return 0;
    }
    VerifyOptions options;
    options.points = points;
    return print_reports(out, cfg, run_checks(claims_matching(prefix), options));
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const LookupError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace psiell::cli
