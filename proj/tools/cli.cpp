#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "api.hpp"

namespace bratteli::cli {

namespace {

constexpr std::int64_t kIndexMax = std::numeric_limits<std::uint32_t>::max();

/// Usage or domain problem detected by the tool itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint32_t index(std::int64_t v) { return static_cast<std::uint32_t>(v); }

CLI::Option* add_index(CLI::App* app, const std::string& name, std::int64_t& target,
                       const std::string& help, bool required = true) {
  auto* opt = app->add_option(name, target, help)->check(CLI::Range(std::int64_t{0}, kIndexMax));
  if (required) opt->required();
  return opt;
}

bool parse_backend_impl(const std::string& name, bratteli_backend& backend) {
  static const std::pair<const char*, bratteli_backend> names[] = {
      {"dp", BRATTELI_BACKEND_DP},
      {"dyck", BRATTELI_BACKEND_DYCK},
      {"gf", BRATTELI_BACKEND_GF},
      {"spectral", BRATTELI_BACKEND_SPECTRAL},
      {"matrix", BRATTELI_BACKEND_MATRIX},
  };
  for (const auto& [n, b] : names)
    if (name == n) {
      backend = b;
      return true;
    }
  return false;
}

// `--backend auto`: dyck only when asked to be paranoid and cheap, spectral
// once j is large enough that the column recurrence is the slower route.
constexpr std::uint32_t kParanoidMaxLength = 14;
constexpr std::uint32_t kSpectralMinLength = 512;

bratteli_backend choose_backend(std::uint32_t j, bool paranoid) {
  if (paranoid && j <= kParanoidMaxLength) return BRATTELI_BACKEND_DYCK;
  if (j >= kSpectralMinLength) return BRATTELI_BACKEND_SPECTRAL;
  return BRATTELI_BACKEND_DP;
}

int decimal_digits_for(long bits) {
  return std::max(1, static_cast<int>(std::floor(static_cast<double>(bits) * std::log10(2.0))));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

/// "a_m = 5a_{m-1} - 6a_{m-2} + a_{m-3}"; "a_m = 0" for order 0.
std::string format_recurrence(const std::vector<std::string>& coeffs) {
  std::string rhs;
  for (std::size_t t = 1; t <= coeffs.size(); ++t) {
    std::string c = coeffs[t - 1];
    if (c == "0") continue;
    const bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (rhs.empty())
      rhs += negative ? "-" : "";
    else
      rhs += negative ? " - " : " + ";
    if (c != "1") rhs += c;
    rhs += "a_{m-" + std::to_string(t) + "}";
  }
  return "a_m = " + (rhs.empty() ? std::string("0") : rhs);
}

struct CountArgs {
  std::int64_t k = 0, i = 0, j = 0;
  std::string backend = "auto";
  bool paranoid = false;
  bool verbose = false;
};

int run_count(const CountArgs& a, std::ostream& out, std::ostream& err) {
  bratteli_backend backend;
  if (a.backend == "auto") {
    backend = choose_backend(index(a.j), a.paranoid);
    if (a.verbose) err << "backend: " << backend_name(backend) << '\n';
  } else if (!parse_backend_impl(a.backend, backend)) {
    throw UsageError("unknown backend '" + a.backend + "'");
  }
  out << count(backend, index(a.k), index(a.i), index(a.j)) << '\n';
  return kSuccess;
}

struct TableArgs {
  std::int64_t k = 0, jmax = 0;
  std::string format = "csv";
};

int run_table(const TableArgs& a, std::ostream& out, const Environment& env) {
  bratteli_table_format format;
  if (a.format == "csv")
    format = BRATTELI_FORMAT_CSV;
  else if (a.format == "json")
    format = BRATTELI_FORMAT_JSON;
  else if (a.format == "pretty")
    format = env.terminal && !env.no_color ? BRATTELI_FORMAT_PRETTY_COLOR : BRATTELI_FORMAT_PRETTY;
  else
    throw UsageError("unknown table format '" + a.format + "'");
  bratteli_table* raw = nullptr;
  check(bratteli_table_build(index(a.k), index(a.jmax), 0, &raw));
  TablePtr table(raw);
  CString text;
  check(bratteli_table_render(table.get(), format, text.out()));
  out << text.str();
  return kSuccess;
}

struct GfArgs {
  std::int64_t k = 0, i = 0;
  bool even = false;
  std::string form = "closed";
};

int run_gf(const GfArgs& a, std::ostream& out) {
  bratteli_gf_form form;
  if (a.form == "closed")
    form = BRATTELI_GF_CLOSED;
  else if (a.form == "product")
    form = BRATTELI_GF_PRODUCT;
  else
    throw UsageError("unknown generating function form '" + a.form + "'");
  bratteli_gf* raw = nullptr;
  check(bratteli_gf_create(form, index(a.k), index(a.i), &raw));
  GfPtr gf(raw);
  unsigned shift = 0;
  if (a.even) {
    bratteli_gf* compressed = nullptr;
    check(bratteli_gf_even(gf.get(), &shift, &compressed));
    gf.reset(compressed);
  }
  CString num, den, coeffs, initial;
  std::size_t order = 0;
  check(bratteli_gf_numerator(gf.get(), num.out()));
  check(bratteli_gf_denominator(gf.get(), den.out()));
  check(bratteli_gf_recurrence(gf.get(), &order, coeffs.out(), initial.out()));
  out << "num: " << num.str() << " / den: " << den.str()
      << "; recurrence: " << format_recurrence(split(coeffs.str(), ' '))
      << "; initial: " << initial.str();
  if (shift != 0) out << "; substitution: x^" << shift << " G(x^2)";
  out << '\n';
  return kSuccess;
}

struct ResiduesArgs {
  std::int64_t k = 0, i = 0;
  long bits = 128;
  int digits = 0;
};

int run_residues(const ResiduesArgs& a, std::ostream& out) {
  bratteli_spectral* raw = nullptr;
  check(bratteli_residues(index(a.k), index(a.i), a.bits, &raw));
  SpectralPtr spectral(raw);
  const int digits = a.digits > 0 ? a.digits : decimal_digits_for(a.bits);
  out << "r weight pole\n";
  for (std::size_t r = 1; r <= bratteli_spectral_size(spectral.get()); ++r) {
    CString w, p;
    check(bratteli_spectral_term(spectral.get(), r, digits, w.out(), p.out()));
    out << r << ' ' << w.str() << ' ' << p.str() << '\n';
  }
  CString sum;
  check(bratteli_spectral_weight_sum(spectral.get(), digits, sum.out()));
  out << "sum " << sum.str() << '\n';
  return kSuccess;
}

struct RateArgs {
  std::int64_t k = 0, i = 0, jmax = -1;
  int digits = 15;
};

int run_rate(const RateArgs& a, std::ostream& out) {
  const long bits = std::max(256L, 4L * a.digits + 64);
  const std::int64_t jmax = a.jmax >= 0 ? a.jmax : 200 + (a.i & 1);
  CString growth, empirical, diff;
  check(bratteli_growth_rate(index(a.k), bits, a.digits, growth.out()));
  check(bratteli_empirical_rate(index(a.k), index(a.i), index(jmax), bits, a.digits,
                                empirical.out(), diff.out()));
  out << "growth_rate: " << growth.str() << '\n'
      << "empirical_rate: " << empirical.str() << " (i=" << a.i << ", jmax=" << jmax << ")\n"
      << "difference: " << diff.str() << '\n';
  return kSuccess;
}

}  // namespace

bool parse_backend(const std::string& name, bratteli_backend& backend) {
  return parse_backend_impl(name, backend);
}

const char* backend_name(bratteli_backend backend) {
  switch (backend) {
    case BRATTELI_BACKEND_DP: return "dp";
    case BRATTELI_BACKEND_DYCK: return "dyck";
    case BRATTELI_BACKEND_GF: return "gf";
    case BRATTELI_BACKEND_SPECTRAL: return "spectral";
    case BRATTELI_BACKEND_MATRIX: return "matrix";
  }
  return "?";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env) {
  CLI::App app{"Exact path counts D_k(i,j) in SU(2)_k Bratteli diagrams", "bratteli"};
  app.require_subcommand(1, 1);

  CountArgs count_args;
  auto* count_cmd = app.add_subcommand("count", "Count paths to height i after j steps at level k");
  add_index(count_cmd, "--k", count_args.k, "Level bound k");
  add_index(count_cmd, "--i", count_args.i, "Height i");
  add_index(count_cmd, "--j", count_args.j, "Length j");
  count_cmd->add_option("--backend", count_args.backend, "dp|dyck|gf|spectral|matrix|auto")
      ->check(CLI::IsMember({"dp", "dyck", "gf", "spectral", "matrix", "auto"}));
  count_cmd->add_flag("--paranoid", count_args.paranoid, "Let auto pick brute-force enumeration for short paths");
  count_cmd->add_flag("-v,--verbose", count_args.verbose, "Report the chosen backend on stderr");

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "Every nonzero count for j <= jmax");
  add_index(table_cmd, "--k", table_args.k, "Level bound k");
  add_index(table_cmd, "--jmax", table_args.jmax, "Largest length");
  table_cmd->add_option("--format", table_args.format, "csv|json|pretty")
      ->check(CLI::IsMember({"csv", "json", "pretty"}));

  GfArgs gf_args;
  auto* gf_cmd = app.add_subcommand("gf", "Generating function sum_j D_k(i,j) x^j");
  add_index(gf_cmd, "--k", gf_args.k, "Level bound k");
  add_index(gf_cmd, "--i", gf_args.i, "Height i");
  gf_cmd->add_flag("--even", gf_args.even, "Present in t = x^2");
  gf_cmd->add_option("--form", gf_args.form, "closed|product")
      ->check(CLI::IsMember({"closed", "product"}));

  ResiduesArgs residues_args;
  auto* residues_cmd = app.add_subcommand("residues", "Weights and poles of the residue expansion");
  add_index(residues_cmd, "--k", residues_args.k, "Level bound k");
  add_index(residues_cmd, "--i", residues_args.i, "Height i");
  residues_cmd->add_option("--bits", residues_args.bits, "Working precision in bits")
      ->check(CLI::Range(64L, 1L << 20));
  residues_cmd->add_option("--digits", residues_args.digits, "Significant digits printed")
      ->check(CLI::Range(1, 100000));

  RateArgs rate_args;
  auto* rate_cmd = app.add_subcommand("rate", "Exact and empirical growth rate");
  add_index(rate_cmd, "--k", rate_args.k, "Level bound k");
  add_index(rate_cmd, "--i", rate_args.i, "Height for the empirical ratio", false);
  add_index(rate_cmd, "--jmax", rate_args.jmax, "Length for the empirical ratio", false);
  rate_cmd->add_option("--digits", rate_args.digits, "Significant digits printed")
      ->check(CLI::Range(1, 10000));

  VerifyOptions verify_opts;
  std::int64_t kmax = 0, jmax = 0;
  std::string backends = "dp,dyck,gf,spectral,matrix";
  unsigned jobs = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check backends over a sweep of queries");
  add_index(verify_cmd, "--kmax", kmax, "Largest level");
  add_index(verify_cmd, "--jmax", jmax, "Largest length");
  verify_cmd->add_option("--backends", backends, "Comma-separated backends to compare");
  verify_cmd->add_option("--jobs", jobs, "Worker threads (default: available parallelism)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*count_cmd) return run_count(count_args, out, err);
    if (*table_cmd) return run_table(table_args, out, env);
    if (*gf_cmd) return run_gf(gf_args, out);
    if (*residues_cmd) return run_residues(residues_args, out);
    if (*rate_cmd) return run_rate(rate_args, out);
    if (*verify_cmd) {
      verify_opts.kmax = index(kmax);
      verify_opts.jmax = index(jmax);
      verify_opts.backends = split(backends, ',');
      verify_opts.jobs = jobs;
      return run_verify(verify_opts, out, err);
    }
  } catch (const ApiError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace bratteli::cli
