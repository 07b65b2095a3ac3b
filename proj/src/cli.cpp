#include "ialt/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ialt/bounds.hpp"
#include "ialt/codes.hpp"
#include "ialt/sim.hpp"
#include "json.hpp"

namespace ialt::cli {
namespace {

using nlohmann::ordered_json;

struct CodeFlags {
  unsigned q = 2;
  unsigned m = 1;
  unsigned d = 2;
  unsigned long ell = 1;
  unsigned long n = 0;  // 0: full length q^m - 1
};

void add_code_flags(CLI::App& sub, CodeFlags& f) {
  sub.add_option("--q", f.q, "base field size, a power of two")->required();
  sub.add_option("--m", f.m, "extension degree")->required();
  sub.add_option("--d", f.d, "designed distance of the constituent code")
      ->required();
  sub.add_option("--ell", f.ell, "interleaving order")->required();
  sub.add_option("--n", f.n, "code length (default q^m - 1)");
}

unsigned log2_exact(unsigned long q) {
  for (unsigned s = 1; s <= 20; ++s)
    if (q == 1ul << s) return s;
  throw std::invalid_argument("--q must be a power of two between 2 and 2^20");
}

// Checks the flag combination and builds the field; an omitted n becomes the
// full length q^m - 1.
FieldPtr resolve(CodeFlags& f) {
  const unsigned s = log2_exact(f.q);
  if (s * f.m > 20 || f.m == 0)
    throw std::invalid_argument("need 1 <= m and q^m <= 2^20");
  const FieldPtr F = make_field(s, f.m);
  if (f.n == 0) f.n = F->order();
  if (f.n > F->order())
    throw std::invalid_argument("--n exceeds the q^m - 1 distinct locators");
  if (f.d < 2 || f.d > f.n)
    throw std::invalid_argument("need 2 <= d <= n");
  if (f.ell == 0) throw std::invalid_argument("--ell must be positive");
  return F;
}

// Runs fn(i) for i in [0, count) on up to hardware_concurrency() threads.
void parallel_rows(std::size_t count, const std::function<void(std::size_t)>& fn) {
  std::size_t workers = std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

// Scientific notation with six significant digits; `nan` marks an
// inapplicable bound.  Positive values whose double conversion would go
// subnormal are rendered from the exact log10 instead.
std::string format_value(const bounds::BoundValue& v) {
  if (!v.applicable) return "nan";
  if (v.p_exact == 0) return "0.00000e+00";
  const double x = v.p_exact.get_d();
  if (x >= 1e-308) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5e", x);
    return buf;
  }
  return "1e" + std::to_string(std::llround(v.log10));
}

int cmd_bounds(CodeFlags f, std::optional<unsigned long> t_min_flag,
               std::optional<unsigned long> t_max_flag,
               unsigned long sim_trials, std::uint64_t seed,
               std::string out_path, std::ostream& err) {
  const FieldPtr F = resolve(f);
  const unsigned long t_min =
      t_min_flag ? *t_min_flag : (f.d - 1) / 2;
  const unsigned long t_max =
      t_max_flag ? *t_max_flag : max_radius(f.d, f.ell) + 1;
  if (t_min > t_max) throw std::invalid_argument("need t-min <= t-max");
  if (t_max > f.n) throw std::invalid_argument("need t-max <= n");

  std::optional<unsigned long> sim_threshold;
  if (sim_trials > 0) {
    const AlternantCode code = make_alternant(make_grs(F, f.n, f.d));
    sim_threshold = sim::find_threshold(code, f.ell, sim_trials, 0.9, seed);
  }

  std::vector<std::string> lines(t_max - t_min + 1);
  parallel_rows(lines.size(), [&](std::size_t i) {
    bounds::CodeParams p{f.q, f.m, static_cast<unsigned>(f.n), f.d,
                         static_cast<unsigned>(f.ell),
                         static_cast<unsigned>(t_min + i)};
    std::ostringstream os;
    os << p.t << ' ' << format_value(bounds::lb_rs(p)) << ' '
       << format_value(bounds::lb_alternant(p, bounds::KoptMode::full)) << ' '
       << format_value(bounds::lb_alternant(p, bounds::KoptMode::singleton))
       << ' ' << format_value(bounds::lb_alternant_simple(p)) << ' '
       << format_value(bounds::lb_high_order(p)) << ' '
       << format_value(bounds::ub_success(p)) << ' '
       << format_value(bounds::misc_bound(p)) << ' '
       << (sim_threshold && p.t == *sim_threshold ? "1.00000e+00" : "nan");
    lines[i] = os.str();
  });

  if (out_path.empty()) {
    std::ostringstream name;
    name << "boundsData_q=" << f.q << "_m=" << f.m << "_r=" << f.d - 1
         << "_l=" << f.ell << ".dat";
    out_path = name.str();
  }
  std::ofstream file(out_path);
  if (!file) throw std::runtime_error("cannot open " + out_path);
  file << "t RS Thm1 WoKopt L01 LargeEll LowerIE Miscorrection Sim\n";
  for (const std::string& line : lines) file << line << '\n';
  file.close();
  err << "wrote " << out_path << " (" << lines.size() << " rows)\n";
  return 0;
}

int cmd_simulate(CodeFlags f, unsigned long t, unsigned long trials,
                 std::uint64_t seed, const std::string& codeword,
                 std::ostream& out) {
  const FieldPtr F = resolve(f);
  if (t > f.n) throw std::invalid_argument("need t <= n");
  if (trials == 0) throw std::invalid_argument("--trials must be positive");
  if (codeword != "zero" && codeword != "random")
    throw std::invalid_argument("--codeword must be zero or random");

  const AlternantCode code = make_alternant(make_grs(F, f.n, f.d));
  sim::TrialConfig cfg;
  cfg.code = &code;
  cfg.ell = f.ell;
  cfg.t = t;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.codeword_mode =
      codeword == "zero" ? sim::CodewordMode::zero : sim::CodewordMode::random;
  const sim::TrialStats stats = sim::run_trials(cfg);

  const double rate =
      static_cast<double>(stats.successes) / static_cast<double>(trials);
  const double half =
      1.96 * std::sqrt(rate * (1 - rate) / static_cast<double>(trials));
  ordered_json report{
      {"params",
       {{"q", f.q},
        {"m", f.m},
        {"n", f.n},
        {"d", f.d},
        {"ell", f.ell},
        {"t", t},
        {"trials", trials},
        {"seed", seed},
        {"codeword", codeword}}},
      {"successes", stats.successes},
      {"miscorrections", stats.miscorrections},
      {"failures", stats.failures},
      {"rate_ci95",
       {std::max(0.0, rate - half), std::min(1.0, rate + half)}}};
  out << report.dump(2) << '\n';
  return 0;
}

int cmd_decode(CodeFlags f, const std::string& in_path,
               std::optional<std::uint64_t> v_seed, std::ostream& out) {
  const FieldPtr F = resolve(f);

  std::ifstream in(in_path);
  if (!in) throw std::runtime_error("cannot open " + in_path);
  std::vector<Felt> entries;
  unsigned long value = 0;
  while (in >> value) {
    if (value >= F->size())
      throw std::invalid_argument("entry " + std::to_string(value) +
                                  " is not a field element");
    entries.push_back(static_cast<Felt>(value));
  }
  if (!in.eof()) throw std::invalid_argument("malformed input file");
  if (entries.empty() || entries.size() % f.ell != 0)
    throw std::invalid_argument("expected ell rows of equal length");
  const unsigned long n = entries.size() / f.ell;
  if (n != f.n) {
    if (f.n != F->order())  // explicit --n must match the file
      throw std::invalid_argument("input width disagrees with --n");
    f.n = n;
    resolve(f);
  }

  const GrsSpec grs = v_seed ? make_grs_random_v(F, f.n, f.d, *v_seed)
                             : make_grs(F, f.n, f.d);
  const AlternantCode code = make_alternant(grs);
  Mat R(f.ell, f.n);
  R.a = entries;
  const DecodeOutcome outcome = decode(R, code);
  if (!outcome.ok) {
    out << "FAILURE:" << to_string(outcome.reason) << '\n';
    return 0;
  }
  for (std::size_t i = 0; i < f.ell; ++i) {
    for (std::size_t j = 0; j < f.n; ++j)
      out << outcome.codeword.at(i, j) << (j + 1 < f.n ? " " : "");
    out << '\n';
  }
  return 0;
}

int cmd_info(CodeFlags f, std::ostream& out) {
  const FieldPtr F = resolve(f);
  const AlternantCode code = make_alternant(make_grs(F, f.n, f.d));
  const auto [k_lower, k_upper] = dimension_bounds(f.n, f.d, f.q, f.m);
  ordered_json info{{"q", f.q},
                    {"m", f.m},
                    {"n", f.n},
                    {"d", f.d},
                    {"ell", f.ell},
                    {"k_A", code.k},
                    {"k_lower", k_lower},
                    {"k_upper", k_upper},
                    {"t_max", max_radius(f.d, f.ell)}};
  out << info.dump(2) << '\n';
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"interleaved alternant code toolkit"};
  app.require_subcommand(1);

  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds", "write the decoding-probability bound table (.dat)");
  CodeFlags bounds_flags;
  add_code_flags(*bounds_cmd, bounds_flags);
  std::optional<unsigned long> t_min_flag, t_max_flag;
  unsigned long sim_trials = 0;
  std::uint64_t bounds_seed = 0;
  std::string out_path;
  bounds_cmd->add_option("--t-min", t_min_flag,
                         "first error weight (default floor((d-1)/2))");
  bounds_cmd->add_option("--t-max", t_max_flag,
                         "last error weight (default radius + 1)");
  bounds_cmd->add_option("--sim-trials", sim_trials,
                         "trials per weight for the Sim threshold column");
  bounds_cmd->add_option("--seed", bounds_seed, "simulation seed");
  bounds_cmd->add_option("--out", out_path,
                         "output path (default boundsData_*.dat)");

  CLI::App* sim_cmd =
      app.add_subcommand("simulate", "run seeded decoding trials");
  CodeFlags sim_flags;
  add_code_flags(*sim_cmd, sim_flags);
  unsigned long sim_t = 0, trials = 0;
  std::uint64_t sim_seed = 0;
  std::string codeword = "random";
  sim_cmd->add_option("--t", sim_t, "error weight (columns)")->required();
  sim_cmd->add_option("--trials", trials, "number of trials")->required();
  sim_cmd->add_option("--seed", sim_seed, "trial seed");
  sim_cmd->add_option("--codeword", codeword, "zero | random");

  CLI::App* decode_cmd = app.add_subcommand(
      "decode", "decode one interleaved word from a whitespace matrix file");
  CodeFlags decode_flags;
  add_code_flags(*decode_cmd, decode_flags);
  std::string in_path;
  std::optional<std::uint64_t> v_seed;
  decode_cmd->add_option("--in", in_path, "input file, ell rows of n entries")
      ->required();
  decode_cmd->add_option(
      "--v-seed", v_seed,
      "seed for random nonzero column multipliers (default: all-ones v)");

  CLI::App* info_cmd =
      app.add_subcommand("info", "print code parameters as JSON");
  CodeFlags info_flags;
  add_code_flags(*info_cmd, info_flags);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
    if (*bounds_cmd)
      return cmd_bounds(bounds_flags, t_min_flag, t_max_flag, sim_trials,
                        bounds_seed, out_path, err);
    if (*sim_cmd)
      return cmd_simulate(sim_flags, sim_t, trials, sim_seed, codeword, out);
    if (*decode_cmd) return cmd_decode(decode_flags, in_path, v_seed, out);
    if (*info_cmd) return cmd_info(info_flags, out);
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ialt::cli
