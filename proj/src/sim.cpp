#include "ialt/sim.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace ialt::sim {

TrialStats& TrialStats::operator+=(const TrialStats& other) {
  successes += other.successes;
  miscorrections += other.miscorrections;
  failures += other.failures;
  for (std::size_t i = 0; i < reasons.size(); ++i) reasons[i] += other.reasons[i];
  return *this;
}

SampledError sample_error(std::size_t ell, std::size_t t, std::size_t n,
                          const std::vector<Felt>& alphabet, Rng64& rng) {
  SampledError e;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = 0; i < t; ++i)
    std::swap(perm[i], perm[i + rng.bounded(n - i)]);
  e.support.assign(perm.begin(), perm.begin() + t);
  std::sort(e.support.begin(), e.support.end());

  e.values = Mat(ell, t);
  for (std::size_t j = 0; j < t; ++j) {
    bool nonzero = false;
    while (!nonzero)  // rejection keeps columns uniform over the nonzero tuples
      for (std::size_t i = 0; i < ell; ++i) {
        const Felt x = alphabet[rng.bounded(alphabet.size())];
        e.values.at(i, j) = x;
        nonzero |= x != 0;
      }
  }
  return e;
}

namespace {

// The error is drawn before the codeword so both codeword modes consume an
// identical error stream for a given trial seed.
void one_trial(const TrialConfig& cfg, std::uint64_t trial, TrialStats& out) {
  const AlternantCode& code = *cfg.code;
  const Field& F = code.field();
  Rng64 rng(mix_seed(cfg.seed, trial));
  const SampledError e =
      sample_error(cfg.ell, cfg.t, code.n(), F.subfield(), rng);

  Mat C(cfg.ell, code.n());
  if (cfg.codeword_mode == CodewordMode::random) {
    Mat msg(cfg.ell, code.k);
    for (Felt& x : msg.a) x = F.subfield()[rng.bounded(F.q())];
    C = encode(code, msg);
  }
  Mat R = C;
  for (std::size_t j = 0; j < cfg.t; ++j)
    for (std::size_t i = 0; i < cfg.ell; ++i)
      R.at(i, e.support[j]) =
          Field::add(R.at(i, e.support[j]), e.values.at(i, j));

  const DecodeOutcome outcome = decode(R, code);
  switch (classify(outcome, C)) {
    case Verdict::Success:
      ++out.successes;
      break;
    case Verdict::Miscorrection:
      ++out.miscorrections;
      break;
    case Verdict::Failure:
      ++out.failures;
      ++out.reasons[static_cast<std::size_t>(outcome.reason)];
      break;
  }
}

}  // namespace

TrialStats run_trials(const TrialConfig& cfg) {
  std::size_t workers =
      cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, cfg.trials);
  const std::size_t chunk = (cfg.trials + workers - 1) / workers;

  std::vector<TrialStats> parts(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(cfg.trials, lo + chunk);
    pool.emplace_back([&cfg, &parts, w, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) one_trial(cfg, i, parts[w]);
    });
  }
  for (std::thread& th : pool) th.join();

  TrialStats total;
  for (const TrialStats& p : parts) total += p;
  return total;
}

unsigned long find_threshold(const AlternantCode& code, std::size_t ell,
                             std::size_t trials, double target,
                             std::uint64_t seed) {
  // Big-field view of the same code: identical modulus, locators, and
  // multipliers, but with the whole field as its own subfield, so sampled
  // columns range over all of GF(2^(s*m)) and the decoder accepts them.
  const Field& F = code.field();
  const GrsSpec rs = make_grs(make_field(F.s() * F.m(), 1), code.n(), code.d(),
                              code.grs.alpha, code.grs.v);
  const AlternantCode view = make_alternant(rs);

  const unsigned long t0 = (code.d() - 1) / 2;
  unsigned long best = t0 == 0 ? 0 : t0 - 1;
  for (unsigned long t = t0; t <= code.n(); ++t) {
    TrialConfig cfg;
    cfg.code = &view;
    cfg.ell = ell;
    cfg.t = t;
    cfg.trials = trials;
    cfg.seed = mix_seed(seed, t);
    cfg.codeword_mode = CodewordMode::zero;  // outcome is codeword-invariant
    const TrialStats stats = run_trials(cfg);
    if (static_cast<double>(stats.successes) <=
        target * static_cast<double>(trials))
      break;
    best = t;
  }
  return best;
}

}  // namespace ialt::sim
