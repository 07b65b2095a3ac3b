#include "ialt/gf.hpp"

#include <algorithm>
#include <cassert>

namespace ialt {
namespace {

// Walks the orbit of x modulo the candidate polynomial, recording x^i in
// exp[i].  Returns true iff the first return to 1 happens exactly at step
// 2^deg - 1, i.e. x has full multiplicative order.
bool walk_orbit(std::uint32_t poly, unsigned deg, std::vector<Felt>& exp) {
  const std::uint32_t n = (1u << deg) - 1;
  const std::uint32_t top = 1u << deg;
  exp[0] = 1;
  Felt b = 1;
  for (std::uint32_t i = 1; i <= n; ++i) {
    b <<= 1;
    if (b & top) b ^= poly;
    if (b == 1) return i == n;
    if (i == n) return false;
    exp[i] = b;
  }
  return false;  // unreachable; n >= 1 forces a decision above
}

}  // namespace

Field::Field(unsigned s, unsigned m) : s_(s), m_(m) {
  if (s < 1 || m < 1 || s * m > 20)
    throw std::invalid_argument("field exponent s*m must lie in [1, 20]");
  const unsigned deg = s * m;
  const std::uint32_t n = (1u << deg) - 1;
  const std::uint32_t top = 1u << deg;

  exp_.assign(n, 0);
  // Constant term must be 1, otherwise x is a zero divisor; scan odd
  // candidates in increasing integer order.
  for (std::uint32_t p = top | 1; p < (top << 1); p += 2) {
    if (walk_orbit(p, deg, exp_)) {
      mod_ = p;
      break;
    }
  }
  if (mod_ == 0) throw std::runtime_error("no primitive polynomial found");

  log_.assign(std::size_t{1} << deg, 0);
  for (std::uint32_t i = 0; i < n; ++i) log_[exp_[i]] = i;

  step_ = n / (q() - 1);
  subfield_.push_back(0);
  for (std::uint32_t i = 0; i + 1 < q(); ++i)
    subfield_.push_back(exp_[std::uint64_t{step_} * i % n]);
  std::sort(subfield_.begin(), subfield_.end());
  assert(subfield_.size() == q());
}

Felt Field::pow(Felt a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const std::uint64_t r = e % order();
  return exp_[std::uint64_t{log_[a]} * r % order()];
}

Felt Field::eval_poly(std::span<const Felt> coeffs, Felt x) const {
  Felt acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = add(mul(acc, x), coeffs[i]);
  return acc;
}

FieldPtr make_field(unsigned s, unsigned m) {
  return std::make_shared<const Field>(s, m);
}

}  // namespace ialt
