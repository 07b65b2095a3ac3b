#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace ialt {

// Field element of GF(2^(s*m)); bit i is the coefficient of x^i in the
// polynomial-basis representation.
using Felt = std::uint32_t;

// Characteristic-2 field tower GF(2^(s*m)) over the base subfield GF(2^s),
// with log/antilog tables for a fixed primitive element g = x.
//
// The modulus is the lexicographically least (smallest as an integer with
// bit i = coefficient of x^i) degree-(s*m) polynomial whose root x generates
// the full multiplicative group.  An orbit of x of exact length 2^(s*m)-1
// forces the modulus to be irreducible (a quotient by a reducible polynomial
// has a strictly smaller unit group) and x to be primitive, so one walk
// decides both.
class Field {
public:
  Field(unsigned s, unsigned m);

  unsigned s() const { return s_; }
  unsigned m() const { return m_; }
  Felt q() const { return 1u << s_; }            // subfield size
  Felt size() const { return 1u << (s_ * m_); }  // full field size
  Felt order() const { return size() - 1; }      // multiplicative group order
  std::uint32_t modulus() const { return mod_; }
  Felt gen() const { return exp_[order() > 1 ? 1 : 0]; }

  static Felt add(Felt a, Felt b) { return a ^ b; }

  Felt mul(Felt a, Felt b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t i = log_[a] + log_[b];
    const std::uint32_t n = order();
    if (i >= n) i -= n;
    return exp_[i];
  }

  Felt inv(Felt a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[(order() - log_[a]) % order()];
  }

  Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }

  // a^e with the convention 0^0 = 1.
  Felt pow(Felt a, std::uint64_t e) const;

  std::uint32_t log(Felt a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return log_[a];
  }
  Felt exp(std::uint64_t i) const { return exp_[i % order()]; }

  // Evaluates sum_i coeffs[i] x^i by Horner's rule.
  Felt eval_poly(std::span<const Felt> coeffs, Felt x) const;

  // Subfield membership: a = 0 or log(a) divisible by
  // (2^(s*m)-1)/(2^s-1); equivalent to the Frobenius fixed-point test
  // a^(2^s) = a.
  bool in_subfield(Felt a) const { return a == 0 || log_[a] % step_ == 0; }
  std::uint32_t subfield_step() const { return step_; }

  // The 2^s subfield elements, sorted by bit pattern.
  const std::vector<Felt>& subfield() const { return subfield_; }

private:
  unsigned s_;
  unsigned m_;
  std::uint32_t mod_ = 0;
  std::uint32_t step_ = 1;
  std::vector<Felt> exp_;            // exp_[i] = g^i for 0 <= i < order
  std::vector<std::uint32_t> log_;   // defined on nonzero elements
  std::vector<Felt> subfield_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(unsigned s, unsigned m);

}  // namespace ialt
