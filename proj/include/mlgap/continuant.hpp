#pragma once

#include <gmpxx.h>

#include "mlgap/word.hpp"

namespace mlgap {

/// Product of the digit matrices [[0,1],[1,a]] over a word, laid out as
///   [[p_prev, p],
///    [q_prev, q]]
/// so that [0; a_1, ..., a_n] = p / q and the previous convergent is
/// p_prev / q_prev. The empty word gives the identity.
struct ContinuantMatrix {
  mpz_class p_prev{1};
  mpz_class p{0};
  mpz_class q_prev{0};
  mpz_class q{1};

  mpz_class det() const { return p_prev * q - p * q_prev; }

  friend ContinuantMatrix operator*(const ContinuantMatrix& x, const ContinuantMatrix& y);
  friend bool operator==(const ContinuantMatrix&, const ContinuantMatrix&) = default;
};

ContinuantMatrix continuants(const Word& w);

/// Value of the finite expansion [0; w]; zero for the empty word.
mpq_class finite_value(const Word& w);

/// Set of reals whose expansion after the integer part starts with `word`.
struct CylinderInterval {
  Word word;
  mpq_class left;
  mpq_class right;
  mpq_class length;
};

/// Throws std::invalid_argument for the empty word.
CylinderInterval cylinder(const Word& w);

}  // namespace mlgap
