#include "mlgap/continuant.hpp"

#include <stdexcept>

namespace mlgap {

ContinuantMatrix operator*(const ContinuantMatrix& x, const ContinuantMatrix& y) {
  ContinuantMatrix out;
  out.p_prev = x.p_prev * y.p_prev + x.p * y.q_prev;
  out.p = x.p_prev * y.p + x.p * y.q;
  out.q_prev = x.q_prev * y.p_prev + x.q * y.q_prev;
  out.q = x.q_prev * y.p + x.q * y.q;
  return out;
}

ContinuantMatrix continuants(const Word& w) {
  ContinuantMatrix m;
  for (Digit a : w) {
    // right-multiply by [[0,1],[1,a]]
    mpz_class p_next = m.p_prev + a * m.p;
    mpz_class q_next = m.q_prev + a * m.q;
    m.p_prev = std::move(m.p);
    m.q_prev = std::move(m.q);
    m.p = std::move(p_next);
    m.q = std::move(q_next);
  }
  return m;
}

mpq_class finite_value(const Word& w) {
  const ContinuantMatrix m = continuants(w);
  mpq_class out(m.p, m.q);
  out.canonicalize();
  return out;
}

CylinderInterval cylinder(const Word& w) {
  if (w.empty()) throw std::invalid_argument("the empty word has no cylinder");
  const ContinuantMatrix m = continuants(w);
  mpq_class a(m.p, m.q);
  mpq_class b(m.p + m.p_prev, m.q + m.q_prev);
  a.canonicalize();
  b.canonicalize();
  CylinderInterval out;
  out.word = w;
  out.left = a < b ? a : b;
  out.right = a < b ? b : a;
  out.length = mpq_class(1, m.q * (m.q + m.q_prev));
  out.length.canonicalize();
  return out;
}

}  // namespace mlgap
