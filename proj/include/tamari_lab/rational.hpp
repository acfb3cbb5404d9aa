#pragma once

#include <gmpxx.h>

namespace tamari_lab {

mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);

inline mpq_class rat(long num, long den = 1) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline mpq_class rat(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace tamari_lab
