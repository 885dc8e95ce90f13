#include "t3dt/torus.hpp"

namespace t3dt {

Rational mod_one(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return q - Rational(fl);
}

TorusElem::TorusElem(Rational magnitude, Rational turns)
    : r(std::move(magnitude)), theta(mod_one(turns)) {
  if (r <= 0) throw std::domain_error("torus element magnitude must be positive");
}

TorusElem root_of_unity(int k, int n) {
  if (n <= 0) throw std::invalid_argument("root_of_unity requires n >= 1");
  return TorusElem(1, frac(k, n));
}

}  // namespace t3dt
