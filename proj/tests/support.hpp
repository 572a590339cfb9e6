#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "burau_forge/complex_ball.hpp"
#include "burau_forge/cyclotomic.hpp"
#include "burau_forge/word.hpp"

namespace test_support {

using cd = std::complex<double>;

/// Direct evaluation of the power-basis polynomial at exp(2 pi i j / m).
inline cd eval_numeric(const burau_forge::CyclotomicNumber& x, long j = 1) {
  const long m = x.conductor();
  cd acc = 0;
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
    const double ang = 2 * M_PI * static_cast<double>(j * static_cast<long>(k) % m) / static_cast<double>(m);
    acc += x.coeffs()[k].get_d() * cd(std::cos(ang), std::sin(ang));
  }
  return acc;
}

inline cd center(const burau_forge::ComplexBall& b) { return {b.re().get_d(), b.im().get_d()}; }

inline burau_forge::CyclotomicNumber random_element(std::mt19937& rng, long conductor, int span = 3) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 4);
  std::vector<mpq_class> c;
  for (long k = 0; k < burau_forge::euler_phi(conductor); ++k) c.emplace_back(num(rng), den(rng));
  return burau_forge::CyclotomicNumber(conductor, c);
}

/// Random unreduced syllable list over `gens` generators.
inline burau_forge::GroupWord random_word(std::mt19937& rng, const burau_forge::Alphabet& alphabet,
                                          const burau_forge::GroupContext& ctx, int max_syllables, int max_exp) {
  std::uniform_int_distribution<int> len(1, max_syllables), gen(0, static_cast<int>(alphabet->size()) - 1),
      ex(-max_exp, max_exp);
  std::vector<burau_forge::Syllable> raw;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int e = 0;
    while (e == 0) e = ex(rng);
    raw.push_back({gen(rng), e});
  }
  return burau_forge::GroupWord(alphabet, ctx, raw);
}

}  // namespace test_support
