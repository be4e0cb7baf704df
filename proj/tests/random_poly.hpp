#pragma once

// Hand-rolled generators for property tests.

#include <random>

#include "schurforge/mpoly.hpp"

namespace schurforge::testing {

inline GfElement random_element(const GaloisField& f, std::mt19937_64& rng) {
  return f.from_index(static_cast<std::uint32_t>(rng() % f.order()));
}

inline Rationals::Element random_element(const Rationals&, std::mt19937_64& rng) {
  return Rationals::Element(static_cast<long long>(rng() % 19) - 9, static_cast<long long>(rng() % 4) + 1);
}

/// Random nonzero polynomial with up to max_terms terms and exponents <= max_exp.
template <class F>
MPoly<F> random_poly(const F& f, std::size_t nvars, std::mt19937_64& rng, std::size_t max_terms = 5,
                     std::uint32_t max_exp = 4) {
  MPoly<F> p(f, nvars);
  while (p.is_zero()) {
    const std::size_t terms = 1 + rng() % max_terms;
    for (std::size_t t = 0; t < terms; ++t) {
      ExponentVector e(nvars);
      for (std::size_t i = 0; i < nvars; ++i) e[i] = static_cast<std::uint32_t>(rng() % (max_exp + 1));
      p.add_term(e, random_element(f, rng));
    }
  }
  return p;
}

}  // namespace schurforge::testing
