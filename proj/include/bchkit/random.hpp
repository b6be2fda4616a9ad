#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "bchkit/lie.hpp"
#include "bchkit/ncpoly.hpp"

namespace bchkit {

// Deterministic random source. Everything derives from an explicit seed, and
// sampling is reduced from the raw mt19937_64 stream by hand; the standard
// distribution adaptors are implementation-defined and would break
// byte-identical reports across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::size_t below(std::size_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    return static_cast<std::size_t>(next() % bound);
  }

  bool coin() { return (next() & 1) != 0; }

  // Uniform-ish small rational with |numerator| <= bound, denominator <= bound.
  Rational small_rational(long long bound) {
    const long long num = static_cast<long long>(below(2 * bound + 1)) - bound;
    const long long den = 1 + static_cast<long long>(below(bound));
    return rat(num, den);
  }

  Rational nonzero_rational(long long bound) {
    for (;;) {
      Rational q = small_rational(bound);
      if (q != 0) return q;
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Splitmix-style mixing so independent checks get independent streams from
// one user-facing seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline Word random_word(Rng& rng, const Alphabet& alphabet, std::size_t length) {
  Word w;
  for (std::size_t i = 0; i < length; ++i)
    w = w.appended(static_cast<Letter>(rng.below(alphabet.size())));
  return w;
}

inline NcPoly random_homogeneous_poly(Rng& rng, const Alphabet& alphabet, std::size_t degree,
                                      std::size_t max_terms) {
  NcPoly p(alphabet);
  const std::size_t terms = 1 + rng.below(max_terms);
  for (std::size_t i = 0; i < terms; ++i)
    p += NcPoly::monomial(alphabet, random_word(rng, alphabet, degree), rng.nonzero_rational(3));
  return p;
}

inline NcPoly random_poly(Rng& rng, const Alphabet& alphabet, std::size_t max_degree,
                          std::size_t max_terms, bool constant_free) {
  NcPoly p(alphabet);
  const std::size_t terms = 1 + rng.below(max_terms);
  for (std::size_t i = 0; i < terms; ++i) {
    const std::size_t degree =
        constant_free ? 1 + rng.below(max_degree) : rng.below(max_degree + 1);
    p += NcPoly::monomial(alphabet, random_word(rng, alphabet, degree), rng.nonzero_rational(3));
  }
  return p;
}

// A single nested commutator over `degree` random letters; the bracketing
// shape is random and the value may cancel to zero.
inline NcPoly random_bracketing(Rng& rng, const Alphabet& alphabet, std::size_t degree) {
  if (degree == 0) throw std::invalid_argument("random_bracketing: degree must be at least 1");
  if (degree == 1)
    return NcPoly::letter(alphabet, static_cast<Letter>(rng.below(alphabet.size())));
  const std::size_t left = 1 + rng.below(degree - 1);
  return commutator(random_bracketing(rng, alphabet, left),
                    random_bracketing(rng, alphabet, degree - left));
}

// Nonzero homogeneous Lie polynomial: a small random combination of random
// bracketings, retried past accidental cancellations. The fallback
// ad_B^{n-2}([A, B]) is nonzero for every degree, so the function is total.
inline NcPoly random_homogeneous_lie(Rng& rng, const Alphabet& alphabet, std::size_t degree,
                                     std::size_t max_terms = 2) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    NcPoly p(alphabet);
    const std::size_t terms = 1 + rng.below(max_terms);
    for (std::size_t i = 0; i < terms; ++i)
      p += rng.nonzero_rational(3) * random_bracketing(rng, alphabet, degree);
    if (!p.is_zero()) return p;
  }
  if (degree == 1) return NcPoly::letter(alphabet, 0);
  return rightnormed_word_bracketing(alphabet,
                                     Word::repeated(1, degree - 2).appended(0).appended(1));
}

// Lie polynomial with up to two random homogeneous parts of degree
// <= max_degree. May be zero after cancellation; zero is still Lie.
inline NcPoly random_lie_polynomial(Rng& rng, const Alphabet& alphabet, std::size_t max_degree) {
  NcPoly p(alphabet);
  const std::size_t parts = 1 + rng.below(2);
  for (std::size_t i = 0; i < parts; ++i)
    p += random_homogeneous_lie(rng, alphabet, 1 + rng.below(max_degree));
  return p;
}

}  // namespace bchkit
