#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bchkit/ncpoly.hpp"

namespace bchkit {

// Right-normed bracketing of a single nonempty word:
// r(w_1 w_2 ... w_n) = [w_1, [w_2, ... [w_{n-1}, w_n] ... ]],
// built right to left as r(x w) = ad_x(r(w)).
inline NcPoly rightnormed_word_bracketing(const Alphabet& alphabet, const Word& w) {
  if (w.empty())
    throw std::invalid_argument("rightnormed_word_bracketing: undefined on the empty word");
  NcPoly acc = NcPoly::letter(alphabet, w.back());
  for (std::size_t i = w.degree() - 1; i-- > 0;)
    acc = ad(NcPoly::letter(alphabet, w.letter(i)), acc);
  return acc;
}

// Linear extension of the right-normed bracketing to polynomials with zero
// constant term.
inline NcPoly rightnormed_bracketing(const NcPoly& p) {
  if (p.constant_term() != 0)
    throw std::invalid_argument("rightnormed_bracketing: nonzero constant term");
  NcPoly out(p.alphabet());
  for (const auto& [w, c] : p.terms())
    out += c * rightnormed_word_bracketing(p.alphabet(), w);
  return out;
}

// Dynkin criterion: a nonzero homogeneous P of degree n >= 1 is a Lie
// polynomial exactly when r(P) = n P. One direction is the classical
// Dynkin-Specht-Wever theorem; the converse is immediate, since r(P) = n P
// exhibits P = r(P)/n as a combination of nested commutators.
inline bool dynkin_is_lie(const NcPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("dynkin_is_lie: zero polynomial");
  if (!p.is_homogeneous()) throw std::invalid_argument("dynkin_is_lie: input must be homogeneous");
  const std::size_t n = p.degree();
  if (n == 0) throw std::invalid_argument("dynkin_is_lie: degree must be at least 1");
  return rightnormed_bracketing(p) == Rational(n) * p;
}

// True when every nonzero homogeneous component passes the Dynkin test; the
// zero polynomial counts as Lie.
inline bool is_lie_polynomial(const NcPoly& p) {
  if (p.is_zero()) return true;
  if (p.constant_term() != 0) return false;
  for (std::size_t n = p.min_degree(); n <= p.degree(); ++n) {
    const NcPoly component = p.homogeneous_component(n);
    if (!component.is_zero() && !dynkin_is_lie(component)) return false;
  }
  return true;
}

// A formal combination sum_i c_i r(w_i) over words of one common length.
// Terms are kept in monomial order with no zero coefficients.
class RightNormedCombination {
 public:
  RightNormedCombination(Alphabet alphabet, std::vector<std::pair<Rational, Word>> terms)
      : alphabet_(std::move(alphabet)), terms_(std::move(terms)) {
    if (terms_.empty())
      throw std::invalid_argument("RightNormedCombination: at least one term required");
    degree_ = terms_.front().second.degree();
    if (degree_ == 0)
      throw std::invalid_argument("RightNormedCombination: words must be nonempty");
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& [c, w] = terms_[i];
      if (c == 0) throw std::invalid_argument("RightNormedCombination: zero coefficient");
      if (w.degree() != degree_)
        throw std::invalid_argument("RightNormedCombination: words must share one length");
      for (std::size_t j = 0; j < w.degree(); ++j)
        if (w.letter(j) >= alphabet_.size())
          throw std::invalid_argument("RightNormedCombination: letter outside the alphabet");
      if (i > 0 && !(terms_[i - 1].second < w))
        throw std::invalid_argument("RightNormedCombination: terms must be strictly increasing");
    }
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::pair<Rational, Word>>& terms() const { return terms_; }
  std::size_t degree() const { return degree_; }

  friend bool operator==(const RightNormedCombination&, const RightNormedCombination&) = default;

 private:
  Alphabet alphabet_;
  std::vector<std::pair<Rational, Word>> terms_;
  std::size_t degree_;
};

// Rewrites a homogeneous Lie polynomial of degree n in right-normed form:
// P = sum_w (P, w)/n * r(w) over the support of P. Rejects inputs that fail
// the Dynkin test.
inline RightNormedCombination rightnormed_form(const NcPoly& p) {
  if (!dynkin_is_lie(p))
    throw std::invalid_argument("rightnormed_form: input fails the Dynkin criterion");
  const Rational n(p.degree());
  std::vector<std::pair<Rational, Word>> terms;
  terms.reserve(p.term_count());
  for (const auto& [w, c] : p.terms()) terms.emplace_back(c / n, w);
  return RightNormedCombination(p.alphabet(), std::move(terms));
}

inline NcPoly expand_rightnormed(const RightNormedCombination& r) {
  NcPoly out(r.alphabet());
  for (const auto& [c, w] : r.terms())
    out += c * rightnormed_word_bracketing(r.alphabet(), w);
  return out;
}

// r(r(P) Q) = [r(P), r(Q)] for constant-free P and Q.
inline bool check_baker_identity(const NcPoly& p, const NcPoly& q) {
  const NcPoly rp = rightnormed_bracketing(p);
  return rightnormed_bracketing(rp * q) == commutator(rp, rightnormed_bracketing(q));
}

// r([P1, P2]) = [P1, r(P2)] + [r(P1), P2] whenever P1 and P2 are Lie.
inline bool check_derivation(const NcPoly& p1, const NcPoly& p2) {
  return rightnormed_bracketing(commutator(p1, p2)) ==
         commutator(p1, rightnormed_bracketing(p2)) +
             commutator(rightnormed_bracketing(p1), p2);
}

// r(P a) = -ad_a(P) for Lie P and a single trailing letter a.
inline bool check_append_letter_identity(const NcPoly& p, Letter a) {
  const NcPoly la = NcPoly::letter(p.alphabet(), a);
  return rightnormed_bracketing(p * la) == -ad(la, p);
}

// ad_a is injective away from pure a-powers: a polynomial with no a^k terms
// (k >= 0) that commutes with a must be zero. Requires the precondition and
// throws when it is violated.
inline bool check_ad_injectivity(const NcPoly& p, Letter a) {
  if (!p.pure_power_coefficients(a).empty())
    throw std::invalid_argument("check_ad_injectivity: input has pure-power terms");
  if (p.is_zero()) return true;
  return !ad(NcPoly::letter(p.alphabet(), a), p).is_zero();
}

}  // namespace bchkit
