#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bchkit/alphabet.hpp"
#include "bchkit/rational.hpp"

namespace bchkit {

// A polynomial in the free associative algebra over an alphabet, with exact
// rational coefficients. Terms are kept in a sparse ordered map keyed by Word,
// so iteration always follows the degree-lexicographic monomial order. Zero
// coefficients are never stored; the zero polynomial is the empty map and has
// no degree.
class NcPoly {
 public:
  using TermMap = std::map<Word, Rational>;

  explicit NcPoly(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  static NcPoly zero(const Alphabet& alphabet) { return NcPoly(alphabet); }

  static NcPoly one(const Alphabet& alphabet) { return monomial(alphabet, Word(), 1); }

  static NcPoly letter(const Alphabet& alphabet, Letter x) {
    if (x >= alphabet.size()) throw std::invalid_argument("NcPoly::letter: index out of range");
    return monomial(alphabet, Word::single(x), 1);
  }

  static NcPoly monomial(const Alphabet& alphabet, const Word& w, const Rational& coeff) {
    check_word(alphabet, w);
    NcPoly p(alphabet);
    p.add_term(w, coeff);
    return p;
  }

  static NcPoly from_terms(const Alphabet& alphabet, const TermMap& terms) {
    NcPoly p(alphabet);
    for (const auto& [w, c] : terms) {
      check_word(alphabet, w);
      p.add_term(w, c);
    }
    return p;
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coefficient(Word()); }
  bool is_constant_free() const { return !terms_.contains(Word()); }

  // Maximal word length. The zero polynomial has no degree.
  std::size_t degree() const {
    if (terms_.empty()) throw std::logic_error("NcPoly: degree of the zero polynomial is undefined");
    return terms_.rbegin()->first.degree();
  }

  std::size_t min_degree() const {
    if (terms_.empty()) throw std::logic_error("NcPoly: min_degree of the zero polynomial is undefined");
    return terms_.begin()->first.degree();
  }

  // All terms share one word length; vacuously true for zero. The map is
  // ordered by degree first, so only the two ends need checking.
  bool is_homogeneous() const {
    return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
  }

  // Sum of all terms of word length exactly n.
  NcPoly homogeneous_component(std::size_t n) const {
    NcPoly out(alphabet_);
    for (const auto& [w, c] : terms_) {
      if (w.degree() < n) continue;
      if (w.degree() > n) break;
      out.terms_.emplace(w, c);
    }
    return out;
  }

  // Keeps terms of degree <= max_degree.
  NcPoly truncated(std::size_t max_degree) const {
    NcPoly out(alphabet_);
    for (const auto& [w, c] : terms_) {
      if (w.degree() > max_degree) break;
      out.terms_.emplace(w, c);
    }
    return out;
  }

  // Nonzero coefficients of pure powers a^k, k >= 0, as (k, coefficient)
  // pairs in ascending k. The empty word is a^0.
  std::vector<std::pair<std::size_t, Rational>> pure_power_coefficients(Letter a) const {
    std::vector<std::pair<std::size_t, Rational>> out;
    for (const auto& [w, c] : terms_)
      if (w.is_power_of(a)) out.emplace_back(w.degree(), c);
    return out;
  }

  NcPoly& operator+=(const NcPoly& other) {
    require_same_alphabet(other);
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
  }

  NcPoly& operator-=(const NcPoly& other) {
    require_same_alphabet(other);
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
  }

  NcPoly operator-() const {
    NcPoly out(alphabet_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
  }

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }

  friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    return truncated_product(a, b, std::nullopt);
  }

  friend NcPoly operator*(const Rational& c, const NcPoly& p) {
    NcPoly out(p.alphabet_);
    if (c == 0) return out;
    for (const auto& [w, q] : p.terms_) out.terms_.emplace(w, c * q);
    return out;
  }

  friend NcPoly operator*(const NcPoly& p, const Rational& c) { return c * p; }

  friend NcPoly operator/(const NcPoly& p, const Rational& c) {
    if (c == 0) throw std::invalid_argument("NcPoly: division by zero");
    return Rational(1) / c * p;
  }

  // Concatenation product; pairs whose combined degree exceeds max_degree are
  // skipped outright, which is what keeps truncated series cheap.
  friend NcPoly truncated_product(const NcPoly& a, const NcPoly& b,
                                  std::optional<std::size_t> max_degree) {
    a.require_same_alphabet(b);
    NcPoly out(a.alphabet_);
    for (const auto& [wa, ca] : a.terms_) {
      if (max_degree && wa.degree() > *max_degree) break;
      for (const auto& [wb, cb] : b.terms_) {
        if (max_degree && wa.degree() + wb.degree() > *max_degree) break;
        out.add_term(wa.concat(wb), ca * cb);
      }
    }
    return out;
  }

  friend bool operator==(const NcPoly& a, const NcPoly& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void require_same_alphabet(const NcPoly& other) const {
    if (alphabet_ != other.alphabet_) throw std::invalid_argument("NcPoly: alphabet mismatch");
  }

  static void check_word(const Alphabet& alphabet, const Word& w) {
    for (std::size_t i = 0; i < w.degree(); ++i)
      if (w.letter(i) >= alphabet.size())
        throw std::invalid_argument("NcPoly: word uses a letter outside the alphabet");
  }

  Alphabet alphabet_;
  TermMap terms_;
};

inline NcPoly commutator(const NcPoly& x, const NcPoly& y) { return x * y - y * x; }

inline NcPoly ad(const NcPoly& x, const NcPoly& y) { return commutator(x, y); }

inline NcPoly ad_pow(const NcPoly& x, std::size_t n, const NcPoly& y) {
  NcPoly out = y;
  for (std::size_t k = 0; k < n; ++k) out = ad(x, out);
  return out;
}

inline NcPoly left_mul(const NcPoly& x, const NcPoly& z) { return x * z; }
inline NcPoly right_mul(const NcPoly& x, const NcPoly& z) { return z * x; }

inline std::string format_word(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.degree(); ++i) out += alphabet.name(w.letter(i));
  return out;
}

inline std::string to_string(const NcPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (w.empty()) {
      out += format_rational(mag);
    } else {
      if (mag != 1) {
        out += format_rational(mag);
        out += " ";
      }
      out += format_word(p.alphabet(), w);
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const NcPoly& p) { return os << to_string(p); }

}  // namespace bchkit
