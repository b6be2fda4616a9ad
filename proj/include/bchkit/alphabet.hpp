#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bchkit {

// Index of a letter within an Alphabet.
using Letter = std::uint8_t;

// An ordered set of distinct letter names. The order is fixed at construction
// and induces the monomial order of every polynomial built over the alphabet.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() < 2) throw std::invalid_argument("Alphabet: at least two letters required");
    if (names_.size() > 256) throw std::invalid_argument("Alphabet: at most 256 letters supported");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw std::invalid_argument("Alphabet: empty letter name");
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j]) throw std::invalid_argument("Alphabet: duplicate letter name");
    }
  }

  // {"A", "B", "C", ...}
  static Alphabet standard(std::size_t size) {
    if (size < 2 || size > 26)
      throw std::invalid_argument("Alphabet::standard: size must be between 2 and 26");
    std::vector<std::string> names;
    names.reserve(size);
    for (std::size_t i = 0; i < size; ++i) names.emplace_back(1, static_cast<char>('A' + i));
    return Alphabet(std::move(names));
  }

  std::size_t size() const { return names_.size(); }

  const std::string& name(Letter i) const {
    if (i >= names_.size()) throw std::out_of_range("Alphabet: letter index out of range");
    return names_[i];
  }

  std::optional<Letter> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<Letter>(i);
    return std::nullopt;
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

// The two-letter alphabet the BCH series lives on; A orders before B.
inline const Alphabet& bch_alphabet() {
  static const Alphabet two({"A", "B"});
  return two;
}

// A monomial: a finite sequence of letters. The empty word is the unit of
// concatenation. Words compare in degree-lexicographic order (shorter first,
// then lexicographically by letter index), which is the canonical term order
// used everywhere in this library.
class Word {
 public:
  Word() = default;

  static Word single(Letter x) { return Word(std::string(1, static_cast<char>(x))); }

  static Word repeated(Letter x, std::size_t n) {
    return Word(std::string(n, static_cast<char>(x)));
  }

  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Letter letter(std::size_t i) const {
    if (i >= letters_.size()) throw std::out_of_range("Word: index out of range");
    return static_cast<Letter>(static_cast<unsigned char>(letters_[i]));
  }

  Letter front() const { return letter(0); }
  Letter back() const { return letter(letters_.size() - 1); }

  Word concat(const Word& other) const { return Word(letters_ + other.letters_); }
  Word appended(Letter x) const { return Word(letters_ + static_cast<char>(x)); }

  // Everything after the first letter.
  Word dropped_front() const {
    if (letters_.empty()) throw std::logic_error("Word: dropped_front of empty word");
    return Word(letters_.substr(1));
  }

  // Everything before the last letter.
  Word dropped_back() const {
    if (letters_.empty()) throw std::logic_error("Word: dropped_back of empty word");
    return Word(letters_.substr(0, letters_.size() - 1));
  }

  // True for x^k with k >= 0; the empty word counts as the 0th power.
  bool is_power_of(Letter x) const {
    for (char c : letters_)
      if (static_cast<unsigned char>(c) != x) return false;
    return true;
  }

  friend bool operator==(const Word&, const Word&) = default;

  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.letters_.size() != b.letters_.size()) return a.letters_.size() <=> b.letters_.size();
    return a.letters_.compare(b.letters_) <=> 0;
  }

 private:
  explicit Word(std::string letters) : letters_(std::move(letters)) {}

  std::string letters_;
};

}  // namespace bchkit
