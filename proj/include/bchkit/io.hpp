#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bchkit/bch.hpp"
#include "bchkit/lie.hpp"
#include "bchkit/ncpoly.hpp"

namespace bchkit {

enum class OutputBasis { words, rightnormed };

inline std::string basis_name(OutputBasis b) {
  return b == OutputBasis::words ? "words" : "rightnormed";
}

// "[A,[A,B]]" for the word AAB; a single letter renders bare.
inline std::string format_bracket_word(const Alphabet& alphabet, const Word& w) {
  if (w.empty())
    throw std::invalid_argument("format_bracket_word: undefined on the empty word");
  if (w.degree() == 1) return alphabet.name(w.front());
  std::string out;
  for (std::size_t i = 0; i + 1 < w.degree(); ++i) {
    out += "[";
    out += alphabet.name(w.letter(i));
    out += ",";
  }
  out += alphabet.name(w.back());
  out.append(w.degree() - 1, ']');
  return out;
}

// Inverse of format_word for single-character letter names; "1" is the empty
// word.
inline Word parse_word(const Alphabet& alphabet, std::string_view text) {
  if (text == "1") return Word();
  Word w;
  for (char c : text) {
    const auto idx = alphabet.index_of(std::string_view(&c, 1));
    if (!idx) throw std::invalid_argument("parse_word: unknown letter name");
    w = w.appended(*idx);
  }
  return w;
}

struct OutputEntry {
  std::string term;
  std::string num;
  std::string den;
};

struct OutputRecord {
  std::size_t degree;
  OutputBasis basis;
  std::vector<OutputEntry> entries;
};

// One record per degree, entries in monomial order, coefficients split into
// base-10 numerator/denominator strings so nothing is ever rounded.
inline std::vector<OutputRecord> make_records(const BchResult& result, OutputBasis basis) {
  std::vector<OutputRecord> records;
  records.reserve(result.max_degree());
  for (std::size_t n = 1; n <= result.max_degree(); ++n) {
    OutputRecord record{n, basis, {}};
    if (basis == OutputBasis::words) {
      const NcPoly& c = result.component(n);
      for (const auto& [w, q] : c.terms())
        record.entries.push_back(
            {format_word(c.alphabet(), w), numerator_string(q), denominator_string(q)});
    } else {
      const RightNormedCombination& r = result.rightnormed_component(n);
      for (const auto& [q, w] : r.terms())
        record.entries.push_back(
            {format_bracket_word(r.alphabet(), w), numerator_string(q), denominator_string(q)});
    }
    records.push_back(std::move(record));
  }
  return records;
}

// "C2 = 1/2 AB - 1/2 BA" style, one line per degree.
inline std::string render_text(const std::vector<OutputRecord>& records) {
  std::string out;
  for (const OutputRecord& record : records) {
    out += "C" + std::to_string(record.degree) + " = ";
    if (record.entries.empty()) {
      out += "0";
    } else {
      bool first = true;
      for (const OutputEntry& e : record.entries) {
        const bool negative = !e.num.empty() && e.num.front() == '-';
        const std::string mag_num = negative ? e.num.substr(1) : e.num;
        if (first) {
          if (negative) out += "-";
          first = false;
        } else {
          out += negative ? " - " : " + ";
        }
        const std::string mag = e.den == "1" ? mag_num : mag_num + "/" + e.den;
        if (mag != "1" || e.term == "1") {
          out += mag;
          if (e.term != "1") out += " ";
        }
        if (e.term != "1") out += e.term;
      }
    }
    out += "\n";
  }
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

inline std::string render_csv(const std::vector<OutputRecord>& records) {
  std::string out = "degree,basis,term,numerator,denominator\n";
  for (const OutputRecord& record : records)
    for (const OutputEntry& e : record.entries)
      out += std::to_string(record.degree) + "," + basis_name(record.basis) + "," +
             csv_field(e.term) + "," + e.num + "," + e.den + "\n";
  return out;
}

inline std::string render_json(const Alphabet& alphabet, const std::string& method,
                               const std::vector<OutputRecord>& records) {
  nlohmann::json root;
  nlohmann::json names = nlohmann::json::array();
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    names.push_back(alphabet.name(static_cast<Letter>(i)));
  root["alphabet"] = std::move(names);
  root["method"] = method;
  nlohmann::json components = nlohmann::json::array();
  for (const OutputRecord& record : records) {
    nlohmann::json comp;
    comp["degree"] = record.degree;
    comp["basis"] = basis_name(record.basis);
    nlohmann::json entries = nlohmann::json::array();
    for (const OutputEntry& e : record.entries)
      entries.push_back({{"term", e.term}, {"num", e.num}, {"den", e.den}});
    comp["entries"] = std::move(entries);
    components.push_back(std::move(comp));
  }
  root["components"] = std::move(components);
  return root.dump(2) + "\n";
}

}  // namespace bchkit
