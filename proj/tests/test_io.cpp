#include <gtest/gtest.h>

#include <json.hpp>

#include <bchkit/bch.hpp>
#include <bchkit/io.hpp>

using namespace bchkit;

namespace {

const Alphabet& ab() { return bch_alphabet(); }
Word w(const char* s) { return parse_word(ab(), s); }

}  // namespace

TEST(Format, Rational) {
  EXPECT_EQ(format_rational(rat(3)), "3");
  EXPECT_EQ(format_rational(rat(-1, 2)), "-1/2");
  EXPECT_EQ(format_rational(rat(2, 4)), "1/2");
  EXPECT_EQ(format_rational(rat(0)), "0");
  EXPECT_EQ(numerator_string(rat(-3, 6)), "-1");
  EXPECT_EQ(denominator_string(rat(-3, 6)), "2");
}

TEST(Format, Word) {
  EXPECT_EQ(format_word(ab(), Word()), "1");
  EXPECT_EQ(format_word(ab(), w("A")), "A");
  EXPECT_EQ(format_word(ab(), w("ABBA")), "ABBA");
}

TEST(Format, BracketWord) {
  EXPECT_EQ(format_bracket_word(ab(), w("B")), "B");
  EXPECT_EQ(format_bracket_word(ab(), w("AB")), "[A,B]");
  EXPECT_EQ(format_bracket_word(ab(), w("AAB")), "[A,[A,B]]");
  EXPECT_EQ(format_bracket_word(ab(), w("BBA")), "[B,[B,A]]");
  EXPECT_THROW(format_bracket_word(ab(), Word()), std::invalid_argument);
}

TEST(Format, PolynomialToString) {
  EXPECT_EQ(to_string(NcPoly::zero(ab())), "0");
  EXPECT_EQ(to_string(NcPoly::letter(ab(), 0) + NcPoly::letter(ab(), 1)), "A + B");
  EXPECT_EQ(to_string(-NcPoly::letter(ab(), 0)), "-A");
  EXPECT_EQ(to_string(rat(3) * NcPoly::one(ab())), "3");
  EXPECT_EQ(to_string(rat(-1, 2) * NcPoly::one(ab()) + NcPoly::letter(ab(), 0)), "-1/2 + A");
  const NcPoly c2 = NcPoly::monomial(ab(), w("AB"), rat(1, 2)) +
                    NcPoly::monomial(ab(), w("BA"), rat(-1, 2));
  EXPECT_EQ(to_string(c2), "1/2 AB - 1/2 BA");
}

TEST(ParseWord, RoundTripsAndRejectsUnknownLetters) {
  EXPECT_EQ(parse_word(ab(), "1"), Word());
  for (const char* s : {"A", "B", "AB", "BBAAB"})
    EXPECT_EQ(format_word(ab(), parse_word(ab(), s)), s);
  EXPECT_THROW(parse_word(ab(), "X"), std::invalid_argument);
  const Alphabet three = Alphabet::standard(3);
  EXPECT_EQ(parse_word(three, "CAB").degree(), 3u);
}

TEST(Records, WordsBasisFollowsMonomialOrder) {
  const auto records = make_records(bch_recurrence(3), OutputBasis::words);
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[0].degree, 1u);
  ASSERT_EQ(records[2].entries.size(), 6u);
  const char* expected[] = {"AAB", "ABA", "ABB", "BAA", "BAB", "BBA"};
  for (int i = 0; i < 6; ++i) EXPECT_EQ(records[2].entries[i].term, expected[i]);
}

TEST(Render, TextFrozenThroughDegreeThree) {
  const auto records = make_records(bch_recurrence(3), OutputBasis::words);
  EXPECT_EQ(render_text(records),
            "C1 = A + B\n"
            "C2 = 1/2 AB - 1/2 BA\n"
            "C3 = 1/12 AAB - 1/6 ABA + 1/12 ABB + 1/12 BAA - 1/6 BAB + 1/12 BBA\n");
}

TEST(Render, TextHandlesConstantsAndZero) {
  std::vector<OutputRecord> records;
  records.push_back({1, OutputBasis::words, {{"1", "3", "1"}}});
  records.push_back({2, OutputBasis::words, {}});
  records.push_back({3, OutputBasis::words, {{"1", "1", "1"}, {"A", "-1", "1"}}});
  EXPECT_EQ(render_text(records), "C1 = 3\nC2 = 0\nC3 = 1 - A\n");
}

TEST(Render, CsvFieldQuoting) {
  EXPECT_EQ(csv_field("AB"), "AB");
  EXPECT_EQ(csv_field("[A,B]"), "\"[A,B]\"");
  EXPECT_EQ(csv_field("a\"b"), "\"a\"\"b\"");
  EXPECT_EQ(csv_field("x\ny"), "\"x\ny\"");
}

TEST(Render, CsvWordsFrozenThroughDegreeTwo) {
  const auto records = make_records(bch_recurrence(2), OutputBasis::words);
  EXPECT_EQ(render_csv(records),
            "degree,basis,term,numerator,denominator\n"
            "1,words,A,1,1\n"
            "1,words,B,1,1\n"
            "2,words,AB,1,2\n"
            "2,words,BA,-1,2\n");
}

TEST(Render, CsvRightnormedQuotesBracketTerms) {
  const auto records = make_records(bch_recurrence(2), OutputBasis::rightnormed);
  EXPECT_EQ(render_csv(records),
            "degree,basis,term,numerator,denominator\n"
            "1,rightnormed,A,1,1\n"
            "1,rightnormed,B,1,1\n"
            "2,rightnormed,\"[A,B]\",1,4\n"
            "2,rightnormed,\"[B,A]\",-1,4\n");
}

TEST(Render, JsonStructure) {
  const BchResult result = bch_recurrence(2);
  const auto records = make_records(result, OutputBasis::words);
  const std::string text = render_json(ab(), method_name(result.method), records);
  const nlohmann::json root = nlohmann::json::parse(text);
  EXPECT_EQ(root.at("alphabet"), nlohmann::json({"A", "B"}));
  EXPECT_EQ(root.at("method"), "recurrence");
  ASSERT_EQ(root.at("components").size(), 2u);
  const auto& c2 = root.at("components")[1];
  EXPECT_EQ(c2.at("degree"), 2);
  EXPECT_EQ(c2.at("basis"), "words");
  ASSERT_EQ(c2.at("entries").size(), 2u);
  EXPECT_EQ(c2.at("entries")[0].at("term"), "AB");
  EXPECT_EQ(c2.at("entries")[0].at("num"), "1");
  EXPECT_EQ(c2.at("entries")[0].at("den"), "2");
  EXPECT_EQ(c2.at("entries")[1].at("num"), "-1");
}

TEST(Render, JsonParseAndRedumpIsByteIdentical) {
  for (const OutputBasis basis : {OutputBasis::words, OutputBasis::rightnormed}) {
    const auto records = make_records(bch_recurrence(4), basis);
    const std::string text = render_json(ab(), "recurrence", records);
    EXPECT_EQ(nlohmann::json::parse(text).dump(2) + "\n", text);
    EXPECT_EQ(text.back(), '\n');
  }
}
