#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "termgraph/error.hpp"
#include "termgraph/normalize.hpp"

using namespace termgraph;

TEST(Lemmatize, StripsRegularPlurals) {
  EXPECT_EQ(lemmatize("cells"), "cell");
  EXPECT_EQ(lemmatize("studies"), "study");
  EXPECT_EQ(lemmatize("boxes"), "box");
  EXPECT_EQ(lemmatize("branches"), "branch");
  EXPECT_EQ(lemmatize("classes"), "class");
  EXPECT_EQ(lemmatize("signals"), "signal");
}

TEST(Lemmatize, LeavesProtectedEndings) {
  EXPECT_EQ(lemmatize("class"), "class");
  EXPECT_EQ(lemmatize("virus"), "virus");
  EXPECT_EQ(lemmatize("analysis"), "analysis");
  EXPECT_EQ(lemmatize("gas"), "gas");
  EXPECT_EQ(lemmatize("series"), "series");
  EXPECT_EQ(lemmatize("bus"), "bus");
  EXPECT_EQ(lemmatize("ies"), "ies");
}

TEST(Lemmatize, Irregulars) {
  EXPECT_EQ(lemmatize("data"), "datum");
  EXPECT_EQ(lemmatize("criteria"), "criterion");
  EXPECT_EQ(lemmatize("mice"), "mouse");
  EXPECT_EQ(lemmatize("hypotheses"), "hypothesis");
}

TEST(Normalize, FoldsAsciiOnly) {
  EXPECT_EQ(fold_case("Bone MARROW"), "bone marrow");
  EXPECT_EQ(fold_case("\xC3\x89tude"), "\xC3\x89tude");
}

TEST(Normalize, SplitsHyphensAndSlashes) {
  EXPECT_EQ(normalize_word("Object-Oriented"), (Words{"object", "oriented"}));
  EXPECT_EQ(normalize_word("input/output"), (Words{"input", "output"}));
  EXPECT_TRUE(normalize_word("-/-").empty());
  EXPECT_EQ(normalize_text("  Tumour  Cells "), (Words{"tumour", "cell"}));
}

TEST(Normalize, EmptyAfterNormalizationThrows) {
  const Words raw{"-", "/"};
  try {
    normalize(raw);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::empty_after_normalization);
  }
  EXPECT_THROW(normalize_text("   "), Error);
}

TEST(Normalize, JoinWords) {
  const Words w{"a", "b", "c"};
  EXPECT_EQ(join_words(w), "a b c");
  EXPECT_EQ(join_words(w, "_"), "a_b_c");
  EXPECT_EQ(join_words(Words{}), "");
}

namespace {

std::string random_raw_word(std::mt19937_64& rng) {
  static const std::vector<std::string> stems = {"cell", "stud", "box", "class", "virus", "data",
                                                  "analys", "branch", "signal", "bias", "seri", "ax"};
  static const std::vector<std::string> endings = {"", "s", "es", "ies", "is", "ses", "ss", "us", "a"};
  std::uniform_int_distribution<std::size_t> stem(0, stems.size() - 1);
  std::uniform_int_distribution<std::size_t> end(0, endings.size() - 1);
  std::uniform_int_distribution<int> sep(0, 5);
  std::bernoulli_distribution upper(0.3);
  std::string w = stems[stem(rng)] + endings[end(rng)];
  if (int s = sep(rng); s == 0) w += "-" + stems[stem(rng)] + endings[end(rng)];
  else if (s == 1) w = stems[stem(rng)] + "/" + w;
  for (char& c : w) {
    if (upper(rng) && c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  return w;
}

}  // namespace

TEST(Normalize, AgreesWithSecondImplementationOnRandomWords) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Words raw{random_raw_word(rng), random_raw_word(rng)};
    const Words got = normalize(raw);
    EXPECT_EQ(got, termgraph::testing::oracle::normalize(raw)) << raw[0] << ' ' << raw[1];
    EXPECT_EQ(normalize(got), got) << "not idempotent for " << raw[0] << ' ' << raw[1];
    for (const auto& w : got) EXPECT_EQ(lemmatize(lemmatize(w)), lemmatize(w));
  }
}
