#include <gtest/gtest.h>

#include <sstream>

#include "termgraph/error.hpp"
#include "termgraph/lexicon.hpp"

using namespace termgraph;

TEST(SynonymLexicon, LoadsSymmetricPairs) {
  std::istringstream in("# comment\nreaction\tresponse\n\nTumours\ttumor\n");
  const auto lex = SynonymLexicon::load(in, "test");
  EXPECT_TRUE(lex.contains("reaction", "response"));
  EXPECT_TRUE(lex.contains("response", "reaction"));
  EXPECT_TRUE(lex.contains("tumor", "tumour"));
  EXPECT_FALSE(lex.contains("reaction", "tumor"));
  EXPECT_EQ(lex.pair_count(), 4u);
  EXPECT_EQ(lex.source_tag(), "test");
  ASSERT_EQ(lex.synonyms_of("response").size(), 1u);
  EXPECT_EQ(lex.synonyms_of("response")[0], "reaction");
  EXPECT_TRUE(lex.synonyms_of("nothing").empty());
}

TEST(SynonymLexicon, MalformedLineThrowsWithLineNumber) {
  std::istringstream in("a1\tb1\njust-one-column\n");
  try {
    SynonymLexicon::load(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::malformed_lexicon_line);
    EXPECT_EQ(e.location(), 2u);
  }
  std::istringstream three("a\tb\tc\n");
  EXPECT_THROW(SynonymLexicon::load(three), Error);
}

TEST(SynonymLexicon, ReflexiveAndMultiwordEntriesAreRejected) {
  std::istringstream in("cell\tcells\nheat\twarmth\nbone marrow\tmarrow\n");
  const auto lex = SynonymLexicon::load(in);
  EXPECT_EQ(lex.pair_count(), 2u);
  ASSERT_EQ(lex.rejected().size(), 2u);
  EXPECT_EQ(lex.rejected()[0].line, 1u);
  EXPECT_EQ(lex.rejected()[1].line, 3u);
}

TEST(SynonymLexicon, AddIgnoresReflexive) {
  SynonymLexicon lex;
  EXPECT_FALSE(lex.add("x1", "x1"));
  EXPECT_TRUE(lex.add("x1", "x2"));
  EXPECT_TRUE(lex.add("x2", "x1"));
  EXPECT_EQ(lex.pair_count(), 2u);
  EXPECT_FALSE(lex.empty());
}
