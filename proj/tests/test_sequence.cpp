#include <gtest/gtest.h>

#include "forestcolor/sequence.hpp"

using namespace forestcolor;

TEST(Sequence, ParsesInsertWithParent) {
  UpdateSequence s = parse_sequence("+ 0 1 p=0\n");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0], Update::insert(0, 1, 0));
}

TEST(Sequence, ParsesDeleteAndComments) {
  UpdateSequence s = parse_sequence("# header\n+ 2 3   # trailing\n\n- 2 3\n");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], Update::insert(2, 3));
  EXPECT_EQ(s[1], Update::erase(2, 3));
}

TEST(Sequence, MalformedLineReportsLineNumber) {
  try {
    parse_sequence("+ 0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  try {
    parse_sequence("+ 0 1\n- 0 1\n+ 1 2 p=7\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_sequence("* 0 1\n"), ParseError);
  EXPECT_THROW(parse_sequence("+ 0 x\n"), ParseError);
}

TEST(Sequence, RoundTripIsByteIdentical) {
  const std::string text = "+ 0 1 p=0\n+ 1 2\n- 0 1\n+ 3 1 p=1\n";
  EXPECT_EQ(serialize_sequence(parse_sequence(text)), text);
  UpdateSequence seq = {Update::insert(4, 5, 5), Update::erase(4, 5)};
  EXPECT_EQ(parse_sequence(serialize_sequence(seq)), seq);
}
