#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>

#include "platjones/braid.hpp"
#include "platjones/error.hpp"

using namespace platjones;
using namespace platjones::braid;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error for: " << text);
  return ErrorCode::Domain;
}

}  // namespace

TEST_CASE("parse trefoil") {
  const auto b = parse("strands=4 colors=1/2,1/2,1/2,1/2 word=2 2 2");
  CHECK(b.strands == 4);
  CHECK(b.word == std::vector<int>{2, 2, 2});
  for (const auto& s : b.bottom.strands) CHECK(s.color.twice == 1);
  CHECK(component_count(b) == 1);
}

TEST_CASE("parse unknot with empty word and integer colors") {
  const auto b = parse("strands=2 colors=1,1 word=");
  CHECK(b.word.empty());
  CHECK(b.bottom[0].color.twice == 2);
  const auto c = parse("  strands=2\tcolors=3/2,3/2   word=  ");
  CHECK(c.bottom[1].color.twice == 3);
}

TEST_CASE("index error carries the offending token position") {
  const std::string text = "strands=4 colors=1/2,1/2,1/2,1/2 word=2 -5";
  try {
    parse(text);
    FAIL("expected IndexError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Index);
    REQUIRE(e.position().has_value());
    CHECK(*e.position() == text.find("-5"));
  }
}

TEST_CASE("syntax and plat errors") {
  CHECK(code_of("strands=4 colors=1/2,1/2,1/2 word=2") == ErrorCode::Syntax);
  CHECK(code_of("strands=3 colors=1/2,1/2,1/2 word=") == ErrorCode::Syntax);
  CHECK(code_of("strands=4 colors=1/2,1/2,1/2,1/2 word=2 x") == ErrorCode::Syntax);
  CHECK(code_of("strands=4 colors=2/3,1/2,1/2,1/2 word=") == ErrorCode::Syntax);
  CHECK(code_of("strands=4 colors=1/2,1/2,1/2,1/2 word=0") == ErrorCode::Syntax);
  CHECK(code_of("strands=4 colors=1/2,1,1/2,1 word=") == ErrorCode::Plat);
  CHECK(code_of("strands=4 colors=1/2,1/2,1/2,1/2 word= orient=uudd") == ErrorCode::Plat);
}

TEST_CASE("JSON form") {
  const auto b = parse(R"({"strands":4,"colors_twice":[1,1,1,1],"word":[2,2,2]})");
  CHECK(b == parse("strands=4 colors=1/2,1/2,1/2,1/2 word=2 2 2"));
  const auto j = parse(render_json(b));
  CHECK(j == b);
}

TEST_CASE("slice_at examples and prefix consistency") {
  const auto b = parse("strands=4 colors=1/2,1/2,1/2,1/2 word=2 2 2");
  CHECK(slice_at(b, 0) == b.bottom);
  const auto s1 = slice_at(b, 1);
  CHECK(s1[1] == b.bottom[2]);
  CHECK(s1[2] == b.bottom[1]);
  CHECK_THROWS_AS(slice_at(b, 4), Error);
  for (std::size_t n = 0; n < b.length(); ++n) {
    CHECK(slice_at(b, n + 1) == slice_at(b, n).swapped(static_cast<std::size_t>(std::abs(b.word[n]) - 1)));
  }
}

TEST_CASE("mirror examples") {
  const auto b = parse("strands=4 colors=1/2,1/2,1/2,1/2 word=2 2 2");
  CHECK(mirror(b).word == std::vector<int>{-2, -2, -2});
  CHECK(mirror(parse("strands=2 colors=1/2,1/2 word=")).word.empty());
  const auto c = parse("strands=4 colors=1/2,1/2,1/2,1/2 word=1 -3");
  CHECK(mirror(c).word == std::vector<int>{3, -1});
  CHECK(mirror(mirror(b)) == b);
  CHECK(mirror(mirror(c)) == c);
}

TEST_CASE("render round trip on random plat braids") {
  std::mt19937 rng(7);
  int made = 0;
  for (int trial = 0; trial < 400 && made < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 3);
    std::vector<int> colors;
    for (int i = 0; i < m; ++i) {
      const int c = static_cast<int>(rng() % 4);
      colors.push_back(c);
      colors.push_back(c);
    }
    std::vector<int> word;
    const int len = static_cast<int>(rng() % 6);
    for (int i = 0; i < len; ++i) {
      const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(2 * m - 1));
      word.push_back(rng() % 2 ? g : -g);
    }
    ColoredBraidWord b;
    try {
      b = make_braid(2 * m, colors, word, std::nullopt);
    } catch (const Error&) {
      continue;  // top caps not admissible for this word
    }
    ++made;
    CHECK(parse(render(b)) == b);
    CHECK(parse(render_json(b)) == b);
    CHECK(mirror(mirror(b)) == b);
  }
  CHECK(made >= 50);
}

TEST_CASE("orientation inference gives antiparallel caps") {
  const auto b = parse("strands=6 colors=1/2,1/2,1/2,1/2,1/2,1/2 word=2 4");
  for (std::size_t i = 0; i < 6; i += 2) CHECK(b.bottom[i].up != b.bottom[i + 1].up);
  CHECK_NOTHROW(check_plat(b));
}

TEST_CASE("check_level") {
  const auto b = parse("strands=2 colors=1,1 word=1");
  CHECK_NOTHROW(check_level(b, Level(2)));
  CHECK_THROWS_AS(check_level(b, Level(1)), Error);
}

TEST_CASE("insert_cancelling_pair") {
  const auto b = parse("strands=4 colors=1/2,1/2,1/2,1/2 word=2 2 2");
  const auto c = insert_cancelling_pair(b, 1, 3);
  CHECK(c.word == std::vector<int>{2, 3, -3, 2, 2});
}
