#include "doctest.h"
#include "support/generators.hpp"
#include "symtorsion/errors.hpp"
#include "symtorsion/literal.hpp"

using namespace symt;
using namespace symt::testing;

namespace {

const char* kTwoTerm = R"([group]
rank: 1
phi: 1
c1: 0
grading: z

[complex main]
[module 1]
x1
[module 2]
x0
[differential]
x1 -> x0: 1 - 1*g(1)
)";

std::pair<std::size_t, std::size_t> error_position(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("parse a two-term complex") {
  const auto doc = parse_document(kTwoTerm);
  CHECK(doc.grading_kind == GradingKind::Z);
  REQUIRE(doc.complexes.size() == 1);
  CHECK(doc.complexes[0].name == "main");
  const auto& c = doc.complex("main");
  CHECK(c.generators().size() == 2);
  CHECK(format_literal(c.entry(*c.find("x1"), *c.find("x0"))) == "1 - 1*g(1)");
  CHECK(render_document(doc) == kTwoTerm);
}

TEST_CASE("defaults, comments and several names per line") {
  const auto doc = parse_document(
      "# comment\n[group]\nrank: 2\nphi: 1 1/2\nc1: 2 0   # trailing\n\n[module 0]\na b\n[module 1]\nc\n"
      "[differential]\na -> c: g(0,1)\n");
  CHECK(doc.grading_kind == GradingKind::Z2);
  CHECK(doc.complex("main").generators().size() == 3);
  CHECK(doc.grading().modulus == 2);
}

TEST_CASE("z2n grading uses the minimal chern number") {
  const auto doc = parse_document("[group]\nrank: 1\nphi: 1\nc1: 3\ngrading: z2n\n[module 5]\na\n");
  CHECK(doc.grading().modulus == 6);
  CHECK(doc.complex("main").generators()[0].degree == 5);
  const auto flat = parse_document("[group]\nrank: 1\nphi: 1\nc1: 0\ngrading: z2n\n[module -3]\na\n");
  CHECK(flat.grading().modulus == 0);
}

TEST_CASE("several complexes and a map") {
  const auto doc = parse_document(
      "[group]\nrank: 1\nphi: 1\nc1: 0\ngrading: z\n"
      "[complex c]\n[module 0]\na\n[complex d]\n[module 0]\na\n"
      "[map f]\nsource: c\ntarget: d\na -> a: 1 + g(1)\n");
  CHECK(doc.complexes.size() == 2);
  const auto& m = doc.map("f");
  CHECK(m.source == "c");
  CHECK(m.map->shift() == 0);
  CHECK(format_literal(m.map->entry(0, 0)) == "1 + 1*g(1)");
  CHECK(parse_document(render_document(doc)) == doc);
  CHECK_THROWS_AS(doc.map("g"), StructuralError);
}

TEST_CASE("error positions") {
  const std::string head = "[group]\nrank: 1\nphi: 1\nc1: 0\n";
  CHECK(error_position(head + "[module 0]\na\n[module 1]\nb\n[differential]\na -> q: 1\n") ==
        std::make_pair<std::size_t, std::size_t>(10, 6));
  CHECK(error_position(head + "[module 0]\na\n[module 1]\nb\n[differential]\na -> b: 1 + * g(1)\n").first == 10);
  CHECK(error_position(head + "[module 0]\na\n[module 2]\nb\n[differential]\na -> b: 1\n").first == 10);
  CHECK(error_position(head + "[module 0]\na\na\n").first == 7);
  CHECK(error_position(head + "[modul 0]\n") == std::make_pair<std::size_t, std::size_t>(5, 2));
  CHECK(error_position("[group]\nrank: 1\nphi: 1 2\nc1: 0\n").first == 3);
  CHECK(error_position("[group]\nrank: x\n").first == 2);
  CHECK(error_position("[module 0]\na\n").first == 1);
  CHECK(error_position(head + "[module 0]\n9a\n") == std::make_pair<std::size_t, std::size_t>(6, 1));
  CHECK(error_position(head + "[module 0]\na\n[module 1]\nb\n[differential]\na -> b: 1\na -> b: 2\n").first == 11);
  CHECK(error_position(head + "[module 0]\na\n[map f]\nsource: main\ntarget: nope\n").first >= 7);
}

TEST_CASE("render then parse reproduces random documents") {
  Rng rng(61);
  for (int i = 0; i < 50; ++i) {
    const ComplexDocument doc = random_document(rng);
    const std::string text = render_document(doc);
    INFO(text);
    const ComplexDocument back = parse_document(text);
    CHECK(back == doc);
    CHECK(normalize_document(text) == text);
  }
}

TEST_CASE("normalization is idempotent on shuffled input") {
  const std::string messy =
      "[group]\nrank: 1\nphi: 1\nc1: 0\ngrading: z\n[module 2]\nx0\n[module 1]\nx1\n[differential]\n"
      "x1 -> x0:   -g(1) +1\n";
  const std::string once = normalize_document(messy);
  CHECK(normalize_document(once) == once);
  CHECK(once == kTwoTerm);
}

TEST_CASE("parser is total on mutated documents") {
  Rng rng(62);
  const std::string seed = std::string(kTwoTerm) + "[map f]\nsource: main\ntarget: main\nx1 -> x1: 2\n";
  const std::string junk = "[]:#->@=/ \n\tgxz019-+*(),";
  for (int i = 0; i < 3000; ++i) {
    std::string s = seed;
    const int edits = uniform(rng, 1, 6);
    for (int k = 0; k < edits; ++k) {
      const auto pos = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(s.size())));
      switch (uniform(rng, 0, 2)) {
        case 0:
          if (pos < s.size()) s.erase(pos, 1);
          break;
        case 1:
          s.insert(pos, 1, junk[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(junk.size()) - 1))]);
          break;
        default:
          if (pos < s.size()) s[pos] = junk[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(junk.size()) - 1))];
      }
    }
    try {
      const auto doc = parse_document(s);
      CHECK(parse_document(render_document(doc)) == doc);
    } catch (const ParseError&) {
    }
  }
}

TEST_CASE("missing files") {
  CHECK_THROWS_AS(read_document("/nonexistent/dir/file.cplx"), IoError);
  CHECK_NOTHROW(read_document(std::string(SYMTORSION_FIXTURES) + "/two_term.cplx"));
}

TEST_CASE("make_document wraps one complex") {
  const auto doc = parse_document(kTwoTerm);
  const auto wrapped = make_document(doc.complex("main"), GradingKind::Z);
  CHECK(render_document(wrapped) == kTwoTerm);
}
