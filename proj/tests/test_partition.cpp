#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liebasis/partition.hpp"

using namespace liebasis;

namespace {

const Alphabet kAB("ab");
const Alphabet kABC("abc");

std::vector<std::string> simple_blocks(const std::string& w) {
  SimplePartitionResult r = simple_partition(Word::infer(w));
  REQUIRE(r.ok());
  std::vector<std::string> out;
  for (const Word& b : r.blocks) out.push_back(b.str());
  return out;
}

PartitionFailure full_failure(const std::string& w) {
  FullPartitionResult r = full_partition(Word::infer(w));
  REQUIRE_FALSE(r.ok());
  return *r.failure;
}

std::string nested(const std::string& w) {
  return render_nested(full_partition_or_throw(Word::infer(w)));
}

}  // namespace

TEST_CASE("simple partition") {
  CHECK(simple_blocks("aabcb") == std::vector<std::string>{"aab", "c", "b"});
  CHECK(simple_blocks("abaabab") ==
        std::vector<std::string>{"ab", "aab", "ab"});
  CHECK(simple_blocks("x") == std::vector<std::string>{"x"});

  SimplePartitionResult bad = simple_partition(Word::infer("aaba"));
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.failure->kind == PartitionErrorKind::SameInitialFinalLetter);
}

TEST_CASE("full partition successes") {
  CHECK(nested("aaaab") == "(aaaab)");
  CHECK(nested("ababb") == "((ab)(ab)(b))");
  CHECK(nested("aabcb") == "(((aab)(c))((b)))");
  CHECK(nested("ababbabaab") == "(((ab)(ab)(b))((ab)(aab)))");
  CHECK(nested("abcabcabbabcaab") ==
        "((((ab)(c))((ab)(c))((ab)(b)))(((ab)(c))((aab))))");
  CHECK(nested("b") == "(b)");

  PartitionTree::Ptr t = full_partition_or_throw(Word::infer("ababb"));
  REQUIRE_FALSE(t->is_leaf());
  CHECK(t->exponent() == 2);
  CHECK(t->base()->flatten() == "ab");
  CHECK(t->anchor()->is_leaf());
  CHECK(t->anchor()->letter() == 'b');

  PartitionTree::Ptr simple = full_partition_or_throw(Word::infer("aaaab"));
  CHECK(simple->base()->is_leaf());
  CHECK(simple->exponent() == 4);
  CHECK(simple->anchor()->letter() == 'b');
}

TEST_CASE("full partition failures carry diagnostic reasons") {
  CHECK(full_failure("aaaa").kind ==
        PartitionErrorKind::SingleLetterRepetition);
  CHECK(full_failure("aaaa").reason() == "repetitions of only one letter");
  CHECK(full_failure("aaba").kind ==
        PartitionErrorKind::SameInitialFinalLetter);
  CHECK(full_failure("aaba").reason() == "same initial and final letter");
  CHECK(full_failure("abab").kind == PartitionErrorKind::SubwordRepetition);
  CHECK(full_failure("abab").reason() == "repetitions of a single subword");
  CHECK(full_failure("abaabab").kind ==
        PartitionErrorKind::SameInitialFinalSubword);
  CHECK(full_failure("ababbcababb").kind ==
        PartitionErrorKind::SameInitialFinalSubword);
  // the failing stage of ababbcababb is the level whose blocks repeat
  // (ab)(ab)(b)
  PartitionFailure f = full_failure("ababbcababb");
  CHECK(f.stage == 3);
  CHECK(f.blocks == std::vector<std::string>{"ababb", "c", "ababb"});

  CHECK_THROWS_AS(full_partition_or_throw(Word::infer("abab")),
                  NotFullyPartitionableError);
}

TEST_CASE("partition is deterministic and flattens back") {
  for (int n = 1; n <= 8; ++n)
    for (const Word& w : enumerate_lyndon_by_length(kAB, n)) {
      FullPartitionResult r1 = full_partition(w);
      FullPartitionResult r2 = full_partition(w);
      REQUIRE(r1.ok());
      CHECK(tree_equal(r1.tree, r2.tree));
      CHECK(r1.tree->flatten() == w.str());
      CHECK(r1.tree->leaf_count() == w.size());
    }
}

TEST_CASE("every lyndon word fully partitions") {
  for (int n = 1; n <= 10; ++n)
    for (const Word& w : enumerate_lyndon_by_length(kAB, n))
      CHECK(full_partition(w).ok());
  for (int n = 1; n <= 7; ++n)
    for (const Word& w : enumerate_lyndon_by_length(kABC, n))
      CHECK(full_partition(w).ok());
}

TEST_CASE("some non-lyndon words fully partition") {
  int found = 0;
  for (int n = 2; n <= 6; ++n) {
    // scan all words of length n over {a,b}
    for (int bits = 0; bits < (1 << n); ++bits) {
      std::string s;
      for (int i = 0; i < n; ++i) s += (bits >> i & 1) ? 'b' : 'a';
      Word w(s, kAB);
      if (!is_lyndon(w) && full_partition(w).ok()) ++found;
    }
  }
  CHECK(found > 0);
  // one concrete witness: ba is not Lyndon but is a b-simple word
  CHECK_FALSE(is_lyndon(Word("ba", kAB)));
  CHECK(full_partition(Word("ba", kAB)).ok());
}

TEST_CASE("node invariants") {
  PartitionTree::Ptr a = PartitionTree::leaf('a');
  PartitionTree::Ptr b = PartitionTree::leaf('b');
  CHECK_THROWS_AS(PartitionTree::node(a, 0, b), std::invalid_argument);
  CHECK_THROWS_AS(PartitionTree::node(a, 2, PartitionTree::leaf('a')),
                  std::invalid_argument);
}

TEST_CASE("json round trip") {
  for (const std::string& s : {"ababbabaab", "aabcb", "b", "aaaab"}) {
    PartitionTree::Ptr t = full_partition_or_throw(Word::infer(s));
    PartitionTree::Ptr back = tree_from_json(tree_to_json(t));
    CHECK(tree_equal(t, back));
  }
}
