#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liebasis/words.hpp"
#include "json.hpp"

namespace liebasis {

// The nested full-partition structure of a word: a leaf is a single letter,
// a node encodes a simple word base^exponent anchor in the alphabet of its
// children.  A repeated block with exponent 0 is represented by the block
// itself, so nodes always have exponent >= 1.
class PartitionTree {
 public:
  using Ptr = std::shared_ptr<const PartitionTree>;

  static Ptr leaf(char letter);
  static Ptr node(Ptr base, int exponent, Ptr anchor);

  bool is_leaf() const { return !base_; }
  char letter() const { return letter_; }
  const Ptr& base() const { return base_; }
  int exponent() const { return exponent_; }
  const Ptr& anchor() const { return anchor_; }

  // Number of partition levels above the letters (0 for a leaf).
  int height() const { return height_; }
  int leaf_count() const { return leaf_count_; }

  // Concatenation of the leaves left-to-right: the tree's underlying word.
  std::string flatten() const;

 private:
  PartitionTree() = default;
  char letter_ = 0;
  Ptr base_;
  int exponent_ = 0;
  Ptr anchor_;
  int height_ = 0;
  int leaf_count_ = 1;
};

bool tree_equal(const PartitionTree::Ptr& a, const PartitionTree::Ptr& b);

enum class PartitionErrorKind {
  SingleLetterRepetition,   // aaaa
  SameInitialFinalLetter,   // aaba
  SubwordRepetition,        // abab -> (ab)(ab)
  SameInitialFinalSubword,  // abaabab -> (ab)(aab)(ab)
};

struct PartitionFailure {
  PartitionErrorKind kind;
  int stage;                        // 1 = letter level
  std::vector<std::string> blocks;  // items of the stage that failed
  std::string reason() const;       // human-readable phrase
  std::string message() const;      // reason plus stage diagnostics
};

struct SimplePartitionResult {
  std::vector<Word> blocks;
  std::optional<PartitionFailure> failure;
  bool ok() const { return !failure.has_value(); }
};

// The unique decomposition of w into a-simple blocks, a being w's first
// letter.  Fails iff w ends in a trailing run of a (single-letter words are
// trivially a-simple and succeed).
SimplePartitionResult simple_partition(const Word& w);

struct FullPartitionResult {
  PartitionTree::Ptr tree;  // null on failure
  std::optional<PartitionFailure> failure;
  bool ok() const { return tree != nullptr; }
};

// Recursively simple-partition, treating subwords as letters, until a single
// simple word remains.  Fails iff some stage has the form alpha^k or
// alpha.chi.alpha.
FullPartitionResult full_partition(const Word& w);

struct NotFullyPartitionableError : std::runtime_error {
  explicit NotFullyPartitionableError(const PartitionFailure& f);
  PartitionFailure failure;
};

PartitionTree::Ptr full_partition_or_throw(const Word& w);

// Nested-parenthesis rendering mirroring the partition levels, e.g.
// aabcb -> (((aab)(c))((b))).
std::string render_nested(const PartitionTree::Ptr& t);

nlohmann::json tree_to_json(const PartitionTree::Ptr& t);
PartitionTree::Ptr tree_from_json(const nlohmann::json& j);

}  // namespace liebasis
