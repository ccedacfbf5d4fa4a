#include "liebasis/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace liebasis {

PartitionTree::Ptr PartitionTree::leaf(char letter) {
  auto t = std::shared_ptr<PartitionTree>(new PartitionTree());
  t->letter_ = letter;
  return t;
}

PartitionTree::Ptr PartitionTree::node(Ptr base, int exponent, Ptr anchor) {
  if (!base || !anchor)
    throw std::invalid_argument("PartitionTree: null child");
  if (exponent < 1)
    throw std::invalid_argument("PartitionTree: exponent must be >= 1");
  if (tree_equal(base, anchor))
    throw std::invalid_argument(
        "PartitionTree: base and anchor must differ");
  auto t = std::shared_ptr<PartitionTree>(new PartitionTree());
  t->height_ = 1 + std::max(base->height(), anchor->height());
  t->leaf_count_ = exponent * base->leaf_count() + anchor->leaf_count();
  t->base_ = std::move(base);
  t->exponent_ = exponent;
  t->anchor_ = std::move(anchor);
  return t;
}

std::string PartitionTree::flatten() const {
  if (is_leaf()) return std::string(1, letter_);
  std::string out;
  std::string base = base_->flatten();
  for (int i = 0; i < exponent_; ++i) out += base;
  return out + anchor_->flatten();
}

bool tree_equal(const PartitionTree::Ptr& a, const PartitionTree::Ptr& b) {
  if (a == b) return true;
  if (a->is_leaf() != b->is_leaf()) return false;
  if (a->is_leaf()) return a->letter() == b->letter();
  return a->exponent() == b->exponent() && tree_equal(a->base(), b->base()) &&
         tree_equal(a->anchor(), b->anchor());
}

std::string PartitionFailure::reason() const {
  switch (kind) {
    case PartitionErrorKind::SingleLetterRepetition:
      return "repetitions of only one letter";
    case PartitionErrorKind::SameInitialFinalLetter:
      return "same initial and final letter";
    case PartitionErrorKind::SubwordRepetition:
      return "repetitions of a single subword";
    case PartitionErrorKind::SameInitialFinalSubword:
      return "same initial and final subword";
  }
  return "not fully partitionable";
}

std::string PartitionFailure::message() const {
  std::string out = reason() + " (stage " + std::to_string(stage) + ":";
  for (const std::string& b : blocks) out += " (" + b + ")";
  return out + ")";
}

NotFullyPartitionableError::NotFullyPartitionableError(
    const PartitionFailure& f)
    : std::runtime_error("word does not fully partition: " + f.message()),
      failure(f) {}

SimplePartitionResult simple_partition(const Word& w) {
  const std::string& s = w.str();
  if (s.size() == 1) return {{w}, std::nullopt};
  const char a = s[0];
  std::vector<Word> blocks;
  size_t i = 0;
  while (i < s.size()) {
    size_t j = i;
    while (j < s.size() && s[j] == a) ++j;
    if (j == s.size()) {
      // trailing run of the first letter
      PartitionFailure f;
      f.kind = (i == 0) ? PartitionErrorKind::SingleLetterRepetition
                        : PartitionErrorKind::SameInitialFinalLetter;
      f.stage = 1;
      for (const Word& b : blocks) f.blocks.push_back(b.str());
      f.blocks.push_back(s.substr(i));
      return {{}, f};
    }
    blocks.emplace_back(s.substr(i, j - i + 1), w.alphabet());
    i = j + 1;
  }
  return {std::move(blocks), std::nullopt};
}

FullPartitionResult full_partition(const Word& w) {
  struct Item {
    PartitionTree::Ptr tree;
    std::string word;
  };
  std::vector<Item> items;
  for (char c : w.str())
    items.push_back({PartitionTree::leaf(c), std::string(1, c)});

  int stage = 0;
  while (items.size() > 1) {
    ++stage;
    const std::string lead = items[0].word;
    std::vector<Item> next;
    size_t i = 0;
    while (i < items.size()) {
      if (items[i].word != lead) {
        // block not equal to the leading block: stands alone (exponent 0)
        next.push_back(items[i]);
        ++i;
        continue;
      }
      size_t j = i;
      while (j < items.size() && items[j].word == lead) ++j;
      if (j == items.size()) {
        PartitionFailure f;
        if (i == 0) {
          f.kind = (stage == 1) ? PartitionErrorKind::SingleLetterRepetition
                                : PartitionErrorKind::SubwordRepetition;
        } else {
          f.kind = (stage == 1) ? PartitionErrorKind::SameInitialFinalLetter
                                : PartitionErrorKind::SameInitialFinalSubword;
        }
        f.stage = stage;
        for (const Item& it : items) f.blocks.push_back(it.word);
        return {nullptr, f};
      }
      int exponent = static_cast<int>(j - i);
      std::string word;
      for (int r = 0; r < exponent; ++r) word += lead;
      word += items[j].word;
      next.push_back(
          {PartitionTree::node(items[i].tree, exponent, items[j].tree),
           std::move(word)});
      i = j + 1;
    }
    items = std::move(next);
  }
  return {items[0].tree, std::nullopt};
}

PartitionTree::Ptr full_partition_or_throw(const Word& w) {
  FullPartitionResult r = full_partition(w);
  if (!r.ok()) throw NotFullyPartitionableError(*r.failure);
  return r.tree;
}

namespace {

std::string render(const PartitionTree::Ptr& t, int level) {
  if (t->is_leaf()) {
    std::string s(1, t->letter());
    for (int i = 0; i < level; ++i) s = "(" + s + ")";
    return s;
  }
  // A node sitting above its own height stands for dropped exponent-0
  // rewraps; restore them.
  if (level > t->height()) return "(" + render(t, level - 1) + ")";
  std::string s = "(";
  for (int i = 0; i < t->exponent(); ++i) s += render(t->base(), level - 1);
  s += render(t->anchor(), level - 1);
  return s + ")";
}

}  // namespace

std::string render_nested(const PartitionTree::Ptr& t) {
  return render(t, std::max(1, t->height()));
}

nlohmann::json tree_to_json(const PartitionTree::Ptr& t) {
  if (t->is_leaf()) return std::string(1, t->letter());
  return nlohmann::json{{"base", tree_to_json(t->base())},
                        {"exponent", t->exponent()},
                        {"anchor", tree_to_json(t->anchor())}};
}

PartitionTree::Ptr tree_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s.size() != 1)
      throw std::invalid_argument("PartitionTree: leaf must be one letter");
    return PartitionTree::leaf(s[0]);
  }
  return PartitionTree::node(tree_from_json(j.at("base")),
                             j.at("exponent").get<int>(),
                             tree_from_json(j.at("anchor")));
}

}  // namespace liebasis
