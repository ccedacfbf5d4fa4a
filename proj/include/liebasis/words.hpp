#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace liebasis {

// An ordered alphabet of distinct single-character letters.  The position of
// a letter in the string defines the total order used everywhere below.
class Alphabet {
 public:
  explicit Alphabet(std::string letters);

  // Alphabet consisting of the distinct letters of `text` in codepoint order.
  static Alphabet from_letters_of(std::string_view text);

  int size() const { return static_cast<int>(letters_.size()); }
  char letter(int i) const { return letters_[static_cast<size_t>(i)]; }
  bool contains(char c) const;
  int rank(char c) const;  // throws std::invalid_argument on unknown letter
  const std::string& letters() const { return letters_; }

  bool operator==(const Alphabet&) const = default;

 private:
  std::string letters_;
};

// A nonempty string of letters from a fixed alphabet.
class Word {
 public:
  Word(std::string text, Alphabet alphabet);

  // Word over the alphabet of its own distinct letters, codepoint order.
  static Word infer(std::string text);

  const std::string& str() const { return text_; }
  int size() const { return static_cast<int>(text_.size()); }
  char at(int i) const { return text_[static_cast<size_t>(i)]; }
  const Alphabet& alphabet() const { return alphabet_; }

  bool operator==(const Word& o) const { return text_ == o.text_; }

 private:
  std::string text_;
  Alphabet alphabet_;
};

// Multiset of letters with positive multiplicities.
using Content = std::map<char, int>;

Content content_of(std::string_view text);
Content parse_content(std::string_view spec);  // "a:3,b:3"
std::string format_content(const Content& c);
int content_size(const Content& c);

// Dictionary order induced by the alphabet order; a proper prefix is less
// than its extension.  Throws if the words use different alphabets.
std::strong_ordering lex_compare(const Word& u, const Word& v);

// The length-1 proper rotations of w, in order of how many letters were
// moved from the front to the back.  Duplicates are retained.
std::vector<Word> cyclic_permutations(const Word& w);

// True iff w is strictly less than every cyclic permutation of itself.
bool is_lyndon(const Word& w);

// All Lyndon-Shirshov words of length exactly n, lexicographically ordered.
// Generated with Duval's algorithm; the brute-force is_lyndon filter is the
// correctness contract (see tests).
std::vector<Word> enumerate_lyndon_by_length(const Alphabet& alphabet, int n);

// All Lyndon-Shirshov words with exactly the letter multiset c.
std::vector<Word> enumerate_lyndon_by_content(const Alphabet& alphabet,
                                              const Content& c);

}  // namespace liebasis
