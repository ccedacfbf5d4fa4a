#include "liebasis/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace liebasis {

Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty())
    throw std::invalid_argument("Alphabet: must be nonempty");
  std::string sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("Alphabet: letters must be distinct");
}

Alphabet Alphabet::from_letters_of(std::string_view text) {
  std::string letters(text);
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  return Alphabet(letters);
}

bool Alphabet::contains(char c) const {
  return letters_.find(c) != std::string::npos;
}

int Alphabet::rank(char c) const {
  size_t pos = letters_.find(c);
  if (pos == std::string::npos)
    throw std::invalid_argument(std::string("Alphabet: unknown letter '") + c +
                                "'");
  return static_cast<int>(pos);
}

Word::Word(std::string text, Alphabet alphabet)
    : text_(std::move(text)), alphabet_(std::move(alphabet)) {
  if (text_.empty()) throw std::invalid_argument("Word: must be nonempty");
  for (char c : text_) {
    if (!alphabet_.contains(c))
      throw std::invalid_argument(std::string("Word: letter '") + c +
                                  "' is not in the alphabet");
  }
}

Word Word::infer(std::string text) {
  Alphabet a = Alphabet::from_letters_of(text);
  return Word(std::move(text), std::move(a));
}

Content content_of(std::string_view text) {
  Content c;
  for (char ch : text) ++c[ch];
  return c;
}

Content parse_content(std::string_view spec) {
  Content c;
  size_t i = 0;
  while (i < spec.size()) {
    size_t comma = spec.find(',', i);
    std::string_view part = spec.substr(i, comma == std::string_view::npos
                                               ? std::string_view::npos
                                               : comma - i);
    size_t colon = part.find(':');
    if (colon != 1 || part.size() < 3)
      throw std::invalid_argument("Content: expected letter:count pairs, got '" +
                                  std::string(spec) + "'");
    int count = std::stoi(std::string(part.substr(2)));
    if (count <= 0)
      throw std::invalid_argument("Content: multiplicities must be positive");
    char letter = part[0];
    if (c.count(letter))
      throw std::invalid_argument("Content: repeated letter in spec");
    c[letter] = count;
    if (comma == std::string_view::npos) break;
    i = comma + 1;
  }
  if (c.empty()) throw std::invalid_argument("Content: empty spec");
  return c;
}

std::string format_content(const Content& c) {
  std::string out;
  for (const auto& [letter, count] : c) {
    if (!out.empty()) out += ',';
    out += letter;
    out += ':';
    out += std::to_string(count);
  }
  return out;
}

int content_size(const Content& c) {
  int n = 0;
  for (const auto& [letter, count] : c) n += count;
  return n;
}

namespace {

// Dictionary comparison of two plain strings under an alphabet's order.
std::strong_ordering rank_compare(const Alphabet& a, std::string_view u,
                                  std::string_view v) {
  size_t n = std::min(u.size(), v.size());
  for (size_t i = 0; i < n; ++i) {
    int ru = a.rank(u[i]), rv = a.rank(v[i]);
    if (ru != rv) return ru <=> rv;
  }
  return u.size() <=> v.size();
}

}  // namespace

std::strong_ordering lex_compare(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet())
    throw std::invalid_argument("lex_compare: words use different alphabets");
  return rank_compare(u.alphabet(), u.str(), v.str());
}

std::vector<Word> cyclic_permutations(const Word& w) {
  std::vector<Word> out;
  const std::string& s = w.str();
  for (size_t k = 1; k < s.size(); ++k)
    out.emplace_back(s.substr(k) + s.substr(0, k), w.alphabet());
  return out;
}

bool is_lyndon(const Word& w) {
  const std::string& s = w.str();
  for (size_t k = 1; k < s.size(); ++k) {
    std::string rot = s.substr(k) + s.substr(0, k);
    if (rank_compare(w.alphabet(), s, rot) >= 0) return false;
  }
  return true;
}

std::vector<Word> enumerate_lyndon_by_length(const Alphabet& alphabet, int n) {
  if (n < 1) throw std::invalid_argument("enumerate_lyndon_by_length: n >= 1");
  std::vector<Word> out;
  const int k = alphabet.size();
  // Duval's generation of Lyndon words of length <= n in lexicographic
  // order, keeping only those of length exactly n.
  std::vector<int> w{0};
  while (true) {
    if (static_cast<int>(w.size()) == n) {
      std::string s;
      for (int r : w) s += alphabet.letter(r);
      out.emplace_back(std::move(s), alphabet);
    }
    size_t m = w.size();
    while (static_cast<int>(w.size()) < n) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
    if (w.empty()) break;
    ++w.back();
  }
  return out;
}

std::vector<Word> enumerate_lyndon_by_content(const Alphabet& alphabet,
                                              const Content& c) {
  int n = 0;
  for (const auto& [letter, count] : c) {
    if (!alphabet.contains(letter))
      throw std::invalid_argument(
          std::string("enumerate_lyndon_by_content: letter '") + letter +
          "' is not in the alphabet");
    if (count <= 0)
      throw std::invalid_argument(
          "enumerate_lyndon_by_content: multiplicities must be positive");
    n += count;
  }
  std::vector<Word> out;
  for (const Word& w : enumerate_lyndon_by_length(alphabet, n))
    if (content_of(w.str()) == c) out.push_back(w);
  return out;
}

}  // namespace liebasis
