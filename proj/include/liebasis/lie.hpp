#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "liebasis/partition.hpp"
#include "liebasis/words.hpp"

namespace liebasis {

using Int = boost::multiprecision::cpp_int;

// A binary Lie bracket expression tree over letters.  Equality is
// structural; the pairing and projection do all algebraic identification.
// The canonical printed form is cached at construction, so comparing
// expressions is string comparison.
class LieExpr {
 public:
  using Ptr = std::shared_ptr<const LieExpr>;

  static Ptr leaf(char letter);
  static Ptr bracket(Ptr left, Ptr right);

  bool is_leaf() const { return !left_; }
  char letter() const { return text_[0]; }
  const Ptr& left() const { return left_; }
  const Ptr& right() const { return right_; }

  int degree() const { return degree_; }
  const std::string& text() const { return text_; }  // e.g. [[a,b],a]
  std::string letters() const;  // leaf letters left-to-right

 private:
  LieExpr() = default;
  Ptr left_, right_;
  int degree_ = 1;
  std::string text_;
};

struct LieParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Grammar: expr := letter | '[' expr ',' expr ']'; whitespace insignificant.
LieExpr::Ptr parse_lie_expr(std::string_view text);

// Deterministic order: degree, then printed form.
struct LieExprLess {
  bool operator()(const LieExpr::Ptr& a, const LieExpr::Ptr& b) const {
    if (a->degree() != b->degree()) return a->degree() < b->degree();
    return a->text() < b->text();
  }
};

// Integer-coefficient formal sum of bracket expressions; no zero
// coefficients stored.
using LieCombo = std::map<LieExpr::Ptr, Int, LieExprLess>;

void combo_accumulate(LieCombo& c, const LieExpr::Ptr& e, const Int& k);
LieCombo combo_add(const LieCombo& a, const LieCombo& b);
LieCombo combo_scale(const LieCombo& c, const Int& k);
std::string combo_to_string(const LieCombo& c);

// Formal sum of associative words, all of one length and content.
using AssocPoly = std::map<std::string, Int>;

// Expansion under [X,Y] -> XY - YX into the free associative algebra.
AssocPoly assoc_expand(const LieExpr::Ptr& e);

// Right-normed bracketing over each level of the full partition:
// Node(alpha, n, chi) -> [|alpha|,[|alpha|,...[|alpha|,|chi|]...]].
LieExpr::Ptr left_greedy_bracket(const PartitionTree::Ptr& t);
LieExpr::Ptr left_greedy_bracket(const Word& w);  // partitions first

struct NotLyndonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Recursive split at the maximal proper Lyndon-Shirshov suffix.
LieExpr::Ptr standard_bracket(const Word& w);

// A random expression of the given degree with letters drawn uniformly.
LieExpr::Ptr random_expr(const Alphabet& alphabet, int degree,
                         std::mt19937_64& rng);

// A combo in the span of anti-commutativity and Jacobi instances, built by
// wrapping a random relation inside random enclosing brackets.  Pairs to
// zero against every graph and projects to the empty expansion.
LieCombo random_relation(const Alphabet& alphabet, int degree, uint64_t seed);

}  // namespace liebasis
