#pragma once

#include <string>
#include <vector>

#include "liebasis/pairing.hpp"

namespace liebasis {

struct NonIntegralCoefficientError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Expansion of an expression over left-greedy brackets of Lyndon-Shirshov
// words, sorted by content then word; zero coefficients omitted.
struct BasisExpansion {
  std::vector<std::pair<Word, Int>> terms;

  bool operator==(const BasisExpansion& o) const;
  std::string to_string() const;  // "+1*[[[a,[a,b]],[a,b]],b] -1*..."
};

// coefficient of w = <star(w), L> / <star(w), |w|>, over the Lyndon words
// of L's content.  The division is asserted exact.
BasisExpansion project(const LieExpr::Ptr& e, const Alphabet& alphabet,
                       Evaluator evaluator = Evaluator::Recursive);

// Linear extension; mixed contents are projected per-content and
// concatenated.
BasisExpansion project_combo(const LieCombo& c, const Alphabet& alphabet,
                             Evaluator evaluator = Evaluator::Recursive);

// Independent associative-algebra witness: true iff assoc_expand(e) equals
// the expansion of sum c_i * |w_i|.
bool project_verify(const LieExpr::Ptr& e, const BasisExpansion& expansion);
bool project_verify(const LieCombo& c, const BasisExpansion& expansion);

// Moebius necklace count (1/n) sum_{d|n} mu(d) k^(n/d); independent count
// oracle for the Lyndon enumeration.
Int witt_dimension(int k, int n);

struct ContentReport {
  Content content;
  std::vector<Word> words;
  std::vector<std::vector<Int>> matrix;  // <star(w_i), |w_j|>
  bool diagonal = false;
  std::vector<Int> diag;
  std::vector<std::string> factorizations;  // e.g. "3!", "2!*2!"
  bool pass = false;
};

struct DegreeReport {
  int degree = 0;
  long long lyndon_count = 0;
  Int witt;
  bool count_ok = false;
};

struct BasisReport {
  std::string alphabet;
  int max_degree = 0;
  std::vector<DegreeReport> degrees;
  std::vector<ContentReport> contents;
  bool pass = false;
};

// Per content up to max_degree: pairing matrix, diagonality, diagonal =
// self_pairing factorization, counts vs the Witt formula.
BasisReport verify_basis(const Alphabet& alphabet, int max_degree,
                         Evaluator evaluator = Evaluator::Recursive);

std::string report_table(const BasisReport& r);
nlohmann::json report_json(const BasisReport& r);

}  // namespace liebasis
