// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "liebasis/projection.hpp"

using namespace liebasis;

namespace {

const Alphabet kAB("ab");
const Alphabet kABC("abc");

int checks_failed = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++checks_failed;
    std::cout << "    check failed: " << what << "\n";
  }
}

template <typename T>
void expect_eq(const T& got, const T& want, const std::string& what) {
  if (!(got == want)) {
    ++checks_failed;
    std::cout << "    check failed: " << what << "\n";
  }
}

LabeledDigraph star(const std::string& w) {
  return star_graph(Word::infer(w));
}

// Directed path through the letters of `labels`, in order.
LabeledDigraph path(const std::string& labels) {
  std::vector<GraphVertex> vs;
  std::vector<GraphEdge> es;
  for (size_t i = 0; i < labels.size(); ++i) {
    vs.push_back({static_cast<int>(i), labels[i]});
    if (i + 1 < labels.size())
      es.push_back({static_cast<int>(i), static_cast<int>(i) + 1});
  }
  return LabeledDigraph(std::move(vs), std::move(es), std::nullopt);
}

bool brute_is_lyndon(const std::string& s, const Alphabet& a) {
  for (size_t k = 1; k < s.size(); ++k) {
    std::string rot = s.substr(k) + s.substr(0, k);
    if (lex_compare(Word(s, a), Word(rot, a)) != std::strong_ordering::less)
      return false;
  }
  return true;
}

std::vector<std::string> brute_lyndon(const Alphabet& a, int n) {
  std::vector<std::string> out;
  std::string s(static_cast<size_t>(n), a.letters()[0]);
  std::vector<int> idx(static_cast<size_t>(n), 0);
  while (true) {
    for (int i = 0; i < n; ++i) s[static_cast<size_t>(i)] =
        a.letters()[static_cast<size_t>(idx[static_cast<size_t>(i)])];
    if (brute_is_lyndon(s, a)) out.push_back(s);
    int i = n - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == a.size() - 1)
      idx[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
  }
  return out;
}

void worked_example() {
  auto start = std::chrono::steady_clock::now();

  LieExpr::Ptr L = parse_lie_expr("[[[a,b],b],[[a,b],a]]");
  expect_eq(pair_recursive(star("aaabbb"), L), Int(0), "<star(aaabbb), L>");
  expect_eq(pair_recursive(star("aababb"), L), Int(2), "<star(aababb), L>");
  expect_eq(pair_recursive(star("aabbab"), L), Int(-2), "<star(aabbab), L>");
  expect_eq(self_pairing(Word::infer("aaabbb")), Int(6), "self aaabbb");
  expect_eq(self_pairing(Word::infer("aababb")), Int(2), "self aababb");
  expect_eq(self_pairing(Word::infer("aabbab")), Int(2), "self aabbab");

  BasisExpansion e = project(L, kAB);
  expect(e.terms.size() == 2 && e.terms[0].first.str() == "aababb" &&
             e.terms[0].second == 1 && e.terms[1].first.str() == "aabbab" &&
             e.terms[1].second == -1,
         "projection is +1*aababb -1*aabbab");
  expect(project_verify(L, e), "projection reconstructs the expression");

  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  expect(secs < 1.0, "runtime under one second");
}

void bracketing_fixtures() {
  auto lg = [](const std::string& w) {
    return left_greedy_bracket(Word::infer(w))->text();
  };
  auto st = [](const std::string& w) {
    return standard_bracket(Word::infer(w))->text();
  };
  expect_eq(lg("aaab"), std::string("[a,[a,[a,b]]]"), "lg(aaab)");
  expect_eq(lg("ababb"), std::string("[[a,b],[[a,b],b]]"), "lg(ababb)");
  expect_eq(lg("aabcb"), std::string("[[[a,[a,b]],c],b]"), "lg(aabcb)");
  expect_eq(lg("aababb"), std::string("[[[a,[a,b]],[a,b]],b]"), "lg(aababb)");
  expect_eq(lg("ababbabaab"),
            std::string("[[[a,b],[[a,b],b]],[[a,b],[a,[a,b]]]]"),
            "lg(ababbabaab)");
  expect_eq(st("aaabb"), std::string("[a,[a,[[a,b],b]]]"), "standard(aaabb)");
  expect_eq(st("aababb"), std::string("[a,[[a,b],[[a,b],b]]]"),
            "standard(aababb)");
}

void partition_fixtures() {
  auto nested = [](const std::string& w) {
    return render_nested(full_partition_or_throw(Word::infer(w)));
  };
  expect_eq(nested("aaaab"), std::string("(aaaab)"), "partition aaaab");
  expect_eq(nested("ababb"), std::string("((ab)(ab)(b))"), "partition ababb");
  expect_eq(nested("aabcb"), std::string("(((aab)(c))((b)))"),
            "partition aabcb");
  expect_eq(nested("ababbabaab"), std::string("(((ab)(ab)(b))((ab)(aab)))"),
            "partition ababbabaab");
  expect_eq(nested("abcabcabbabcaab"),
            std::string("((((ab)(c))((ab)(c))((ab)(b)))(((ab)(c))((aab))))"),
            "partition abcabcabbabcaab");

  auto fails_with = [](const std::string& w, PartitionErrorKind kind,
                       const std::string& reason) {
    FullPartitionResult r = full_partition(Word::infer(w));
    return !r.ok() && r.failure->kind == kind && r.failure->reason() == reason;
  };
  expect(fails_with("aaaa", PartitionErrorKind::SingleLetterRepetition,
                    "repetitions of only one letter"),
         "aaaa fails: one letter");
  expect(fails_with("aaba", PartitionErrorKind::SameInitialFinalLetter,
                    "same initial and final letter"),
         "aaba fails: initial = final letter");
  expect(fails_with("abab", PartitionErrorKind::SubwordRepetition,
                    "repetitions of a single subword"),
         "abab fails: repeated subword");
  expect(fails_with("abaabab", PartitionErrorKind::SameInitialFinalSubword,
                    "same initial and final subword"),
         "abaabab fails: initial = final subword");
  expect(fails_with("ababbcababb", PartitionErrorKind::SameInitialFinalSubword,
                    "same initial and final subword"),
         "ababbcababb fails: initial = final subword");
}

void pairing_fixtures() {
  expect_eq(pair_bruteforce(star("aab"), parse_lie_expr("[[a,b],a]")),
            Int(-2), "<star(aab), [[a,b],a]> = -2");
  expect_eq(pair_bruteforce(star("abc"), parse_lie_expr("[[b,c],a]")),
            Int(-1), "<star(abc), [[b,c],a]> = -1");
  expect_eq(pair_bruteforce(star("aab"), parse_lie_expr("[[a,a],b]")),
            Int(0), "<star(aab), [[a,a],b]> = 0");
  // -1 = the coefficient of abca in the associative expansion; the second
  // bijection is killed by the connectivity condition
  expect_eq(pair_bruteforce(path("abca"), parse_lie_expr("[[a,b],[a,c]]")),
            Int(-1), "<path(abca), [[a,b],[a,c]]> = -1");
  Int factorial = 1;
  for (int n = 1; n <= 6; ++n) {
    factorial *= n;
    std::string w(static_cast<size_t>(n), 'a');
    w += 'b';
    expect_eq(pair_bruteforce(star(w), left_greedy_bracket(Word::infer(w))),
              factorial, "self pairing of " + w + " = " + std::to_string(n) +
                             "!");
    expect_eq(self_pairing(Word::infer(w)), factorial,
              "closed-form self pairing of " + w);
  }
}

void diagonality(const Alphabet& a, int max_degree) {
  BasisReport r = verify_basis(a, max_degree);
  expect(r.pass, "verify_basis passes for " + a.letters() + " up to degree " +
                     std::to_string(max_degree));
  for (const ContentReport& c : r.contents) {
    expect(c.diagonal, "matrix diagonal for content " +
                           format_content(c.content));
    for (size_t i = 0; i < c.words.size(); ++i) {
      expect(c.diag[i] > 0, "positive diagonal entry for " +
                                c.words[i].str());
      expect(c.diag[i] ==
                 self_pairing(full_partition_or_throw(c.words[i])),
             "diagonal entry of " + c.words[i].str() +
                 " equals its self pairing");
    }
  }
}

void evaluators_agree() {
  // every basis-vs-basis pairing used by the diagonality criterion
  for (int n = 2; n <= 8; ++n)
    for (const Word& w1 : enumerate_lyndon_by_length(kAB, n)) {
      LabeledDigraph g = star_graph(w1);
      for (const Word& w2 : enumerate_lyndon_by_length(kAB, n)) {
        LieExpr::Ptr e = left_greedy_bracket(w2);
        expect(pair_bruteforce(g, e) == pair_recursive(g, e),
               "evaluators agree on <star(" + w1.str() + "), " + e->text() +
                   ">");
      }
    }
  for (int n = 2; n <= 6; ++n)
    for (const Word& w1 : enumerate_lyndon_by_length(kABC, n)) {
      LabeledDigraph g = star_graph(w1);
      for (const Word& w2 : enumerate_lyndon_by_length(kABC, n)) {
        LieExpr::Ptr e = left_greedy_bracket(w2);
        expect(pair_bruteforce(g, e) == pair_recursive(g, e),
               "evaluators agree on <star(" + w1.str() + "), " + e->text() +
                   ">");
      }
    }

  // random expression shapes against random basis star graphs
  for (int degree = 2; degree <= 7; ++degree) {
    std::mt19937_64 rng(1000 + static_cast<uint64_t>(degree));
    for (int trial = 0; trial < 500; ++trial) {
      LieExpr::Ptr e = random_expr(kAB, degree, rng);
      std::vector<Word> words =
          enumerate_lyndon_by_content(kAB, content_of(e->letters()));
      if (words.empty()) continue;
      const Word& w = words[rng() % words.size()];
      LabeledDigraph g = star_graph(w);
      expect(pair_bruteforce(g, e) == pair_recursive(g, e),
             "evaluators agree on <star(" + w.str() + "), " + e->text() +
                 ">");
    }
  }
}

void relations_vanish() {
  for (int degree = 2; degree <= 6; ++degree) {
    for (uint64_t seed = 0; seed < 200; ++seed) {
      LieCombo relation =
          random_relation(kAB, degree,
                          seed * 31 + static_cast<uint64_t>(degree));
      Content c = content_of(relation.begin()->first->letters());
      bool all_zero = true;
      for (const Word& w : enumerate_lyndon_by_content(kAB, c))
        if (pair_combo(star_graph(w), relation, Evaluator::Recursive) != 0)
          all_zero = false;
      expect(all_zero, "relation pairs to zero (degree " +
                           std::to_string(degree) + ", seed " +
                           std::to_string(seed) + ")");
      expect(project_combo(relation, kAB).terms.empty(),
             "relation projects to zero (degree " + std::to_string(degree) +
                 ", seed " + std::to_string(seed) + ")");
    }
  }
}

void long_graph_duality() {
  // the pairing of a directed path with an expression is the coefficient of
  // the path's letter sequence in the associative expansion
  for (int n = 2; n <= 6; ++n)
    for (const Word& w1 : enumerate_lyndon_by_length(kAB, n)) {
      LabeledDigraph g = path(w1.str());
      for (const Word& w2 : enumerate_lyndon_by_length(kAB, n)) {
        LieExpr::Ptr e = left_greedy_bracket(w2);
        AssocPoly p = assoc_expand(e);
        Int coeff = p.count(w1.str()) ? p.at(w1.str()) : 0;
        expect(pair_bruteforce(g, e) == coeff,
               "path duality for " + w1.str() + " vs " + e->text());
      }
    }
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    int degree = 2 + static_cast<int>(rng() % 5);
    LieExpr::Ptr e = random_expr(kAB, degree, rng);
    std::string word = e->letters();
    std::sort(word.begin(), word.end());
    AssocPoly p = assoc_expand(e);
    Int coeff = p.count(word) ? p.at(word) : 0;
    expect(pair_bruteforce(path(word), e) == coeff,
           "path duality for random expression " + e->text());
  }
}

void lyndon_counts() {
  for (int n = 1; n <= 10; ++n)
    expect(witt_dimension(2, n) ==
               static_cast<long long>(
                   enumerate_lyndon_by_length(kAB, n).size()),
           "necklace count matches at degree " + std::to_string(n) +
               " over ab");
  for (int n = 1; n <= 7; ++n)
    expect(witt_dimension(3, n) ==
               static_cast<long long>(
                   enumerate_lyndon_by_length(kABC, n).size()),
           "necklace count matches at degree " + std::to_string(n) +
               " over abc");
  for (int n = 1; n <= 7; ++n) {
    std::vector<std::string> fast;
    for (const Word& w : enumerate_lyndon_by_length(kAB, n))
      fast.push_back(w.str());
    expect(fast == brute_lyndon(kAB, n),
           "enumeration matches exhaustive filter at degree " +
               std::to_string(n) + " over ab");
    std::vector<std::string> fast3;
    for (const Word& w : enumerate_lyndon_by_length(kABC, n))
      fast3.push_back(w.str());
    expect(fast3 == brute_lyndon(kABC, n),
           "enumeration matches exhaustive filter at degree " +
               std::to_string(n) + " over abc");
  }
}

void random_projections() {
  for (int degree = 2; degree <= 7; ++degree) {
    std::mt19937_64 rng(7000 + static_cast<uint64_t>(degree));
    for (int trial = 0; trial < 500; ++trial) {
      LieExpr::Ptr e = random_expr(kAB, degree, rng);
      try {
        BasisExpansion expansion = project(e, kAB);
        expect(project_verify(e, expansion),
               "projection reconstructs " + e->text());
      } catch (const NonIntegralCoefficientError& err) {
        expect(false, std::string("integral coefficients: ") + err.what());
      }
    }
  }
}

struct Criterion {
  std::string name;
  std::function<void()> body;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"worked end-to-end projection example", worked_example},
      {"bracketing fixtures byte-exact", bracketing_fixtures},
      {"partition fixtures and failure reasons", partition_fixtures},
      {"pairing fixtures", pairing_fixtures},
      {"pairing matrices diagonal with positive self-pairing diagonal",
       [] {
         diagonality(kAB, 8);
         diagonality(kABC, 6);
       }},
      {"recursive and brute-force evaluators agree", evaluators_agree},
      {"relations pair and project to zero", relations_vanish},
      {"path pairing equals associative coefficient", long_graph_duality},
      {"enumeration matches necklace counts and exhaustive filter",
       lyndon_counts},
      {"random projections are integral and verified", random_projections},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    int before = checks_failed;
    try {
      c.body();
    } catch (const std::exception& e) {
      std::cout << "    exception: " << e.what() << "\n";
      ++checks_failed;
    }
    bool ok = (checks_failed == before);
    std::cout << (ok ? "PASS" : "FAIL") << ": " << c.name << "\n";
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
