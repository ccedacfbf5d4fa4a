#include "liebasis/projection.hpp"

#include <algorithm>
#include <functional>

namespace liebasis {

bool BasisExpansion::operator==(const BasisExpansion& o) const {
  if (terms.size() != o.terms.size()) return false;
  for (size_t i = 0; i < terms.size(); ++i)
    if (terms[i].first.str() != o.terms[i].first.str() ||
        terms[i].second != o.terms[i].second)
      return false;
  return true;
}

std::string BasisExpansion::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms) {
    if (!out.empty()) out += ' ';
    out += (c < 0 ? "-" : "+");
    out += Int(abs(c)).str();
    out += '*';
    out += left_greedy_bracket(w)->text();
  }
  return out;
}

namespace {

void project_into(BasisExpansion& out, const Content& content,
                  const Alphabet& alphabet,
                  const std::function<Int(const LabeledDigraph&)>& pair_with) {
  for (const Word& w : enumerate_lyndon_by_content(alphabet, content)) {
    PartitionTree::Ptr tree = full_partition_or_throw(w);
    Int numerator = pair_with(star_graph(tree));
    if (numerator == 0) continue;
    Int denominator = self_pairing(tree);
    if (numerator % denominator != 0)
      throw NonIntegralCoefficientError(
          "project: <star(" + w.str() + "), L> = " + numerator.str() +
          " is not divisible by the self-pairing " + denominator.str());
    out.terms.emplace_back(w, numerator / denominator);
  }
}

}  // namespace

BasisExpansion project(const LieExpr::Ptr& e, const Alphabet& alphabet,
                       Evaluator evaluator) {
  BasisExpansion out;
  project_into(out, content_of(e->letters()), alphabet,
               [&](const LabeledDigraph& g) {
                 return pair_value(g, e, evaluator);
               });
  return out;
}

BasisExpansion project_combo(const LieCombo& c, const Alphabet& alphabet,
                             Evaluator evaluator) {
  std::map<Content, LieCombo> by_content;
  for (const auto& [e, k] : c)
    by_content[content_of(e->letters())].emplace(e, k);
  BasisExpansion out;
  for (const auto& [content, group] : by_content)
    project_into(out, content, alphabet, [&](const LabeledDigraph& g) {
      return pair_combo(g, group, evaluator);
    });
  return out;
}

namespace {

AssocPoly expansion_poly(const BasisExpansion& expansion) {
  AssocPoly total;
  for (const auto& [w, c] : expansion.terms) {
    for (const auto& [word, k] : assoc_expand(left_greedy_bracket(w))) {
      Int& coeff = total[word];
      coeff += c * k;
      if (coeff == 0) total.erase(word);
    }
  }
  return total;
}

}  // namespace

bool project_verify(const LieExpr::Ptr& e, const BasisExpansion& expansion) {
  return assoc_expand(e) == expansion_poly(expansion);
}

bool project_verify(const LieCombo& c, const BasisExpansion& expansion) {
  AssocPoly total;
  for (const auto& [e, k] : c) {
    for (const auto& [word, coeff] : assoc_expand(e)) {
      Int& v = total[word];
      v += k * coeff;
      if (v == 0) total.erase(word);
    }
  }
  return total == expansion_poly(expansion);
}

namespace {

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;  // squared prime factor
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

Int witt_dimension(int k, int n) {
  if (k < 1 || n < 1)
    throw std::invalid_argument("witt_dimension: k >= 1 and n >= 1");
  Int total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Int power = 1;
    for (int i = 0; i < n / d; ++i) power *= k;
    total += moebius(d) * power;
  }
  return total / n;
}

namespace {

std::string factorization_string(const std::vector<int>& factors) {
  if (factors.empty()) return "1";
  std::string out;
  for (int f : factors) {
    if (!out.empty()) out += '*';
    out += std::to_string(f) + "!";
  }
  return out;
}

}  // namespace

BasisReport verify_basis(const Alphabet& alphabet, int max_degree,
                         Evaluator evaluator) {
  if (max_degree < 1)
    throw std::invalid_argument("verify_basis: max_degree >= 1");
  BasisReport report;
  report.alphabet = alphabet.letters();
  report.max_degree = max_degree;
  report.pass = true;

  for (int n = 1; n <= max_degree; ++n) {
    std::vector<Word> words = enumerate_lyndon_by_length(alphabet, n);

    DegreeReport dr;
    dr.degree = n;
    dr.lyndon_count = static_cast<long long>(words.size());
    dr.witt = witt_dimension(alphabet.size(), n);
    dr.count_ok = (dr.witt == dr.lyndon_count);
    if (!dr.count_ok) report.pass = false;
    report.degrees.push_back(std::move(dr));

    // Group by content; the basis is content-graded.
    std::map<Content, std::vector<Word>> by_content;
    for (const Word& w : words) by_content[content_of(w.str())].push_back(w);

    for (const auto& [content, group] : by_content) {
      ContentReport cr;
      cr.content = content;
      cr.words = group;
      size_t m = group.size();
      cr.matrix.assign(m, std::vector<Int>(m, 0));
      cr.diagonal = true;
      for (size_t i = 0; i < m; ++i) {
        PartitionTree::Ptr tree_i = full_partition_or_throw(group[i]);
        LabeledDigraph star = star_graph(tree_i);
        for (size_t j = 0; j < m; ++j) {
          Int v = pair_value(star, left_greedy_bracket(group[j]), evaluator);
          cr.matrix[i][j] = v;
          if (i != j && v != 0) cr.diagonal = false;
        }
        cr.diag.push_back(cr.matrix[i][i]);
        cr.factorizations.push_back(
            factorization_string(self_pairing_factors(tree_i)));
      }
      cr.pass = cr.diagonal;
      for (size_t i = 0; i < m; ++i) {
        Int expected = self_pairing(full_partition_or_throw(group[i]));
        if (cr.diag[i] <= 0 || cr.diag[i] != expected) cr.pass = false;
      }
      if (!cr.pass) report.pass = false;
      report.contents.push_back(std::move(cr));
    }
  }
  return report;
}

std::string report_table(const BasisReport& r) {
  std::string out = "alphabet " + r.alphabet + ", degrees 1.." +
                    std::to_string(r.max_degree) + "\n";
  out += "degree  lyndon  witt  ok\n";
  for (const DegreeReport& d : r.degrees)
    out += "  " + std::to_string(d.degree) + "       " +
           std::to_string(d.lyndon_count) + "     " + d.witt.str() + "    " +
           (d.count_ok ? "yes" : "NO") + "\n";
  for (const ContentReport& c : r.contents) {
    out += "content " + format_content(c.content) + ": " +
           std::to_string(c.words.size()) + " words, diagonal " +
           (c.diagonal ? "yes" : "NO") + ", diag";
    for (size_t i = 0; i < c.diag.size(); ++i)
      out += " " + c.diag[i].str() + "=" + c.factorizations[i];
    out += c.pass ? "" : "  [FAIL]";
    out += "\n";
  }
  out += r.pass ? "PASS\n" : "FAIL\n";
  return out;
}

nlohmann::json report_json(const BasisReport& r) {
  nlohmann::json degrees = nlohmann::json::array();
  for (const DegreeReport& d : r.degrees)
    degrees.push_back({{"degree", d.degree},
                       {"lyndon_count", d.lyndon_count},
                       {"witt", d.witt.str()},
                       {"count_ok", d.count_ok}});
  nlohmann::json contents = nlohmann::json::array();
  for (const ContentReport& c : r.contents) {
    nlohmann::json words = nlohmann::json::array();
    for (const Word& w : c.words) words.push_back(w.str());
    nlohmann::json matrix = nlohmann::json::array();
    for (const auto& row : c.matrix) {
      nlohmann::json jrow = nlohmann::json::array();
      for (const Int& v : row) jrow.push_back(v.str());
      matrix.push_back(jrow);
    }
    nlohmann::json diag = nlohmann::json::array();
    for (const Int& v : c.diag) diag.push_back(v.str());
    contents.push_back({{"content", format_content(c.content)},
                        {"words", words},
                        {"matrix", matrix},
                        {"diagonal", c.diagonal},
                        {"diag", diag},
                        {"factorizations", c.factorizations},
                        {"pass", c.pass}});
  }
  return nlohmann::json{{"format", 1},
                        {"alphabet", r.alphabet},
                        {"max_degree", r.max_degree},
                        {"degrees", degrees},
                        {"contents", contents},
                        {"pass", r.pass}};
}

}  // namespace liebasis
