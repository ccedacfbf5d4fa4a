#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "liebasis/graphs.hpp"
#include "liebasis/lie.hpp"
#include "liebasis/pairing.hpp"
#include "liebasis/partition.hpp"
#include "liebasis/projection.hpp"
#include "liebasis/words.hpp"

namespace {

using namespace liebasis;

constexpr int kExitDomainFailure = 1;
constexpr int kExitUsage = 2;

// --alphabet flag beats the LIEBASIS_ALPHABET environment variable beats the
// letters of the input in codepoint order.
Alphabet resolve_alphabet(const std::string& flag, std::string_view input) {
  if (!flag.empty()) return Alphabet(flag);
  if (const char* env = std::getenv("LIEBASIS_ALPHABET"); env && *env)
    return Alphabet(env);
  if (!input.empty()) return Alphabet::from_letters_of(input);
  throw CLI::ValidationError("--alphabet",
                             "no alphabet given and none can be inferred");
}

Evaluator parse_evaluator(const std::string& name) {
  if (name == "bruteforce") return Evaluator::BruteForce;
  if (name == "recursive") return Evaluator::Recursive;
  if (name == "checked") return Evaluator::Checked;
  throw CLI::ValidationError("--evaluator", "unknown evaluator " + name);
}

int cmd_lyndon(const std::string& alphabet_flag, int length,
               const std::string& content_spec, bool json) {
  std::vector<Word> words;
  if (!content_spec.empty()) {
    Content c = parse_content(content_spec);
    std::string letters;
    for (const auto& [letter, count] : c) letters += letter;
    Alphabet a = resolve_alphabet(alphabet_flag, letters);
    words = enumerate_lyndon_by_content(a, c);
  } else {
    Alphabet a = resolve_alphabet(alphabet_flag, "");
    words = enumerate_lyndon_by_length(a, length);
  }
  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Word& w : words) arr.push_back(w.str());
    std::cout << nlohmann::json{{"format", 1}, {"words", arr}}.dump() << "\n";
  } else {
    for (const Word& w : words) std::cout << w.str() << "\n";
  }
  return 0;
}

int cmd_partition(const std::string& alphabet_flag, const std::string& word,
                  bool json) {
  Word w(word, resolve_alphabet(alphabet_flag, word));
  FullPartitionResult r = full_partition(w);
  if (!r.ok()) {
    std::cerr << word << " does not fully partition: " << r.failure->message()
              << "\n";
    return kExitDomainFailure;
  }
  if (json)
    std::cout << nlohmann::json{{"format", 1},
                                {"word", word},
                                {"tree", tree_to_json(r.tree)}}
                     .dump()
              << "\n";
  else
    std::cout << render_nested(r.tree) << "\n";
  return 0;
}

int cmd_bracket(const std::string& alphabet_flag, const std::string& word,
                const std::string& style) {
  Word w(word, resolve_alphabet(alphabet_flag, word));
  LieExpr::Ptr e;
  if (style == "leftgreedy") {
    FullPartitionResult r = full_partition(w);
    if (!r.ok()) {
      std::cerr << word << " does not fully partition: "
                << r.failure->message() << "\n";
      return kExitDomainFailure;
    }
    e = left_greedy_bracket(r.tree);
  } else if (style == "standard") {
    try {
      e = standard_bracket(w);
    } catch (const NotLyndonError& err) {
      std::cerr << err.what() << "\n";
      return kExitDomainFailure;
    }
  } else {
    throw CLI::ValidationError("--style", "unknown style " + style);
  }
  std::cout << e->text() << "\n";
  return 0;
}

int cmd_star(const std::string& alphabet_flag, const std::string& word,
             const std::string& format) {
  Word w(word, resolve_alphabet(alphabet_flag, word));
  FullPartitionResult r = full_partition(w);
  if (!r.ok()) {
    std::cerr << word << " does not fully partition: " << r.failure->message()
              << "\n";
    return kExitDomainFailure;
  }
  LabeledDigraph g = star_graph(r.tree);
  if (format == "json")
    std::cout << graph_to_json(g).dump() << "\n";
  else
    std::cout << to_dot(g);
  return 0;
}

int cmd_pair(const std::string& alphabet_flag, const std::string& star_word,
             const std::string& graph_file, const std::string& expr_text,
             const std::string& evaluator_name) {
  LieExpr::Ptr e = parse_lie_expr(expr_text);
  Evaluator evaluator = parse_evaluator(evaluator_name);
  if (star_word.empty() == graph_file.empty())
    throw CLI::ValidationError(
        "pair", "exactly one of --star WORD or a graph file is required");
  if (!star_word.empty()) {
    Word w(star_word, resolve_alphabet(alphabet_flag, star_word));
    FullPartitionResult r = full_partition(w);
    if (!r.ok()) {
      std::cerr << star_word << " does not fully partition: "
                << r.failure->message() << "\n";
      return kExitDomainFailure;
    }
    std::cout << pair_value(star_graph(r.tree), e, evaluator).str() << "\n";
    return 0;
  }
  std::ifstream in(graph_file);
  if (!in) {
    std::cerr << "cannot open " << graph_file << "\n";
    return kExitUsage;
  }
  nlohmann::json j;
  in >> j;
  std::cout << pair_value(graph_from_json(j), e, evaluator).str() << "\n";
  return 0;
}

int cmd_project(const std::string& alphabet_flag, const std::string& expr_text,
                const std::string& evaluator_name, bool json) {
  LieExpr::Ptr e = parse_lie_expr(expr_text);
  Alphabet a = resolve_alphabet(alphabet_flag, e->letters());
  BasisExpansion expansion = project(e, a, parse_evaluator(evaluator_name));
  if (json) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : expansion.terms)
      terms.push_back({{"word", w.str()},
                       {"bracket", left_greedy_bracket(w)->text()},
                       {"coefficient", c.str()}});
    std::cout << nlohmann::json{{"format", 1}, {"terms", terms}}.dump()
              << "\n";
  } else {
    std::cout << expansion.to_string() << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& alphabet_flag, int max_degree,
               const std::string& evaluator_name, bool json) {
  Alphabet a = resolve_alphabet(alphabet_flag, "");
  BasisReport report = verify_basis(a, max_degree,
                                    parse_evaluator(evaluator_name));
  if (json)
    std::cout << report_json(report).dump() << "\n";
  else
    std::cout << report_table(report);
  return report.pass ? 0 : kExitDomainFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Left-greedy basis of free Lie algebras: Lyndon-Shirshov "
               "words, star graphs, configuration pairing, projection"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --alphabet after the subcommand name

  std::string alphabet;
  app.add_option("--alphabet", alphabet,
                 "Alphabet letters in order (default: LIEBASIS_ALPHABET or "
                 "the input's letters in codepoint order)");

  int length = 0;
  std::string content_spec;
  bool lyndon_json = false;
  CLI::App* lyndon = app.add_subcommand(
      "lyndon", "Enumerate Lyndon-Shirshov words");
  CLI::Option* opt_length =
      lyndon->add_option("--length", length, "word length");
  lyndon->add_option("--content", content_spec,
                     "letter multiset, e.g. a:3,b:3")
      ->excludes(opt_length);
  lyndon->add_flag("--json", lyndon_json, "JSON output");

  std::string partition_word;
  bool partition_json = false;
  CLI::App* partition = app.add_subcommand(
      "partition", "Fully partition a word into nested simple words");
  partition->add_option("word", partition_word)->required();
  partition->add_flag("--json", partition_json, "JSON output");

  std::string bracket_word, bracket_style = "leftgreedy";
  CLI::App* bracket =
      app.add_subcommand("bracket", "Bracket a word as a Lie expression");
  bracket->add_option("word", bracket_word)->required();
  bracket->add_option("--style", bracket_style, "leftgreedy|standard");

  std::string star_word, star_format = "dot";
  CLI::App* star = app.add_subcommand("star", "Star graph of a word");
  star->add_option("word", star_word)->required();
  star->add_option("--format", star_format, "dot|json");

  std::string pair_star, pair_graph, pair_expr, evaluator = "checked";
  CLI::App* pair = app.add_subcommand(
      "pair", "Configuration pairing of a graph with a Lie expression");
  pair->add_option("--star", pair_star, "star graph of this word");
  pair->add_option("graph", pair_graph, "JSON graph file");
  pair->add_option("expr", pair_expr, "Lie bracket expression");
  pair->add_option("--evaluator", evaluator,
                   "bruteforce|recursive|checked");

  std::string project_expr, project_evaluator = "recursive";
  bool project_json = false;
  CLI::App* project = app.add_subcommand(
      "project", "Project an expression onto the left-greedy basis");
  project->add_option("expr", project_expr)->required();
  project->add_option("--evaluator", project_evaluator,
                      "bruteforce|recursive|checked");
  project->add_flag("--json", project_json, "JSON output");

  int max_degree = 8;
  std::string verify_evaluator = "recursive";
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "Diagonality and Witt-count report for the basis");
  verify->add_option("--max-degree", max_degree, "maximum degree");
  verify->add_option("--evaluator", verify_evaluator,
                     "bruteforce|recursive|checked");
  verify->add_flag("--json", verify_json, "JSON output");

  try {
    app.parse(argc, argv);

    if (*lyndon) {
      if (content_spec.empty() && length < 1)
        throw CLI::ValidationError("lyndon",
                                   "--length or --content is required");
      return cmd_lyndon(alphabet, length, content_spec, lyndon_json);
    }
    if (*partition)
      return cmd_partition(alphabet, partition_word, partition_json);
    if (*bracket) return cmd_bracket(alphabet, bracket_word, bracket_style);
    if (*star) return cmd_star(alphabet, star_word, star_format);
    if (*pair) {
      if (pair_expr.empty()) {
        // with only one positional it lands in `graph`; it is the expression
        pair_expr = pair_graph;
        pair_graph.clear();
      }
      if (pair_expr.empty())
        throw CLI::ValidationError("pair", "an expression is required");
      return cmd_pair(alphabet, pair_star, pair_graph, pair_expr, evaluator);
    }
    if (*project)
      return cmd_project(alphabet, project_expr, project_evaluator,
                         project_json);
    if (*verify)
      return cmd_verify(alphabet, max_degree, verify_evaluator, verify_json);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const LieParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomainFailure;
  }
}
