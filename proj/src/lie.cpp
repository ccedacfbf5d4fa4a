#include "liebasis/lie.hpp"

#include <algorithm>

namespace liebasis {

LieExpr::Ptr LieExpr::leaf(char letter) {
  auto e = std::shared_ptr<LieExpr>(new LieExpr());
  e->text_ = std::string(1, letter);
  return e;
}

LieExpr::Ptr LieExpr::bracket(Ptr left, Ptr right) {
  if (!left || !right) throw std::invalid_argument("LieExpr: null child");
  auto e = std::shared_ptr<LieExpr>(new LieExpr());
  e->degree_ = left->degree() + right->degree();
  e->text_ = "[" + left->text() + "," + right->text() + "]";
  e->left_ = std::move(left);
  e->right_ = std::move(right);
  return e;
}

std::string LieExpr::letters() const {
  std::string out;
  for (char c : text_)
    if (c != '[' && c != ']' && c != ',') out += c;
  return out;
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  char peek() {
    skip_ws();
    if (pos >= text.size()) throw LieParseError("unexpected end of expression");
    return text[pos];
  }

  void expect(char c) {
    if (peek() != c)
      throw LieParseError(std::string("expected '") + c + "' at position " +
                          std::to_string(pos) + " in '" + std::string(text) +
                          "'");
    ++pos;
  }

  LieExpr::Ptr expr() {
    char c = peek();
    if (c == '[') {
      ++pos;
      LieExpr::Ptr l = expr();
      expect(',');
      LieExpr::Ptr r = expr();
      expect(']');
      return LieExpr::bracket(std::move(l), std::move(r));
    }
    if (c == ']' || c == ',')
      throw LieParseError(std::string("unexpected '") + c + "' at position " +
                          std::to_string(pos));
    ++pos;
    return LieExpr::leaf(c);
  }
};

}  // namespace

LieExpr::Ptr parse_lie_expr(std::string_view text) {
  Parser p{text};
  LieExpr::Ptr e = p.expr();
  p.skip_ws();
  if (p.pos != text.size())
    throw LieParseError("trailing input after expression: '" +
                        std::string(text.substr(p.pos)) + "'");
  return e;
}

void combo_accumulate(LieCombo& c, const LieExpr::Ptr& e, const Int& k) {
  if (k == 0) return;
  auto it = c.find(e);
  if (it == c.end()) {
    c.emplace(e, k);
    return;
  }
  it->second += k;
  if (it->second == 0) c.erase(it);
}

LieCombo combo_add(const LieCombo& a, const LieCombo& b) {
  LieCombo out = a;
  for (const auto& [e, k] : b) combo_accumulate(out, e, k);
  return out;
}

LieCombo combo_scale(const LieCombo& c, const Int& k) {
  LieCombo out;
  if (k == 0) return out;
  for (const auto& [e, coeff] : c) out.emplace(e, coeff * k);
  return out;
}

std::string combo_to_string(const LieCombo& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [e, k] : c) {
    if (!out.empty()) out += ' ';
    out += (k < 0 ? "-" : "+");
    out += Int(abs(k)).str();
    out += '*';
    out += e->text();
  }
  return out;
}

AssocPoly assoc_expand(const LieExpr::Ptr& e) {
  if (e->is_leaf()) return {{std::string(1, e->letter()), 1}};
  AssocPoly l = assoc_expand(e->left());
  AssocPoly r = assoc_expand(e->right());
  AssocPoly out;
  auto emit = [&out](const std::string& w, const Int& k) {
    Int& c = out[w];
    c += k;
    if (c == 0) out.erase(w);
  };
  for (const auto& [wl, kl] : l)
    for (const auto& [wr, kr] : r) {
      emit(wl + wr, kl * kr);
      emit(wr + wl, -kl * kr);
    }
  return out;
}

LieExpr::Ptr left_greedy_bracket(const PartitionTree::Ptr& t) {
  if (t->is_leaf()) return LieExpr::leaf(t->letter());
  LieExpr::Ptr base = left_greedy_bracket(t->base());
  LieExpr::Ptr out = left_greedy_bracket(t->anchor());
  for (int i = 0; i < t->exponent(); ++i) out = LieExpr::bracket(base, out);
  return out;
}

LieExpr::Ptr left_greedy_bracket(const Word& w) {
  return left_greedy_bracket(full_partition_or_throw(w));
}

LieExpr::Ptr standard_bracket(const Word& w) {
  if (!is_lyndon(w))
    throw NotLyndonError("standard_bracket: '" + w.str() +
                         "' is not a Lyndon-Shirshov word");
  const std::string& s = w.str();
  if (s.size() == 1) return LieExpr::leaf(s[0]);
  // Split at the longest proper Lyndon-Shirshov suffix.
  for (size_t k = 1; k < s.size(); ++k) {
    Word suffix(s.substr(k), w.alphabet());
    if (is_lyndon(suffix)) {
      Word prefix(s.substr(0, k), w.alphabet());
      return LieExpr::bracket(standard_bracket(prefix),
                              standard_bracket(suffix));
    }
  }
  // unreachable: the final letter is always a Lyndon suffix
  throw std::logic_error("standard_bracket: no Lyndon suffix found");
}

LieExpr::Ptr random_expr(const Alphabet& alphabet, int degree,
                         std::mt19937_64& rng) {
  if (degree < 1) throw std::invalid_argument("random_expr: degree >= 1");
  if (degree == 1) {
    std::uniform_int_distribution<int> pick(0, alphabet.size() - 1);
    return LieExpr::leaf(alphabet.letter(pick(rng)));
  }
  std::uniform_int_distribution<int> split(1, degree - 1);
  int l = split(rng);
  return LieExpr::bracket(random_expr(alphabet, l, rng),
                          random_expr(alphabet, degree - l, rng));
}

LieCombo random_relation(const Alphabet& alphabet, int degree, uint64_t seed) {
  if (degree < 2) throw std::invalid_argument("random_relation: degree >= 2");
  std::mt19937_64 rng(seed);
  const bool jacobi = degree >= 3 && (rng() & 1);
  const int parts = jacobi ? 3 : 2;

  // Degree of the core relation instance; the rest is spent wrapping.
  std::uniform_int_distribution<int> extra(0, degree - parts);
  int core_degree = parts + extra(rng);
  std::vector<int> degrees(parts, 1);
  for (int spare = core_degree - parts; spare > 0; --spare)
    ++degrees[rng() % parts];

  std::vector<LieExpr::Ptr> sub;
  for (int d : degrees) sub.push_back(random_expr(alphabet, d, rng));

  LieCombo combo;
  if (jacobi) {
    const auto &x = sub[0], &y = sub[1], &z = sub[2];
    combo_accumulate(combo, LieExpr::bracket(x, LieExpr::bracket(y, z)), 1);
    combo_accumulate(combo, LieExpr::bracket(z, LieExpr::bracket(x, y)), 1);
    combo_accumulate(combo, LieExpr::bracket(y, LieExpr::bracket(z, x)), 1);
  } else {
    const auto &x = sub[0], &y = sub[1];
    combo_accumulate(combo, LieExpr::bracket(x, y), 1);
    combo_accumulate(combo, LieExpr::bracket(y, x), 1);
  }

  int used = core_degree;
  while (used < degree) {
    std::uniform_int_distribution<int> wrap_deg(1, degree - used);
    int d = wrap_deg(rng);
    LieExpr::Ptr wrapper = random_expr(alphabet, d, rng);
    bool on_left = rng() & 1;
    LieCombo wrapped;
    for (const auto& [e, k] : combo)
      combo_accumulate(wrapped,
                       on_left ? LieExpr::bracket(wrapper, e)
                               : LieExpr::bracket(e, wrapper),
                       k);
    combo = std::move(wrapped);
    used += d;
  }
  return combo;
}

}  // namespace liebasis
