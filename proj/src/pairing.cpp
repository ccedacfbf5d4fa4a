#include "liebasis/pairing.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>

namespace liebasis {

namespace {

// Leaf positions numbered 1..degree left-to-right; sub-brackets as pairs of
// position bitmasks (bit p-1 for position p).
struct ExprInfo {
  int degree;
  std::string letters;
  std::vector<std::pair<uint64_t, uint64_t>> brackets;
};

ExprInfo analyze(const LieExpr::Ptr& e) {
  ExprInfo info;
  info.degree = e->degree();
  info.letters = e->letters();
  if (info.degree > 62)
    throw std::invalid_argument("pairing: expression degree too large");
  int next = 0;
  std::function<uint64_t(const LieExpr::Ptr&)> walk =
      [&](const LieExpr::Ptr& n) -> uint64_t {
    if (n->is_leaf()) return uint64_t{1} << next++;
    uint64_t l = walk(n->left());
    uint64_t r = walk(n->right());
    info.brackets.emplace_back(l, r);
    return l | r;
  };
  walk(e);
  return info;
}

// Undirected adjacency as bitmasks over vertex indices, plus the edge list
// in index form.
struct GraphInfo {
  int n;
  std::vector<uint64_t> adjacency;
  std::vector<std::pair<int, int>> edges;  // (from index, to index)
};

GraphInfo analyze(const LabeledDigraph& g) {
  GraphInfo info;
  info.n = g.vertex_count();
  info.adjacency.assign(static_cast<size_t>(info.n), 0);
  for (const GraphEdge& e : g.edges()) {
    int u = g.index_of(e.from), v = g.index_of(e.to);
    info.adjacency[static_cast<size_t>(u)] |= uint64_t{1} << v;
    info.adjacency[static_cast<size_t>(v)] |= uint64_t{1} << u;
    info.edges.emplace_back(u, v);
  }
  return info;
}

bool connected_mask(const GraphInfo& g, uint64_t mask) {
  if (mask == 0) return true;
  uint64_t seen = mask & (~mask + 1);  // lowest set bit
  while (true) {
    uint64_t next = seen;
    uint64_t frontier = seen;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.adjacency[static_cast<size_t>(v)] & mask;
    }
    if (next == seen) break;
    seen = next;
  }
  return seen == mask;
}

int eval_sigma(const GraphInfo& g, const ExprInfo& e,
               const Bijection& sigma) {
  std::vector<int> vertex_at_position(static_cast<size_t>(e.degree));
  for (int i = 0; i < g.n; ++i)
    vertex_at_position[static_cast<size_t>(sigma[static_cast<size_t>(i)] -
                                           1)] = i;
  for (const auto& [hmask, kmask] : e.brackets) {
    uint64_t vh = 0, vk = 0;
    for (uint64_t m = hmask; m;) {
      int p = std::countr_zero(m);
      m &= m - 1;
      vh |= uint64_t{1} << vertex_at_position[static_cast<size_t>(p)];
    }
    for (uint64_t m = kmask; m;) {
      int p = std::countr_zero(m);
      m &= m - 1;
      vk |= uint64_t{1} << vertex_at_position[static_cast<size_t>(p)];
    }
    if (!connected_mask(g, vh) || !connected_mask(g, vk)) return 0;
    int crossing = 0;
    for (const auto& [u, v] : g.edges) {
      uint64_t um = uint64_t{1} << u, vm = uint64_t{1} << v;
      if (((um & vh) && (vm & vk)) || ((um & vk) && (vm & vh))) ++crossing;
    }
    if (crossing != 1) return 0;
  }
  int leftward = 0;
  for (const auto& [u, v] : g.edges)
    if (sigma[static_cast<size_t>(u)] > sigma[static_cast<size_t>(v)])
      ++leftward;
  return (leftward % 2 == 0) ? 1 : -1;
}

}  // namespace

std::vector<Bijection> bijections(const LabeledDigraph& g,
                                  const LieExpr::Ptr& e) {
  if (g.vertex_count() != e->degree()) return {};
  std::string letters = e->letters();
  std::map<char, std::vector<int>> vertex_groups;
  for (int i = 0; i < g.vertex_count(); ++i)
    vertex_groups[g.vertices()[static_cast<size_t>(i)].label].push_back(i);
  std::map<char, std::vector<int>> position_groups;
  for (size_t p = 0; p < letters.size(); ++p)
    position_groups[letters[p]].push_back(static_cast<int>(p) + 1);
  if (vertex_groups.size() != position_groups.size()) return {};
  for (const auto& [label, vs] : vertex_groups) {
    auto it = position_groups.find(label);
    if (it == position_groups.end() || it->second.size() != vs.size())
      return {};
  }

  std::vector<Bijection> out;
  Bijection current(static_cast<size_t>(g.vertex_count()), 0);
  std::function<void(std::map<char, std::vector<int>>::iterator)> assign =
      [&](std::map<char, std::vector<int>>::iterator group) {
        if (group == vertex_groups.end()) {
          out.push_back(current);
          return;
        }
        std::vector<int> positions = position_groups[group->first];
        std::sort(positions.begin(), positions.end());
        do {
          for (size_t i = 0; i < positions.size(); ++i)
            current[static_cast<size_t>(group->second[i])] = positions[i];
          assign(std::next(group));
        } while (std::next_permutation(positions.begin(), positions.end()));
      };
  assign(vertex_groups.begin());
  return out;
}

int pair_sigma(const LabeledDigraph& g, const LieExpr::Ptr& e,
               const Bijection& sigma) {
  if (static_cast<int>(sigma.size()) != g.vertex_count() ||
      g.vertex_count() != e->degree())
    throw std::invalid_argument("pair_sigma: bijection size mismatch");
  std::string letters = e->letters();
  std::vector<bool> used(static_cast<size_t>(e->degree()), false);
  for (int i = 0; i < g.vertex_count(); ++i) {
    int p = sigma[static_cast<size_t>(i)];
    if (p < 1 || p > e->degree() || used[static_cast<size_t>(p - 1)])
      throw std::invalid_argument("pair_sigma: not a bijection");
    used[static_cast<size_t>(p - 1)] = true;
    if (g.vertices()[static_cast<size_t>(i)].label !=
        letters[static_cast<size_t>(p - 1)])
      throw std::invalid_argument("pair_sigma: bijection violates labels");
  }
  return eval_sigma(analyze(g), analyze(e), sigma);
}

Int pair_bruteforce(const LabeledDigraph& g, const LieExpr::Ptr& e) {
  std::vector<Bijection> sigmas = bijections(g, e);
  if (sigmas.empty()) return 0;
  GraphInfo gi = analyze(g);
  ExprInfo ei = analyze(e);
  Int total = 0;
  for (const Bijection& sigma : sigmas) total += eval_sigma(gi, ei, sigma);
  return total;
}

namespace {

using Memo = std::map<std::string, Int>;

std::string memo_key(const LabeledDigraph& g, const LieExpr::Ptr& e) {
  std::string key;
  for (const GraphVertex& v : g.vertices())
    key += std::to_string(v.id) + ",";
  return key + "|" + e->text();
}

Int rec_pair(const LabeledDigraph& g, const LieExpr::Ptr& e, Memo& memo) {
  if (g.vertex_count() != e->degree()) return 0;
  if (g.label_content() != content_of(e->letters())) return 0;
  if (e->is_leaf()) return 1;  // single matching vertex, no edges
  std::string key = memo_key(g, e);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Int total = 0;
  for (const auto& [edge, cut] : edge_cuts(g)) {
    Int t1 = rec_pair(cut.g1, e->left(), memo);
    if (t1 != 0) t1 *= rec_pair(cut.g2, e->right(), memo);
    Int t2 = rec_pair(cut.g1, e->right(), memo);
    if (t2 != 0) t2 *= rec_pair(cut.g2, e->left(), memo);
    total += t1 - t2;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Int pair_recursive(const LabeledDigraph& g, const LieExpr::Ptr& e) {
  if (!g.is_tree())
    throw NotATreeError("pair_recursive: graph is not a tree");
  Memo memo;
  return rec_pair(g, e, memo);
}

Int self_pairing(const PartitionTree::Ptr& t) {
  if (t->is_leaf()) return 1;
  Int factorial = 1;
  for (int i = 2; i <= t->exponent(); ++i) factorial *= i;
  Int base = self_pairing(t->base());
  Int power = 1;
  for (int i = 0; i < t->exponent(); ++i) power *= base;
  return factorial * power * self_pairing(t->anchor());
}

Int self_pairing(const Word& w) {
  return self_pairing(full_partition_or_throw(w));
}

std::vector<int> self_pairing_factors(const PartitionTree::Ptr& t) {
  std::vector<int> out;
  if (t->is_leaf()) return out;
  if (t->exponent() >= 2) out.push_back(t->exponent());
  std::vector<int> base = self_pairing_factors(t->base());
  for (int i = 0; i < t->exponent(); ++i)
    out.insert(out.end(), base.begin(), base.end());
  std::vector<int> anchor = self_pairing_factors(t->anchor());
  out.insert(out.end(), anchor.begin(), anchor.end());
  std::sort(out.rbegin(), out.rend());
  return out;
}

Int pair_value(const LabeledDigraph& g, const LieExpr::Ptr& e,
               Evaluator evaluator) {
  switch (evaluator) {
    case Evaluator::BruteForce:
      return pair_bruteforce(g, e);
    case Evaluator::Recursive:
      return pair_recursive(g, e);
    case Evaluator::Checked: {
      Int brute = pair_bruteforce(g, e);
      if (g.is_tree()) {
        Int recursive = pair_recursive(g, e);
        if (brute != recursive)
          throw std::logic_error(
              "pair_value: evaluators disagree (brute " + brute.str() +
              ", recursive " + recursive.str() + ") on " + e->text());
      }
      return brute;
    }
  }
  throw std::invalid_argument("pair_value: unknown evaluator");
}

Int pair_combo(const LabeledDigraph& g, const LieCombo& c,
               Evaluator evaluator) {
  Int total = 0;
  for (const auto& [e, k] : c) total += k * pair_value(g, e, evaluator);
  return total;
}

}  // namespace liebasis
