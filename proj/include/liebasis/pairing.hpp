#pragma once

#include <vector>

#include "liebasis/graphs.hpp"
#include "liebasis/lie.hpp"

namespace liebasis {

// A label-respecting bijection from graph vertices to leaf positions of a
// bracket expression: bij[i] is the 1-based position assigned to
// g.vertices()[i].
using Bijection = std::vector<int>;

// All label-respecting bijections; empty when the vertex count or the label
// multiset does not match.
std::vector<Bijection> bijections(const LabeledDigraph& g,
                                  const LieExpr::Ptr& e);

// The single-bijection pairing term: 0 if some sub-bracket [H,K] induces a
// disconnected subgraph or not exactly one edge runs between the two sides;
// otherwise (-1)^n where n counts edges moving leftwards under sigma.
int pair_sigma(const LabeledDigraph& g, const LieExpr::Ptr& e,
               const Bijection& sigma);

// Sum of pair_sigma over all bijections.  The definition of the pairing.
Int pair_bruteforce(const LabeledDigraph& g, const LieExpr::Ptr& e);

// Cut-recursive evaluator: <G,[H,K]> = sum over edges of
// <G1,H><G2,K> - <G1,K><G2,H>, the removed edge pointing G1 -> G2.
// Requires a tree; agrees with pair_bruteforce wherever both are defined.
Int pair_recursive(const LabeledDigraph& g, const LieExpr::Ptr& e);

// Closed-form product of factorials on the partition tree:
// Leaf -> 1, Node(alpha, n, chi) -> n! * self(alpha)^n * self(chi).
// Equals <star(w), |w|>.
Int self_pairing(const PartitionTree::Ptr& t);
Int self_pairing(const Word& w);

// Nontrivial factorial factors of self_pairing, e.g. {3} for aaabbb ("3!").
std::vector<int> self_pairing_factors(const PartitionTree::Ptr& t);

enum class Evaluator { BruteForce, Recursive, Checked };

// Checked runs both evaluators (recursive only on trees) and asserts they
// agree.
Int pair_value(const LabeledDigraph& g, const LieExpr::Ptr& e,
               Evaluator evaluator);

Int pair_combo(const LabeledDigraph& g, const LieCombo& c,
               Evaluator evaluator);

}  // namespace liebasis
