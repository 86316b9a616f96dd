#pragma once

#include <string>
#include <vector>

#include "xpg/digraph.hpp"
#include "xpg/group.hpp"
#include "xpg/numth.hpp"

namespace xpg {

// Edge g -> g^k for each k in [2, o(g)] with g^k != g, kept whenever no
// member of x divides gcd(k, o(g)). x = {} gives the full directed power
// graph: an edge from every element to each of its distinct powers.
Digraph directed_power_graph(const FiniteGroup& g, const ExclusionSet& x);

// Symmetrization of the directed graph.
Digraph undirected_power_graph(const FiniteGroup& g, const ExclusionSet& x);

// Cells are the generator sets of the cyclic subgroups, in subgroup order.
VertexPartition generator_partition(const FiniteGroup& g);

// One vertex per cyclic subgroup; for each divisor d >= 2 of |C| an edge
// from C to its subgroup of d-th powers, labeled d (the index).
LabeledDigraph quotient_power_graph(const FiniteGroup& g);

// Keeps exactly the edges whose label is divisible by no member of x;
// all vertices are retained.
LabeledDigraph excluded_quotient(const LabeledDigraph& q, const ExclusionSet& x);

// "<g>" display names aligned with quotient_power_graph vertices, using the
// least generator of each subgroup.
std::vector<std::string> subgroup_names(const FiniteGroup& g);

}  // namespace xpg
