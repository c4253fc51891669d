#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumcolor/graph.hpp"

namespace sumcolor {

Graph gen_complete(int n);
Graph gen_cycle(int n);
Graph gen_path(int n);
Graph gen_petersen();

/// Simple r-regular graph via the pairing model with restarts (at most 1000
/// attempts). Throws PreconditionError when n*r is odd or r >= n, and
/// std::runtime_error when every attempt fails.
Graph gen_random_regular(int n, int r, std::uint64_t seed);

/// Bipartite graph realizing the given side degrees; U is 0..|U|-1, W follows.
/// Throws PreconditionError when the plan is not realizable.
GraphDocument gen_bipartite(const std::vector<int>& u_degrees, const std::vector<int>& w_degrees,
                            std::uint64_t seed);

/// As gen_bipartite, restricted to edges uw with d(u) >= d(w).
GraphDocument gen_bipartite_dominant(const std::vector<int>& u_degrees,
                                     const std::vector<int>& w_degrees, std::uint64_t seed);

/// Split graph with clique 0..clique_size-1 and independent vertices after it.
/// Each independent vertex starts joined to a random half of the clique, then
/// edges violating `condition` are dropped until none remain.
GraphDocument gen_split(int clique_size, int independent_size, SplitCondition condition,
                        std::uint64_t seed);

}  // namespace sumcolor

namespace sumcolor {

/// Generator mini-syntax used by the command line:
///   complete:N  cycle:N  path:N  star:K  petersen
///   complete-bipartite:A,B  random-regular:N,R
///   bipartite:d,d,.../d,d,...   (U degrees / W degrees, dominance enforced)
///   split:C,I,thm10|thm11
/// Throws std::invalid_argument on unknown or malformed specs.
GraphDocument generate_from_spec(const std::string& spec, std::uint64_t seed);

}  // namespace sumcolor
