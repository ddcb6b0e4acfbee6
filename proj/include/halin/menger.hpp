#pragma once

#include <set>
#include <utility>
#include <vector>

#include "halin/graph.hpp"

namespace halin {

struct MengerSolution {
  std::vector<Path> paths;
  std::set<Vertex> separator;
};

// Maximum family of fully vertex-disjoint A-B paths and a separator of equal size.
// Throws PreconditionViolated if A or B is empty, they intersect, or a vertex is missing.
MengerSolution menger_solve(const FiniteGraph& g, const std::set<Vertex>& A,
                            const std::set<Vertex>& B);

struct MengerOptima {
  std::size_t max_paths = 0;
  std::size_t min_separator = 0;
};

// Exhaustive optima; at most 12 vertices (TooLarge otherwise).
MengerOptima brute_force_menger(const FiniteGraph& g, const std::set<Vertex>& A,
                                const std::set<Vertex>& B);

// True iff no path from A to B survives in g minus sep.
bool separates(const FiniteGraph& g, const std::set<Vertex>& A, const std::set<Vertex>& B,
               const std::set<Vertex>& sep);

}  // namespace halin
