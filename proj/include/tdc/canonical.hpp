#pragma once
// canonical.hpp - canonical labeling for small graphs (isomorphism-invariant
// byte string), built for search-output dedup at n <= ~16.

#include <string>

#include "tdc/graph.hpp"

namespace tdc {

// Permutation-invariant canonical form: the graph6 encoding of g relabeled so
// that the upper-triangle bit string is lexicographically least over all
// orderings compatible with iterated degree refinement. Two graphs are
// isomorphic iff their canonical forms are equal. Only supported for n <= 64.
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace tdc
