#ifndef HICOMM_CONGRUENCE_HPP
#define HICOMM_CONGRUENCE_HPP

#include <utility>
#include <vector>

#include "hicomm/algebra.hpp"
#include "hicomm/partition.hpp"

namespace hicomm {

// True iff p is invariant under every operation of A.
bool is_congruence(const FiniteAlgebra& A, const Partition& p);

// Least congruence of A containing the given pairs, by the naive fixpoint
// over operation applications.
Partition cg(const FiniteAlgebra& A, const std::vector<std::pair<int, int>>& pairs);

// Every congruence of A, in lexicographic restricted-growth order.
// Throws ResourceCapError when A.size() exceeds size_cap.
std::vector<Partition> all_congruences(const FiniteAlgebra& A, int size_cap = 8);

// Join inside Con(A): cg of the union of the two relations.
Partition join_in_con(const FiniteAlgebra& A, const Partition& p, const Partition& q);

}  // namespace hicomm

#endif  // HICOMM_CONGRUENCE_HPP
