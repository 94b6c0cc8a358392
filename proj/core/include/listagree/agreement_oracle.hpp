#pragma once

#include "listagree/list_assignment.hpp"
#include "listagree/representation.hpp"

#include <vector>

namespace listagree {

struct AgreementWitness {
  std::vector<GlobalFunction> globals;
  // perms[s][i]: the slot of face s explained by globals[i].
  std::vector<std::vector<int>> perms;
};

struct OracleResult {
  Rational distance;
  AgreementWitness witness;
};

// Exact distance to the agreeing l-assignments: minimum over multisets of l
// global functions and per-face permutations. Requires |X(0)| <= 10, l <= 3.
OracleResult dist_to_agreeing_oracle(const LAssignment& F);

struct AssignmentOracleResult {
  Rational distance;
  GlobalFunction best = 0;
};
// Exact distance to the assignments induced by one global function; |X(0)| <= 20.
AssignmentOracleResult dist_to_agreeing_assignments(const Assignment& F);

// R̂_k-weight of the 1-up pairs on which an assignment disagrees.
Rational one_up_disagreement(const Assignment& F, const RepresentationComplex& R);

// The assignment whose face s holds slot perms[s][slot] of F.
Assignment permuted_slice(const LAssignment& F, const std::vector<std::vector<int>>& perms, int slot);

}  // namespace listagree
