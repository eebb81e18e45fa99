#pragma once

#include <string>
#include <vector>

#include "pwkt/prolongation.hpp"

namespace pwkt {

// Fixpoint solution space of the prolongation connection: the maximal
// Phi-invariant subspace of V annihilated by the curvature.  Its dimension is
// the total number of (conformal) Killing tensors, reducible plus
// irreducible.  Coordinates are the free coordinates of V.
struct SolutionSpace {
    Problem problem = Problem::conformal;
    Params params;  // normalized parameters the space is computed at
    SubspaceQ space;
    int annihilator_dim = 0;
    int iterations = 0;  // refinement steps taken to reach the fixpoint
};

// Intersection of the kernels of the 15 curvature matrices.
SubspaceQ annihilator(const CurvatureTable& c);

// Runs the annihilator-plus-refinement fixpoint computation.
SolutionSpace solution_space(Problem problem, const Params& p);

// One grid point of a parameter scan.  A point is flagged when its dimension
// exceeds the minimum dimension among its neighbors in the grid list.
struct ScanPoint {
    Params params;
    int dim = 0;
    bool flagged = false;
};

// Computes solution-space dimensions over an ordered one-dimensional list of
// parameter points, optionally in parallel (jobs <= 0 means hardware
// parallelism).  The grid size is bounded by `limit`; larger grids are
// rejected with std::invalid_argument.  Results are returned in grid order
// regardless of worker scheduling.
std::vector<ScanPoint> scan(Problem problem, const std::vector<Params>& grid, int jobs = 1,
                            std::size_t limit = 10000);

// Named parameter points of the classification theorems, with the expected
// total and irreducible dimensions.  Labels are stable public identifiers
// (documented in the README), e.g. "CKT-Thm1.1(2)" or "KT-flat".
struct CatalogEntry {
    std::string label;
    Problem problem = Problem::conformal;
    Params params;
    int expected_total = 0;
    int expected_irreducible = 0;
};

const std::vector<CatalogEntry>& special_locus_catalog();

// Looks up a catalog entry by label; throws std::invalid_argument with the
// list of known labels when absent.
const CatalogEntry& catalog_entry(const std::string& label);

}  // namespace pwkt
