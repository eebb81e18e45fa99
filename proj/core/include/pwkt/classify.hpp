#ifndef PWKT_CLASSIFY_HPP
#define PWKT_CLASSIFY_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pwkt/fieldeval.hpp"
#include "pwkt/planewave.hpp"
#include "pwkt/solver.hpp"
#include "pwkt/tractor.hpp"

namespace pwkt {

// Default sampling seed used everywhere a seed is not supplied explicitly.
inline constexpr unsigned kDefaultSeed = 20260816;

// count pseudo-random points uniform in the box |x_i| <= 1.
std::vector<PointR4> sample_points(int count, unsigned seed);

// Numeric rank of a sample matrix: relative singular-value cutoff tol, and a
// spectral-gap rule — the ratio between the last retained and first discarded
// singular value must be >= 1e4, otherwise the report is flagged ambiguous.
struct RankReport {
    int sample_points = 0;              // columns / 10
    double tolerance = 0.0;             // relative cutoff
    std::vector<double> singular_values;  // descending
    int rank = 0;
    double gap = 0.0;                   // retained/discarded ratio (inf if none discarded)
    bool ambiguous = false;
};

RankReport numeric_rank(const Eigen::MatrixXd& m, double tol = 1e-8);

// Sampled reducible candidates, one row per candidate tensor, 10 components
// per sample point (upper triangle of K^{mu nu}), points concatenated.
// Killing problem: k^i . k^j (i <= j <= 6) plus g^{-1} -> 22 rows.
// Conformal problem: trace-free parts (k^i . k^j)_0 (i <= j <= 7, with k^7
// the homothety) -> 28 rows; requires a1 != a2 (otherwise the homothety is
// not defined and the tabulated constant must be used instead).
Eigen::MatrixXd reducible_samples(const Params& p, Problem problem,
                                  const std::vector<PointR4>& points);

struct IrreducibleCount {
    int total = 0;
    int reducible = 0;
    int irreducible = 0;  // total - reducible
};

// Total dimension from the solver; reducible dimension from the sampled rank
// (a1 != a2) or from the tabulated constants (a1 = a2: conformal 84; Killing
// 50 flat, 27 for epsilon=0, 28 for epsilon=1). The sampled rank is
// cross-checked against the tabulated value and any mismatch or ambiguous
// spectral gap raises ConsistencyError.
IrreducibleCount irreducible_count(const Params& p, Problem problem,
                                   unsigned seed = kDefaultSeed);

// Number of irreducible Killing tensors whose trace-free part is NOT a
// reducible conformal Killing tensor: computed basis-independently as
//   rank([sampled conformal reducibles; sampled trace-free Killing solutions])
//   - rank([sampled conformal reducibles]).
// Requires a1 != a2. Ambiguous rank gaps raise ConsistencyError asking for
// more sample points.
int kt_ckt_correspondence(const Params& p, unsigned seed = kDefaultSeed);

struct ReproRow {
    std::string label;
    Params params;
    std::string quantity;  // what is compared
    int expected = 0;
    int actual = 0;
    bool pass = false;
};

struct ReproTable {
    int theorem = 0;
    std::vector<ReproRow> rows;
    bool pass = false;  // all rows pass
};

// Reproduces the claims of the four source theorems over the catalog points:
// 1 -> irreducible conformal Killing tensor counts,
// 2 -> irreducible Killing tensor counts (conformally flat cases),
// 3 -> irreducible Killing tensor counts (conformally non-flat cases),
// 4 -> Killing <-> conformal correspondence counts.
ReproTable reproduce(int theorem, unsigned seed = kDefaultSeed);

}  // namespace pwkt

#endif
