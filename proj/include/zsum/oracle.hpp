#ifndef ZSUM_ORACLE_HPP
#define ZSUM_ORACLE_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "zsum/graphs.hpp"
#include "zsum/poly.hpp"

namespace zsum {

// #[f = k] for k in [0, N), produced by full enumeration; entries sum to N^n.
using CountVector = std::vector<std::uint64_t>;

using Complex = std::complex<double>;
using ComplexMatrix = std::vector<std::vector<Complex>>;

inline constexpr std::uint64_t kDefaultBudget = 100000000;

// Exact counts of f's values over Z_N^n. Throws ResourceError when the number
// of points N^n exceeds the budget.
CountVector brute_counts(const BigInt& N, const SparsePoly& f,
                         std::uint64_t budget = kDefaultBudget);

// sum_k counts[k] * e^{2*pi*i*k/N} in double precision.
Complex brute_value(const CountVector& counts, const BigInt& N);

// Partition function Z_A(G) = sum over assignments V -> [m] of the product of
// A entries along edges (an edge of multiplicity mu contributes a mu-th
// power). Throws ResourceError when m^|V| exceeds the budget.
Complex brute_partition(const ComplexMatrix& A, const Multigraph& G,
                        std::uint64_t budget = kDefaultBudget);

// Same sum restricted to assignments extending `pins` (vertex -> color, both
// ranges checked). The budget applies to the unpinned assignment space.
Complex brute_partition_pinned(const ComplexMatrix& A, const Multigraph& G,
                               const std::map<int, int>& pins,
                               std::uint64_t budget = kDefaultBudget);

} // namespace zsum

#endif
