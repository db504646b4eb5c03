#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Partition and tableau combinatorics: conjugates, box partition
// enumeration, dominance, the row-to-column shuffle permutation,
// Littlewood-Richardson coefficients and semistandard tableau counts.

namespace ztilt::young {

// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;
// Nonnegative entries, order significant.
using Composition = std::vector<int>;

bool is_partition(const Partition &p);
int weight(const std::vector<int> &parts);
std::size_t length(const Partition &p);

Partition conjugate(const Partition &p);

// "2,1" for (2,1), "" for the empty partition.
std::string partition_str(const Partition &p);
Partition parse_partition(const std::string &s);

// Partitions with first part <= m and at most n parts; weight d only when
// d >= 0. Ordered by weight ascending, then reverse-lexicographically
// (dominant shapes first within a weight).
std::vector<Partition> box_partitions(int m, int n, int d = -1);

// Partial sums comparison; diagrams of different weight are incomparable.
bool dominance_leq(const Partition &lo, const Partition &hi);

// Permutation sigma of {0..|p|-1} sending the row-block position of box
// (i,j) to its column-block position: boxes of row i occupy consecutive
// slots, and sigma places them into the slots of column j.
std::vector<std::size_t> sigma_permutation(const Partition &p);

// Littlewood-Richardson coefficient c^{nu}_{lambda mu}.
long lr_coefficient(const Partition &lambda, const Partition &mu,
                    const Partition &nu);

// Number of semistandard tableaux of shape p with entries in 1..n.
long ssyt_count(const Partition &p, int n);
// Kostka number: semistandard tableaux of shape p and content mu.
long ssyt_count(const Partition &p, const Composition &mu);

// All length-n compositions of d, lexicographically largest first.
std::vector<Composition> compositions(int d, int n);

} // namespace ztilt::young
