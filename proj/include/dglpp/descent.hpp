#pragma once

#include <vector>

#include "dglpp/matrix.hpp"
#include "dglpp/partition.hpp"
#include "dglpp/plane_partition.hpp"

namespace dglpp {

// Descent matrix D = (d_{i,l}): row i of D counts, per level l, the columns
// where row i of a plane partition holds l strictly above the entry below.
using DescentMatrix = IntMatrix;

// Column indices (0-based) j with p(i,j) = level > p(i+1,j); `row` is
// 0-based, `level` is the entry value (>= 1). Entries below the last row
// compare against 0.
std::vector<int> descent_level_set(const PlanePartition& p, int row, int level);

// The bijection plane partitions -> N-matrices: an m x n matrix whose
// (i, l-1) entry is |descent_level_set(p, i, l)|. Throws if p has more than
// m rows or an entry exceeding n.
DescentMatrix phi(const PlanePartition& p, int m, int n);

// Unique plane partition p with phi(p) = d; total on N-matrices.
// Reconstruction runs bottom-up: with row i+1 known, row i is laid down
// level by level from n to 1 -- each level's block covers the columns the
// lower row still forces plus d_{i,l} fresh columns.
PlanePartition phi_inverse(const DescentMatrix& d);

// (lambda_1, ..., lambda_m) where lambda_k is the maximal sum of d-entries
// over down/right paths from (k, 1) to (m, n). For d = phi(p) this is the
// shape of p padded to m parts.
Partition shape_via_max_paths(const DescentMatrix& d);

}  // namespace dglpp
