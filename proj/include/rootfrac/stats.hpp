// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <vector>

#include "rootfrac/periodic.hpp"
#include "rootfrac/theta.hpp"

namespace rootfrac {

struct ResidueHistogram {
    long m = 1;
    std::vector<long> counts;
    long total = 0;

    mpq_class frequency(long r) const {
        mpq_class q(counts.at(static_cast<size_t>(r)), total);
        q.canonicalize();
        return q;
    }
    /// max_r |counts[r]/total - 1/m|, the descriptive uniformity deviation.
    mpq_class max_deviation() const;
};

/// Exact residue counts of the given integers modulo m.
ResidueHistogram distribution_mod_m(const std::vector<mpz_class>& values, long m);

/// The binary sequence M(n+1) - M(n) - 1 on [n_from, n_to); throws
/// GapOutOfRange when a gap falls outside {1, 2}.
std::vector<int> gap_binary_sequence(const ThetaExpr& theta, long n_from, long n_to);

struct ExceptionalDensity {
    long count = 0;
    mpq_class density;
    std::vector<long> members;
};

/// Scan n in (N0(theta), n_max] for the Beatty-exceptional indices:
/// M_theta(n) = [n/log theta + 1/2] with the two candidates distinct.
ExceptionalDensity exceptional_density(const ThetaExpr& theta, long n_max);

}  // namespace rootfrac
