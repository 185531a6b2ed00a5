#pragma once

#include <map>
#include <optional>
#include <vector>

#include "reeblens/errors.hpp"
#include "reeblens/rational.hpp"

namespace reeblens {

/// Graded rank table of positive equivariant symplectic homology for the
/// prequantization form on L_p(1,...,1). Degrees are exact rationals; any
/// two present degrees differ by an even integer.
struct GradedRanks {
    int n = 0;
    long long p = 0;
    long long j = 1;
    std::optional<long long> k_max;
    std::optional<Rational> action_bound; // coefficient of pi
    std::optional<Rational> scale;
    std::map<Rational, long long> ranks;
};

/// Index of the k-th iterate of the simple orbit: (2n+2)k/p - n.
Rational iterate_index(int n, long long p, long long k);

/// Morse-Bott rank table for the class with deck power j: the iterates of
/// the simple orbit landing in that class are the ((k-1)p + j)-th ones, and
/// each contributes ranks 1 at degrees iterate_index + 2i, i = 0..n, for
/// k = 1..k_max. Coinciding degrees add.
GradedRanks graded_ranks(int n, long long p, long long j, long long k_max);

/// Least degree carrying a nonzero rank. Throws EmptyTable.
Rational min_degree(const GradedRanks& ranks);

/// Action-filtered table at scale t (class j = 1): keeps the summands with
/// action pi*((k-1)p+1)*t^2/p strictly below T, where T is handed over as a
/// coefficient of pi. Throws OnSpectrum if T hits the spectrum exactly.
GradedRanks filtered_ranks(int n, long long p, const Rational& scale_t, const Rational& action_T);

struct CarrierDegrees {
    std::vector<Rational> degrees;
    long long count_below_h = 0;
};

/// Degree ladder (2n+2)/p - n + 2i, i = 0..n, of the Lusternik-Schnirelmann
/// carriers, and how many of them sit strictly below h_a = (2n+2)/p. That
/// count equals floor((n+1)/2).
CarrierDegrees carrier_degrees(int n, long long p);

} // namespace reeblens
