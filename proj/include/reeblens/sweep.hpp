#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "reeblens/lens.hpp"
#include "reeblens/rotation_path.hpp"

namespace reeblens {

/// Residues in (-p/2, p/2] coprime with p.
std::vector<long long> coprime_residues(long long p);

/// All normalized weight vectors (l_0 = 1, l_1 <= ... <= l_n) for fixed p
/// and n. Sorting the tail loses nothing: every invariant computed here is
/// a function of the weight multiset.
std::vector<std::vector<long long>> weight_vectors(long long p, int n);

/// Angle of the endpoint eigenvalue of a plane with total rotation x, as a
/// turn count in [0, 1/2].
Rational fold_angle(const Rational& x);

/// Deterministic generator of random rotation paths with duration 1,
/// at most max_planes planes, |speed| <= max_speed, denominators <= max_den.
class PathGenerator {
public:
    explicit PathGenerator(uint64_t seed) : state_(seed ? seed : 1) {}

    RotationPath next(int max_planes = 6, long long max_speed = 20, long long max_den = 40);
    uint64_t next_raw();
    long long uniform(long long lo, long long hi); // inclusive

private:
    uint64_t state_;
};

} // namespace reeblens
