#pragma once

#include <utility>
#include <vector>

#include "reeblens/lens.hpp"

namespace reeblens {

/// Counts attached to the distinct absolute values lbar_1 < ... < lbar_k of
/// the homotopy weights of a nontrivial class:
///   mu_i       = #{ j : l^a_j = lbar_i and l^a_j != p/2 }
///   nu_i       = #{ j : l^a_j = -lbar_i } + #{ j : l^a_j = lbar_i = p/2 }
///   mu_tilde_i = #{ j : l^a_j = lbar_i }
///   nu_tilde_i = #{ j : l^a_j = -lbar_i }
struct WeightMultiplicities {
    std::vector<long long> abs_values;
    std::vector<long long> mu;
    std::vector<long long> nu;
    std::vector<long long> mu_tilde;
    std::vector<long long> nu_tilde;

    size_t size() const { return abs_values.size(); }
};

struct ClassInvariants {
    long long j = 0;
    std::vector<long long> homotopy_weights;
    long long w_plus = 0;
    long long w_minus = 0;
    Rational k_a;
    Rational h_a;
    Rational h_tilde_a;
    bool positive = false;
    bool strictly_positive = false;
};

/// Minimal nonzero degree of the class-a equivariant homology, computed from
/// the weights: k_a = w_- - w_+ + 2*sum(l^a_i)/p + 1 for nontrivial a, and
/// n+2 for the trivial class.
Rational k_a(const LensSpace& lens, const HomotopyClass& a);

WeightMultiplicities multiplicities(const LensSpace& lens, const HomotopyClass& a);

Rational h_a(const LensSpace& lens, const HomotopyClass& a);
Rational h_tilde_a(const LensSpace& lens, const HomotopyClass& a);

/// (positive, strictly positive): all homotopy weights positive, resp.
/// additionally none equal to p/2.
std::pair<bool, bool> positivity(const LensSpace& lens, const HomotopyClass& a);

/// All positive classes together with their strict-positivity flag.
std::vector<std::pair<HomotopyClass, bool>> find_positive_classes(const LensSpace& lens);

/// Everything above for one class. For the trivial class k_a = n+2 and the
/// remaining fields are left at their defaults.
ClassInvariants class_invariants(const LensSpace& lens, const HomotopyClass& a);

} // namespace reeblens
