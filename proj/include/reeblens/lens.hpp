#pragma once

#include <vector>

#include "reeblens/errors.hpp"
#include "reeblens/rational.hpp"

namespace reeblens {

/// One homotopy class of loops in a lens space, identified by the power j of
/// the generating deck transformation, j in {1,...,p} with j = p the trivial
/// class. The homotopy weights are the residues of j*l_i mod p normalized
/// into (-p/2, p/2].
struct HomotopyClass {
    long long j = 0;
    std::vector<long long> weights;

    bool is_trivial(long long p) const { return j == p; }
};

/// A lens space L^{2n+1}_p(l_0,...,l_n) in normalized presentation:
/// l_0 = 1 and every weight lies in (-p/2, p/2] and is coprime with p.
class LensSpace {
public:
    /// Normalizes an arbitrary weight vector: multiplies through by the
    /// inverse of raw[0] mod p so that l_0 = 1, then reduces every weight
    /// into (-p/2, p/2]. Throws BadModulus for p < 2, NotCoprime if any
    /// weight shares a factor with p.
    LensSpace(long long p, std::vector<long long> raw_weights);

    long long p() const { return p_; }
    /// Dimension parameter: the space has dimension 2n+1.
    int n() const { return int(weights_.size()) - 1; }
    const std::vector<long long>& weights() const { return weights_; }

    /// Homotopy class with deck power j in {1,...,p}.
    HomotopyClass homotopy_class(long long j) const;

    /// All p homotopy classes, j = 1..p in order.
    std::vector<HomotopyClass> classes() const;

    /// Order N of c_1 of the induced contact structure:
    /// the least m >= 1 with m * sum(l_i) = 0 mod p.
    long long chern_order() const;

    friend bool operator==(const LensSpace& a, const LensSpace& b) {
        return a.p_ == b.p_ && a.weights_ == b.weights_;
    }

private:
    long long p_;
    std::vector<long long> weights_;
};

inline LensSpace normalize_weights(long long p, std::vector<long long> raw) {
    return LensSpace(p, std::move(raw));
}

/// Residue of x mod p in (-p/2, p/2].
long long balanced_residue(long long x, long long p);

/// Residue of x mod p in [1, p-1]; requires gcd(x, p) = 1.
long long positive_residue(long long x, long long p);

} // namespace reeblens
