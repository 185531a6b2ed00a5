#include "reeblens/lens.hpp"

#include <numeric>

namespace reeblens {

namespace {

long long mod_pos(long long x, long long p) {
    long long r = x % p;
    return r < 0 ? r + p : r;
}

// Inverse of u mod p via extended Euclid; requires gcd(u, p) = 1.
long long mod_inverse(long long u, long long p) {
    long long r0 = p, r1 = mod_pos(u, p);
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    return mod_pos(t0, p);
}

} // namespace

long long balanced_residue(long long x, long long p) {
    long long r = mod_pos(x, p);
    // window (-p/2, p/2]: shift residues strictly above p/2 down by p
    if (2 * r > p) r -= p;
    return r;
}

long long positive_residue(long long x, long long p) {
    long long r = mod_pos(x, p);
    if (r == 0) throw error(errc::not_coprime, "residue divisible by p");
    return r;
}

LensSpace::LensSpace(long long p, std::vector<long long> raw_weights) : p_(p) {
    if (p < 2) throw error(errc::bad_modulus, "p must be at least 2, got " + std::to_string(p));
    if (raw_weights.empty()) throw error(errc::bad_modulus, "weight list must be nonempty");
    for (long long w : raw_weights) {
        if (std::gcd(std::abs(w), p) != 1)
            throw error(errc::not_coprime,
                        "weight " + std::to_string(w) + " is not coprime with p = " + std::to_string(p));
    }
    long long inv = mod_inverse(raw_weights[0], p);
    weights_.reserve(raw_weights.size());
    for (long long w : raw_weights)
        weights_.push_back(balanced_residue(mod_pos(w, p) * inv, p));
}

HomotopyClass LensSpace::homotopy_class(long long j) const {
    if (j < 1 || j > p_)
        throw error(errc::out_of_range, "class index j = " + std::to_string(j) +
                                            " outside {1,...," + std::to_string(p_) + "}");
    HomotopyClass cls;
    cls.j = j;
    cls.weights.reserve(weights_.size());
    for (long long w : weights_) cls.weights.push_back(balanced_residue(j * w, p_));
    return cls;
}

std::vector<HomotopyClass> LensSpace::classes() const {
    std::vector<HomotopyClass> out;
    out.reserve(size_t(p_));
    for (long long j = 1; j <= p_; ++j) out.push_back(homotopy_class(j));
    return out;
}

long long LensSpace::chern_order() const {
    long long s = 0;
    for (long long w : weights_) s += w;
    long long r = ((s % p_) + p_) % p_;
    return p_ / std::gcd(r, p_);
}

} // namespace reeblens
