#include "reeblens/sweep.hpp"

#include <numeric>

namespace reeblens {

std::vector<long long> coprime_residues(long long p) {
    std::vector<long long> out;
    for (long long r = 1; r <= p; ++r) {
        if (std::gcd(r, p) != 1) continue;
        out.push_back(balanced_residue(r, p));
    }
    return out;
}

std::vector<std::vector<long long>> weight_vectors(long long p, int n) {
    const std::vector<long long> residues = coprime_residues(p);
    std::vector<std::vector<long long>> out;
    std::vector<long long> tail;
    // multisets of size n over residues, nondecreasing in residue order
    std::function<void(size_t)> rec = [&](size_t from) {
        if ((int)tail.size() == n) {
            std::vector<long long> w{1};
            w.insert(w.end(), tail.begin(), tail.end());
            out.push_back(std::move(w));
            return;
        }
        for (size_t i = from; i < residues.size(); ++i) {
            tail.push_back(residues[i]);
            rec(i);
            tail.pop_back();
        }
    };
    rec(0);
    return out;
}

Rational fold_angle(const Rational& x) {
    Rational f = x.frac();
    if (f > Rational(1, 2)) f = Rational(1) - f;
    return f;
}

uint64_t PathGenerator::next_raw() {
    // xorshift64*
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
}

long long PathGenerator::uniform(long long lo, long long hi) {
    return lo + (long long)(next_raw() % (uint64_t)(hi - lo + 1));
}

RotationPath PathGenerator::next(int max_planes, long long max_speed, long long max_den) {
    const int planes = (int)uniform(1, max_planes);
    std::vector<RotationBlock> blocks;
    int placed = 0;
    while (placed < planes) {
        long long count = uniform(1, planes - placed);
        long long den = uniform(1, max_den);
        long long num = uniform(-max_speed * den, max_speed * den);
        blocks.push_back({Rational(num, den), count});
        placed += (int)count;
    }
    return RotationPath(std::move(blocks), Rational(1));
}

} // namespace reeblens
