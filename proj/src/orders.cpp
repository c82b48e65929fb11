#include "markoff/orders.hpp"

#include <algorithm>

#include "markoff/errors.hpp"

namespace markoff {

const char* coord_class_name(CoordClass c) {
    switch (c) {
        case CoordClass::Parabolic: return "parabolic";
        case CoordClass::Hyperbolic: return "hyperbolic";
        case CoordClass::Elliptic: return "elliptic";
    }
    return "?";
}

RotationContext::RotationContext(const PrimeField& fp, const FactorBudget& budget)
    : fp_(fp),
      fq_(fp),
      pm1_(factorize(fp.p() - 1, budget)),
      pp1_(factorize(fp.p() + 1, budget)),
      eta_(markoff::eta(pm1_, pp1_)) {
    order_cache_.assign(fp_.p(), 0);
}

CoordClass RotationContext::classify(u64 x1) const {
    u64 x = fp_.mul(3 % p(), x1 % p());
    if (x == 2 % p() || x == p() - 2) return CoordClass::Parabolic;
    u64 disc = fp_.sub(fp_.mul(x, x), 4 % p());
    return fp_.legendre(disc) == 1 ? CoordClass::Hyperbolic : CoordClass::Elliptic;
}

SplittingData RotationContext::split(u64 x1) const {
    u64 x = fp_.mul(3 % p(), x1 % p());
    CoordClass c = classify(x1);
    if (c == CoordClass::Parabolic) throw Error("split rejects parabolic coordinates");
    u64 disc = fp_.sub(fp_.mul(x, x), 4 % p());
    u64 inv2 = fp_.inv(2 % p());
    if (c == CoordClass::Hyperbolic) {
        u64 r = fp_.sqrt(disc)->lo;
        return {true, fq_.from_base(fp_.mul(fp_.add(x, r), inv2))};
    }
    // disc/D is a residue; chi = x/2 + (s/2) sqrt(D) with s^2 D = disc.
    u64 s = fp_.sqrt(fp_.mul(disc, fp_.inv(fq_.nonresidue())))->lo;
    return {false, QuadExt{fp_.mul(x, inv2), fp_.mul(s, inv2)}};
}

u64 RotationContext::compute_order(u64 x1) const {
    u64 x = fp_.mul(3 % p(), x1);
    if (x == 2 % p()) return p();
    if (x == p() - 2) return 2 * p();
    SplittingData sp = split(x1);
    if (sp.in_base) return mult_order(sp.chi.a, fp_, pm1_);
    // chi has norm 1, so its order divides p+1.
    return mult_order(sp.chi, fq_, pp1_);
}

u64 RotationContext::rotation_order(u64 x1) const {
    x1 %= p();
    u64& slot = order_cache_[x1];
    if (slot == 0) slot = compute_order(x1);
    return slot;
}

bool RotationContext::coordinate_maximal(u64 x1) const {
    switch (classify(x1)) {
        case CoordClass::Parabolic: return true;
        case CoordClass::Hyperbolic: return rotation_order(x1) == p() - 1;
        case CoordClass::Elliptic: return rotation_order(x1) == p() + 1;
    }
    return false;
}

RotationContext::TripleOrder RotationContext::triple_order(const Triple& t) const {
    TripleOrder best{0, 0};
    for (int i = 0; i < 3; ++i) {
        u64 o = rotation_order(t[i]);
        if (o > best.order) best = {o, i + 1};
    }
    return best;
}

bool RotationContext::in_cage(const Triple& t) const {
    return coordinate_maximal(t[0]) || coordinate_maximal(t[1]) || coordinate_maximal(t[2]);
}

const std::vector<u64>& RotationContext::maximal_residues() const {
    if (maximal_residues_.empty()) {
        for (u64 v = 0; v < p(); ++v) {
            if (coordinate_maximal(v)) maximal_residues_.push_back(v);
        }
    }
    return maximal_residues_;
}

OrbitWalker::OrbitWalker(const Triple& start, int index, const PrimeField& fp)
    : fp_(fp), start_(start), cur_(start), index_(index) {}

const Triple& OrbitWalker::advance() {
    cur_ = apply_rotation(index_, cur_, fp_);
    ++steps_;
    if (steps_ > 2 * fp_.p() + 1) throw Error("orbit exceeded 2p+1 iterations");
    return cur_;
}

std::vector<Triple> orbit(const Triple& t, int index, const PrimeField& fp) {
    std::vector<Triple> out{t};
    OrbitWalker w(t, index, fp);
    w.advance();
    while (!w.at_start()) {
        out.push_back(w.current());
        w.advance();
    }
    return out;
}

}  // namespace markoff
