#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "markoff/factor.hpp"
#include "markoff/fp.hpp"
#include "markoff/surface.hpp"

namespace markoff {

enum class CoordClass { Parabolic, Hyperbolic, Elliptic };

const char* coord_class_name(CoordClass c);

// chi with chi + chi^{-1} = 3*x1; lies in F_p exactly when hyperbolic.
struct SplittingData {
    bool in_base = false;
    QuadExt chi;  // chi.b == 0 in the hyperbolic case
};

// Per-prime rotation-order machinery: classification of coordinate values,
// the order of [[0,1],[-1,3*x1]] in SL_2(F_p), and cage membership. Orders
// are memoized per residue; building one of these factorizes p-1 and p+1.
class RotationContext {
  public:
    explicit RotationContext(const PrimeField& fp, const FactorBudget& budget = {});

    const PrimeField& field() const { return fp_; }
    const QuadField& ext() const { return fq_; }
    u64 p() const { return fp_.p(); }

    CoordClass classify(u64 x1) const;
    u64 rotation_order(u64 x1) const;
    SplittingData split(u64 x1) const;  // rejects parabolic input

    // Class maximum: p-1 hyperbolic, p+1 elliptic; parabolic orders (p and
    // 2p) both count as maximal.
    bool coordinate_maximal(u64 x1) const;

    struct TripleOrder {
        u64 order;
        int index;  // 1..3, lowest index on ties
    };
    TripleOrder triple_order(const Triple& t) const;
    bool in_cage(const Triple& t) const;

    // Coordinate values of maximal order, ascending residue.
    const std::vector<u64>& maximal_residues() const;

    const FactoredInteger& factors_pm1() const { return pm1_; }
    const FactoredInteger& factors_pp1() const { return pp1_; }
    u64 eta() const { return eta_; }

  private:
    PrimeField fp_;
    QuadField fq_;
    FactoredInteger pm1_, pp1_;
    u64 eta_;
    mutable std::vector<u64> order_cache_;           // dense memo for small p
    mutable std::unordered_map<u64, u64> order_map_;  // sparse memo otherwise
    mutable std::vector<u64> maximal_residues_;
    u64 compute_order(u64 x1) const;
};

// Rotation orbit of t about coordinate i, streamed one vertex at a time.
// Iteration past the return to t throws (arithmetic bug guard at 2p+1).
class OrbitWalker {
  public:
    OrbitWalker(const Triple& start, int index, const PrimeField& fp);

    const Triple& current() const { return cur_; }
    bool at_start() const { return steps_ > 0 && cur_ == start_; }
    u64 steps() const { return steps_; }
    const Triple& advance();

  private:
    const PrimeField& fp_;
    Triple start_, cur_;
    int index_;
    u64 steps_ = 0;
};

// Full orbit, starting at t, in rotation order.
std::vector<Triple> orbit(const Triple& t, int index, const PrimeField& fp);

}  // namespace markoff
