#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "markoff/fp.hpp"

namespace markoff {

// Ordered point of the surface x1^2 + x2^2 + x3^2 - 3 x1 x2 x3 = 0 mod p.
using Triple = std::array<u64, 3>;

enum class GraphKind { Involution, Rotation };  // G_p and Ghat_p

std::string graph_name(GraphKind g);                       // "g" / "ghat"
std::optional<GraphKind> graph_from_name(const std::string& s);

bool on_surface(const Triple& t, const PrimeField& fp);

// R_i replaces coordinate i by 3 x_j x_k - x_i. Indices are 1-based.
Triple apply_involution(int i, const Triple& t, const PrimeField& fp);

// rot_i fixes coordinate i and equals "transpose the other two after
// R_{i+1}"; rot_1(a,b,c) = (a, c, 3ac-b) and cyclically.
Triple apply_rotation(int i, const Triple& t, const PrimeField& fp);
Triple apply_rotation_inverse(int i, const Triple& t, const PrimeField& fp);

// Images under the three generators of the requested graph. Fixed points
// come back as self-loops (image == t).
std::array<Triple, 3> neighbors(const Triple& t, GraphKind g, const PrimeField& fp);

// Coordinatewise reduction of an integer solution. nullopt signals the
// zero triple mod p, which is not a vertex.
std::optional<Triple> reduce_mod_p(const std::array<i64, 3>& t, const PrimeField& fp);

// Full vertex set for one prime, lexicographically ordered, with O(1)
// index lookup. Triples are stored as per-(x1,x2) solution lists for x3.
class SurfaceEnumeration {
  public:
    SurfaceEnumeration(const PrimeField& fp, u64 p_cap);

    u64 p() const { return fp_.p(); }
    const PrimeField& field() const { return fp_; }
    u32 size() const { return static_cast<u32>(x3_.size()); }

    Triple vertex(u32 idx) const;
    u32 index_of(const Triple& t) const;  // throws if not a vertex

    // Deterministic order: ascending index.
    void for_each_vertex(const std::function<void(u32, const Triple&)>& fn) const;

    std::array<u32, 3> neighbor_ids(const Triple& t, GraphKind g) const;

    // One line per vertex: "x1,x2,x3;n1,n2,n3" with neighbor indices.
    void write_adjacency(std::string& out, GraphKind g) const;

  private:
    PrimeField fp_;
    std::vector<u32> row_offset_;  // size p*p + 1
    std::vector<u32> x3_;          // solution x3 values, ascending per row
};

inline SurfaceEnumeration enumerate_surface(const PrimeField& fp, u64 p_cap = 4096) {
    return SurfaceEnumeration(fp, p_cap);
}

// p^2 + legendre(-1)*3p, the closed-form vertex count for p > 3.
u64 surface_count_formula(const PrimeField& fp);

}  // namespace markoff
