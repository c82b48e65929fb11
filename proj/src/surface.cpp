#include "markoff/surface.hpp"

#include <algorithm>

#include "markoff/errors.hpp"

namespace markoff {

std::string graph_name(GraphKind g) { return g == GraphKind::Involution ? "g" : "ghat"; }

std::optional<GraphKind> graph_from_name(const std::string& s) {
    if (s == "g" || s == "G") return GraphKind::Involution;
    if (s == "ghat" || s == "Ghat" || s == "g^" || s == "gh") return GraphKind::Rotation;
    return std::nullopt;
}

bool on_surface(const Triple& t, const PrimeField& fp) {
    if (t[0] == 0 && t[1] == 0 && t[2] == 0) return false;
    u64 lhs = fp.add(fp.add(fp.mul(t[0], t[0]), fp.mul(t[1], t[1])), fp.mul(t[2], t[2]));
    u64 rhs = fp.mul(3 % fp.p(), fp.mul(t[0], fp.mul(t[1], t[2])));
    return lhs == rhs;
}

Triple apply_involution(int i, const Triple& t, const PrimeField& fp) {
    Triple r = t;
    int a = i - 1, b = i % 3, c = (i + 1) % 3;
    r[a] = fp.sub(fp.mul(3 % fp.p(), fp.mul(t[b], t[c])), t[a]);
    return r;
}

Triple apply_rotation(int i, const Triple& t, const PrimeField& fp) {
    u64 three = 3 % fp.p();
    switch (i) {
        case 1: return {t[0], t[2], fp.sub(fp.mul(three, fp.mul(t[0], t[2])), t[1])};
        case 2: return {fp.sub(fp.mul(three, fp.mul(t[0], t[1])), t[2]), t[1], t[0]};
        case 3: return {t[1], fp.sub(fp.mul(three, fp.mul(t[1], t[2])), t[0]), t[2]};
        default: throw Error("rotation index must be 1..3");
    }
}

Triple apply_rotation_inverse(int i, const Triple& t, const PrimeField& fp) {
    u64 three = 3 % fp.p();
    switch (i) {
        case 1: return {t[0], fp.sub(fp.mul(three, fp.mul(t[0], t[1])), t[2]), t[1]};
        case 2: return {t[2], t[1], fp.sub(fp.mul(three, fp.mul(t[1], t[2])), t[0])};
        case 3: return {fp.sub(fp.mul(three, fp.mul(t[0], t[2])), t[1]), t[0], t[2]};
        default: throw Error("rotation index must be 1..3");
    }
}

std::array<Triple, 3> neighbors(const Triple& t, GraphKind g, const PrimeField& fp) {
    if (g == GraphKind::Involution)
        return {apply_involution(1, t, fp), apply_involution(2, t, fp), apply_involution(3, t, fp)};
    return {apply_rotation(1, t, fp), apply_rotation(2, t, fp), apply_rotation(3, t, fp)};
}

std::optional<Triple> reduce_mod_p(const std::array<i64, 3>& t, const PrimeField& fp) {
    using i128 = __int128;
    i128 lhs = i128(t[0]) * t[0] + i128(t[1]) * t[1] + i128(t[2]) * t[2];
    i128 rhs = i128(3) * t[0] * t[1] * t[2];
    if (lhs != rhs || (t[0] == 0 && t[1] == 0 && t[2] == 0))
        throw NonMarkoffError("input is not an integer Markoff triple");
    Triple r{fp.reduce(t[0]), fp.reduce(t[1]), fp.reduce(t[2])};
    if (r[0] == 0 && r[1] == 0 && r[2] == 0) return std::nullopt;
    return r;
}

SurfaceEnumeration::SurfaceEnumeration(const PrimeField& fp, u64 p_cap) : fp_(fp) {
    const u64 p = fp.p();
    if (p > p_cap) throw ResourceError("enumeration cap exceeded: p = " + std::to_string(p));

    // Least square root per residue (p - r is the other); p as sentinel.
    std::vector<u32> root(p, static_cast<u32>(p));
    for (u64 r = 0; r <= (p - 1) / 2; ++r) {
        u64 sq = mulmod(r, r, p);
        if (root[sq] == p) root[sq] = static_cast<u32>(r);
    }

    row_offset_.assign(p * p + 1, 0);
    const u64 three = 3 % p;
    auto roots_of_row = [&](u64 x1, u64 x2, u32 out[2]) -> int {
        // x3^2 - 3 x1 x2 x3 + (x1^2 + x2^2) = 0
        u64 b = mulmod(three, mulmod(x1, x2, p), p);
        u64 c = (mulmod(x1, x1, p) + mulmod(x2, x2, p)) % p;
        u64 disc = (mulmod(b, b, p) + p - mulmod(4 % p, c, p) % p) % p;
        u32 r = root[disc];
        if (r == p) return 0;
        u64 inv2 = (p + 1) / 2;  // 2^{-1} mod p for odd p
        u64 lo = mulmod((b + r) % p, inv2, p);
        u64 hi = mulmod((b + p - r) % p, inv2, p);
        if (lo > hi) std::swap(lo, hi);
        if (x1 == 0 && x2 == 0) {
            // Only root is x3 = 0, which is the excluded zero triple.
            return 0;
        }
        out[0] = static_cast<u32>(lo);
        if (r == 0) return 1;
        out[1] = static_cast<u32>(hi);
        return 2;
    };

    u32 scratch[2];
    for (u64 x1 = 0; x1 < p; ++x1)
        for (u64 x2 = 0; x2 < p; ++x2)
            row_offset_[x1 * p + x2 + 1] = static_cast<u32>(roots_of_row(x1, x2, scratch));
    for (u64 i = 0; i < p * p; ++i) row_offset_[i + 1] += row_offset_[i];

    x3_.resize(row_offset_.back());
    for (u64 x1 = 0; x1 < p; ++x1) {
        for (u64 x2 = 0; x2 < p; ++x2) {
            int k = roots_of_row(x1, x2, scratch);
            u32 base = row_offset_[x1 * p + x2];
            for (int j = 0; j < k; ++j) x3_[base + j] = scratch[j];
        }
    }
}

Triple SurfaceEnumeration::vertex(u32 idx) const {
    auto it = std::upper_bound(row_offset_.begin(), row_offset_.end(), idx);
    u64 row = static_cast<u64>(it - row_offset_.begin()) - 1;
    return {row / p(), row % p(), x3_[idx]};
}

u32 SurfaceEnumeration::index_of(const Triple& t) const {
    u64 row = t[0] * p() + t[1];
    for (u32 i = row_offset_[row]; i < row_offset_[row + 1]; ++i) {
        if (x3_[i] == t[2]) return i;
    }
    throw Error("triple is not a surface vertex");
}

void SurfaceEnumeration::for_each_vertex(
    const std::function<void(u32, const Triple&)>& fn) const {
    const u64 p = fp_.p();
    for (u64 row = 0; row < p * p; ++row) {
        for (u32 i = row_offset_[row]; i < row_offset_[row + 1]; ++i) {
            Triple t{row / p, row % p, x3_[i]};
            fn(i, t);
        }
    }
}

std::array<u32, 3> SurfaceEnumeration::neighbor_ids(const Triple& t, GraphKind g) const {
    auto nb = neighbors(t, g, fp_);
    return {index_of(nb[0]), index_of(nb[1]), index_of(nb[2])};
}

void SurfaceEnumeration::write_adjacency(std::string& out, GraphKind g) const {
    for_each_vertex([&](u32, const Triple& t) {
        auto ids = neighbor_ids(t, g);
        out += std::to_string(t[0]);
        out += ',';
        out += std::to_string(t[1]);
        out += ',';
        out += std::to_string(t[2]);
        out += ';';
        out += std::to_string(ids[0]);
        out += ',';
        out += std::to_string(ids[1]);
        out += ',';
        out += std::to_string(ids[2]);
        out += '\n';
    });
}

u64 surface_count_formula(const PrimeField& fp) {
    if (fp.p() <= 3) throw Error("count formula requires p > 3");
    u64 p = fp.p();
    return fp.legendre(p - 1) == 1 ? p * p + 3 * p : p * p - 3 * p;
}

}  // namespace markoff
