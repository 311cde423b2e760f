#pragma once

#include <array>
#include <compare>
#include <vector>

#include "perc/board.hpp"
#include "perc/strip_game.hpp"

namespace perc {

struct P2 {
    int x = 0, y = 0;
    int norm_inf() const { return std::max(std::abs(x), std::abs(y)); }
    P2 rot() const { return {-y, x}; }  // rotation by pi/2
    auto operator<=>(const P2&) const = default;
};

// Unit segment of Z^2 with a < b.
struct Seg {
    P2 a, b;
    static Seg of(P2 u, P2 v) { return u < v ? Seg{u, v} : Seg{v, u}; }
    Seg rot() const { return of(a.rot(), b.rot()); }
    auto operator<=>(const Seg&) const = default;
};

// Annuli, strips and corner connectors in coordinates relative to the origin.
class AnnulusGeometry {
public:
    AnnulusGeometry(int p, int N);

    int p() const { return p_; }
    int N() const { return N_; }
    int width() const { return p_ + 1; }
    int outer_radius() const { return N_ * (p_ + 1); }

    bool in_annulus(P2 u, int k) const;
    std::vector<P2> annulus_vertices(int k) const;
    // i in 1..4; R_1 is the top strip, R_i = rot^{i-1}(R_1).
    const std::vector<Seg>& strip(int i, int k) const { return strips_.at(k).at(i - 1); }
    const std::vector<Seg>& corners(int k) const { return corners_.at(k); }
    // All edges with both endpoints in the union of the annuli.
    std::vector<Seg> sp_edges() const;

    // Dual of R_i(k), laid out in the frame of R_1: H joins left to right.
    // Edge j of the result is the dual of strip(i, k)[j] for every i.
    const StripGraph& strip_dual(int k) const { return duals_.at(k); }

private:
    bool inside_neighbour(const Seg& s, int k) const;

    int p_, N_;
    std::vector<std::array<std::vector<Seg>, 4>> strips_;
    std::vector<std::vector<Seg>> corners_;
    std::vector<StripGraph> duals_;
};

enum class AnnulusRegion { Outside, Strip, Corner, FreeSp };

struct EdgeRole {
    AnnulusRegion region = AnnulusRegion::Outside;
    int k = -1;
    int strip = 0;  // 1..4 for strips
    int index = -1; // position inside strip(i,k) or corners(k)
};

// The geometry placed on a 2-D window, centred at the window's root.
struct BoundAnnulus {
    std::vector<EdgeRole> role;                              // per board edge
    std::vector<std::array<std::vector<EdgeId>, 4>> strips;  // [k][i-1]
    std::vector<std::vector<EdgeId>> corners;                // [k]
    std::vector<EdgeId> sp;                                  // ascending
};

BoundAnnulus bind_annulus(const AnnulusGeometry& g, const Board& window);

}  // namespace perc
