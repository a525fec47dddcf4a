#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bgm/decomp.hpp"
#include "bgm/endcurves.hpp"
#include "bgm/poly.hpp"

namespace bgm {

// The six vertices attached to a grade, in storage order.
enum class Vkind { r = 0, ur = 1, u = 2, l = 3, dl = 4, d = 5 };

// Arrow families of the windowed quiver.  The source lives at `grade`.
enum class Afam {
    u_ur = 0,   // inclusion
    r_ur = 1,   // inclusion
    ur_u = 2,   // x, lands at grade + (1,0)
    ur_r = 3,   // y, lands at grade + (0,1)
    dl_l = 4,   // projection
    dl_d = 5,   // projection
    l_dl = 6,   // y, lands at grade + (0,1)
    d_dl = 7,   // x, lands at grade + (1,0)
    f = 8,      // u -> l
    g = 9,      // r -> d
};

struct ArrowInfo {
    Afam fam;
    Bigrade grade;
};

struct BoundaryRep {
    Window w;  // grades carrying vertices
    QuiverRep rep;
    std::vector<ArrowInfo> info;  // indexed by arrow tag

    int vertex(Bigrade i, Vkind k) const { return 6 * w.index(i) + int(k); }
    Bigrade grade_of(int v) const { return w.point(v / 6); }
    Vkind kind_of(int v) const { return Vkind(v % 6); }
};

struct BoundaryComponent {
    std::vector<Bigrade> curve;   // rotation-canonical
    std::vector<Poly> monodromy;  // invariant factors of T, monic
    std::optional<Mat> raw_T;     // basis dependent; only filled on request

    bool operator==(const BoundaryComponent& o) const { return curve == o.curve && monodromy == o.monodromy; }
    auto operator<=>(const BoundaryComponent& o) const {
        if (auto c = curve <=> o.curve; c != 0) return c;
        return monodromy <=> o.monodromy;
    }
};

BoundaryRep build_boundary(const GridModule& M);
// summands of ∂M, each passing the band certificate
std::vector<QuiverRep> decompose_boundary(const BoundaryRep& B, const DecompOptions& opt = {});
bool band_certificate(const QuiverRep& S);
BoundaryComponent extract_component(const BoundaryRep& B, const QuiverRep& S, bool keep_raw = false);
// sorted multiset of the components of ∂M
std::vector<BoundaryComponent> boundary_components(const GridModule& M, const DecompOptions& opt = {});

std::vector<Bigrade> canonical_rotation(std::vector<Bigrade> g);
bool is_closed_curve(const std::vector<Bigrade>& g);
bool components_equal(const BoundaryComponent& a, const BoundaryComponent& b);
// invariant factors of a square matrix (Smith form of tI - T over F_p[t])
std::vector<Poly> invariant_factors(const Field& F, const Mat& T);

BoundaryComponent spread_boundary_oracle(const Field& F, const std::set<Bigrade>& I);

std::string render_svg(const GridModule& M, const std::vector<BoundaryComponent>& comps,
                       const DecompOptions& opt = {});

}  // namespace bgm
