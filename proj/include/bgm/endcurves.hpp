#pragma once

#include <set>
#include <vector>

#include "bgm/decomp.hpp"
#include "bgm/gridmod.hpp"

namespace bgm {

struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Curve = std::set<Bigrade>;
using CurveMultiset = std::vector<Curve>;  // kept sorted

// Subquotient A/B of M for pointwise subspaces B_p ⊆ A_p ⊆ M_p that are
// preserved by x and y.  Columns of A[i], B[i] span the subspaces at window index i.
GridModule subquotient(const GridModule& M, const std::vector<Mat>& A, const std::vector<Mat>& B);

// (ker^c)_p = {z in M_p : xy z = 0}; the open ker_xy is ker^c shifted to live in M[-1,-1]
GridModule ker_xy_closed(const GridModule& M);
GridModule ker_x_closed(const GridModule& M);
GridModule ker_y_closed(const GridModule& M);
GridModule ker_xy(const GridModule& M);
GridModule ker_x(const GridModule& M);
GridModule ker_y(const GridModule& M);
GridModule coker_xy(const GridModule& M);
GridModule coker_x(const GridModule& M);
GridModule coker_y(const GridModule& M);
// the submodule xyM
GridModule image_xy(const GridModule& M);

GridModule topleft(const GridModule& M);
GridModule botright(const GridModule& M);

bool is_ephemeral(const GridModule& M);
bool is_x_annihilated(const GridModule& M);
bool is_y_annihilated(const GridModule& M);
bool is_spread_curve(const Curve& I);

CurveMultiset decompose_ephemeral(const GridModule& M, const DecompOptions& opt = {});
CurveMultiset births(const GridModule& M, const DecompOptions& opt = {});
CurveMultiset deaths(const GridModule& M, const DecompOptions& opt = {});
CurveMultiset shift_curves(const CurveMultiset& C, Bigrade d);

struct CurveCorners {
    std::set<Bigrade> convex, inner_convex, concave, inner_concave;
};
CurveCorners corners(const Curve& c);

struct CornerData {
    std::vector<Bigrade> topleft, botright;  // multisets, sorted
};
std::vector<Bigrade> as_multiset(const GridModule& semisimple);
CornerData corner_data(const GridModule& M);

Presentation presentation_cokerxy(const Presentation& pr);
Presentation presentation_kerxy(const Presentation& pr);

}  // namespace bgm
