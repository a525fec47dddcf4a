#pragma once

#include <array>
#include <vector>

#include "bgm/endcurves.hpp"

namespace bgm {

struct BettiTables {
    std::vector<Bigrade> b0, b1, b2;  // multisets, sorted
    bool operator==(const BettiTables&) const = default;
};

BettiTables koszul_betti(const GridModule& M);

// Multiplicities of the eleven indecomposables of the square
// {l-(1,1), l-(0,1), l-(1,0), l}, indexed 'a'..'k'.  With BL = l-(1,1),
// BR = l-(0,1), TL = l-(1,0), TR = l the supports are
// a BL, b BR, c TL, d TR, e TL+BL, f BL+BR, g TL+TR, h TR+BR,
// i TL+BL+BR, j TL+TR+BR, k all four.
struct SquareCounts {
    std::array<int, 11> n{};
    int operator[](char t) const { return n[t - 'a']; }
    int& operator[](char t) { return n[t - 'a']; }
    bool operator==(const SquareCounts&) const = default;
};

// support of the square type t at l
std::set<Bigrade> square_type_support(char t, Bigrade l);

// Closed dimension formulas for a, b, c, d, i, and the dimension of the
// pair space {(w,z) : xw = yz mod xyM}, which counts j + b + c.
struct SquareFormulas {
    int a = 0, b = 0, c = 0, d = 0, i = 0, jbc = 0;
};
SquareFormulas square_formulas(const GridModule& M, Bigrade l);

// Tally by decomposing the restriction; throws internal_error if a summand is
// none of the eleven types or the closed formulas disagree.
SquareCounts square_counts(const GridModule& M, Bigrade l, const DecompOptions& opt = {});

// deaths in the open convention, as returned by deaths()
BettiTables betti_from_curves(const CurveMultiset& births, const CurveMultiset& deaths, const CornerData& corners);
BettiTables betti_from_curves(const GridModule& M, const DecompOptions& opt = {});

}  // namespace bgm
