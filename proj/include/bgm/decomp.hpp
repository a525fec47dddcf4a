#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "bgm/gridmod.hpp"

namespace bgm {

struct decomposition_incomplete : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct field_too_small : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Arrow {
    int s, t;
    Mat m;
    int tag = 0;  // caller-defined label, preserved by decomposition
};

struct QuiverRep {
    Field F;
    std::vector<int> dims;
    std::vector<Arrow> arrows;

    int total_dim() const;
    void check() const;
    std::vector<int> support() const;
};

using Endo = std::vector<Mat>;  // one square matrix per vertex

struct Summand {
    QuiverRep rep;
    std::vector<Mat> embed;  // ambient dims[v] x rep.dims[v]
};

struct Decomposition {
    std::vector<Summand> summands;
};

struct DecompOptions {
    std::uint64_t seed = 0;
    int budget = 64;
    int cap = 1024;  // maximal total dimension
};

std::vector<Endo> endomorphism_basis(const QuiverRep& X, int cap = 1024);
// dim Hom(X, Y) for representations of the same quiver
int hom_dim(const QuiverRep& X, const QuiverRep& Y);
std::optional<std::pair<Summand, Summand>> fitting_split(const QuiverRep& X, const Endo& eta);
bool is_endomorphism(const QuiverRep& X, const Endo& eta);
// local-endomorphism-ring certificate (trace-form radical plus field check)
bool is_local(const QuiverRep& X, std::uint64_t seed = 0);
Decomposition decompose(const QuiverRep& X, const DecompOptions& opt = {});
// per-vertex invertibility of the stacked embeddings and block-diagonality
bool verify_decomposition(const QuiverRep& X, const Decomposition& d);

// Grid modules as quiver representations: vertex = window index,
// tag = 2 * index + (0 for x, 1 for y).
QuiverRep to_quiver(const GridModule& M);
GridModule to_grid(const QuiverRep& X, Window w);

struct GridSummands {
    std::vector<GridModule> modules;
};
GridSummands decompose_grid(const GridModule& M, const DecompOptions& opt = {});

struct SpreadCheck {
    bool ok = false;
    std::vector<std::set<Bigrade>> supports;
};
SpreadCheck is_spread_decomposable(const GridModule& M, const DecompOptions& opt = {});

}  // namespace bgm
