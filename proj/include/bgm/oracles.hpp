#pragma once

#include <map>
#include <set>
#include <vector>

#include "bgm/counts.hpp"

namespace bgm {

struct size_limit : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct inversion_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using PointSet = std::set<Grade3>;

struct SpreadFamily {
    Window3 grid;
    std::vector<PointSet> spreads, segments, hooks, upsets;
};

// at most 16 grid points
SpreadFamily enumerate_spreads(const Window3& w);
SpreadFamily enumerate_spreads(const Window& w);

PointSet lift_set(const std::set<Bigrade>& I);

int generalized_rank(const CubeModule3& M, const PointSet& I);
int generalized_rank(const GridModule& M, const std::set<Bigrade>& I);
int hom_dim(const CubeModule3& N, const CubeModule3& M);
int hom_dim(const GridModule& N, const GridModule& M);

using SignedMultiset = std::map<PointSet, long long>;

// Inverts values(I) = Σ_{J ⊇ I} c_J over the family, largest sets first.
SignedMultiset mobius_invert(const std::map<PointSet, long long>& values, const std::vector<PointSet>& family);

// Solves values(I) = Σ_J c_J basis[I][J] exactly (rows and columns indexed by family).
std::vector<long long> signed_solve(const std::vector<std::vector<long long>>& basis,
                                    const std::vector<long long>& values);

long long count_gpd(const CubeModule3& M);
long long count_signed_barcode(const CubeModule3& M);
long long count_hooks(const CubeModule3& M);
long long count_int_euler(const CubeModule3& M);
long long count_hilbert(const CubeModule3& M);
long long count_gpd(const GridModule& M);
long long count_signed_barcode(const GridModule& M);
long long count_hooks(const GridModule& M);
long long count_int_euler(const GridModule& M);
long long count_hilbert(const GridModule& M);

// Σ_k (-1)^k #(chains of k+1 elements); I has at most cap points
long long order_complex_euler(const PointSet& I, int cap = 12);
long long order_complex_euler(const std::set<Bigrade>& I, int cap = 12);

}  // namespace bgm
