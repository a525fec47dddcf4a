#pragma once

#include <utility>
#include <vector>

#include "bgm/gridmod.hpp"

namespace bgm {

// Representation of Z supported on [lo, lo + dims.size()).
// zmap[i] maps index i to i+1; the last one has zero rows.
struct LineModule {
    Field F;
    int lo = 0;
    std::vector<int> dims;
    std::vector<Mat> zmap;

    int dim(int i) const;
    int total_dim() const;
};

struct SlicePath {
    std::vector<Bigrade> points;
};

struct Bar {
    int birth, death;  // [birth, death)
    auto operator<=>(const Bar&) const = default;
};

LineModule line_module(const Field& F, int lo, std::vector<int> dims, std::vector<Mat> maps);
LineModule bar_module(const Field& F, int b, int d);
LineModule line_sum(const LineModule& A, const LineModule& B);

int bar_count(const LineModule& A);
LineModule slice(const GridModule& M, const SlicePath& l);
std::vector<Bar> barcode(const LineModule& A);

}  // namespace bgm
