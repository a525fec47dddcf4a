#pragma once

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "bgm/gridmod.hpp"

namespace bgm {

struct syntax_error : std::runtime_error {
    int line;
    syntax_error(int l, const std::string& what) : std::runtime_error("line " + std::to_string(l) + ": " + what), line(l) {}
};
struct grade_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct field_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field p=<prime> / gens / x y ... / rels / x y : i:c i:c ...
Presentation parse_presentation(const std::string& text);
std::string serialize_presentation(const Presentation& pr);

// [field p=<prime>] / window x0 y0 x1 y1 / dim x y d / xmap x y + rows / ymap x y + rows
GridModule parse_module(const std::string& text, const Field& fallback);
std::string serialize_module(const GridModule& M);

struct Simplex {
    std::vector<int> v;  // sorted vertex ids
    Bigrade grade;
};

struct Bifiltration {
    std::vector<Simplex> simplices;

    int count(int dim) const;
    // faces present with grade at most the coface grade
    void validate() const;
};

// simplex v1 .. vk @ x y
Bifiltration parse_bifiltration(const std::string& text);
std::string serialize_bifiltration(const Bifiltration& bf);

GridModule homology_module(const Field& F, const Bifiltration& bf, int degree, Window w);
Bifiltration random_bifiltration(int nverts, int nedges, int ntris, Window w, std::mt19937_64& rng);

enum class InputKind { presentation, module, bifiltration };
InputKind detect_input(const std::string& text);

}  // namespace bgm
