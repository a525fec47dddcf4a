#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <vector>

#include "bgm/linalg.hpp"

namespace bgm {

struct Bigrade {
    int x = 0, y = 0;
    auto operator<=>(const Bigrade&) const = default;  // lexicographic, for containers
    Bigrade operator+(Bigrade o) const { return {x + o.x, y + o.y}; }
    Bigrade operator-(Bigrade o) const { return {x - o.x, y - o.y}; }
    Bigrade operator-() const { return {-x, -y}; }
};

inline constexpr Bigrade EX{1, 0}, EY{0, 1}, EXY{1, 1};

// componentwise order
inline bool leq(Bigrade a, Bigrade b) { return a.x <= b.x && a.y <= b.y; }
inline Bigrade join(Bigrade a, Bigrade b) { return {std::max(a.x, b.x), std::max(a.y, b.y)}; }
inline Bigrade meet(Bigrade a, Bigrade b) { return {std::min(a.x, b.x), std::min(a.y, b.y)}; }

struct invalid_spread : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct invalid_presentation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Window {
    Bigrade lo{0, 0}, hi{-1, -1};

    Window() = default;
    Window(Bigrade l, Bigrade h) : lo(l), hi(h) {}

    bool empty() const { return hi.x < lo.x || hi.y < lo.y; }
    int width() const { return empty() ? 0 : hi.x - lo.x + 1; }
    int height() const { return empty() ? 0 : hi.y - lo.y + 1; }
    int size() const { return width() * height(); }
    bool contains(Bigrade p) const { return !empty() && leq(lo, p) && leq(p, hi); }
    int index(Bigrade p) const { return (p.y - lo.y) * width() + (p.x - lo.x); }
    Bigrade point(int i) const { return {lo.x + i % width(), lo.y + i / width()}; }
    std::vector<Bigrade> points() const;
    bool operator==(const Window&) const = default;
};

Window hull(const Window& a, const Window& b);
Window bounding(const std::set<Bigrade>& pts);

// Dense module on a window, zero outside it.  xm[i] maps the point i of the
// window to i+(1,0); when that leaves the window the matrix has zero rows.
struct GridModule {
    Field F;
    Window w;
    std::vector<int> dims;
    std::vector<Mat> xm, ym;

    GridModule() = default;
    GridModule(Field f, Window win);

    int dim(Bigrade p) const { return w.contains(p) ? dims[w.index(p)] : 0; }
    Mat xmap(Bigrade p) const;
    Mat ymap(Bigrade p) const;
    // structure map M_a -> M_b for a <= b (x steps first)
    Mat map(Bigrade a, Bigrade b) const;

    void set_dim(Bigrade p, int d);
    void set_xmap(Bigrade p, Mat m);
    void set_ymap(Bigrade p, Mat m);

    int total_dim() const;
    std::set<Bigrade> support() const;
    bool is_zero() const { return total_dim() == 0; }
    // throws contract_error on shape or commutativity failure
    void check() const;
    bool commutes() const;
};

GridModule extend(const GridModule& M, Window w);
GridModule restrict_to(const GridModule& M, Window w);
GridModule trim(const GridModule& M);

struct Spread {
    std::set<Bigrade> points;
};

bool is_connected(const std::set<Bigrade>& I);
bool is_convex(const std::set<Bigrade>& I);
bool is_spread(const std::set<Bigrade>& I);

GridModule spread_module(const Field& F, const std::set<Bigrade>& I, Window w);
GridModule spread_module(const Field& F, const std::set<Bigrade>& I);

struct Presentation {
    Field F;
    std::vector<Bigrade> gens, rels;
    Mat mat;  // gens x rels

    void validate() const;
    bool operator==(const Presentation& o) const {
        return F == o.F && gens == o.gens && rels == o.rels && mat == o.mat;
    }
};

Presentation free_presentation(const Field& F, const std::vector<Bigrade>& gens);

GridModule evaluate_presentation(const Presentation& pr, Window w);
GridModule shift(const GridModule& M, Bigrade v);
Presentation shift(const Presentation& pr, Bigrade v);
GridModule direct_sum(const GridModule& M, const GridModule& N);
GridModule dualize(const GridModule& M);

struct Syzygy {
    std::vector<Bigrade> grades;
    Mat mat;  // rels x syzygies
};
Syzygy syzygy(const Presentation& pr);
Presentation dual_presentation(const Presentation& pr);
bool is_finite_length(const Presentation& pr);
// window containing the support of the presented module; requires finite length
Window support_window(const Presentation& pr);

Presentation random_presentation(const Field& F, int ngens, int nrels, Window w, std::uint64_t seed,
                                 bool clip = true);

// rank of every structure map φ_{a,b} over all a <= b in the window
std::vector<int> rank_profile(const GridModule& M, Window w);
bool same_dims_and_ranks(const GridModule& A, const GridModule& B);

}  // namespace bgm
