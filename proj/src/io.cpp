#include "bgm/io.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace bgm {

namespace {

struct Line {
    int no;
    std::vector<std::string> tok;
};

std::vector<Line> lines_of(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string s;
    int no = 0;
    while (std::getline(in, s)) {
        ++no;
        if (auto h = s.find('#'); h != std::string::npos) s.resize(h);
        std::istringstream ls(s);
        Line l{no, {}};
        for (std::string t; ls >> t;) l.tok.push_back(t);
        if (!l.tok.empty()) out.push_back(std::move(l));
    }
    return out;
}

long long to_int(const Line& l, const std::string& t) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw syntax_error(l.no, "expected an integer, got '" + t + "'");
    }
}

Field field_from(const Line& l) {
    if (l.tok.size() != 2 || l.tok[1].rfind("p=", 0) != 0) throw syntax_error(l.no, "expected 'field p=<prime>'");
    long long p = to_int(l, l.tok[1].substr(2));
    if (p < 2 || p >= (1LL << 31) || !is_prime(std::uint64_t(p)))
        throw field_error("field p=" + std::to_string(p) + " is not a prime below 2^31");
    return Field(elem(p));
}

Bigrade grade_at(const Line& l, std::size_t i) {
    if (l.tok.size() < i + 2) throw syntax_error(l.no, "expected a grade 'x y'");
    return {int(to_int(l, l.tok[i])), int(to_int(l, l.tok[i + 1]))};
}

std::string grade_str(Bigrade g) { return "(" + std::to_string(g.x) + "," + std::to_string(g.y) + ")"; }

}  // namespace

Presentation parse_presentation(const std::string& text) {
    auto ls = lines_of(text);
    if (ls.empty() || ls[0].tok[0] != "field") throw syntax_error(ls.empty() ? 1 : ls[0].no, "missing 'field p=<prime>' header");
    Presentation pr;
    pr.F = field_from(ls[0]);
    enum { none, gens, rels } sec = none;
    struct Entry {
        int line, gen;
        long long coef;
    };
    std::vector<std::vector<Entry>> cols;
    for (std::size_t k = 1; k < ls.size(); ++k) {
        const Line& l = ls[k];
        if (l.tok.size() == 1 && l.tok[0] == "gens") {
            if (sec != none) throw syntax_error(l.no, "'gens' must come first and once");
            sec = gens;
            continue;
        }
        if (l.tok.size() == 1 && l.tok[0] == "rels") {
            if (sec != gens) throw syntax_error(l.no, "'rels' must follow 'gens'");
            sec = rels;
            continue;
        }
        if (sec == none) throw syntax_error(l.no, "expected 'gens'");
        if (sec == gens) {
            if (l.tok.size() != 2) throw syntax_error(l.no, "expected a generator grade 'x y'");
            pr.gens.push_back(grade_at(l, 0));
            continue;
        }
        if (l.tok.size() < 3 || l.tok[2] != ":") throw syntax_error(l.no, "expected 'x y : i:c ...'");
        pr.rels.push_back(grade_at(l, 0));
        std::vector<Entry> col;
        for (std::size_t t = 3; t < l.tok.size(); ++t) {
            auto c = l.tok[t].find(':');
            if (c == std::string::npos) throw syntax_error(l.no, "expected 'index:coefficient', got '" + l.tok[t] + "'");
            long long i = to_int(l, l.tok[t].substr(0, c)), v = to_int(l, l.tok[t].substr(c + 1));
            if (i < 0 || i >= (long long)pr.gens.size()) throw syntax_error(l.no, "generator index " + std::to_string(i) + " out of range");
            col.push_back({l.no, int(i), v});
        }
        cols.push_back(col);
    }
    pr.mat = Mat(int(pr.gens.size()), int(pr.rels.size()));
    for (int j = 0; j < int(cols.size()); ++j)
        for (const Entry& e : cols[j]) {
            elem v = pr.F.add(pr.mat(e.gen, j), pr.F.from_int(e.coef));
            if (v != 0 && !leq(pr.gens[e.gen], pr.rels[j]))
                throw grade_error("line " + std::to_string(e.line) + ": entry " + std::to_string(e.gen) + ":" +
                                  std::to_string(e.coef) + " has generator grade " + grade_str(pr.gens[e.gen]) +
                                  " not below relation grade " + grade_str(pr.rels[j]));
            pr.mat(e.gen, j) = v;
        }
    pr.validate();
    return pr;
}

std::string serialize_presentation(const Presentation& pr) {
    std::ostringstream s;
    s << "field p=" << pr.F.p << "\ngens\n";
    for (auto g : pr.gens) s << g.x << " " << g.y << "\n";
    s << "rels\n";
    for (int j = 0; j < int(pr.rels.size()); ++j) {
        s << pr.rels[j].x << " " << pr.rels[j].y << " :";
        for (int i = 0; i < int(pr.gens.size()); ++i)
            if (pr.mat(i, j)) s << " " << i << ":" << pr.mat(i, j);
        s << "\n";
    }
    return s.str();
}

GridModule parse_module(const std::string& text, const Field& fallback) {
    auto ls = lines_of(text);
    std::size_t k = 0;
    Field F = fallback;
    if (k < ls.size() && ls[k].tok[0] == "field") F = field_from(ls[k++]);
    if (k >= ls.size() || ls[k].tok[0] != "window" || ls[k].tok.size() != 5)
        throw syntax_error(k < ls.size() ? ls[k].no : 1, "expected 'window x0 y0 x1 y1'");
    GridModule M(F, Window{grade_at(ls[k], 1), grade_at(ls[k], 3)});
    ++k;
    for (auto p : M.w.points()) {
        M.set_xmap(p, Mat(0, 0));
        M.set_ymap(p, Mat(0, 0));
    }
    std::set<Bigrade> xs, ys;
    for (; k < ls.size(); ++k) {
        const Line& l = ls[k];
        const std::string& kw = l.tok[0];
        if (kw == "dim") {
            if (l.tok.size() != 4) throw syntax_error(l.no, "expected 'dim x y d'");
            Bigrade p = grade_at(l, 1);
            long long d = to_int(l, l.tok[3]);
            if (!M.w.contains(p)) throw grade_error("line " + std::to_string(l.no) + ": grade " + grade_str(p) + " outside the window");
            if (d < 0) throw syntax_error(l.no, "negative dimension");
            M.set_dim(p, int(d));
        } else if (kw == "xmap" || kw == "ymap") {
            if (l.tok.size() != 3) throw syntax_error(l.no, "expected '" + kw + " x y'");
            Bigrade p = grade_at(l, 1), q = p + (kw == "xmap" ? EX : EY);
            if (!M.w.contains(p)) throw grade_error("line " + std::to_string(l.no) + ": grade " + grade_str(p) + " outside the window");
            Mat m(M.dim(q), M.dim(p));
            for (int r = 0; r < m.rows; ++r) {
                if (++k >= ls.size()) throw syntax_error(l.no, "matrix ends early");
                const Line& row = ls[k];
                if (int(row.tok.size()) != m.cols) throw syntax_error(row.no, "expected " + std::to_string(m.cols) + " entries");
                for (int c = 0; c < m.cols; ++c) m(r, c) = F.from_int(to_int(row, row.tok[c]));
            }
            (kw == "xmap" ? xs : ys).insert(p);
            if (kw == "xmap") M.set_xmap(p, m);
            else M.set_ymap(p, m);
        } else {
            throw syntax_error(l.no, "unknown keyword '" + kw + "'");
        }
    }
    for (auto p : M.w.points()) {
        if (!xs.count(p)) M.set_xmap(p, Mat(M.dim(p + EX), M.dim(p)));
        if (!ys.count(p)) M.set_ymap(p, Mat(M.dim(p + EY), M.dim(p)));
        if (M.xmap(p).rows != M.dim(p + EX) || M.xmap(p).cols != M.dim(p) || M.ymap(p).rows != M.dim(p + EY) ||
            M.ymap(p).cols != M.dim(p))
            throw grade_error("map at " + grade_str(p) + " was given before the dimensions it connects");
    }
    if (!M.commutes()) throw grade_error("the structure maps do not commute");
    return M;
}

std::string serialize_module(const GridModule& M) {
    std::ostringstream s;
    s << "field p=" << M.F.p << "\n";
    s << "window " << M.w.lo.x << " " << M.w.lo.y << " " << M.w.hi.x << " " << M.w.hi.y << "\n";
    for (auto p : M.w.points())
        if (M.dim(p)) s << "dim " << p.x << " " << p.y << " " << M.dim(p) << "\n";
    auto put = [&](const char* kw, Bigrade p, const Mat& m) {
        if (m.rows == 0 || m.cols == 0) return;
        s << kw << " " << p.x << " " << p.y << "\n";
        for (int r = 0; r < m.rows; ++r) {
            for (int c = 0; c < m.cols; ++c) s << (c ? " " : "") << m(r, c);
            s << "\n";
        }
    };
    for (auto p : M.w.points()) {
        put("xmap", p, M.xmap(p));
        put("ymap", p, M.ymap(p));
    }
    return s.str();
}

int Bifiltration::count(int dim) const {
    return int(std::count_if(simplices.begin(), simplices.end(), [&](const Simplex& s) { return int(s.v.size()) == dim + 1; }));
}

void Bifiltration::validate() const {
    std::map<std::vector<int>, Bigrade> g;
    for (const Simplex& s : simplices) {
        if (s.v.empty() || !std::is_sorted(s.v.begin(), s.v.end()) ||
            std::adjacent_find(s.v.begin(), s.v.end()) != s.v.end())
            throw grade_error("simplex vertices must be distinct");
        if (!g.emplace(s.v, s.grade).second) throw grade_error("duplicate simplex");
    }
    for (const Simplex& s : simplices) {
        if (s.v.size() < 2) continue;
        for (std::size_t k = 0; k < s.v.size(); ++k) {
            std::vector<int> f = s.v;
            f.erase(f.begin() + k);
            auto it = g.find(f);
            if (it == g.end()) throw grade_error("a face of a simplex is missing");
            if (!leq(it->second, s.grade))
                throw grade_error("non-monotone bifiltration: face grade " + grade_str(it->second) +
                                  " is not below coface grade " + grade_str(s.grade));
        }
    }
}

Bifiltration parse_bifiltration(const std::string& text) {
    Bifiltration bf;
    for (const Line& l : lines_of(text)) {
        if (l.tok[0] != "simplex") throw syntax_error(l.no, "expected 'simplex v1 .. vk @ x y'");
        auto at = std::find(l.tok.begin(), l.tok.end(), "@");
        if (at == l.tok.end() || at == l.tok.begin() + 1 || l.tok.end() - at != 3)
            throw syntax_error(l.no, "expected 'simplex v1 .. vk @ x y'");
        Simplex s;
        for (auto t = l.tok.begin() + 1; t != at; ++t) s.v.push_back(int(to_int(l, *t)));
        std::sort(s.v.begin(), s.v.end());
        s.grade = grade_at(l, std::size_t(at - l.tok.begin()) + 1);
        bf.simplices.push_back(s);
    }
    bf.validate();
    return bf;
}

std::string serialize_bifiltration(const Bifiltration& bf) {
    std::ostringstream s;
    for (const Simplex& x : bf.simplices) {
        s << "simplex";
        for (int v : x.v) s << " " << v;
        s << " @ " << x.grade.x << " " << x.grade.y << "\n";
    }
    return s.str();
}

namespace {

Mat boundary_matrix(const Field& F, const std::vector<const Simplex*>& rows, const std::vector<const Simplex*>& cols) {
    std::map<std::vector<int>, int> at;
    for (int i = 0; i < int(rows.size()); ++i) at[rows[i]->v] = i;
    Mat d(int(rows.size()), int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j) {
        const auto& v = cols[j]->v;
        if (v.size() < 2) continue;
        for (std::size_t k = 0; k < v.size(); ++k) {
            std::vector<int> f = v;
            f.erase(f.begin() + k);
            d(at.at(f), j) = k % 2 ? F.neg(1) : 1;
        }
    }
    return d;
}

struct Homology {
    Mat H, B;  // representative cycles and boundaries, in full chain coordinates
};

}  // namespace

GridModule homology_module(const Field& F, const Bifiltration& bf, int degree, Window w) {
    bf.validate();
    std::vector<const Simplex*> lo, mid, hi;
    for (const Simplex& s : bf.simplices) {
        int d = int(s.v.size()) - 1;
        if (d == degree - 1) lo.push_back(&s);
        if (d == degree) mid.push_back(&s);
        if (d == degree + 1) hi.push_back(&s);
    }
    Mat d_in = boundary_matrix(F, lo, mid), d_out = boundary_matrix(F, mid, hi);
    int n = int(mid.size());
    auto below = [](const std::vector<const Simplex*>& ss, Bigrade p) {
        std::vector<int> idx;
        for (int k = 0; k < int(ss.size()); ++k)
            if (leq(ss[k]->grade, p)) idx.push_back(k);
        return idx;
    };
    auto at_grade = [&](Bigrade p) {
        Homology h;
        h.B = d_out.cols_of(below(hi, p));
        auto cols = below(mid, p);
        Mat zl = kernel_basis(F, d_in.cols_of(cols));
        Mat Z(n, zl.cols);
        for (int r = 0; r < int(cols.size()); ++r)
            for (int c = 0; c < zl.cols; ++c) Z(cols[r], c) = zl(r, c);
        Quotient q = quotient(F, h.B, n);
        h.H = Z.cols_of(rref(F, mul(F, q.proj, Z)).pivots);
        return h;
    };

    // independent per-grade tasks, merged in window order
    auto pts = w.points();
    std::vector<Homology> hs(pts.size());
    unsigned nt = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < nt; ++t)
        jobs.push_back(std::async(std::launch::async, [&, t] {
            for (std::size_t k = t; k < pts.size(); k += nt) hs[k] = at_grade(pts[k]);
        }));
    for (auto& j : jobs) j.get();

    GridModule M(F, w);
    for (std::size_t k = 0; k < pts.size(); ++k) M.set_dim(pts[k], hs[k].H.cols);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        Bigrade p = pts[k];
        for (Bigrade e : {EX, EY}) {
            Bigrade q = p + e;
            Mat m(M.dim(q), M.dim(p));
            if (w.contains(q) && m.rows && m.cols) {
                const Homology& hq = hs[w.index(q)];
                auto c = solve_membership(F, hcat(hq.H, hq.B), hs[k].H);
                if (!c) throw contract_error("cycle is not a cycle at the larger grade");
                for (int r = 0; r < m.rows; ++r)
                    for (int j = 0; j < m.cols; ++j) m(r, j) = (*c)(r, j);
            }
            if (e == EX) M.set_xmap(p, m);
            else M.set_ymap(p, m);
        }
    }
    return M;
}

Bifiltration random_bifiltration(int nverts, int nedges, int ntris, Window w, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> X(w.lo.x, w.hi.x), Y(w.lo.y, w.hi.y), bump(0, 1);
    auto lift = [&](Bigrade g) { return meet(Bigrade{g.x + bump(rng), g.y + bump(rng)}, w.hi); };
    Bifiltration bf;
    std::map<std::vector<int>, Bigrade> g;
    for (int v = 0; v < nverts; ++v) g[{v}] = {X(rng), Y(rng)};
    for (int t = 0; t < 4 * nedges && int(g.size()) < nverts + nedges; ++t) {
        int a = int(rng() % nverts), b = int(rng() % nverts);
        if (a == b) continue;
        std::vector<int> e{std::min(a, b), std::max(a, b)};
        if (!g.count(e)) g[e] = lift(join(g[{a}], g[{b}]));
    }
    int tris = 0;
    for (int t = 0; t < 8 * ntris && tris < ntris; ++t) {
        std::vector<int> s{int(rng() % nverts), int(rng() % nverts), int(rng() % nverts)};
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end() || g.count(s)) continue;
        std::vector<int> e0{s[0], s[1]}, e1{s[0], s[2]}, e2{s[1], s[2]};
        if (!g.count(e0) || !g.count(e1) || !g.count(e2)) continue;
        g[s] = lift(join(g[e0], join(g[e1], g[e2])));
        ++tris;
    }
    for (auto& [v, gr] : g) bf.simplices.push_back({v, gr});
    std::stable_sort(bf.simplices.begin(), bf.simplices.end(),
                     [](const Simplex& a, const Simplex& b) { return a.v.size() < b.v.size(); });
    return bf;
}

InputKind detect_input(const std::string& text) {
    for (const Line& l : lines_of(text)) {
        if (l.tok[0] == "gens") return InputKind::presentation;
        if (l.tok[0] == "window") return InputKind::module;
        if (l.tok[0] == "simplex") return InputKind::bifiltration;
    }
    throw syntax_error(1, "cannot tell the input format (no 'gens', 'window' or 'simplex' line)");
}

}  // namespace bgm
