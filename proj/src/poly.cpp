#include "bgm/poly.hpp"

#include <sstream>

namespace bgm::poly {

int deg(const Poly& f) { return int(f.size()) - 1; }

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly monic(const Field& F, Poly f) {
    trim(f);
    if (f.empty()) return f;
    elem iv = F.inv(f.back());
    for (auto& c : f) c = F.mul(c, iv);
    return f;
}

Poly add(const Field& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
    trim(r);
    return r;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
    trim(r);
    return r;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

void divmod(const Field& F, const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.empty()) throw contract_error("polynomial division by zero");
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    elem ib = F.inv(b.back());
    while (r.size() >= b.size() && !r.empty()) {
        std::size_t s = r.size() - b.size();
        elem c = F.mul(r.back(), ib);
        q[s] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[s + j] = F.sub(r[s + j], F.mul(c, b[j]));
        trim(r);
    }
    trim(q);
}

Poly mod(const Field& F, const Poly& a, const Poly& m) {
    Poly q, r;
    divmod(F, a, m, q, r);
    return r;
}

Poly div(const Field& F, const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(F, a, b, q, r);
    return q;
}

Poly gcd(const Field& F, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

Poly derivative(const Field& F, const Poly& f) {
    Poly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(F.mul(F.from_int((long long)(i % F.p)), f[i]));
    trim(d);
    return d;
}

Poly powmod(const Field& F, Poly b, std::uint64_t e, const Poly& m) {
    Poly r{1};
    r = mod(F, r, m);
    b = mod(F, b, m);
    while (e) {
        if (e & 1) r = mod(F, mul(F, r, b), m);
        e >>= 1;
        if (e) b = mod(F, mul(F, b, b), m);
    }
    return r;
}

Poly x() { return Poly{0, 1}; }

namespace {

// t^(p^k) mod f
Poly frobenius_power(const Field& F, const Poly& f, int k) {
    Poly h = mod(F, x(), f);
    for (int i = 0; i < k; ++i) h = powmod(F, h, F.p, f);
    return h;
}

}  // namespace

bool is_irreducible(const Field& F, const Poly& f0) {
    Poly f = monic(F, f0);
    int n = deg(f);
    if (n < 1) return false;
    if (n == 1) return true;
    // Rabin: t^(p^n) = t mod f and gcd(t^(p^(n/q)) - t, f) = 1 for prime q | n
    if (!(frobenius_power(F, f, n) == mod(F, x(), f))) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q) continue;
        bool prime = true;
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) prime = false;
        if (!prime) continue;
        Poly g = gcd(F, sub(F, frobenius_power(F, f, n / q), x()), f);
        if (deg(g) > 0) return false;
    }
    return true;
}

Poly squarefree_part(const Field& F, const Poly& f0) {
    Poly f = monic(F, f0);
    if (deg(f) < 1) return f;
    Poly d = derivative(F, f);
    if (d.empty()) throw contract_error("squarefree part needs characteristic above the degree");
    return monic(F, div(F, f, gcd(F, f, d)));
}

Poly split_squarefree(const Field& F, const Poly& f0, std::mt19937_64& rng) {
    Poly f = monic(F, f0);
    int n = deg(f);
    if (n <= 1) return {};
    Poly h = mod(F, x(), f);
    for (int d = 1; 2 * d <= n || d == 1; ++d) {
        h = powmod(F, h, F.p, f);
        Poly g = gcd(F, sub(F, h, x()), f);
        if (deg(g) == 0) continue;
        if (deg(g) < n) return g;
        // every irreducible factor has degree d
        if (n == d) return {};
        if (F.p == 2) throw contract_error("equal-degree splitting needs an odd characteristic");
        std::uniform_int_distribution<elem> c(0, F.p - 1);
        std::uint64_t pd = 1;
        for (int i = 0; i < d; ++i) pd *= F.p;
        for (int attempt = 0; attempt < 200; ++attempt) {
            Poly a(n, 0);
            for (auto& v : a) v = c(rng);
            trim(a);
            if (deg(a) < 1) continue;
            Poly g1 = gcd(F, a, f);
            if (deg(g1) > 0 && deg(g1) < n) return g1;
            Poly b = sub(F, powmod(F, a, (pd - 1) / 2, f), Poly{1});
            Poly g2 = gcd(F, b, f);
            if (deg(g2) > 0 && deg(g2) < n) return g2;
        }
        throw contract_error("equal-degree splitting did not converge");
    }
    return {};
}

Mat evaluate(const Field& F, const Poly& f, const Mat& m) {
    Mat r(m.rows, m.cols);
    for (int k = int(f.size()) - 1; k >= 0; --k) {
        r = mul(F, r, m);
        for (int i = 0; i < m.rows; ++i) r(i, i) = F.add(r(i, i), f[k]);
    }
    return r;
}

Poly minimal_polynomial(const Field& F, const Mat& m) {
    int n = m.rows;
    if (n == 0) return Poly{1};
    // find the first power that depends linearly on the earlier ones
    Mat powers(n * n, 0);
    Mat cur = Mat::identity(n);
    for (int k = 0; k <= n; ++k) {
        Mat v(n * n, 1);
        v.a = cur.a;
        auto sol = solve_membership(F, powers, v);
        if (sol) {
            Poly f(k + 1, 0);
            f[k] = 1;
            for (int i = 0; i < k; ++i) f[i] = F.neg((*sol)(i, 0));
            return f;
        }
        powers = hcat(powers, v);
        cur = mul(F, cur, m);
    }
    throw contract_error("minimal polynomial search overflowed");
}

std::string to_string(const Field& F, const Poly& f) {
    (void)F;
    std::ostringstream os;
    bool first = true;
    for (int k = deg(f); k >= 0; --k) {
        if (!f[k]) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0 || f[k] != 1) os << f[k];
        if (k >= 1) os << "t";
        if (k >= 2) os << "^" << k;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace bgm::poly
