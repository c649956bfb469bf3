#include <gmpxx.h>

#include <algorithm>
#include <numeric>

#include "stellate/errors.hpp"
#include "stellate/toric.hpp"

namespace stellate {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < r.vars(); ++i) r.e[static_cast<std::size_t>(i)] += b.e[static_cast<std::size_t>(i)];
    r.deg = a.deg + b.deg;
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    if (a.deg > b.deg) return false;
    for (int i = 0; i < a.vars(); ++i)
        if (a.e[static_cast<std::size_t>(i)] > b.e[static_cast<std::size_t>(i)]) return false;
    return true;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (int i = 0; i < r.vars(); ++i) r.e[static_cast<std::size_t>(i)] -= b.e[static_cast<std::size_t>(i)];
    r.deg = a.deg - b.deg;
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.deg = 0;
    for (int i = 0; i < r.vars(); ++i) {
        r.e[static_cast<std::size_t>(i)] = std::max(a.e[static_cast<std::size_t>(i)], b.e[static_cast<std::size_t>(i)]);
        r.deg += r.e[static_cast<std::size_t>(i)];
    }
    return r;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.deg = 0;
    for (int i = 0; i < r.vars(); ++i) {
        r.e[static_cast<std::size_t>(i)] = std::min(a.e[static_cast<std::size_t>(i)], b.e[static_cast<std::size_t>(i)]);
        r.deg += r.e[static_cast<std::size_t>(i)];
    }
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.vars(); ++i)
        if (a.e[static_cast<std::size_t>(i)] > 0 && b.e[static_cast<std::size_t>(i)] > 0) return false;
    return true;
}

bool mono_squarefree(const Monomial& a) {
    for (auto x : a.e)
        if (x > 1) return false;
    return true;
}

MonomialOrder MonomialOrder::grevlex(int m) {
    std::vector<int> p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 0);
    return MonomialOrder{std::move(p)};
}

MonomialOrder MonomialOrder::grevlex_cheapest(int m, int v) {
    std::vector<int> p;
    p.reserve(static_cast<std::size_t>(m));
    p.push_back(v);
    for (int i = 0; i < m; ++i)
        if (i != v) p.push_back(i);
    return MonomialOrder{std::move(p)};
}

MonomialOrder MonomialOrder::from_priority(std::vector<int> priority) {
    std::vector<bool> seen(priority.size(), false);
    for (int v : priority) {
        if (v < 0 || v >= static_cast<int>(priority.size()) || seen[static_cast<std::size_t>(v)])
            throw input_error("order priority must be a permutation of the variables");
        seen[static_cast<std::size_t>(v)] = true;
    }
    return MonomialOrder{std::move(priority)};
}

int MonomialOrder::cmp(const Monomial& u, const Monomial& v) const {
    if (u.deg != v.deg) return u.deg < v.deg ? -1 : 1;
    for (int var : priority) {
        int d = u.e[static_cast<std::size_t>(var)] - v.e[static_cast<std::size_t>(var)];
        // bigger exponent at a cheaper variable makes the monomial smaller
        if (d) return d > 0 ? -1 : 1;
    }
    return 0;
}

std::vector<std::vector<long long>> integer_kernel_basis(const std::vector<std::vector<long long>>& matrix) {
    const int rows = static_cast<int>(matrix.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(matrix[0].size());
    // column operations on A, mirrored on U; kernel = U-columns under zeroed A-columns
    std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(rows),
                                          std::vector<mpz_class>(static_cast<std::size_t>(cols)));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                static_cast<long>(matrix[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    std::vector<std::vector<mpz_class>> u(static_cast<std::size_t>(cols),
                                          std::vector<mpz_class>(static_cast<std::size_t>(cols), 0));
    for (int c = 0; c < cols; ++c) u[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)] = 1;

    std::vector<bool> pivot_col(static_cast<std::size_t>(cols), false);
    auto col_sub = [&](int dst, int src, const mpz_class& q) {
        if (q == 0) return;
        for (int r = 0; r < rows; ++r) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(dst)] -= q * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(src)];
        for (int r = 0; r < cols; ++r) u[static_cast<std::size_t>(r)][static_cast<std::size_t>(dst)] -= q * u[static_cast<std::size_t>(r)][static_cast<std::size_t>(src)];
    };

    for (int r = 0; r < rows; ++r) {
        // euclidean elimination across the active columns of row r
        while (true) {
            int best = -1;
            for (int c = 0; c < cols; ++c) {
                if (pivot_col[static_cast<std::size_t>(c)] || a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == 0) continue;
                if (best == -1 || cmp(abs(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]),
                                      abs(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(best)])) < 0)
                    best = c;
            }
            if (best == -1) break;
            bool done = true;
            mpz_class piv = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(best)];
            for (int c = 0; c < cols; ++c) {
                if (c == best || pivot_col[static_cast<std::size_t>(c)]) continue;
                const mpz_class& val = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                if (val == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), val.get_mpz_t(), piv.get_mpz_t());
                col_sub(c, best, q);
                if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) done = false;
            }
            if (done) {
                pivot_col[static_cast<std::size_t>(best)] = true;
                break;
            }
        }
    }

    std::vector<std::vector<long long>> kernel;
    for (int c = 0; c < cols; ++c) {
        if (pivot_col[static_cast<std::size_t>(c)]) continue;
        std::vector<long long> vec(static_cast<std::size_t>(cols));
        for (int r = 0; r < cols; ++r) {
            if (!u[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].fits_slong_p())
                throw budget_error("kernel basis entry exceeds 64 bits");
            vec[static_cast<std::size_t>(r)] = static_cast<long long>(u[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get_si());
        }
        kernel.push_back(std::move(vec));
    }
    return kernel;
}

std::vector<int> rho_sum(const StableSetIndex& idx, const Monomial& mono) {
    std::vector<int> rho(static_cast<std::size_t>(idx.graph.n()), 0);
    for (int i = 0; i < mono.vars(); ++i) {
        int c = mono.e[static_cast<std::size_t>(i)];
        if (!c) continue;
        for_each_bit(idx.sets[static_cast<std::size_t>(i)], [&](int v) { rho[static_cast<std::size_t>(v)] += c; });
    }
    return rho;
}

bool binomial_in_ideal(const StableSetIndex& idx, const Binomial& b) {
    if (b.lead == b.tail) return false;
    return b.lead.deg == b.tail.deg && rho_sum(idx, b.lead) == rho_sum(idx, b.tail);
}

} // namespace stellate
