#include "msdual/gf.hpp"

#include <algorithm>
#include <numeric>

namespace msdual {

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over F_p as coefficient vectors, low degree first.
using Poly = std::vector<int>;

Poly poly_mod(Poly a, const Poly& m, long long p) {
    while (a.size() >= m.size()) {
        long long lead = a.back() % p;
        if (lead != 0) {
            std::size_t shift = a.size() - m.size();
            for (std::size_t t = 0; t < m.size(); ++t) {
                long long v = (a[shift + t] - lead * m[t]) % p;
                a[shift + t] = static_cast<int>(v < 0 ? v + p : v);
            }
        }
        a.pop_back();
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, long long p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<int>((r[i + j] + 1LL * a[i] * b[j]) % p);
    return r;
}

Poly decode(long long code, long long p, int len) {
    Poly c(static_cast<std::size_t>(len), 0);
    for (int t = 0; t < len; ++t) {
        c[t] = static_cast<int>(code % p);
        code /= p;
    }
    return c;
}

long long encode(const Poly& c, long long p) {
    long long v = 0;
    for (std::size_t t = c.size(); t-- > 0;) v = v * p + c[t];
    return v;
}

bool divides(const Poly& d, Poly a, long long p) {
    a = poly_mod(std::move(a), d, p);
    return std::all_of(a.begin(), a.end(), [](int c) { return c == 0; });
}

// Monic irreducible of degree k over F_p found by trial division against all
// monic polynomials of degree <= k/2.
Poly find_irreducible(long long p, int k) {
    for (long long code = 0; code < [&] {
             long long t = 1;
             for (int i = 0; i < k; ++i) t *= p;
             return t;
         }(); ++code) {
        Poly cand = decode(code, p, k);
        cand.push_back(1); // monic of degree k
        bool irred = true;
        for (int d = 1; irred && 2 * d <= k; ++d) {
            long long count = 1;
            for (int i = 0; i < d; ++i) count *= p;
            for (long long fc = 0; fc < count; ++fc) {
                Poly f = decode(fc, p, d);
                f.push_back(1);
                if (divides(f, cand, p)) {
                    irred = false;
                    break;
                }
            }
        }
        if (irred) return cand;
    }
    throw InvariantViolation("no irreducible polynomial found");
}

long long mod_pow(long long base, long long e, long long p) {
    long long r = 1 % p;
    base %= p;
    while (e > 0) {
        if (e & 1) r = static_cast<long long>((__int128)r * base % p);
        base = static_cast<long long>((__int128)base * base % p);
        e >>= 1;
    }
    return r;
}

} // namespace

Fq Fq::make(long long q) {
    if (q < 2) throw std::invalid_argument("field size must be >= 2");
    long long p = 0;
    int k = 0;
    for (long long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            long long rest = q;
            while (rest % d == 0) {
                rest /= d;
                ++k;
            }
            if (rest != 1) throw std::invalid_argument("field size must be a prime power");
            break;
        }
    }
    if (p == 0) {
        p = q;
        k = 1;
    }
    if (!is_prime(p)) throw std::invalid_argument("field size must be a prime power");
    Fq f(q, p, k);
    if (k > 1) {
        if (q > 64)
            throw ResourceLimitError("tabled extension fields limited to q <= 64");
        f.build_tables();
    }
    return f;
}

void Fq::build_tables() {
    Poly irr = find_irreducible(p_, k_);
    add_table_.assign(static_cast<std::size_t>(q_ * q_), 0);
    mul_table_.assign(static_cast<std::size_t>(q_ * q_), 0);
    inv_table_.assign(static_cast<std::size_t>(q_), 0);
    for (long long a = 0; a < q_; ++a) {
        Poly pa = decode(a, p_, k_);
        for (long long b = 0; b < q_; ++b) {
            Poly pb = decode(b, p_, k_);
            Poly sum(static_cast<std::size_t>(k_), 0);
            for (int t = 0; t < k_; ++t) sum[t] = static_cast<int>((pa[t] + pb[t]) % p_);
            add_table_[a * q_ + b] = static_cast<int>(encode(sum, p_));
            Poly prod = poly_mod(poly_mul(pa, pb, p_), irr, p_);
            prod.resize(static_cast<std::size_t>(k_), 0);
            mul_table_[a * q_ + b] = static_cast<int>(encode(prod, p_));
        }
    }
    for (long long a = 1; a < q_; ++a)
        for (long long b = 1; b < q_; ++b)
            if (mul_table_[a * q_ + b] == 1) inv_table_[a] = static_cast<int>(b);
}

long long Fq::add(long long a, long long b) const {
    if (k_ == 1) {
        long long r = a + b;
        return r >= p_ ? r - p_ : r;
    }
    return add_table_[a * q_ + b];
}

long long Fq::neg(long long a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    // Digitwise negation mod p.
    long long r = 0, mult = 1;
    for (int t = 0; t < k_; ++t) {
        long long d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

long long Fq::mul(long long a, long long b) const {
    if (k_ == 1) return static_cast<long long>((__int128)a * b % p_);
    return mul_table_[a * q_ + b];
}

long long Fq::inv(long long a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    if (k_ == 1) return mod_pow(a, p_ - 2, p_);
    return inv_table_[a];
}

GFMat gf_identity(std::size_t n) {
    GFMat m(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

GFMat gf_mul(const Fq& F, const GFMat& a, const GFMat& b) {
    std::size_t rows = a.size();
    std::size_t inner = b.size();
    std::size_t cols = inner ? b[0].size() : 0;
    GFMat r(rows, std::vector<long long>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                r[i][j] = F.add(r[i][j], F.mul(a[i][k], b[k][j]));
        }
    return r;
}

std::vector<int> gf_rref(const Fq& F, GFMat& m) {
    std::vector<int> pivots;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        long long s = F.inv(m[r][c]);
        for (std::size_t j = c; j < cols; ++j) m[r][j] = F.mul(m[r][j], s);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            long long f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r); // drop zero rows
    return pivots;
}

int gf_rank(const Fq& F, GFMat m) { return static_cast<int>(gf_rref(F, m).size()); }

std::vector<std::vector<long long>> gf_nullspace(const Fq& F, GFMat m) {
    std::size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<int> pivots = gf_rref(F, m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<long long>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<long long> v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = F.neg(m[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::pair<std::vector<long long>, std::vector<long long>>
gf_reduce(const Fq& F, const GFMat& rref, const std::vector<int>& pivots,
          std::vector<long long> vec) {
    std::vector<long long> coords(rref.size(), 0);
    for (std::size_t r = 0; r < rref.size(); ++r) {
        long long c = vec[static_cast<std::size_t>(pivots[r])];
        if (c == 0) continue;
        coords[r] = c;
        for (std::size_t j = 0; j < vec.size(); ++j)
            vec[j] = F.sub(vec[j], F.mul(c, rref[r][j]));
    }
    return {std::move(vec), std::move(coords)};
}

} // namespace msdual
