#include "msdual/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace msdual {

IMat imat_mul(const IMat& a, const IMat& b) {
    std::size_t rows = a.size();
    std::size_t inner = b.size();
    std::size_t cols = inner ? b[0].size() : 0;
    IMat r(rows, std::vector<int128>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                r[i][j] = checked_add(r[i][j], checked_mul(a[i][k], b[k][j]));
        }
    return r;
}

int bareiss_rank(IMat m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    int128 prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                int128 t = checked_mul(m[r][c], m[i][j]) - checked_mul(m[i][c], m[r][j]);
                m[i][j] = t / prev; // exact division in fraction-free elimination
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

namespace {

long long checked_ll(int128 v, const char* what) {
    if (v > static_cast<int128>(INT64_MAX) || v < static_cast<int128>(INT64_MIN))
        throw ArithmeticOverflow(std::string(what) + ": value exceeds 64 bits");
    return static_cast<long long>(v);
}

int128 gcd128(int128 a, int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace

Rat::Rat(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rat operator+(const Rat& a, const Rat& b) {
    int128 n = checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den));
    int128 d = checked_mul(a.den, b.den);
    int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rat(checked_ll(n, "rational add"), checked_ll(d, "rational add"));
}

Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num, b.den); }

Rat operator*(const Rat& a, const Rat& b) {
    int128 n = checked_mul(a.num, b.num);
    int128 d = checked_mul(a.den, b.den);
    int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rat(checked_ll(n, "rational mul"), checked_ll(d, "rational mul"));
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::invalid_argument("rational division by zero");
    return a * Rat(b.den, b.num);
}

std::string Rat::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::vector<int> rat_rref(RatMat& m) {
    std::vector<int> pivots;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rat s = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] / s;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    return pivots;
}

std::vector<std::vector<long long>> rat_nullspace_integer(const RatMat& m0) {
    RatMat m = m0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<int> pivots = rat_rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<long long>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols);
        v[free] = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -m[r][free];
        long long lcm = 1;
        for (auto& x : v) lcm = checked_ll(checked_mul(lcm / std::gcd(lcm, x.den), x.den),
                                           "nullspace lcm");
        std::vector<long long> iv(cols);
        long long content = 0;
        for (std::size_t j = 0; j < cols; ++j) {
            iv[j] = checked_ll(checked_mul(v[j].num, lcm / v[j].den), "nullspace scale");
            content = std::gcd(content, iv[j] < 0 ? -iv[j] : iv[j]);
        }
        if (content > 1)
            for (auto& x : iv) x /= content;
        basis.push_back(std::move(iv));
    }
    return basis;
}

std::vector<Rat> lagrange_interpolate(const std::vector<long long>& xs,
                                      const std::vector<long long>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolation size mismatch");
    std::size_t n = xs.size();
    std::vector<Rat> result(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        // Basis polynomial prod_{j != i} (x - x_j)/(x_i - x_j), accumulated as
        // coefficients low degree first.
        std::vector<Rat> basis{Rat(1)};
        Rat denom(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (std::size_t t = 0; t < basis.size(); ++t) {
                next[t + 1] = next[t + 1] + basis[t];
                next[t] = next[t] - basis[t] * Rat(xs[j]);
            }
            basis = std::move(next);
            denom = denom * Rat(xs[i] - xs[j]);
        }
        Rat scale = Rat(ys[i]) / denom;
        for (std::size_t t = 0; t < basis.size(); ++t)
            result[t] = result[t] + basis[t] * scale;
    }
    while (result.size() > 1 && result.back().is_zero()) result.pop_back();
    return result;
}

} // namespace msdual
