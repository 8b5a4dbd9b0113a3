#include "msdual/quiverrep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

namespace msdual {

namespace {

std::vector<int> support_residues(const NilpotentRep& rep) {
    std::vector<int> rs;
    for (auto& [i, d] : rep.dim) rs.push_back(i);
    return rs;
}

IMat to_imat(const GFMat& m) {
    IMat r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i].assign(m[i].begin(), m[i].end());
    return r;
}

int integer_rank(const GFMat& m) {
    if (m.empty() || m[0].empty()) return 0;
    return bareiss_rank(to_imat(m));
}

} // namespace

long long RankTable::at(int i, int l) const {
    auto it = r_.find({i, l});
    return it == r_.end() ? 0 : it->second;
}

void RankTable::set(int i, int l, long long r) {
    if (r != 0) r_[{i, l}] = r;
}

std::optional<int> RankTable::compare(const RankTable& a, const RankTable& b) {
    bool le = true, ge = true; // a <= b, a >= b
    for (auto& [key, v] : a.r_) {
        long long w = b.at(key.first, key.second);
        if (v > w) le = false;
        if (v < w) ge = false;
    }
    for (auto& [key, w] : b.r_) {
        long long v = a.at(key.first, key.second);
        if (v > w) le = false;
        if (v < w) ge = false;
    }
    if (le && ge) return 0;
    if (le) return -1;
    if (ge) return 1;
    return std::nullopt;
}

std::vector<int> RankTable::residues() const {
    std::set<int> rs;
    for (auto& [key, v] : r_) rs.insert(key.first);
    return std::vector<int>(rs.begin(), rs.end());
}

RankTable RankTable::max(const RankTable& a, const RankTable& b) {
    RankTable m = a;
    for (auto& [key, v] : b.r_) {
        auto [it, fresh] = m.r_.emplace(key, v);
        if (!fresh) it->second = std::max(it->second, v);
    }
    return m;
}

NilpotentRep realize(const Multisegment& m, std::optional<Fq> field) {
    NilpotentRep rep{m.ring(), std::move(field), {}, {}};
    const VertexRing& ring = m.ring();
    DimVector deg = m.degree();
    for (auto& [i, d] : deg.entries()) rep.dim[i] = static_cast<int>(d);
    for (auto& [i, d] : rep.dim) {
        int prev = ring.add(i, -1);
        if (rep.dim.count(prev))
            rep.x[i] = GFMat(static_cast<std::size_t>(rep.dim[prev]),
                             std::vector<long long>(static_cast<std::size_t>(d), 0));
    }
    std::map<int, int> next_index;
    for (auto& [seg, mult] : m.terms()) {
        int head = head_of(ring, seg);
        for (long long copy = 0; copy < mult; ++copy) {
            int prev_idx = -1;
            for (int t = 0; t < seg.length; ++t) {
                int res = ring.add(head, -t);
                int idx = next_index[res]++;
                if (t > 0) {
                    // x maps the cell above (residue res+1) onto this one.
                    rep.x[ring.add(res, 1)][static_cast<std::size_t>(idx)]
                         [static_cast<std::size_t>(prev_idx)] = 1;
                }
                prev_idx = idx;
            }
        }
    }
    return rep;
}

RankTable rank_table(const NilpotentRep& rep) {
    const VertexRing& ring = rep.ring;
    RankTable table;
    long long total = rep.total_dim();
    for (int i : support_residues(rep)) {
        int di = rep.dim_at(i);
        table.set(i, 0, di);
        // Composite l steps down from V_i.
        GFMat cur = gf_identity(static_cast<std::size_t>(di));
        for (int l = 1; l <= total; ++l) {
            int src = ring.add(i, -(l - 1));
            int dst = ring.add(i, -l);
            auto it = rep.x.find(src);
            if (rep.dim_at(dst) == 0 || it == rep.x.end()) break;
            cur = rep.field ? gf_mul(*rep.field, it->second, cur) : [&] {
                IMat prod = imat_mul(to_imat(it->second), to_imat(cur));
                GFMat g(prod.size());
                for (std::size_t a = 0; a < prod.size(); ++a) {
                    g[a].resize(prod[a].size());
                    for (std::size_t b = 0; b < prod[a].size(); ++b) {
                        if (prod[a][b] > INT64_MAX || prod[a][b] < INT64_MIN)
                            throw ArithmeticOverflow("rank_table composite entry");
                        g[a][b] = static_cast<long long>(prod[a][b]);
                    }
                }
                return g;
            }();
            long long r = rep.field ? gf_rank(*rep.field, cur) : integer_rank(cur);
            if (r == 0) break;
            table.set(i, l, r);
        }
    }
    return table;
}

RankTable rank_table(const Multisegment& m) { return rank_table(realize(m)); }

Multisegment classify_table(const VertexRing& ring, const RankTable& t, long long total_dim) {
    Multisegment m(ring);
    std::vector<int> residues;
    if (ring.is_cyclic()) {
        for (int r = 0; r < ring.modulus(); ++r) residues.push_back(r);
    } else {
        residues = t.residues(); // heads sit where the table has cells
    }
    for (int i : residues)
        if (t.at(i, static_cast<int>(total_dim)) != 0)
            throw InvariantViolation("classify: representation is not nilpotent");
    long long placed = 0;
    for (int i : residues) {
        for (int l = 1; l <= total_dim; ++l) {
            long long mult = (t.at(i, l - 1) - t.at(ring.add(i, 1), l)) -
                             (t.at(i, l) - t.at(ring.add(i, 1), l + 1));
            if (mult < 0)
                throw InvariantViolation("classify: negative multiplicity at residue " +
                                         std::to_string(i) + ", length " + std::to_string(l));
            if (mult > 0) {
                m.add_head(l, i, mult);
                placed += mult * l;
            }
        }
    }
    if (placed != total_dim)
        throw InvariantViolation("classify: cell count mismatch (" + std::to_string(placed) +
                                 " placed of " + std::to_string(total_dim) + ")");
    return m;
}

Multisegment classify(const NilpotentRep& rep) {
    return classify_table(rep.ring, rank_table(rep), rep.total_dim());
}

long long hom_dim(const Multisegment& m1, const Multisegment& m2) {
    if (m1.ring() != m2.ring()) throw std::invalid_argument("hom_dim: ring mismatch");
    const VertexRing& ring = m1.ring();
    NilpotentRep r1 = realize(m1), r2 = realize(m2);

    // Unknowns phi_i in Hom(V1_i, V2_i), flattened per residue.
    std::map<int, long long> offset;
    long long unknowns = 0;
    std::set<int> residues;
    for (auto& [i, d] : r1.dim) residues.insert(i);
    for (auto& [i, d] : r2.dim) residues.insert(i);
    for (int i : residues) {
        offset[i] = unknowns;
        unknowns += static_cast<long long>(r1.dim_at(i)) * r2.dim_at(i);
    }
    if (unknowns == 0) return 0;

    auto var = [&](int i, int a, int b) {
        // phi_i[a][b], a < d2_i, b < d1_i.
        return offset[ring.normalize(i)] + static_cast<long long>(a) * r1.dim_at(i) + b;
    };

    IMat rows;
    auto x_of = [](const NilpotentRep& r, int i) -> const GFMat* {
        auto it = r.x.find(i);
        return it == r.x.end() ? nullptr : &it->second;
    };
    for (int i : residues) {
        int iN = ring.normalize(i);
        int prev = ring.add(iN, -1);
        int rows_cnt = r2.dim_at(prev);
        int cols_cnt = r1.dim_at(iN);
        if (rows_cnt == 0 || cols_cnt == 0) continue;
        const GFMat* x1 = x_of(r1, iN);
        const GFMat* x2 = x_of(r2, iN);
        for (int a = 0; a < rows_cnt; ++a)
            for (int b = 0; b < cols_cnt; ++b) {
                std::vector<int128> row(static_cast<std::size_t>(unknowns), 0);
                bool nonzero = false;
                if (x1)
                    for (int c = 0; c < r1.dim_at(prev); ++c)
                        if ((*x1)[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)] != 0) {
                            row[static_cast<std::size_t>(var(prev, a, c))] +=
                                (*x1)[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)];
                            nonzero = true;
                        }
                if (x2)
                    for (int c = 0; c < r2.dim_at(iN); ++c)
                        if ((*x2)[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] != 0) {
                            row[static_cast<std::size_t>(var(iN, c, b))] -=
                                (*x2)[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
                            nonzero = true;
                        }
                if (nonzero) rows.push_back(std::move(row));
            }
    }
    long long rank = rows.empty() ? 0 : bareiss_rank(std::move(rows));
    return unknowns - rank;
}

long long endo_dim(const Multisegment& m) { return hom_dim(m, m); }

long long orbit_dim(const Multisegment& m) {
    long long squares = 0;
    DimVector deg = m.degree();
    for (auto& [i, d] : deg.entries()) squares += d * d;
    return squares - endo_dim(m);
}

namespace {

// All subspaces of F_q^d of dimension e as RREF row bases.
std::vector<GFMat> subspaces(const Fq& F, int d, int e) {
    std::vector<GFMat> out;
    if (e == 0) {
        out.push_back(GFMat{});
        return out;
    }
    if (e > d) return out;
    std::vector<int> pivots(static_cast<std::size_t>(e));
    for (int t = 0; t < e; ++t) pivots[static_cast<std::size_t>(t)] = t;
    while (true) {
        // Free coordinates: (row r, col c) with c > pivots[r], c not a pivot.
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_pivot(static_cast<std::size_t>(d), false);
        for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
        for (int r = 0; r < e; ++r)
            for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < d; ++c)
                if (!is_pivot[static_cast<std::size_t>(c)]) free_pos.emplace_back(r, c);

        GFMat base(static_cast<std::size_t>(e), std::vector<long long>(static_cast<std::size_t>(d), 0));
        for (int r = 0; r < e; ++r) base[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;

        std::vector<long long> vals(free_pos.size(), 0);
        while (true) {
            GFMat mat = base;
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                mat[static_cast<std::size_t>(free_pos[t].first)]
                   [static_cast<std::size_t>(free_pos[t].second)] = vals[t];
            out.push_back(std::move(mat));
            std::size_t j = 0;
            while (j < vals.size() && ++vals[j] == F.q()) vals[j++] = 0;
            if (j == vals.size()) break;
        }

        // Next pivot combination.
        int r = e - 1;
        while (r >= 0 && pivots[static_cast<std::size_t>(r)] == d - e + r) --r;
        if (r < 0) break;
        ++pivots[static_cast<std::size_t>(r)];
        for (int t = r + 1; t < e; ++t)
            pivots[static_cast<std::size_t>(t)] = pivots[static_cast<std::size_t>(t - 1)] + 1;
    }
    return out;
}

double count_subspaces_estimate(long long q, int d, int e) {
    // Gaussian binomial [d choose e]_q, floating estimate for budgeting only.
    double r = 1;
    for (int t = 0; t < e; ++t)
        r *= (std::pow((double)q, d - t) - 1) / (std::pow((double)q, t + 1) - 1);
    return r;
}

std::vector<int> pivot_columns(const GFMat& rref) {
    std::vector<int> pivots;
    for (auto& row : rref) {
        for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c] != 0) {
                pivots.push_back(static_cast<int>(c));
                break;
            }
    }
    return pivots;
}

} // namespace

std::map<std::pair<Multisegment, Multisegment>, long long>
count_submodules_detailed(const Multisegment& big, const DimVector& sub_degree, long long q,
                          const SubmoduleCountOptions& opt) {
    const VertexRing& ring = big.ring();
    if (big.total_degree() > opt.total_dim_bound)
        throw ResourceLimitError("count_submodules: total dimension " +
                                 std::to_string(big.total_degree()) + " exceeds bound " +
                                 std::to_string(opt.total_dim_bound));
    Fq F = Fq::make(q);
    NilpotentRep rep = realize(big, F);

    std::vector<int> residues = support_residues(rep);
    std::vector<std::vector<GFMat>> choices;
    double budget = 1;
    for (int i : residues) {
        int d = rep.dim_at(i);
        long long e = sub_degree.at(i);
        if (e < 0 || e > d) return {};
        budget *= std::max(1.0, count_subspaces_estimate(q, d, static_cast<int>(e)));
        if (budget > opt.enumeration_budget)
            throw ResourceLimitError("count_submodules: subspace enumeration exceeds budget");
        choices.push_back(subspaces(F, d, static_cast<int>(e)));
    }
    for (auto& [i, d] : sub_degree.entries())
        if (rep.dim_at(i) < d) return {};

    std::map<int, std::size_t> pos; // residue -> index into residues
    for (std::size_t t = 0; t < residues.size(); ++t) pos[residues[t]] = t;

    std::vector<const GFMat*> chosen(residues.size(), nullptr);
    std::vector<std::vector<int>> chosen_pivots(residues.size());
    std::map<std::pair<Multisegment, Multisegment>, long long> counts;

    // x_i (T_i) must land in T_{i-1}; checked as soon as both ends are chosen.
    auto stable_edge = [&](int i) {
        int prev = ring.add(i, -1);
        auto it = rep.x.find(i);
        if (it == rep.x.end()) return true;
        auto itp = pos.find(prev);
        const GFMat& Ti = *chosen[pos[i]];
        const GFMat* Tp = itp == pos.end() ? nullptr : chosen[itp->second];
        if (itp != pos.end() && Tp == nullptr) return true; // not chosen yet
        const GFMat& xi = it->second;
        for (auto& row : Ti) {
            std::vector<long long> img(static_cast<std::size_t>(rep.dim_at(prev)), 0);
            for (std::size_t a = 0; a < img.size(); ++a)
                for (std::size_t b = 0; b < row.size(); ++b)
                    if (xi[a][b] != 0 && row[b] != 0)
                        img[a] = F.add(img[a], F.mul(xi[a][b], row[b]));
            if (Tp) {
                auto [residual, coords] = gf_reduce(F, *Tp, chosen_pivots[itp->second], img);
                for (long long v : residual)
                    if (v != 0) return false;
            } else {
                for (long long v : img)
                    if (v != 0) return false;
            }
        }
        return true;
    };

    std::function<void(std::size_t)> dfs = [&](std::size_t t) {
        if (t == residues.size()) {
            // Assemble subrep and quotient rep in the chosen bases.
            NilpotentRep sub{ring, F, {}, {}}, quot{ring, F, {}, {}};
            for (std::size_t s = 0; s < residues.size(); ++s) {
                int i = residues[s];
                int e = static_cast<int>(chosen[s]->size());
                int f = rep.dim_at(i) - e;
                if (e > 0) sub.dim[i] = e;
                if (f > 0) quot.dim[i] = f;
            }
            for (std::size_t s = 0; s < residues.size(); ++s) {
                int i = residues[s];
                int prev = ring.add(i, -1);
                auto it = rep.x.find(i);
                if (it == rep.x.end()) continue;
                auto itp = pos.find(prev);
                if (itp == pos.end()) continue;
                const GFMat& Ti = *chosen[s];
                const GFMat& Tp = *chosen[itp->second];
                const std::vector<int>& piv_p = chosen_pivots[itp->second];
                std::vector<int> comp_p;
                {
                    std::vector<bool> is_pivot(static_cast<std::size_t>(rep.dim_at(prev)), false);
                    for (int p : piv_p) is_pivot[static_cast<std::size_t>(p)] = true;
                    for (int c = 0; c < rep.dim_at(prev); ++c)
                        if (!is_pivot[static_cast<std::size_t>(c)]) comp_p.push_back(c);
                }
                std::vector<int> comp_i;
                {
                    std::vector<bool> is_pivot(static_cast<std::size_t>(rep.dim_at(i)), false);
                    for (int p : chosen_pivots[s]) is_pivot[static_cast<std::size_t>(p)] = true;
                    for (int c = 0; c < rep.dim_at(i); ++c)
                        if (!is_pivot[static_cast<std::size_t>(c)]) comp_i.push_back(c);
                }
                const GFMat& xi = it->second;
                if (!Ti.empty() && sub.dim.count(prev)) {
                    GFMat xs(static_cast<std::size_t>(Tp.size()),
                             std::vector<long long>(Ti.size(), 0));
                    for (std::size_t b = 0; b < Ti.size(); ++b) {
                        std::vector<long long> img(static_cast<std::size_t>(rep.dim_at(prev)), 0);
                        for (std::size_t a = 0; a < img.size(); ++a)
                            for (std::size_t c = 0; c < Ti[b].size(); ++c)
                                if (xi[a][c] != 0 && Ti[b][c] != 0)
                                    img[a] = F.add(img[a], F.mul(xi[a][c], Ti[b][c]));
                        auto [residual, coords] = gf_reduce(F, Tp, piv_p, img);
                        for (std::size_t a = 0; a < Tp.size(); ++a) xs[a][b] = coords[a];
                    }
                    sub.x[i] = std::move(xs);
                }
                if (!comp_i.empty() && quot.dim.count(prev)) {
                    GFMat xq(comp_p.size(), std::vector<long long>(comp_i.size(), 0));
                    for (std::size_t b = 0; b < comp_i.size(); ++b) {
                        std::vector<long long> img(static_cast<std::size_t>(rep.dim_at(prev)), 0);
                        for (std::size_t a = 0; a < img.size(); ++a)
                            img[a] = xi[a][static_cast<std::size_t>(comp_i[b])];
                        auto [residual, coords] = gf_reduce(F, Tp, piv_p, img);
                        for (std::size_t a = 0; a < comp_p.size(); ++a)
                            xq[a][b] = residual[static_cast<std::size_t>(comp_p[a])];
                    }
                    quot.x[i] = std::move(xq);
                }
            }
            counts[{classify(sub), classify(quot)}] += 1;
            return;
        }
        int i = residues[t];
        for (const GFMat& cand : choices[t]) {
            chosen[t] = &cand;
            chosen_pivots[t] = pivot_columns(cand);
            // Check the two incident edges whose endpoints are now both fixed.
            bool ok = stable_edge(i);
            if (ok) {
                int nxt = ring.add(i, 1);
                auto itn = pos.find(nxt);
                if (itn != pos.end() && chosen[itn->second] != nullptr && rep.x.count(nxt))
                    ok = stable_edge(nxt);
            }
            if (ok) dfs(t + 1);
            chosen[t] = nullptr;
        }
    };
    dfs(0);
    return counts;
}

long long count_submodules(const Multisegment& big, const Multisegment& sub,
                           const Multisegment& quot, long long q,
                           const SubmoduleCountOptions& opt) {
    DimVector expect = quot.degree();
    expect += sub.degree();
    if (!(expect == big.degree()))
        throw std::invalid_argument("count_submodules: degree(big) != degree(sub) + degree(quot)");
    auto counts = count_submodules_detailed(big, sub.degree(), q, opt);
    auto it = counts.find({sub, quot});
    return it == counts.end() ? 0 : it->second;
}

std::map<Multisegment, long long> count_submodules_by_type(const Multisegment& big,
                                                           const DimVector& sub_degree, long long q,
                                                           const SubmoduleCountOptions& opt) {
    std::map<Multisegment, long long> out;
    for (auto& [key, c] : count_submodules_detailed(big, sub_degree, q, opt))
        out[key.first] += c;
    return out;
}

long long count_automorphisms_brute(const Multisegment& m, long long q,
                                    double enumeration_budget) {
    if (m.empty()) return 1;
    Fq F = Fq::make(q);
    NilpotentRep rep = realize(m, F);
    const VertexRing& ring = rep.ring;
    std::vector<int> residues = support_residues(rep);

    std::map<int, long long> offset;
    long long unknowns = 0;
    for (int i : residues) {
        offset[i] = unknowns;
        unknowns += static_cast<long long>(rep.dim_at(i)) * rep.dim_at(i);
    }

    // phi_{i-1} x_i = x_i phi_i over F_q.
    GFMat rows;
    for (int i : residues) {
        auto it = rep.x.find(i);
        if (it == rep.x.end()) continue;
        const GFMat& xi = it->second;
        int prev = ring.add(i, -1);
        int dp = rep.dim_at(prev), di = rep.dim_at(i);
        for (int a = 0; a < dp; ++a)
            for (int b = 0; b < di; ++b) {
                std::vector<long long> row(static_cast<std::size_t>(unknowns), 0);
                for (int c = 0; c < dp; ++c)
                    row[static_cast<std::size_t>(offset[prev] + a * dp + c)] = F.add(
                        row[static_cast<std::size_t>(offset[prev] + a * dp + c)],
                        xi[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)]);
                for (int c = 0; c < di; ++c)
                    row[static_cast<std::size_t>(offset[i] + c * di + b)] = F.sub(
                        row[static_cast<std::size_t>(offset[i] + c * di + b)],
                        xi[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]);
                rows.push_back(std::move(row));
            }
    }
    std::vector<std::vector<long long>> basis =
        rows.empty() ? [&] {
            std::vector<std::vector<long long>> b;
            for (long long t = 0; t < unknowns; ++t) {
                std::vector<long long> v(static_cast<std::size_t>(unknowns), 0);
                v[static_cast<std::size_t>(t)] = 1;
                b.push_back(std::move(v));
            }
            return b;
        }()
                     : gf_nullspace(F, rows);
    std::size_t eps = basis.size();
    double total_d = std::pow(static_cast<double>(q), static_cast<double>(eps));
    if (total_d > enumeration_budget)
        throw ResourceLimitError("count_automorphisms_brute: q^eps exceeds budget");
    long long total = static_cast<long long>(total_d + 0.5);

    std::vector<long long> phi(static_cast<std::size_t>(unknowns), 0);
    std::vector<long long> digits(eps, 0);
    std::vector<std::pair<long long, int>> blocks; // (offset, block size)
    int max_d = 0;
    for (int i : residues) {
        blocks.emplace_back(offset[i], rep.dim_at(i));
        max_d = std::max(max_d, rep.dim_at(i));
    }
    std::vector<long long> scratch(static_cast<std::size_t>(max_d * max_d));
    // Full operation tables (q is small whenever q^eps fits the budget); the
    // odometer visits q^eps points, so the hot loop must be table lookups.
    std::vector<int> addt(static_cast<std::size_t>(q * q)), mult(static_cast<std::size_t>(q * q));
    std::vector<int> subt(static_cast<std::size_t>(q * q)), invt(static_cast<std::size_t>(q), 0);
    for (long long a = 0; a < q; ++a)
        for (long long b = 0; b < q; ++b) {
            addt[static_cast<std::size_t>(a * q + b)] = static_cast<int>(F.add(a, b));
            mult[static_cast<std::size_t>(a * q + b)] = static_cast<int>(F.mul(a, b));
            subt[static_cast<std::size_t>(a * q + b)] = static_cast<int>(F.sub(a, b));
        }
    for (long long a = 1; a < q; ++a) invt[static_cast<std::size_t>(a)] = static_cast<int>(F.inv(a));

    auto block_invertible = [&](long long off, int d) {
        long long* s = scratch.data();
        const long long* p = phi.data() + off;
        for (int t = 0; t < d * d; ++t) s[t] = p[t];
        for (int col = 0; col < d; ++col) {
            int pivot = -1;
            for (int row = col; row < d; ++row)
                if (s[row * d + col] != 0) {
                    pivot = row;
                    break;
                }
            if (pivot < 0) return false;
            if (pivot != col)
                for (int t = 0; t < d; ++t) std::swap(s[pivot * d + t], s[col * d + t]);
            long long inv = invt[static_cast<std::size_t>(s[col * d + col])];
            for (int row = col + 1; row < d; ++row) {
                long long factor = mult[static_cast<std::size_t>(s[row * d + col] * q + inv)];
                if (factor == 0) continue;
                for (int t = col; t < d; ++t)
                    s[row * d + t] = subt[static_cast<std::size_t>(
                        s[row * d + t] * q +
                        mult[static_cast<std::size_t>(factor * q + s[col * d + t])])];
            }
        }
        return true;
    };

    long long count = 0;
    for (long long step = 0; step < total; ++step) {
        bool ok = true;
        for (auto& [off, d] : blocks)
            if (!block_invertible(off, d)) {
                ok = false;
                break;
            }
        if (ok) ++count;
        // Base-q odometer; each unit increment of digit j adds basis[j].
        std::size_t j = 0;
        while (j < eps) {
            const long long* bj = basis[j].data();
            long long* ph = phi.data();
            for (std::size_t t = 0; t < phi.size(); ++t)
                ph[t] = addt[static_cast<std::size_t>(ph[t] * q + bj[t])];
            if (++digits[j] == q) {
                digits[j] = 0;
                ++j;
            } else {
                break;
            }
        }
    }
    return count;
}

bool closure_leq(const Multisegment& m1, const Multisegment& m2) {
    if (!(m1.degree() == m2.degree()))
        throw std::invalid_argument("closure_leq: degree vectors differ");
    auto c = RankTable::compare(rank_table(m1), rank_table(m2));
    return c.has_value() && *c <= 0;
}

Multisegment generic_commutant_dual(const Multisegment& m, unsigned long long seed,
                                    const GenericDualOptions& opt) {
    const VertexRing& ring = m.ring();
    if (ring.is_cyclic() && !m.is_aperiodic())
        throw NonAperiodicError("generic_commutant_dual needs an aperiodic multisegment");
    if (m.empty()) return m;

    NilpotentRep rep = realize(m);
    std::vector<int> residues = support_residues(rep);
    long long total = rep.total_dim();

    // Unknowns y_i : V_i -> V_{i+1}; constraint x_{i+1} y_i = y_{i-1} x_i.
    std::map<int, long long> offset;
    long long unknowns = 0;
    for (int i : residues) {
        int up = ring.add(i, 1);
        if (rep.dim_at(up) > 0) {
            offset[i] = unknowns;
            unknowns += static_cast<long long>(rep.dim_at(up)) * rep.dim_at(i);
        }
    }

    auto x_of = [&](int i) -> const GFMat* {
        auto it = rep.x.find(ring.normalize(i));
        return it == rep.x.end() ? nullptr : &it->second;
    };
    auto y_var = [&](int i, int a, int b) {
        // y_i[a][b], a < d_{i+1}, b < d_i.
        return offset.at(ring.normalize(i)) + static_cast<long long>(a) * rep.dim_at(i) + b;
    };

    RatMat rows;
    for (int i : residues) {
        int di = rep.dim_at(i);
        int up = ring.add(i, 1), down = ring.add(i, -1);
        bool has_up = offset.count(ring.normalize(i)) > 0;      // y_i exists
        bool has_down = offset.count(ring.normalize(down)) > 0; // y_{i-1} exists
        if (!has_up && !has_down) continue;
        const GFMat* xup = x_of(up);  // x_{i+1} : V_{i+1} -> V_i
        const GFMat* xin = x_of(i);   // x_i : V_i -> V_{i-1}
        for (int a = 0; a < di; ++a)
            for (int b = 0; b < di; ++b) {
                std::vector<Rat> row(static_cast<std::size_t>(unknowns), Rat(0));
                bool nonzero = false;
                if (has_up && xup)
                    for (int c = 0; c < rep.dim_at(up); ++c)
                        if ((*xup)[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] != 0) {
                            row[static_cast<std::size_t>(y_var(i, c, b))] =
                                row[static_cast<std::size_t>(y_var(i, c, b))] +
                                Rat((*xup)[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]);
                            nonzero = true;
                        }
                if (has_down && xin)
                    for (int c = 0; c < rep.dim_at(down); ++c)
                        if ((*xin)[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)] != 0) {
                            row[static_cast<std::size_t>(y_var(down, a, c))] =
                                row[static_cast<std::size_t>(y_var(down, a, c))] -
                                Rat((*xin)[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)]);
                            nonzero = true;
                        }
                if (nonzero) rows.push_back(std::move(row));
            }
    }
    std::vector<std::vector<long long>> basis;
    if (unknowns > 0) {
        if (rows.empty()) {
            for (long long t = 0; t < unknowns; ++t) {
                std::vector<long long> v(static_cast<std::size_t>(unknowns), 0);
                v[static_cast<std::size_t>(t)] = 1;
                basis.push_back(std::move(v));
            }
        } else {
            basis = rat_nullspace_integer(rows);
        }
    }

    std::mt19937_64 rng(seed);
    // Nonzero coefficients: a vanishing coordinate parks the sample on a
    // coordinate hyperplane of the commutant, which is a fat non-generic
    // stratum (a composite through that basis direction drops rank).
    std::uniform_int_distribution<int> coeff(1, opt.coefficient_bound);
    auto draw_coeff = [&]() { return (rng() & 1) ? coeff(rng) : -coeff(rng); };

    auto draw_y = [&]() {
        std::map<int, IMat> y;
        for (auto& [i, off] : offset)
            y[i] = IMat(static_cast<std::size_t>(rep.dim_at(ring.add(i, 1))),
                        std::vector<int128>(static_cast<std::size_t>(rep.dim_at(i)), 0));
        std::vector<long long> cs(basis.size());
        for (auto& c : cs) c = draw_coeff();
        for (std::size_t k = 0; k < basis.size(); ++k) {
            for (auto& [i, off] : offset) {
                IMat& yi = y[i];
                for (std::size_t a = 0; a < yi.size(); ++a)
                    for (std::size_t b = 0; b < yi[a].size(); ++b)
                        yi[a][b] += cs[k] * basis[k][static_cast<std::size_t>(
                                                off + static_cast<long long>(a) * rep.dim_at(i) +
                                                static_cast<long long>(b))];
            }
        }
        return y;
    };

    auto y_at = [&](const std::map<int, IMat>& y, int i) -> const IMat* {
        auto it = y.find(ring.normalize(i));
        return it == y.end() ? nullptr : &it->second;
    };

    // y is a degree +1 operator; nilpotency means the total-dim-fold composite
    // from every residue vanishes.
    auto nilpotent = [&](const std::map<int, IMat>& y) {
        for (int i : residues) {
            IMat cur;
            int d = rep.dim_at(i);
            cur.assign(static_cast<std::size_t>(d), std::vector<int128>(static_cast<std::size_t>(d), 0));
            for (int t = 0; t < d; ++t) cur[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] = 1;
            bool vanished = false;
            for (int l = 0; l < total; ++l) {
                const IMat* yl = y_at(y, ring.add(i, l));
                if (!yl || rep.dim_at(ring.add(i, l + 1)) == 0) {
                    vanished = true;
                    break;
                }
                cur = imat_mul(*yl, cur);
                bool zero = true;
                for (auto& r : cur)
                    for (auto& v : r)
                        if (v != 0) zero = false;
                if (zero) {
                    vanished = true;
                    break;
                }
            }
            if (!vanished) return false;
        }
        return true;
    };

    // Transpose: x'_j = t(y_{j-1}) : V_j -> V_{j-1}.
    auto transpose_table = [&](const std::map<int, IMat>& y) {
        RankTable table;
        for (int i : residues) {
            int di = rep.dim_at(i);
            table.set(i, 0, di);
            IMat cur(static_cast<std::size_t>(di), std::vector<int128>(static_cast<std::size_t>(di), 0));
            for (int t = 0; t < di; ++t) cur[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] = 1;
            for (int l = 1; l <= total; ++l) {
                int src = ring.add(i, -(l - 1));
                const IMat* y_src = y_at(y, ring.add(src, -1));
                if (!y_src || rep.dim_at(ring.add(src, -1)) == 0) break;
                // t(y_{src-1}) has shape d_{src-1} x d_src.
                IMat t(static_cast<std::size_t>(rep.dim_at(ring.add(src, -1))),
                       std::vector<int128>(static_cast<std::size_t>(rep.dim_at(src)), 0));
                for (std::size_t a = 0; a < y_src->size(); ++a)
                    for (std::size_t b = 0; b < (*y_src)[a].size(); ++b)
                        t[b][a] = (*y_src)[a][b];
                cur = imat_mul(t, cur);
                long long r = bareiss_rank(cur);
                if (r == 0) break;
                table.set(i, l, r);
            }
        }
        return table;
    };

    // Sample in batches until the pointwise-maximal rank table is attained by
    // a quorum; a batch that never stabilizes is reported, never guessed.
    for (int batch = 0; batch < opt.batch_retries; ++batch) {
        std::vector<RankTable> tables;
        for (int s = 0; s < opt.samples; ++s) {
            bool got = false;
            for (int attempt = 0; attempt < opt.nilpotency_retries; ++attempt) {
                auto y = draw_y();
                if (!nilpotent(y)) continue;
                tables.push_back(transpose_table(y));
                got = true;
                break;
            }
            if (!got)
                throw GenericityNotReached("no nilpotent commutant sample for " + m.to_string());
        }
        RankTable best = tables[0];
        for (auto& t : tables) best = RankTable::max(best, t);
        int attained = 0;
        for (auto& t : tables)
            if (t == best) ++attained;
        if (attained >= opt.stability_quorum) return classify_table(ring, best, total);
    }
    throw GenericityNotReached("samples never stabilized on a maximal rank table for " +
                               m.to_string());
}

std::string NilpotentRep::to_json_string() const {
    nlohmann::json j;
    j["ring"] = ring.to_string();
    j["field"] = field ? nlohmann::json(field->q()) : nlohmann::json("Q");
    j["dim"] = nlohmann::json::object();
    for (auto& [i, d] : dim) j["dim"][std::to_string(i)] = d;
    j["x"] = nlohmann::json::object();
    for (auto& [i, mat] : x) {
        nlohmann::json rows = nlohmann::json::array();
        for (auto& row : mat) {
            nlohmann::json r = nlohmann::json::array();
            for (long long v : row) {
                if (field)
                    r.push_back(v);
                else
                    r.push_back(nlohmann::json::array({v, 1}));
            }
            rows.push_back(std::move(r));
        }
        j["x"][std::to_string(i)] = std::move(rows);
    }
    return j.dump(2);
}

NilpotentRep NilpotentRep::from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    NilpotentRep rep{VertexRing::parse(j.at("ring").get<std::string>()), std::nullopt, {}, {}};
    if (!j.at("field").is_string()) rep.field = Fq::make(j.at("field").get<long long>());
    for (auto& [key, val] : j.at("dim").items())
        rep.dim[rep.ring.normalize(std::stoll(key))] = val.get<int>();
    for (auto& [key, val] : j.at("x").items()) {
        int i = rep.ring.normalize(std::stoll(key));
        GFMat mat;
        std::vector<long long> dens;
        for (auto& row : val) {
            std::vector<long long> r;
            for (auto& cell : row) {
                if (cell.is_array()) {
                    long long num = cell.at(0).get<long long>();
                    long long den = cell.at(1).get<long long>();
                    if (den == 0) throw SyntaxError(0, "matrix entry with zero denominator");
                    // Rational entries are admitted for the exact field; the
                    // arrow is rescaled by the common denominator, which moves
                    // neither ranks nor the isomorphism type.
                    dens.push_back(den);
                    r.push_back(num); // provisional; fixed up below
                } else {
                    dens.push_back(1);
                    r.push_back(cell.get<long long>());
                }
            }
            mat.push_back(std::move(r));
        }
        if (rep.field) {
            for (auto& row : mat)
                for (auto& v : row) v = rep.field->from_int(v);
        } else {
            long long lcm = 1;
            for (long long d : dens) lcm = std::lcm(lcm, d < 0 ? -d : d);
            std::size_t t = 0;
            for (auto& row : mat)
                for (auto& v : row) {
                    long long den = dens[t++];
                    v = v * (lcm / den);
                }
        }
        rep.x[i] = std::move(mat);
    }
    return rep;
}

} // namespace msdual
