#include "msdual/crystal.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace msdual {

std::vector<long long> string_sums(const Multisegment& m, int i) {
    const VertexRing& ring = m.ring();
    int iN = ring.normalize(i);
    int im1 = ring.add(iN, -1);
    int L = m.max_length();
    // A[l] = m_{(l; i-1]}, B[l] = m_{(l; i]} for 1 <= l <= L.
    std::vector<long long> A(L + 2, 0), B(L + 2, 0);
    for (auto& [seg, k] : m.terms()) {
        int h = head_of(ring, seg);
        if (h == im1) A[seg.length] += k;
        if (h == iN) B[seg.length] += k;
    }
    std::vector<long long> S(L + 1, 0); // S[k-1] = S_{k,i}, k = 1..L+1
    long long tail = 0;
    for (int k = L; k >= 1; --k) {
        tail += A[k] - B[k];
        S[k - 1] = tail;
    }
    S[L] = 0;
    return S;
}

Multisegment f_tilde(const Multisegment& m, int i) {
    const VertexRing& ring = m.ring();
    int iN = ring.normalize(i);
    std::vector<long long> S = string_sums(m, iN);
    int k0 = 1;
    for (int k = 2; k <= static_cast<int>(S.size()); ++k)
        if (S[k - 1] < S[k0 - 1]) k0 = k;
    Multisegment r = m;
    if (k0 == 1) {
        r.add_head(1, iN);
    } else {
        if (m.mult_head(k0 - 1, ring.add(iN, -1)) < 1)
            throw InvariantViolation("f_tilde: replaced segment missing at k0 = " +
                                     std::to_string(k0));
        r.add_head(k0 - 1, ring.add(iN, -1), -1);
        r.add_head(k0, iN);
    }
    return r;
}

std::optional<Multisegment> e_tilde(const Multisegment& m, int i) {
    const VertexRing& ring = m.ring();
    int iN = ring.normalize(i);
    std::optional<Multisegment> found;
    for (auto& [seg, k] : m.terms()) {
        if (head_of(ring, seg) != iN) continue;
        int l = seg.length;
        Multisegment cand = m;
        cand.add_head(l, iN, -1);
        if (l > 1) cand.add_head(l - 1, ring.add(iN, -1));
        if (f_tilde(cand, iN) == m) {
            if (found)
                throw InvariantViolation("e_tilde: two distinct preimages at residue " +
                                         std::to_string(iN));
            found = std::move(cand);
        }
    }
    return found;
}

int epsilon(const Multisegment& m, int i) {
    int count = 0;
    Multisegment cur = m;
    while (auto prev = e_tilde(cur, i)) {
        cur = std::move(*prev);
        ++count;
    }
    return count;
}

std::pair<long long, int> residue_order_key(const VertexRing& ring, int i) {
    if (ring.is_cyclic()) return {ring.normalize(i), 0};
    long long a = i < 0 ? -static_cast<long long>(i) : i;
    return {a, i < 0 ? 1 : 0};
}

HighestWeightPath highest_weight_path(
    const Multisegment& m, const std::function<int(const std::vector<int>&)>& chooser) {
    HighestWeightPath path{{}, m};
    while (true) {
        // Residues where e_tilde can apply are heads present in the vertex.
        std::vector<int> defined;
        for (int h : path.top.heads())
            if (e_tilde(path.top, h)) defined.push_back(h);
        if (defined.empty()) break;
        int pick;
        if (chooser) {
            pick = chooser(defined);
        } else {
            pick = *std::min_element(defined.begin(), defined.end(), [&](int a, int b) {
                return residue_order_key(m.ring(), a) < residue_order_key(m.ring(), b);
            });
        }
        path.top = *e_tilde(path.top, pick);
        path.word.push_back(pick);
    }
    return path;
}

Multisegment embed_phi(const Multisegment& m, int i) {
    const VertexRing& ring = m.ring();
    if (!ring.is_cyclic())
        throw std::invalid_argument("embed_phi expects a cyclic-ring multisegment");
    int n = ring.modulus();
    int iN = ring.normalize(i);
    VertexRing z = VertexRing::integers();
    // j_r = r for r in {0,...,n-1} when i != 0; the residue n-1 is shifted to
    // -1 when i = 0 so that j_{i-1} = i-1 still holds.
    auto j = [&](int r) -> int { return (iN == 0 && r == n - 1) ? -1 : r; };
    Multisegment out(z);
    for (auto& [seg, k] : m.terms())
        out.add_head(seg.length, j(head_of(ring, seg)), k);
    return out;
}

int max_degree_guard(int fallback) {
    if (const char* env = std::getenv("MSDUAL_MAX_DEGREE")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (const std::exception&) {
            // Unparsable override is ignored.
        }
    }
    return fallback;
}

namespace {

// Periodic multisegments of total degree <= max_degree: multiplicity of each
// length is the same at every residue, so they are indexed by partitions
// weighted by n.
void periodic_seeds(const VertexRing& ring, int max_degree, std::vector<Multisegment>& out) {
    int n = ring.modulus();
    std::vector<std::pair<int, long long>> stack; // (length, copies per residue)
    std::function<void(int, long long)> rec = [&](int min_len, long long budget) {
        Multisegment m(ring);
        for (auto& [len, c] : stack)
            for (int r = 0; r < n; ++r) m.add_head(len, r, c);
        out.push_back(std::move(m));
        for (int len = min_len; static_cast<long long>(len) * n <= budget; ++len) {
            for (long long c = 1; c * len * n <= budget; ++c) {
                stack.emplace_back(len, c);
                rec(len + 1, budget - c * len * n);
                stack.pop_back();
            }
        }
    };
    rec(1, max_degree);
}

} // namespace

CrystalGraph crystal_graph(const VertexRing& ring, int max_degree,
                           const CrystalGraphOptions& opt) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
    int guard = max_degree_guard(9);
    if (max_degree > guard)
        throw ResourceLimitError("crystal graph degree " + std::to_string(max_degree) +
                                 " exceeds guard " + std::to_string(guard) +
                                 " (set MSDUAL_MAX_DEGREE to lift)");

    std::vector<int> residues;
    if (ring.is_cyclic()) {
        for (int r = 0; r < ring.modulus(); ++r) residues.push_back(r);
    } else {
        int lo = opt.residue_lo.value_or(-max_degree);
        int hi = opt.residue_hi.value_or(max_degree);
        if (lo > hi) throw std::invalid_argument("empty residue window");
        for (int r = lo; r <= hi; ++r) residues.push_back(r);
    }

    std::vector<Multisegment> seeds;
    seeds.push_back(Multisegment(ring));
    if (!opt.component_of_empty) {
        if (ring.is_cyclic()) {
            seeds.clear();
            periodic_seeds(ring, max_degree, seeds);
        }
        // Over the integers the component of the empty multisegment is the
        // whole crystal, so the seed set is unchanged.
    }

    std::set<Multisegment> seen(seeds.begin(), seeds.end());
    std::deque<Multisegment> queue(seeds.begin(), seeds.end());
    while (!queue.empty()) {
        Multisegment m = std::move(queue.front());
        queue.pop_front();
        if (m.total_degree() >= max_degree) continue;
        for (int r : residues) {
            Multisegment next = f_tilde(m, r);
            if (seen.insert(next).second) {
                if (seen.size() > opt.max_vertices)
                    throw ResourceLimitError("crystal graph exceeds vertex budget");
                queue.push_back(std::move(next));
            }
        }
    }

    CrystalGraph g{ring, max_degree, std::vector<Multisegment>(seen.begin(), seen.end()), {}};
    std::map<Multisegment, std::size_t> index;
    for (std::size_t k = 0; k < g.vertices.size(); ++k) index[g.vertices[k]] = k;
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
        const Multisegment& m = g.vertices[k];
        if (m.total_degree() >= max_degree) continue;
        for (int r : residues) {
            Multisegment next = f_tilde(m, r);
            auto it = index.find(next);
            if (it != index.end()) g.arrows.push_back({k, it->second, r});
        }
    }
    return g;
}

std::string CrystalGraph::to_dot() const {
    std::ostringstream os;
    os << "digraph crystal {\n  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t k = 0; k < vertices.size(); ++k)
        os << "  v" << k << " [label=\"" << vertices[k].to_string() << "\"];\n";
    for (auto& a : arrows)
        os << "  v" << a.from << " -> v" << a.to << " [label=\"" << a.residue << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string CrystalGraph::to_json_string() const {
    nlohmann::json j;
    j["ring"] = ring.to_string();
    j["max_degree"] = max_degree;
    j["vertices"] = nlohmann::json::array();
    for (auto& v : vertices) j["vertices"].push_back(v.to_string());
    j["arrows"] = nlohmann::json::array();
    for (auto& a : arrows)
        j["arrows"].push_back({{"from", a.from}, {"to", a.to}, {"residue", a.residue}});
    return j.dump(2);
}

} // namespace msdual
