#include "msdual/enumerate.hpp"

#include <algorithm>
#include <functional>

namespace msdual {

namespace {

// Candidate segments usable inside the given window of residues.  For cyclic
// rings the window arguments are ignored and all origins appear.
std::vector<Segment> segment_kinds(const VertexRing& ring, int max_len, int lo, int hi) {
    std::vector<Segment> kinds;
    if (ring.is_cyclic()) {
        for (int len = 1; len <= max_len; ++len)
            for (int o = 0; o < ring.modulus(); ++o) kinds.push_back({o, len});
    } else {
        for (int o = lo; o <= hi; ++o)
            for (int len = 1; len <= max_len && o + len - 1 <= hi; ++len)
                kinds.push_back({o, len});
    }
    std::sort(kinds.begin(), kinds.end());
    return kinds;
}

void enumerate_with_budget(const VertexRing& ring, const std::vector<Segment>& kinds,
                           long long budget, std::vector<Multisegment>& out) {
    Multisegment cur(ring);
    std::function<void(std::size_t, long long)> rec = [&](std::size_t idx, long long left) {
        out.push_back(cur);
        for (std::size_t k = idx; k < kinds.size(); ++k) {
            if (kinds[k].length > left) continue;
            cur.add(kinds[k]);
            rec(k, left - kinds[k].length);
            cur.add(kinds[k], -1);
        }
    };
    rec(0, budget);
    // Each multiset is produced once, in nondecreasing kind order.
    std::sort(out.begin(), out.end());
}

} // namespace

std::vector<Multisegment> multisegments_with_degree(const DimVector& d) {
    const VertexRing& ring = d.ring();
    std::vector<Segment> kinds;
    if (ring.is_cyclic()) {
        kinds = segment_kinds(ring, static_cast<int>(d.total()), 0, 0);
    } else {
        if (d.is_zero()) return {Multisegment(ring)};
        int lo = d.entries().begin()->first;
        int hi = d.entries().rbegin()->first;
        kinds = segment_kinds(ring, hi - lo + 1, lo, hi);
    }

    std::vector<Multisegment> out;
    Multisegment cur(ring);
    DimVector left = d;

    auto fits = [&](const Segment& s) {
        for (int t = 0; t < s.length; ++t)
            if (left.at(ring.add(s.origin, t)) <= 0) return false;
        return true;
    };
    auto consume = [&](const Segment& s, int sign) {
        for (int t = 0; t < s.length; ++t) left.add(ring.add(s.origin, t), -sign);
    };

    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (left.is_zero()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t k = idx; k < kinds.size(); ++k) {
            if (!fits(kinds[k])) continue;
            cur.add(kinds[k]);
            consume(kinds[k], +1);
            rec(k);
            consume(kinds[k], -1);
            cur.add(kinds[k], -1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Multisegment> multisegments_up_to(const VertexRing& ring, int max_total) {
    if (!ring.is_cyclic())
        throw std::invalid_argument("multisegments_up_to needs a cyclic ring; use the window "
                                    "variant over the integers");
    std::vector<Multisegment> out;
    enumerate_with_budget(ring, segment_kinds(ring, max_total, 0, 0), max_total, out);
    return out;
}

std::vector<Multisegment> z_multisegments_in_window(int window_lo, int window_hi,
                                                    int max_total) {
    VertexRing ring = VertexRing::integers();
    std::vector<Multisegment> out;
    enumerate_with_budget(ring, segment_kinds(ring, max_total, window_lo, window_hi),
                          max_total, out);
    return out;
}

std::vector<Multisegment> aperiodic_multisegments_up_to(const VertexRing& ring, int max_total) {
    std::vector<Multisegment> all = multisegments_up_to(ring, max_total);
    std::vector<Multisegment> out;
    for (auto& m : all)
        if (m.is_aperiodic()) out.push_back(m);
    return out;
}

std::vector<DimVector> degree_vectors_with_total(const VertexRing& ring, int t) {
    if (!ring.is_cyclic()) throw std::invalid_argument("cyclic ring expected");
    int n = ring.modulus();
    std::vector<DimVector> out;
    DimVector cur(ring);
    std::function<void(int, int)> rec = [&](int residue, int left) {
        if (residue == n) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            if (v > 0) cur.add(residue, v);
            rec(residue + 1, left - v);
            if (v > 0) cur.add(residue, -v);
        }
    };
    rec(0, t);
    return out;
}

} // namespace msdual
