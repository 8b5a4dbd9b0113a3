#pragma once

#include "msdual/errors.hpp"
#include "msdual/ring.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace msdual {

// The interval [origin; length) of `length` consecutive vertices.  The same
// interval addressed by its head j = origin + length - 1 is written (length; j].
struct Segment {
    int origin = 0;
    int length = 1;
    friend bool operator==(const Segment&, const Segment&) = default;
    friend auto operator<=>(const Segment&, const Segment&) = default;
};

inline Segment segment_by_head(const VertexRing& ring, int length, long long head) {
    return Segment{ring.normalize(head - (length - 1)), length};
}

inline int head_of(const VertexRing& ring, const Segment& s) {
    return ring.add(s.origin, s.length - 1);
}

// Graded dimension vector d = (d_i), finitely supported; zero entries dropped.
class DimVector {
public:
    explicit DimVector(VertexRing ring) : ring_(std::move(ring)) {}

    const VertexRing& ring() const { return ring_; }

    long long at(int i) const {
        auto it = d_.find(ring_.normalize(i));
        return it == d_.end() ? 0 : it->second;
    }

    void add(int i, long long v) {
        if (v == 0) return;
        int k = ring_.normalize(i);
        auto [it, fresh] = d_.emplace(k, 0);
        it->second += v;
        if (it->second == 0) d_.erase(it);
    }

    DimVector& operator+=(const DimVector& o) {
        for (auto& [i, v] : o.d_) add(i, v);
        return *this;
    }

    long long total() const {
        long long t = 0;
        for (auto& [i, v] : d_) t += v;
        return t;
    }

    bool is_zero() const { return d_.empty(); }

    // Index negation i -> -i.
    DimVector negated() const {
        DimVector r(ring_);
        for (auto& [i, v] : d_) r.add(ring_.negate(i), v);
        return r;
    }

    const std::map<int, long long>& entries() const { return d_; }

    std::string to_string() const;

    friend bool operator==(const DimVector&, const DimVector&) = default;
    friend auto operator<=>(const DimVector&, const DimVector&) = default;

private:
    VertexRing ring_;
    std::map<int, long long> d_;
};

// Induction label (mu, a), mu a composition of positive integers, considered
// up to simultaneous permutation of the pairs (mu_i, a_i).
struct Label {
    std::vector<long long> mu;
    std::vector<int> a;

    void validate() const {
        if (mu.size() != a.size())
            throw std::invalid_argument("label: mu and a must have equal length");
        for (long long m : mu)
            if (m < 1) throw std::invalid_argument("label: parts of mu must be positive");
    }

    // Canonical representative: pairs sorted.
    void normalize();
};

// Finitely supported multiset of segments over a common vertex ring, stored
// canonically (sorted, positive multiplicities) so equality is structural.
class Multisegment {
public:
    explicit Multisegment(VertexRing ring) : ring_(std::move(ring)) {}

    const VertexRing& ring() const { return ring_; }
    bool empty() const { return terms_.empty(); }
    const std::vector<std::pair<Segment, long long>>& terms() const { return terms_; }

    long long mult(Segment s) const {
        s.origin = ring_.normalize(s.origin);
        for (auto& [seg, k] : terms_)
            if (seg == s) return k;
        return 0;
    }

    // m_{(length; head]}
    long long mult_head(int length, long long head) const {
        return mult(segment_by_head(ring_, length, head));
    }

    // Adds k copies of s (k may be negative); total multiplicity must stay >= 0.
    void add(Segment s, long long k = 1);

    void add_head(int length, long long head, long long k = 1) {
        add(segment_by_head(ring_, length, head), k);
    }

    long long total_degree() const {
        long long t = 0;
        for (auto& [seg, k] : terms_) t += static_cast<long long>(seg.length) * k;
        return t;
    }

    int max_length() const {
        int L = 0;
        for (auto& [seg, k] : terms_) L = std::max(L, seg.length);
        return L;
    }

    DimVector degree() const {
        DimVector d(ring_);
        for (auto& [seg, k] : terms_)
            for (int t = 0; t < seg.length; ++t) d.add(ring_.add(seg.origin, t), k);
        return d;
    }

    // Distinct heads carrying at least one segment, sorted.
    std::vector<int> heads() const;

    // Every [i; l) replaced by the segment of length l with head -i.
    Multisegment flat() const {
        Multisegment r(ring_);
        for (auto& [seg, k] : terms_)
            r.add_head(seg.length, ring_.negate(seg.origin), k);
        return r;
    }

    // True iff for every occurring length some residue carries no segment of
    // that length.  Cyclic rings only.
    bool is_aperiodic() const;

    std::string to_string() const;
    static Multisegment parse(const std::string& text, const VertexRing& ring);

    std::string to_json_string() const;
    static Multisegment from_json_string(const std::string& text, const VertexRing& ring);

    friend bool operator==(const Multisegment& a, const Multisegment& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }
    friend auto operator<=>(const Multisegment& a, const Multisegment& b) {
        if (auto c = a.ring_ <=> b.ring_; c != 0) return c;
        return a.terms_ <=> b.terms_;
    }

private:
    VertexRing ring_;
    std::vector<std::pair<Segment, long long>> terms_;
};

// m = sum_i [a_i; mu_i); permutation-invariant in the pairs.
Multisegment from_label(const Label& label, const VertexRing& ring);

// Each [i; l) maps to [i mod n; l); multiplicities of coinciding images add.
Multisegment reduce_mod(const Multisegment& m, int n);

} // namespace msdual
