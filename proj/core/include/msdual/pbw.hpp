#pragma once

#include "msdual/laurent.hpp"
#include "msdual/multisegment.hpp"

#include <map>
#include <optional>

namespace msdual {

// Finitely supported map Multisegment -> LaurentPoly; all keys share one ring
// and one degree vector (homogeneity is enforced on insertion).
class PBWVector {
public:
    explicit PBWVector(VertexRing ring) : ring_(std::move(ring)) {}

    static PBWVector basis(const Multisegment& m) {
        PBWVector u(m.ring());
        u.add_term(m, LaurentPoly::one());
        return u;
    }

    const VertexRing& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Multisegment, LaurentPoly>& terms() const { return terms_; }

    // Degree vector shared by the support; nullopt for the zero vector.
    std::optional<DimVector> degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first.degree();
    }

    LaurentPoly coeff(const Multisegment& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? LaurentPoly::zero() : it->second;
    }

    void add_term(const Multisegment& m, const LaurentPoly& c);

    PBWVector& operator+=(const PBWVector& o);
    PBWVector& operator-=(const PBWVector& o);
    friend PBWVector operator+(PBWVector a, const PBWVector& b) { return a += b; }
    friend PBWVector operator-(PBWVector a, const PBWVector& b) { return a -= b; }

    PBWVector scaled(const LaurentPoly& c) const;

    friend bool operator==(const PBWVector&, const PBWVector&) = default;

    std::string to_string() const;
    std::string to_json_string() const;
    static PBWVector from_json_string(const std::string& text, const VertexRing& ring);

private:
    VertexRing ring_;
    std::map<Multisegment, LaurentPoly> terms_;
};

} // namespace msdual
