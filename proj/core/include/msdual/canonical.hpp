#pragma once

#include "msdual/hall.hpp"
#include "msdual/multisegment.hpp"
#include "msdual/pbw.hpp"

#include <map>
#include <vector>

namespace msdual {

// Expansion of the distinguished bar-invariant basis on the PBW basis, one
// degree vector at a time.  Each entry satisfies
//   b_m = <m> + sum_{m' != m} c_{m'}(v) <m'>,  c_{m'} in v N[v],
// and only aperiodic multisegments index entries on cyclic rings.
struct CanonicalTable {
    VertexRing ring;
    DimVector degree;
    std::map<Multisegment, PBWVector> basis;

    std::string to_text() const;
    std::string to_json_string() const;
};

// Divided-power monomial attached to the crystal path of m, applied to the
// empty vector: grouping maximal runs of the rebuild word into powers a and
// dividing by [a]! keeps the result bar-invariant with unit coefficient on
// <m>.  Exact divisions and the leading term are checked on every call; lower
// coefficients may carry bar-symmetric parts, which the table construction
// clears.
PBWVector monomial_for(const Multisegment& m);

struct CanonicalOptions {
    // Flips the string and correction tiebreaks; by uniqueness of the basis
    // this must not change the table (checked by the verification suite).
    bool reverse_tiebreak = false;
    // Negative means the ring-dependent default (8 for n = 2 and the integers,
    // 6 otherwise); MSDUAL_MAX_DEGREE overrides the default.
    long long max_total_degree = -1;
};

// Recursive string construction: each element is the full divided string
// power f_i^{(a)} of the already-corrected element one string below (a =
// eps_i maximal), followed by triangular bar-invariant correction of the
// off-diagonal coefficients, scanning the support downward along the closure
// order.  Correction indices must sit strictly deeper in the i-string
// filtration; this certifies the construction and bounds the same-degree
// recursion.  Unit diagonal, positivity and closure triangularity are checked
// on every element.
CanonicalTable canonical_basis(const VertexRing& ring, const DimVector& degree,
                               const CanonicalOptions& opt = {});

struct SharpEquivarianceReport {
    bool ok = true;
    std::vector<std::string> mismatches;
};

// Relabeling every PBW index of b_m by cell negation must give exactly
// b_{flat(m)} in the independently computed table of the negated degree
// vector (cell negation reverses the quiver orientation, so it realizes the
// diagram symmetry twisted by the star anti-automorphism, and the induced
// index involution on the basis is flat).
SharpEquivarianceReport sharp_on_canonical(const CanonicalTable& table,
                                           const CanonicalTable& negated_table);

} // namespace msdual
