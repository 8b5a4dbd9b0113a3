#pragma once

#include "msdual/gf.hpp"
#include "msdual/linalg.hpp"
#include "msdual/multisegment.hpp"

#include <map>
#include <optional>
#include <vector>

namespace msdual {

// Explicit nilpotent representation of the quiver with arrows i -> i-1: graded
// spaces V_i and matrices x_i : V_i -> V_{i-1} acting on column vectors.
// field == nullopt means exact rational coefficients; matrices are stored with
// integer entries (a representation with rational entries can always be
// rescaled arrow-by-arrow without moving the orbit's rank data).
struct NilpotentRep {
    VertexRing ring;
    std::optional<Fq> field;
    std::map<int, int> dim;             // d_i > 0 entries only
    std::map<int, GFMat> x;             // x[i] has shape d_{i-1} x d_i

    int dim_at(int i) const {
        auto it = dim.find(ring.normalize(i));
        return it == dim.end() ? 0 : it->second;
    }
    long long total_dim() const {
        long long t = 0;
        for (auto& [i, d] : dim) t += d;
        return t;
    }

    std::string to_json_string() const;
    static NilpotentRep from_json_string(const std::string& text);
};

// r_{i,l} = rank of the l-fold composite V_i -> V_{i-l}; r_{i,0} = d_i.
// Weakly decreasing in l and eventually zero (nilpotency).
class RankTable {
public:
    long long at(int i, int l) const;
    void set(int i, int l, long long r);
    friend bool operator==(const RankTable&, const RankTable&) = default;
    friend auto operator<=>(const RankTable&, const RankTable&) = default;

    // Pointwise comparison; nullopt if incomparable.
    static std::optional<int> compare(const RankTable& a, const RankTable& b);
    // Pointwise maximum.
    static RankTable max(const RankTable& a, const RankTable& b);

    // Residues carrying any entry.
    std::vector<int> residues() const;

private:
    std::map<std::pair<int, int>, long long> r_;
};

// Direct sum of shift realizations: the segment (l; j] gets basis vectors in
// degrees j, j-1, ..., j-l+1 chained by x.
NilpotentRep realize(const Multisegment& m, std::optional<Fq> field = std::nullopt);

RankTable rank_table(const NilpotentRep& rep);
RankTable rank_table(const Multisegment& m);

// Orbit invariant -> multisegment:
//   m_{(l;i]} = (r_{i,l-1} - r_{i+1,l}) - (r_{i,l} - r_{i+1,l+1}).
// Throws InvariantViolation on negative multiplicities or non-nilpotent input.
Multisegment classify(const NilpotentRep& rep);
Multisegment classify_table(const VertexRing& ring, const RankTable& t, long long total_dim);

// Dimension of the space of graded module maps k[m1] -> k[m2], computed as
// the nullity of the exact integer system phi x1 = x2 phi (field-independent).
long long hom_dim(const Multisegment& m1, const Multisegment& m2);
long long endo_dim(const Multisegment& m);

// dim G_V - dim Stab = sum_i d_i^2 - endo_dim(m).
long long orbit_dim(const Multisegment& m);

struct SubmoduleCountOptions {
    long long total_dim_bound = 6;
    // Upper bound on the product of per-residue subspace counts.
    double enumeration_budget = 5e7;
};

// Number of x-stable graded subspaces of a fixed realization of `big` over F_q
// whose type is `sub` and whose quotient type is `quot`.
long long count_submodules(const Multisegment& big, const Multisegment& sub,
                           const Multisegment& quot, long long q,
                           const SubmoduleCountOptions& opt = {});

// All x-stable graded subspaces of the given graded dimension, by type.
std::map<Multisegment, long long> count_submodules_by_type(const Multisegment& big,
                                                           const DimVector& sub_degree,
                                                           long long q,
                                                           const SubmoduleCountOptions& opt = {});

// Brute-force |Aut| over F_q: enumerate the endomorphism space and count the
// elements whose graded blocks are all invertible.
long long count_automorphisms_brute(const Multisegment& m, long long q,
                                    double enumeration_budget = 2e8);

// True iff the rank table of m1 is pointwise <= that of m2 (orbit closure
// order).  Degree vectors must agree.
bool closure_leq(const Multisegment& m1, const Multisegment& m2);

struct GenericDualOptions {
    int samples = 5;
    int coefficient_bound = 10;
    int nilpotency_retries = 20;
    // Minimum number of samples that must attain the maximal rank table, and
    // the number of fresh batches drawn before reporting failure.
    int stability_quorum = 2;
    int batch_retries = 4;
};

// Realizes m, solves for the space of degree +1 operators commuting with it,
// draws seeded random integer points, and classifies the transpose of a
// generic one.  Cyclic rings require m aperiodic.  Throws GenericityNotReached
// if the samples never stabilize.
Multisegment generic_commutant_dual(const Multisegment& m, unsigned long long seed,
                                    const GenericDualOptions& opt = {});

} // namespace msdual
