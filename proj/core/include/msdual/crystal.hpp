#pragma once

#include "msdual/multisegment.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace msdual {

// String statistics at residue i:
//   S_{k,i} = sum_{l >= k} (m_{(l; i-1]} - m_{(l; i]}),  k = 1, ..., L+1,
// where L is the maximal segment length in m.  S_{L+1,i} = 0 always.
std::vector<long long> string_sums(const Multisegment& m, int i);

// Lowering operator: let k0 be minimal with S_{k0,i} = min_k S_{k,i}.  Returns
//   m + (1; i]                      if k0 = 1,
//   m - (k0-1; i-1] + (k0; i]       if k0 > 1.
// Total on all vertices; minimality of k0 guarantees the replaced segment
// exists when k0 > 1 (checked on every call).
Multisegment f_tilde(const Multisegment& m, int i);

// Partial inverse of f_tilde: the unique m' with f_tilde(m', i) = m, found by
// testing each candidate m - (l; i] + (l-1; i-1] over lengths l with
// m_{(l;i]} > 0.  Uniqueness is asserted by exhausting all candidates.
std::optional<Multisegment> e_tilde(const Multisegment& m, int i);

// Largest k such that e_tilde applies k times at residue i.
int epsilon(const Multisegment& m, int i);

struct HighestWeightPath {
    // Residues in removal order: m = f_tilde(word[0], f_tilde(word[1], ...)),
    // i.e. rebuilding from `top` applies f_tilde with the residues reversed.
    std::vector<int> word;
    Multisegment top;
};

// Picks, at each step, a residue with e_tilde defined, applies it, and repeats
// until none remains.  The default choice is the smallest residue in the
// canonical order (ascending for cyclic rings; 0, 1, -1, 2, -2, ... for the
// integers).  `chooser`, when given, selects among the defined residues and
// enables randomized descent orders.
HighestWeightPath highest_weight_path(
    const Multisegment& m,
    const std::function<int(const std::vector<int>&)>& chooser = nullptr);

// Canonical residue order key: identity for cyclic rings; 0,1,-1,2,-2,... for
// the integers.
std::pair<long long, int> residue_order_key(const VertexRing& ring, int i);

// Embedding of Z/nZ-multisegments into Z-multisegments used at residue i:
// (l; r] -> (l; j_r] with j_r = r mod n, chosen so that j_{i-1} = i-1 and
// j_i = i; representatives {0,...,n-1} for i != 0 and {-1,0,...,n-2} for i = 0.
Multisegment embed_phi(const Multisegment& m, int i);

struct CrystalGraph {
    VertexRing ring;
    int max_degree = 0;
    std::vector<Multisegment> vertices; // sorted
    struct Arrow {
        std::size_t from, to;
        int residue;
    };
    std::vector<Arrow> arrows;

    std::string to_dot() const;
    std::string to_json_string() const;
};

struct CrystalGraphOptions {
    // Restrict to the component of the empty multisegment; otherwise all
    // components are generated from their periodic highest-weight seeds.
    bool component_of_empty = true;
    // Residue window for the integers ring; ignored for cyclic rings.  When
    // unset, defaults to [-max_degree, max_degree].
    std::optional<int> residue_lo, residue_hi;
    std::size_t max_vertices = 500000;
};

// Breadth-first closure under f_tilde from the seeds, keeping all vertices of
// total degree <= max_degree and all arrows among them.  Refuses degrees
// beyond the resource guard (env MSDUAL_MAX_DEGREE overrides).
CrystalGraph crystal_graph(const VertexRing& ring, int max_degree,
                           const CrystalGraphOptions& opt = {});

// Resource guard shared by the degree-bounded generators; `fallback` when the
// MSDUAL_MAX_DEGREE environment variable is unset.
int max_degree_guard(int fallback);

} // namespace msdual
