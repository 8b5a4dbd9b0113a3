#pragma once

#include "msdual/crystal.hpp"
#include "msdual/multisegment.hpp"

#include <vector>

namespace msdual {

// Integer partition with weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts);

    const std::vector<long long>& parts() const { return parts_; }
    long long size() const; // sum of parts
    std::size_t rows() const { return parts_.size(); }
    long long part(std::size_t r) const { return r < parts_.size() ? parts_[r] : 0; }

    // No part repeated n or more times.
    bool is_regular(int n) const;

    Partition conjugate() const;

    std::string to_string() const;
    static Partition parse(const std::string& text);

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<long long> parts_;
};

// Crystal-path dual: descend m to the highest-weight vertex, then rebuild from
// the empty multisegment with all residues negated.  The result is independent
// of the descent order.  Cyclic rings require m aperiodic.
Multisegment sharp(const Multisegment& m);

// sharp with an explicit descent; used for randomized path-independence checks.
Multisegment sharp_with_chooser(const Multisegment& m,
                                const std::function<int(const std::vector<int>&)>& chooser);

// tau = sharp o flat; evaluates flat o sharp as well and asserts agreement.
Multisegment tau(const Multisegment& m);

// tau computed through the distinguished descent (minimal head, then minimal
// length); integers ring only.
Multisegment mw_dual(const Multisegment& m);

// Row r of the partition becomes the segment [1-r; lambda_r) (row-r cells
// carry contents c - r); reduced mod n for cyclic rings.
Multisegment partition_to_multisegment(const Partition& lambda, const VertexRing& ring);

// Mullineux symbol column: a = cells in the n-rim, r = rows before stripping.
struct MullineuxSymbol {
    std::vector<long long> a, r;
    friend bool operator==(const MullineuxSymbol&, const MullineuxSymbol&) = default;
};

// Strips n-rims down to the empty partition and records (a_j, r_j).
MullineuxSymbol mullineux_symbol(const Partition& lambda, int n);

// Rim-hook involution on n-regular partitions: transform the symbol columns by
// r_j -> a_j - r_j + [n does not divide a_j] and locate the unique n-regular
// partition with the transformed symbol.  Independent of the crystal machinery.
Partition mullineux(const Partition& lambda, int n);

} // namespace msdual
