#include "msdual/canonical.hpp"

#include "msdual/crystal.hpp"
#include "msdual/enumerate.hpp"
#include "msdual/involution.hpp"
#include "msdual/quiverrep.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace msdual {

namespace {

// Descent used for monomials: at each step remove a head cell from the
// longest segment that admits a raising step.  Rebuilding then creates fresh
// segments before the extension steps of longer ones land next to them, which
// keeps the divided-power monomial unitriangular with unit diagonal in the
// closure order (the smallest-residue descent does not: its monomials can put
// units on incomparable orbits).  Ties between equal lengths are removed in
// cyclic order ascending from a residue carrying no candidate; aperiodicity
// guarantees such a gap, and it orients every adjacent pair h, h-1 of tied
// heads so that the rebuild applies the h-step before stock appears at h-1.
std::vector<int> longest_first_removal_word(const Multisegment& m) {
    const VertexRing& ring = m.ring();
    std::vector<int> word;
    Multisegment cur = m;
    while (!cur.empty()) {
        std::vector<std::pair<int, Multisegment>> candidates; // (head, raised vertex)
        int max_len = -1;
        for (int h : cur.heads()) {
            if (auto prev = e_tilde(cur, h)) {
                int l = 0;
                for (auto& [seg, k] : cur.terms())
                    if (head_of(ring, seg) == h && prev->mult(seg) < k) l = seg.length;
                if (l > max_len) {
                    max_len = l;
                    candidates.clear();
                }
                if (l == max_len) candidates.emplace_back(h, std::move(*prev));
            }
        }
        if (candidates.empty())
            throw InvariantViolation("monomial descent stuck at " + cur.to_string());

        std::size_t pick = 0;
        if (candidates.size() > 1) {
            // The walk starts just above a residue free of heads, so that a
            // removal at h always precedes the removal at h-1 whenever stock
            // could sit between them; a head-free residue may not exist, but
            // aperiodicity guarantees one outside the tied set.
            std::vector<bool> is_head(ring.is_cyclic() ? ring.modulus() : 0, false);
            if (ring.is_cyclic())
                for (int h : cur.heads()) is_head[static_cast<std::size_t>(h)] = true;
            auto key = [&](int h) -> long long {
                if (!ring.is_cyclic()) return h;
                int n = ring.modulus();
                int gap = -1;
                for (int g = n - 1; g >= 0; --g)
                    if (!is_head[static_cast<std::size_t>(g)]) {
                        gap = g;
                        break;
                    }
                if (gap < 0) {
                    for (int g = n - 1; g >= 0; --g) {
                        bool tied = false;
                        for (auto& [th, tv] : candidates) tied = tied || th == g;
                        if (!tied) {
                            gap = g;
                            break;
                        }
                    }
                }
                if (gap < 0)
                    throw InvariantViolation("monomial descent: tied heads cover every residue");
                return ring.normalize(h - (gap + 1));
            };
            for (std::size_t t = 1; t < candidates.size(); ++t)
                if (key(candidates[t].first) < key(candidates[pick].first)) pick = t;
        }
        word.push_back(candidates[pick].first);
        cur = std::move(candidates[pick].second);
    }
    return word;
}

} // namespace

PBWVector monomial_for(const Multisegment& m) {
    const VertexRing& ring = m.ring();
    if (ring.is_cyclic() && !m.is_aperiodic())
        throw NonAperiodicError("monomial_for needs an aperiodic multisegment");
    std::vector<int> removal = longest_first_removal_word(m);

    // Rebuild word (reverse removal order), grouped into maximal runs.
    std::vector<std::pair<int, long long>> runs;
    for (auto it = removal.rbegin(); it != removal.rend(); ++it) {
        if (!runs.empty() && runs.back().first == *it)
            ++runs.back().second;
        else
            runs.emplace_back(*it, 1);
    }

    PBWVector u = PBWVector::basis(Multisegment(ring));
    for (auto& [residue, power] : runs) {
        for (long long t = 0; t < power; ++t) u = f_action(residue, u);
        LaurentPoly fact = gauss_factorial(power);
        PBWVector divided(ring);
        for (auto& [key, c] : u.terms()) {
            auto q = c.divide_exact(fact);
            if (!q)
                throw DivisionFailure("monomial_for: coefficient of <" + key.to_string() +
                                      "> is not divisible by [" + std::to_string(power) + "]!");
            divided.add_term(key, *q);
        }
        u = std::move(divided);
    }

    // The monomial is bar-invariant with unit coefficient on <m>; the other
    // coefficients may carry bar-symmetric parts (cleared by the triangular
    // correction), but they must at least be Laurent polynomials over Z.
    if (!u.coeff(m).is_one())
        throw LeadingTermFailure("monomial_for: leading coefficient at <" + m.to_string() +
                                 "> is " + u.coeff(m).to_string());
    return u;
}

namespace {

// Recursive string construction of the distinguished basis.  Each element is
// obtained by applying a full divided string power to the already-corrected
// element one string below:
//     u = f_i^{(a)} b[e_i^a m],   a = eps_i(m) maximal over the residues,
// and then clearing the bar-symmetric parts of the off-diagonal coefficients
// against elements of the same degree.  Every correction index must sit
// strictly deeper in the i-string filtration (eps_i > a), which both certifies
// the construction and bounds the recursion: the maximal string length grows
// strictly along same-degree recursion, so cycles are impossible.
class TableBuilder {
public:
    TableBuilder(VertexRing ring, bool reverse_tiebreak)
        : ring_(std::move(ring)), reverse_(reverse_tiebreak) {}

    const PBWVector& element(const Multisegment& m) {
        auto it = done_.find(m);
        if (it != done_.end()) return it->second;
        if (!in_progress_.insert(m).second)
            throw InvariantViolation("canonical_basis: recursion cycle at " + m.to_string());
        PBWVector b = compute(m);
        in_progress_.erase(m);
        return done_.emplace(m, std::move(b)).first->second;
    }

private:
    PBWVector compute(const Multisegment& m) {
        if (m.empty()) return PBWVector::basis(m);

        // Maximal string; flipping the tiebreak must not change the table.
        int best_i = 0, best_a = 0;
        for (int h : m.heads()) {
            int a = epsilon(m, h);
            if (a > best_a ||
                (a == best_a && a > 0 &&
                 (reverse_ ? residue_order_key(ring_, h) > residue_order_key(ring_, best_i)
                           : residue_order_key(ring_, h) < residue_order_key(ring_, best_i)))) {
                best_a = a;
                best_i = h;
            }
        }
        if (best_a == 0)
            throw InvariantViolation("canonical_basis: no raising step at " + m.to_string());

        Multisegment below = m;
        for (int t = 0; t < best_a; ++t) below = *e_tilde(below, best_i);

        PBWVector u = element(below);
        for (int t = 0; t < best_a; ++t) u = f_action(best_i, u);
        LaurentPoly fact = gauss_factorial(best_a);
        PBWVector divided(ring_);
        for (auto& [key, c] : u.terms()) {
            auto q = c.divide_exact(fact);
            if (!q)
                throw DivisionFailure("canonical_basis: coefficient of <" + key.to_string() +
                                      "> not divisible by [" + std::to_string(best_a) + "]!");
            divided.add_term(key, *q);
        }
        u = std::move(divided);

        // Clear bar-symmetric parts from the top of the closure order down.
        long long fuel = 100000;
        while (true) {
            const Multisegment* worst = nullptr;
            LaurentPoly gamma;
            long long worst_dim = -1;
            for (auto& [key, c] : u.terms()) {
                if (key == m) continue;
                LaurentPoly g = c.bar_symmetric_part();
                if (g.is_zero()) continue;
                long long kd = dim_of(key);
                if (worst == nullptr || kd > worst_dim ||
                    (kd == worst_dim && (reverse_ ? key < *worst : *worst < key))) {
                    worst = &key;
                    gamma = g;
                    worst_dim = kd;
                }
            }
            if (worst == nullptr) break;
            if (--fuel < 0)
                throw InvariantViolation("canonical_basis: correction loop exhausted at " +
                                         m.to_string());
            if (ring_.is_cyclic() && !worst->is_aperiodic())
                throw InvariantViolation("canonical_basis: bar-symmetric coefficient at the "
                                         "non-aperiodic index <" +
                                         worst->to_string() + ">");
            if (epsilon(*worst, best_i) <= best_a)
                throw InvariantViolation("canonical_basis: correction index <" +
                                         worst->to_string() +
                                         "> does not sit deeper in the string filtration");
            u -= element(*worst).scaled(gamma);
        }

        // Verified invariants: unit leading term, positivity, triangularity.
        if (!u.coeff(m).is_one())
            throw InvariantViolation("canonical_basis: leading term of b[" + m.to_string() +
                                     "] is " + u.coeff(m).to_string());
        for (auto& [key, c] : u.terms()) {
            if (key == m) continue;
            if (!c.in_v_zv() || !c.in_nonneg_nv())
                throw InvariantViolation("canonical_basis: coefficient of <" + key.to_string() +
                                         "> in b[" + m.to_string() + "] is " + c.to_string());
            if (!closure_leq(key, m))
                throw InvariantViolation("canonical_basis: support of b[" + m.to_string() +
                                         "] escapes the orbit closure at <" + key.to_string() +
                                         ">");
        }
        return u;
    }

    long long dim_of(const Multisegment& m) {
        auto [it, fresh] = dims_.emplace(m, 0);
        if (fresh) it->second = orbit_dim(m);
        return it->second;
    }

    VertexRing ring_;
    bool reverse_;
    std::map<Multisegment, PBWVector> done_;
    std::set<Multisegment> in_progress_;
    std::map<Multisegment, long long> dims_;
};

} // namespace

CanonicalTable canonical_basis(const VertexRing& ring, const DimVector& degree,
                               const CanonicalOptions& opt) {
    long long bound = opt.max_total_degree >= 0
                          ? opt.max_total_degree
                          : max_degree_guard(ring.is_cyclic() && ring.modulus() >= 3 ? 6 : 8);
    if (degree.total() > bound)
        throw ResourceLimitError("canonical_basis: total degree " +
                                 std::to_string(degree.total()) + " exceeds guard " +
                                 std::to_string(bound));

    TableBuilder builder(ring, opt.reverse_tiebreak);
    CanonicalTable table{ring, degree, {}};
    for (auto& m : multisegments_with_degree(degree))
        if (!ring.is_cyclic() || m.is_aperiodic()) table.basis.emplace(m, builder.element(m));
    return table;
}

SharpEquivarianceReport sharp_on_canonical(const CanonicalTable& table,
                                           const CanonicalTable& negated_table) {
    // Cell negation on PBW indices reverses the quiver orientation, so on the
    // Hall algebra it realizes the diagram symmetry composed with the star
    // anti-automorphism; both preserve the distinguished basis, and the net
    // index map is flat (not the crystal sharp, which negates path residues).
    // The two tables are built independently, so this is a genuine cross-check.
    SharpEquivarianceReport report;
    for (auto& [m, b] : table.basis) {
        Multisegment ms = m.flat();
        auto it = negated_table.basis.find(ms);
        if (it == negated_table.basis.end()) {
            report.ok = false;
            report.mismatches.push_back("b[" + ms.to_string() + "] missing from negated table");
            continue;
        }
        PBWVector relabeled(table.ring);
        for (auto& [key, c] : b.terms()) relabeled.add_term(key.flat(), c);
        if (!(relabeled == it->second)) {
            report.ok = false;
            report.mismatches.push_back("b[" + m.to_string() + "] relabeled != b[" +
                                        ms.to_string() + "]");
        }
    }
    return report;
}

std::string CanonicalTable::to_text() const {
    std::ostringstream os;
    for (auto& [m, b] : basis) {
        os << "b[" << m.to_string() << "] =";
        bool first = true;
        for (auto& [key, c] : b.terms()) {
            os << (first ? " " : " + ");
            if (c.is_one())
                os << "<" << key.to_string() << ">";
            else
                os << "(" << c.to_string() << ")<" << key.to_string() << ">";
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

std::string CanonicalTable::to_json_string() const {
    nlohmann::json j;
    j["ring"] = ring.to_string();
    nlohmann::json deg = nlohmann::json::object();
    for (auto& [i, v] : degree.entries()) deg[std::to_string(i)] = v;
    j["degree"] = std::move(deg);
    j["basis"] = nlohmann::json::array();
    for (auto& [m, b] : basis) {
        nlohmann::json entry;
        entry["index"] = m.to_string();
        entry["expansion"] = nlohmann::json::array();
        for (auto& [key, c] : b.terms()) {
            nlohmann::json coeff = nlohmann::json::object();
            for (auto& [e, k] : c.terms()) coeff[std::to_string(e)] = k;
            entry["expansion"].push_back(
                {{"multisegment", key.to_string()}, {"coeff", std::move(coeff)}});
        }
        j["basis"].push_back(std::move(entry));
    }
    return j.dump(2);
}

} // namespace msdual
