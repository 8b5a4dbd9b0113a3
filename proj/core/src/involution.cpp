#include "msdual/involution.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace msdual {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    for (long long p : parts_)
        if (p < 0) throw std::invalid_argument("partition parts must be nonnegative");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long long Partition::size() const {
    long long s = 0;
    for (long long p : parts_) s += p;
    return s;
}

bool Partition::is_regular(int n) const {
    long long run = 0, prev = -1;
    for (long long p : parts_) {
        run = (p == prev) ? run + 1 : 1;
        if (run >= n) return false;
        prev = p;
    }
    return true;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<long long> conj(static_cast<std::size_t>(parts_[0]), 0);
    for (long long p : parts_)
        for (long long c = 0; c < p; ++c) ++conj[static_cast<std::size_t>(c)];
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t r = 0; r < parts_.size(); ++r) {
        if (r) os << ",";
        os << parts_[r];
    }
    os << ")";
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::vector<long long> parts;
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') t += c;
    std::istringstream is(t);
    std::string item;
    while (std::getline(is, item, ','))
        if (!item.empty()) parts.push_back(std::stoll(item));
    return Partition(std::move(parts));
}

namespace {

Multisegment rebuild_negated(const VertexRing& ring, const std::vector<int>& removal_word) {
    Multisegment out(ring);
    for (auto it = removal_word.rbegin(); it != removal_word.rend(); ++it)
        out = f_tilde(out, ring.negate(ring.normalize(*it)));
    return out;
}

void require_aperiodic(const Multisegment& m, const char* who) {
    if (m.ring().is_cyclic() && !m.is_aperiodic())
        throw NonAperiodicError(std::string(who) + " is defined on aperiodic multisegments only");
}

} // namespace

Multisegment sharp_with_chooser(const Multisegment& m,
                                const std::function<int(const std::vector<int>&)>& chooser) {
    require_aperiodic(m, "sharp");
    HighestWeightPath path = highest_weight_path(m, chooser);
    if (!path.top.empty())
        throw InvariantViolation("sharp: descent of an aperiodic vertex must reach the empty "
                                 "multisegment");
    return rebuild_negated(m.ring(), path.word);
}

Multisegment sharp(const Multisegment& m) { return sharp_with_chooser(m, nullptr); }

Multisegment tau(const Multisegment& m) {
    Multisegment a = sharp(m.flat());
    Multisegment b = sharp(m).flat();
    if (a != b)
        throw InvariantViolation("tau: sharp and flat do not commute on " + m.to_string());
    return a;
}

Multisegment mw_dual(const Multisegment& m) {
    if (m.ring().is_cyclic())
        throw std::invalid_argument("mw_dual is defined over the integers only");
    const VertexRing& ring = m.ring();
    std::vector<int> word;
    Multisegment cur = m;
    while (!cur.empty()) {
        // Segment with minimal head, then minimal length.
        const Segment* best = nullptr;
        int best_head = 0;
        for (auto& [seg, k] : cur.terms()) {
            int h = head_of(ring, seg);
            if (!best || h < best_head || (h == best_head && seg.length < best->length)) {
                best = &seg;
                best_head = h;
            }
        }
        Segment s = *best;
        int h = best_head;
        Multisegment down = cur;
        down.add(s, -1);
        if (s.length > 1) down.add_head(s.length - 1, h - 1);
        if (f_tilde(down, h) != cur)
            throw InvariantViolation("mw_dual: distinguished descent left the crystal at " +
                                     cur.to_string());
        cur = std::move(down);
        word.push_back(h);
    }
    return rebuild_negated(ring, word).flat();
}

Multisegment partition_to_multisegment(const Partition& lambda, const VertexRing& ring) {
    Multisegment m(ring);
    for (std::size_t r = 0; r < lambda.rows(); ++r) {
        long long origin = -static_cast<long long>(r); // 1 - (r+1)
        m.add(Segment{ring.normalize(origin), static_cast<int>(lambda.parts()[r])});
    }
    return m;
}

namespace {

// Cells of the n-rim per row.  Rim cells of row r (1-based) are the columns
// max(1, lambda_{r+1}) .. lambda_r, read right to left; segments of n cells
// are taken along this reading order, and after a full segment the walk jumps
// to the first rim cell of the next row.
std::vector<long long> n_rim_removed_per_row(const Partition& lambda, int n) {
    std::size_t rows = lambda.rows();
    std::vector<long long> removed(rows, 0);
    std::size_t row = 0;
    long long col = lambda.part(0); // current rim cell column, walking down
    int in_segment = 0;
    while (row < rows) {
        long long lo = std::max<long long>(1, lambda.part(row + 1));
        // Take rim cells of this row from `col` down to `lo`.
        while (col >= lo) {
            ++removed[row];
            ++in_segment;
            --col;
            if (in_segment == n) {
                in_segment = 0;
                // Jump to the next row, skipping the rest of this row's rim.
                ++row;
                col = lambda.part(row);
                goto next_row;
            }
        }
        // Row exhausted inside a segment: continue on the next row's rim.
        ++row;
        col = lambda.part(row);
    next_row:;
    }
    return removed;
}

} // namespace

MullineuxSymbol mullineux_symbol(const Partition& lambda, int n) {
    if (n < 2) throw std::invalid_argument("mullineux needs n >= 2");
    MullineuxSymbol sym;
    Partition cur = lambda;
    while (cur.size() > 0) {
        std::vector<long long> removed = n_rim_removed_per_row(cur, n);
        long long a = 0;
        std::vector<long long> next(cur.parts());
        for (std::size_t r = 0; r < removed.size(); ++r) {
            a += removed[r];
            next[r] -= removed[r];
        }
        sym.a.push_back(a);
        sym.r.push_back(static_cast<long long>(cur.rows()));
        Partition stripped(std::move(next));
        if (stripped.size() >= cur.size())
            throw InvariantViolation("mullineux: rim strip made no progress");
        cur = std::move(stripped);
    }
    return sym;
}

Partition mullineux(const Partition& lambda, int n) {
    if (n < 2) throw std::invalid_argument("mullineux needs n >= 2");
    if (!lambda.is_regular(n))
        throw std::invalid_argument("mullineux: " + lambda.to_string() + " is not " +
                                    std::to_string(n) + "-regular");
    if (lambda.size() == 0) return lambda;
    if (lambda.size() > 64)
        throw ResourceLimitError("mullineux oracle enumerates partitions; |lambda| <= 64 only");

    MullineuxSymbol want = mullineux_symbol(lambda, n);
    for (std::size_t j = 0; j < want.a.size(); ++j)
        want.r[j] = want.a[j] - want.r[j] + (want.a[j] % n != 0 ? 1 : 0);

    // Locate the unique n-regular partition with the transformed symbol.
    std::vector<long long> stack;
    Partition found;
    int matches = 0;
    std::function<void(long long, long long)> rec = [&](long long remaining, long long max_part) {
        if (remaining == 0) {
            Partition cand{std::vector<long long>(stack)};
            if (cand.is_regular(n) && mullineux_symbol(cand, n) == want) {
                found = cand;
                ++matches;
            }
            return;
        }
        for (long long p = std::min(remaining, max_part); p >= 1; --p) {
            stack.push_back(p);
            rec(remaining - p, p);
            stack.pop_back();
        }
    };
    rec(lambda.size(), lambda.size());
    if (matches != 1)
        throw InvariantViolation("mullineux: symbol matched " + std::to_string(matches) +
                                 " partitions for " + lambda.to_string());
    return found;
}

} // namespace msdual
