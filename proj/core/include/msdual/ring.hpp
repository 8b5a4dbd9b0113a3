#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace msdual {

// Vertex set of the quiver: either the integers (doubly infinite line) or
// Z/nZ with n >= 2 (cycle).  Residues of cyclic rings are canonicalized to
// {0, ..., n-1}.
class VertexRing {
public:
    static VertexRing integers() { return VertexRing(0); }

    static VertexRing cyclic(int n) {
        if (n < 2) throw std::invalid_argument("cyclic ring needs modulus >= 2");
        return VertexRing(n);
    }

    bool is_cyclic() const { return n_ != 0; }
    // 0 for the integers.
    int modulus() const { return n_; }

    int normalize(long long i) const {
        if (n_ == 0) return static_cast<int>(i);
        long long r = i % n_;
        if (r < 0) r += n_;
        return static_cast<int>(r);
    }

    int add(int a, long long b) const { return normalize(static_cast<long long>(a) + b); }
    int negate(int a) const { return normalize(-static_cast<long long>(a)); }

    friend bool operator==(const VertexRing&, const VertexRing&) = default;
    friend auto operator<=>(const VertexRing&, const VertexRing&) = default;

    // "z" or "zmod:N"; inverse of parse().
    std::string to_string() const {
        return n_ == 0 ? std::string("z") : "zmod:" + std::to_string(n_);
    }

    static VertexRing parse(const std::string& text) {
        if (text == "z" || text == "Z") return integers();
        if (text.rfind("zmod:", 0) == 0) {
            int n = std::stoi(text.substr(5));
            return cyclic(n);
        }
        throw std::invalid_argument("ring spec must be 'z' or 'zmod:N', got '" + text + "'");
    }

private:
    explicit VertexRing(int n) : n_(n) {}
    int n_;
};

} // namespace msdual
