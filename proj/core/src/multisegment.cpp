#include "msdual/multisegment.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace msdual {

std::string DimVector::to_string() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto& [i, v] : d_) {
        if (!first) os << ", ";
        os << i << ":" << v;
        first = false;
    }
    os << ")";
    return os.str();
}

void Label::normalize() {
    validate();
    std::vector<std::pair<long long, int>> pairs;
    pairs.reserve(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) pairs.emplace_back(mu[i], a[i]);
    std::sort(pairs.begin(), pairs.end());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        mu[i] = pairs[i].first;
        a[i] = pairs[i].second;
    }
}

void Multisegment::add(Segment s, long long k) {
    if (k == 0) return;
    if (s.length < 1) throw std::invalid_argument("segment length must be >= 1");
    s.origin = ring_.normalize(s.origin);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                               [](const auto& t, const Segment& x) { return t.first < x; });
    if (it != terms_.end() && it->first == s) {
        it->second += k;
        if (it->second == 0) {
            terms_.erase(it);
        } else if (it->second < 0) {
            throw std::invalid_argument("multisegment: negative multiplicity");
        }
    } else {
        if (k < 0) throw std::invalid_argument("multisegment: negative multiplicity");
        terms_.insert(it, {s, k});
    }
}

std::vector<int> Multisegment::heads() const {
    std::set<int> hs;
    for (auto& [seg, k] : terms_) hs.insert(head_of(ring_, seg));
    return std::vector<int>(hs.begin(), hs.end());
}

bool Multisegment::is_aperiodic() const {
    if (!ring_.is_cyclic())
        throw InvariantViolation("is_aperiodic called on a multisegment over the integers");
    int n = ring_.modulus();
    std::map<int, std::set<int>> origins_by_length;
    for (auto& [seg, k] : terms_) origins_by_length[seg.length].insert(seg.origin);
    for (auto& [len, origins] : origins_by_length)
        if (static_cast<int>(origins.size()) >= n) return false;
    return true;
}

std::string Multisegment::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [seg, k] : terms_) {
        if (!first) os << "+";
        if (k != 1) os << k;
        os << "[" << seg.origin << ";" << seg.length << ")";
        first = false;
    }
    return os.str();
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw SyntaxError(pos, std::string("expected '") + c + "'");
        ++pos;
    }
    long long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) throw SyntaxError(start, "expected an integer");
        return std::stoll(s.substr(start, pos - start));
    }
};

} // namespace

Multisegment Multisegment::parse(const std::string& text, const VertexRing& ring) {
    Multisegment m(ring);
    Cursor c{text};
    if (c.done()) return m;
    if (c.peek() == '0') {
        ++c.pos;
        if (!c.done()) throw SyntaxError(c.pos, "unexpected trailing input after '0'");
        return m;
    }
    while (true) {
        c.skip_ws();
        std::size_t term_start = c.pos;
        long long mult = 1;
        if (c.peek() != '[') {
            mult = c.integer();
            if (mult < 1) throw SyntaxError(term_start, "multiplicity must be positive");
        }
        c.expect('[');
        long long origin = c.integer();
        c.expect(';');
        long long length = c.integer();
        if (length < 1) throw SyntaxError(term_start, "segment length must be >= 1");
        c.expect(')');
        m.add(Segment{ring.normalize(origin), static_cast<int>(length)}, mult);
        if (c.done()) break;
        c.expect('+');
    }
    return m;
}

std::string Multisegment::to_json_string() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [seg, k] : terms_)
        arr.push_back({{"origin", seg.origin}, {"length", seg.length}, {"mult", k}});
    return arr.dump();
}

Multisegment Multisegment::from_json_string(const std::string& text, const VertexRing& ring) {
    nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw SyntaxError(0, "multisegment JSON must be an array");
    Multisegment m(ring);
    for (auto& e : arr) {
        long long origin = e.at("origin").get<long long>();
        int length = e.at("length").get<int>();
        long long mult = e.value("mult", 1LL);
        if (length < 1 || mult < 1) throw SyntaxError(0, "bad segment entry");
        m.add(Segment{ring.normalize(origin), length}, mult);
    }
    return m;
}

Multisegment from_label(const Label& label, const VertexRing& ring) {
    label.validate();
    Multisegment m(ring);
    for (std::size_t i = 0; i < label.mu.size(); ++i)
        m.add(Segment{ring.normalize(label.a[i]), static_cast<int>(label.mu[i])});
    return m;
}

Multisegment reduce_mod(const Multisegment& m, int n) {
    if (m.ring().is_cyclic())
        throw std::invalid_argument("reduce_mod expects a multisegment over the integers");
    VertexRing target = VertexRing::cyclic(n);
    Multisegment r(target);
    for (auto& [seg, k] : m.terms())
        r.add(Segment{target.normalize(seg.origin), seg.length}, k);
    return r;
}

} // namespace msdual
