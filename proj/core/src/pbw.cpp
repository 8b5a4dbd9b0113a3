#include "msdual/pbw.hpp"

#include <sstream>

#include "json.hpp"

namespace msdual {

void PBWVector::add_term(const Multisegment& m, const LaurentPoly& c) {
    if (c.is_zero()) return;
    if (!(m.ring() == ring_)) throw std::invalid_argument("pbw term over a different ring");
    if (!terms_.empty() && !(terms_.begin()->first.degree() == m.degree()))
        throw std::invalid_argument("pbw vector must be homogeneous");
    auto [it, fresh] = terms_.emplace(m, LaurentPoly::zero());
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

PBWVector& PBWVector::operator+=(const PBWVector& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

PBWVector& PBWVector::operator-=(const PBWVector& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

PBWVector PBWVector::scaled(const LaurentPoly& c) const {
    PBWVector r(ring_);
    if (c.is_zero()) return r;
    for (auto& [m, k] : terms_) r.add_term(m, k * c);
    return r;
}

std::string PBWVector::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")<" << m.to_string() << ">";
        first = false;
    }
    return os.str();
}

std::string PBWVector::to_json_string() const {
    nlohmann::json j;
    j["ring"] = ring_.to_string();
    j["terms"] = nlohmann::json::array();
    for (auto& [m, c] : terms_) {
        nlohmann::json coeff = nlohmann::json::object();
        for (auto& [e, k] : c.terms()) coeff[std::to_string(e)] = k;
        j["terms"].push_back({{"multisegment", nlohmann::json::parse(m.to_json_string())},
                              {"coeff", std::move(coeff)}});
    }
    return j.dump(2);
}

PBWVector PBWVector::from_json_string(const std::string& text, const VertexRing& ring) {
    nlohmann::json j = nlohmann::json::parse(text);
    VertexRing actual = j.contains("ring") ? VertexRing::parse(j.at("ring").get<std::string>())
                                           : ring;
    PBWVector u(actual);
    for (auto& term : j.at("terms")) {
        Multisegment m = Multisegment::from_json_string(term.at("multisegment").dump(), actual);
        LaurentPoly c;
        for (auto& [e, k] : term.at("coeff").items())
            c += LaurentPoly::monomial(std::stoi(e), k.get<long long>());
        u.add_term(m, c);
    }
    return u;
}

} // namespace msdual
