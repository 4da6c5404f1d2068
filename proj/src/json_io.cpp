#include "chowlab/json_io.hpp"

#include <algorithm>
#include <bit>

namespace chowlab {

using nlohmann::json;

json poly_to_json(const IntPolynomial& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

IntPolynomial poly_from_json(const json& j) {
    if (!j.is_array()) throw ArgumentError("polynomial json: expected a coefficient array");
    std::vector<mpz_class> c;
    for (const auto& e : j) {
        if (e.is_number_integer())
            c.emplace_back(static_cast<long>(e.get<long long>()));
        else if (e.is_string())
            c.emplace_back(e.get<std::string>());
        else
            throw ArgumentError("polynomial json: coefficients must be integers or strings");
    }
    return IntPolynomial(std::move(c));
}

json matroid_to_json(const Matroid& m) {
    std::vector<Flat> sorted = m.flats;
    std::sort(sorted.begin(), sorted.end(), [](Flat a, Flat b) {
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
        return set_lex_less(a, b);
    });
    json flats = json::array();
    for (Flat f : sorted) {
        json one = json::array();
        for (int i = 0; i < m.ground; ++i)
            if (f >> i & 1) one.push_back(i);
        flats.push_back(std::move(one));
    }
    return json{{"ground", m.ground}, {"kind", "explicit"}, {"flats", std::move(flats)},
                {"r", m.rank()}};
}

Matroid matroid_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ground") || !j["ground"].is_number_integer())
        throw ArgumentError("matroid json: missing integer field 'ground'");
    int n = j["ground"].get<int>();
    std::string kind = j.value("kind", std::string("explicit"));
    if (kind == "boolean") return boolean_matroid(n);
    if (kind == "uniform") {
        if (!j.contains("r")) throw ArgumentError("matroid json: uniform kind needs 'r'");
        return uniform_matroid(j["r"].get<int>(), n);
    }
    if (kind != "explicit") throw ArgumentError("matroid json: unknown kind '" + kind + "'");
    if (!j.contains("flats") || !j["flats"].is_array())
        throw ArgumentError("matroid json: explicit kind needs a 'flats' array");
    std::vector<Flat> flats;
    for (const auto& one : j["flats"]) {
        if (!one.is_array()) throw ArgumentError("matroid json: each flat must be an array");
        Flat f = 0;
        for (const auto& e : one) {
            int i = e.get<int>();
            if (i < 0 || i >= n)
                throw ArgumentError("matroid json: element " + std::to_string(i) +
                                    " outside the ground set");
            f |= Flat(1) << i;
        }
        flats.push_back(f);
    }
    return from_flats(n, flats);
}

PosetPtr poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("elements"))
        throw ArgumentError("poset json: missing field 'elements'");
    int n = j["elements"].get<int>();
    if (n <= 0) throw ArgumentError("poset json: need at least one element");
    std::vector<char> leq(static_cast<size_t>(n) * n, 0);
    for (int s = 0; s < n; ++s) leq[s * n + s] = 1;
    if (j.contains("leq"))
        for (const auto& p : j["leq"]) {
            int s = p.at(0).get<int>(), t = p.at(1).get<int>();
            if (s < 0 || s >= n || t < 0 || t >= n)
                throw ArgumentError("poset json: leq index out of range");
            leq[s * n + t] = 1;
        }
    // reflexive-transitive closure
    for (int u = 0; u < n; ++u)
        for (int s = 0; s < n; ++s)
            if (leq[s * n + u])
                for (int t = 0; t < n; ++t)
                    if (leq[u * n + t]) leq[s * n + t] = 1;

    constexpr int kUnknown = -1;
    std::vector<int> rank(static_cast<size_t>(n) * n, kUnknown);
    for (int s = 0; s < n; ++s) rank[s * n + s] = 0;
    if (j.contains("rank"))
        for (const auto& p : j["rank"]) {
            int s = p.at(0).get<int>(), t = p.at(1).get<int>(), r = p.at(2).get<int>();
            if (s < 0 || s >= n || t < 0 || t >= n)
                throw ArgumentError("poset json: rank index out of range");
            if (!leq[s * n + t])
                throw ValidationError("poset json: rank given on incomparable pair (" +
                                      std::to_string(s) + "," + std::to_string(t) + ")");
            if (rank[s * n + t] != kUnknown && rank[s * n + t] != r)
                throw ValidationError("poset json: conflicting ranks for (" + std::to_string(s) +
                                      "," + std::to_string(t) + ")");
            rank[s * n + t] = r;
        }
    // propagate by additivity until a fixpoint
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < n; ++s)
            for (int u = 0; u < n; ++u) {
                if (!leq[s * n + u]) continue;
                for (int t = 0; t < n; ++t) {
                    if (!leq[u * n + t]) continue;
                    int &a = rank[s * n + u], &b = rank[u * n + t], &c = rank[s * n + t];
                    int known = (a != kUnknown) + (b != kUnknown) + (c != kUnknown);
                    if (known != 2) {
                        if (known == 3 && c != a + b)
                            throw ValidationError("poset json: rank not additive on chain (" +
                                                  std::to_string(s) + "," + std::to_string(u) +
                                                  "," + std::to_string(t) + ")");
                        continue;
                    }
                    if (c == kUnknown)
                        c = a + b;
                    else if (a == kUnknown)
                        a = c - b;
                    else
                        b = c - a;
                    changed = true;
                }
            }
    }
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (leq[s * n + t] && rank[s * n + t] == kUnknown)
                throw ValidationError("poset json: interval rank of (" + std::to_string(s) + "," +
                                      std::to_string(t) + ") is underdetermined");
    for (auto& r : rank)
        if (r == kUnknown) r = 0;
    return std::make_shared<WeaklyRankedPoset>(n, std::move(leq), std::move(rank));
}

json report_to_json(const VerificationReport& r) {
    return json{{"name", r.name}, {"instance", r.instance}, {"lhs", r.lhs},
                {"rhs", r.rhs},   {"pass", r.pass},         {"ms", r.millis}};
}

} // namespace chowlab
