#ifndef HYPERJAC_IO_HPP
#define HYPERJAC_IO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hyperjac/curve.hpp"
#include "hyperjac/divisor.hpp"
#include "hyperjac/errors.hpp"
#include "hyperjac/poly.hpp"

namespace hyperjac {

// "GF(p)" or "QQ".
struct FieldSpec {
    bool rational = false;
    std::uint64_t p = 0;
};

inline FieldSpec parse_field_spec(std::string_view s) {
    if (s == "QQ" || s == "Q" || s == "rational") return {true, 0};
    if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')') {
        std::uint64_t p = 0;
        for (char ch : s.substr(3, s.size() - 4)) {
            if (ch < '0' || ch > '9') raise(errc::parse_error, "bad field spec '" + std::string(s) + "'");
            p = p * 10 + static_cast<std::uint64_t>(ch - '0');
        }
        return {false, p};
    }
    raise(errc::parse_error, "field must be \"GF(p)\" or \"QQ\", got '" + std::string(s) + "'");
}

inline std::string field_spec_string(const FieldSpec& fs) {
    return fs.rational ? "QQ" : "GF(" + std::to_string(fs.p) + ")";
}

namespace detail {

template <class K>
typename K::Elem elem_from_json(const K& k, const nlohmann::json& j) {
    if (j.is_number_integer()) return k.from_int(j.template get<long long>());
    if (j.is_string()) return k.parse(j.template get<std::string>());
    raise(errc::parse_error, "field elements are strings or integers");
}

} // namespace detail

// Curve config: {"genus": g, "field": "GF(p)"|"QQ", "lambda": {"2": ..., ...}}
inline FieldSpec field_spec_of_curve_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("field") || !j["field"].is_string())
        raise(errc::parse_error, "curve config needs a \"field\" string");
    return parse_field_spec(j["field"].get<std::string>());
}

template <class K>
Curve<K> curve_from_json(const K& k, const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("genus") || !j["genus"].is_number_integer())
        raise(errc::parse_error, "curve config needs an integer \"genus\"");
    const int genus = j["genus"].get<int>();
    std::map<int, typename K::Elem> lambda;
    if (j.contains("lambda")) {
        if (!j["lambda"].is_object()) raise(errc::parse_error, "\"lambda\" must be an object");
        for (const auto& [key, value] : j["lambda"].items()) {
            int idx = 0;
            for (char ch : key) {
                if (ch < '0' || ch > '9') raise(errc::parse_error, "bad lambda index '" + key + "'");
                idx = idx * 10 + (ch - '0');
            }
            lambda.emplace(idx, detail::elem_from_json(k, value));
        }
    }
    return Curve<K>::from_lambdas(k, genus, lambda);
}

// Point entry "(x,y)" with optional "^mult".
template <class K>
std::pair<AffinePoint<K>, int> parse_point_entry(const K& k, std::string_view s) {
    auto fail = [&]() -> void { raise(errc::parse_error, "bad point '" + std::string(s) + "'"); };
    std::size_t close = s.rfind(')');
    if (s.empty() || s.front() != '(' || close == std::string_view::npos) fail();
    std::string_view inner = s.substr(1, close - 1);
    std::size_t comma = inner.find(',');
    if (comma == std::string_view::npos) fail();
    auto strip = [](std::string_view v) {
        while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
        while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
        return v;
    };
    typename K::Elem x = k.parse(strip(inner.substr(0, comma)));
    typename K::Elem y = k.parse(strip(inner.substr(comma + 1)));
    int mult = 1;
    std::string_view tail = s.substr(close + 1);
    if (!tail.empty()) {
        if (tail.front() != '^' || tail.size() < 2) fail();
        mult = 0;
        for (char ch : tail.substr(1)) {
            if (ch < '0' || ch > '9') fail();
            mult = mult * 10 + (ch - '0');
        }
        if (mult < 1) fail();
    }
    return {AffinePoint<K>{x, y}, mult};
}

template <class K>
std::string point_entry_string(const AffinePoint<K>& p, int mult = 1) {
    std::string out = "(" + K::to_string(p.x) + "," + K::to_string(p.y) + ")";
    if (mult != 1) out += "^" + std::to_string(mult);
    return out;
}

// Divisor file: {"points": ["(x,y)", "(x,y)^2", ...]} or {"U": "...", "V": "..."},
// auto-detected by shape.
template <class K>
std::variant<PointDivisor<K>, MumfordDivisor<K>> divisor_from_json(const Curve<K>& c,
                                                                   const nlohmann::json& j) {
    const K& k = c.field();
    if (j.is_object() && j.contains("points")) {
        if (!j["points"].is_array()) raise(errc::parse_error, "\"points\" must be an array");
        std::vector<typename PointDivisor<K>::Entry> entries;
        for (const auto& e : j["points"]) {
            if (!e.is_string()) raise(errc::parse_error, "points are \"(x,y)\" strings");
            entries.push_back(parse_point_entry(k, e.template get<std::string>()));
        }
        return PointDivisor<K>(c, std::move(entries));
    }
    if (j.is_object() && j.contains("U") && j.contains("V")) {
        if (!j["U"].is_string() || !j["V"].is_string())
            raise(errc::parse_error, "\"U\" and \"V\" must be polynomial strings");
        Poly<K> u = parse_poly(k, j["U"].template get<std::string>());
        Poly<K> v = parse_poly(k, j["V"].template get<std::string>());
        return MumfordDivisor<K>(c, u, v);
    }
    raise(errc::parse_error, "divisor file needs \"points\" or \"U\"/\"V\"");
}

template <class K>
nlohmann::json mumford_to_json(const MumfordDivisor<K>& d) {
    return nlohmann::json{{"U", to_string(d.u())}, {"V", to_string(d.v())}};
}

} // namespace hyperjac

#endif
