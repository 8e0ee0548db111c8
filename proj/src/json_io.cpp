#include "psitoda/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "psitoda/error.hpp"

namespace psitoda {

namespace {

std::string need_string(const Json &j, const char *what) {
    if (!j.is_string()) throw DomainError(std::string(what) + ": expected a string");
    return j.get<std::string>();
}

} // namespace

void require_keys(const Json &j, std::initializer_list<const char *> required,
                  std::initializer_list<const char *> optional) {
    if (!j.is_object()) throw DomainError("config: expected a JSON object");
    for (const char *k : required)
        if (!j.contains(k)) throw DomainError(std::string("config: missing key \"") + k + "\"");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string &k = it.key();
        auto match = [&](const char *c) { return k == c; };
        if (std::any_of(required.begin(), required.end(), match)) continue;
        if (std::any_of(optional.begin(), optional.end(), match)) continue;
        throw DomainError("config: unknown key \"" + k + "\"");
    }
}

Json to_json(const Rational &r) { return r.str(); }

Rational rational_from_json(const Json &j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    return Rational::from_string(need_string(j, "rational"));
}

Json to_json(const QuadExt &q) {
    Json j;
    j["a"] = q.a().str();
    j["b"] = q.b().str();
    j["r"] = q.r().str();
    return j;
}

QuadExt quadext_from_json(const Json &j) {
    if (j.is_string() || j.is_number_integer()) return QuadExt(rational_from_json(j));
    require_keys(j, {"a", "b", "r"});
    return QuadExt(rational_from_json(j["a"]), rational_from_json(j["b"]),
                   rational_from_json(j["r"]));
}

Json to_json(const ExtInt &v) {
    if (v.is_pos_inf()) return "inf";
    if (v.is_neg_inf()) return "-inf";
    return v.finite_value();
}

ExtInt extint_from_json(const Json &j) {
    if (j.is_number_integer()) return ExtInt(j.get<std::int64_t>());
    std::string s = need_string(j, "extint");
    if (s == "inf") return ExtInt::pos_inf();
    if (s == "-inf") return ExtInt::neg_inf();
    throw DomainError("extint: expected integer, \"inf\" or \"-inf\"");
}

Json to_json(const MultiPoly &p) {
    Json terms = Json::array();
    for (const auto &[e, c] : p.terms()) {
        Json t;
        t["c"] = c.str();
        for (int i = 0; i < kNumVars; ++i)
            if (e[static_cast<std::size_t>(i)] != 0)
                t[var_name(static_cast<Var>(i))] = e[static_cast<std::size_t>(i)];
        terms.push_back(std::move(t));
    }
    return terms;
}

Json upoly_to_json(const UPoly &p) {
    Json a = Json::array();
    for (const auto &c : p) a.push_back(c.str());
    return a;
}

UPoly upoly_from_json(const Json &j) {
    if (!j.is_array()) throw DomainError("polynomial: expected a coefficient array");
    UPoly p;
    for (const auto &c : j) p.push_back(rational_from_json(c));
    return up_normalize(std::move(p));
}

Json to_json(const EllipticCurve &c) {
    Json j;
    j["genus"] = 1;
    Json lam = Json::array();
    for (int i = 0; i < 3; ++i) {
        if (!c.lambda(i)) throw DomainError("curve json: symbolic lambdas are not serializable");
        lam.push_back(c.lambda(i)->str());
    }
    j["lambda"] = std::move(lam);
    return j;
}

EllipticCurve curve_from_json(const Json &j) {
    require_keys(j, {"genus", "lambda"});
    if (!j["genus"].is_number_integer() || j["genus"].get<int>() != 1)
        throw DomainError("curve json: genus must be 1");
    const Json &lam = j["lambda"];
    if (!lam.is_array() || lam.size() != 3)
        throw DomainError("curve json: lambda must list [l0, l1, l2]");
    return EllipticCurve(rational_from_json(lam[0]), rational_from_json(lam[1]),
                         rational_from_json(lam[2]));
}

Json to_json(const Genus2Curve &c) {
    Json j;
    j["genus"] = 2;
    Json lam = Json::array();
    for (int i = 0; i < 5; ++i) lam.push_back(c.lambda(i).str());
    j["lambda"] = std::move(lam);
    return j;
}

Genus2Curve genus2_from_json(const Json &j) {
    require_keys(j, {"genus", "lambda"});
    if (!j["genus"].is_number_integer() || j["genus"].get<int>() != 2)
        throw DomainError("curve json: genus must be 2");
    const Json &lam = j["lambda"];
    if (!lam.is_array() || lam.size() != 5)
        throw DomainError("curve json: lambda must list [l0..l4]");
    return Genus2Curve(rational_from_json(lam[0]), rational_from_json(lam[1]),
                       rational_from_json(lam[2]), rational_from_json(lam[3]),
                       rational_from_json(lam[4]));
}

Json to_json(const PointValue &p) {
    Json j;
    j["x"] = p.x0().str();
    j["y"] = to_json(p.y0());
    return j;
}

PointValue point_from_json(const EllipticCurve &c, const Json &j) {
    require_keys(j, {"x", "y"});
    return PointValue(c, rational_from_json(j["x"]), quadext_from_json(j["y"]));
}

ValuationPoint vpoint_from_json(const EllipticCurve &c, const Json &j) {
    if (!j.is_object() || !j.contains("kind")) throw DomainError("point: missing \"kind\"");
    std::string kind = need_string(j["kind"], "point kind");
    if (kind == "generic") {
        require_keys(j, {"kind", "x", "y"});
        return ValuationPoint::generic(
            PointValue(c, rational_from_json(j["x"]), quadext_from_json(j["y"])));
    }
    if (kind == "branch") {
        require_keys(j, {"kind"}, {"root", "minpoly"});
        if (j.contains("root")) return ValuationPoint::branch(c, rational_from_json(j["root"]));
        if (j.contains("minpoly")) return ValuationPoint::branch_class(c, upoly_from_json(j["minpoly"]));
        throw DomainError("branch point: need \"root\" or \"minpoly\"");
    }
    if (kind == "branch_y_zero") {
        require_keys(j, {"kind"});
        return ValuationPoint::branch_y_zero(c);
    }
    if (kind == "infinity") {
        require_keys(j, {"kind"});
        return ValuationPoint::infinity(c);
    }
    throw DomainError("point: unknown kind \"" + kind + "\"");
}

Json to_json(const GridValue &v) {
    if (v.inf) return "inf";
    if (v.v.is_rational()) return v.v.rational_value().str();
    return to_json(v.v);
}

Json to_json(const TodaGrid &g) {
    Json j;
    j["kind"] = g.kind == GridKind::Phi ? "phi" : (g.kind == GridKind::U ? "U" : "V");
    j["i_range"] = Json::array({g.range.i_lo, g.range.i_hi});
    j["j_range"] = Json::array({g.range.j_lo, g.range.j_hi});
    Json rows = Json::array();
    for (const auto &row : g.cells) {
        Json r = Json::array();
        for (const auto &cell : row) r.push_back(to_json(cell));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const TropicalGrid &g) {
    Json j;
    j["i_range"] = Json::array({g.range.i_lo, g.range.i_hi});
    j["j_range"] = Json::array({g.range.j_lo, g.range.j_hi});
    j["d"] = to_json(g.d);
    Json rows = Json::array();
    for (const auto &row : g.cells) {
        Json r = Json::array();
        for (const auto &cell : row) r.push_back(to_json(cell));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string tropical_grid_csv(const TropicalGrid &g) {
    std::ostringstream os;
    os << "j\\i";
    for (int i = g.range.i_lo; i <= g.range.i_hi; ++i) os << "," << i;
    os << "\n";
    for (int j = g.range.j_lo; j <= g.range.j_hi; ++j) {
        os << j;
        for (int i = g.range.i_lo; i <= g.range.i_hi; ++i) os << "," << g.at(i, j).str();
        os << "\n";
    }
    return os.str();
}

Json to_json(const MumfordDivisor &d) {
    Json j;
    j["u"] = upoly_to_json(d.u);
    j["v"] = upoly_to_json(d.v);
    return j;
}

MumfordDivisor divisor_from_json(const Json &j) {
    require_keys(j, {"u", "v"});
    return MumfordDivisor{upoly_from_json(j["u"]), upoly_from_json(j["v"])};
}

} // namespace psitoda
