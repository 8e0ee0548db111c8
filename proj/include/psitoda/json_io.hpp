#ifndef PSITODA_JSON_IO_HPP
#define PSITODA_JSON_IO_HPP

#include <json.hpp>

#include "psitoda/curve.hpp"
#include "psitoda/extint.hpp"
#include "psitoda/genus2.hpp"
#include "psitoda/toda.hpp"
#include "psitoda/tropical.hpp"
#include "psitoda/valuation.hpp"

namespace psitoda {

// All exact values serialize as strings (never floats); ExtInt as an
// integer or "inf"/"-inf". Key order is fixed (ordered_json) so identical
// inputs produce byte-identical output.
using Json = nlohmann::ordered_json;

Json to_json(const Rational &r);
Rational rational_from_json(const Json &j);

Json to_json(const QuadExt &q);       // {"a": "p/q", "b": "p/q", "r": "p/q"}
QuadExt quadext_from_json(const Json &j);

Json to_json(const ExtInt &v);        // integer | "inf" | "-inf"
ExtInt extint_from_json(const Json &j);

Json to_json(const MultiPoly &p);     // sorted term list
Json upoly_to_json(const UPoly &p);   // dense coefficient strings, low to high
UPoly upoly_from_json(const Json &j);

Json to_json(const EllipticCurve &c); // {"genus": 1, "lambda": [...]}
EllipticCurve curve_from_json(const Json &j);

Json to_json(const Genus2Curve &c);   // {"genus": 2, "lambda": [...]}
Genus2Curve genus2_from_json(const Json &j);

Json to_json(const PointValue &p);    // {"x": ..., "y": {...}}
PointValue point_from_json(const EllipticCurve &c, const Json &j);

/// {"kind": "generic", "x":..., "y":...} | {"kind": "branch", "root": ...}
/// | {"kind": "branch", "minpoly": [...]} | {"kind": "branch_y_zero"}
/// | {"kind": "infinity"}
ValuationPoint vpoint_from_json(const EllipticCurve &c, const Json &j);

Json to_json(const GridValue &v);     // QuadExt object, "inf", or plain string
Json to_json(const TodaGrid &g);
Json to_json(const TropicalGrid &g);
std::string tropical_grid_csv(const TropicalGrid &g);

Json to_json(const MumfordDivisor &d); // {"u": [...], "v": [...]}
MumfordDivisor divisor_from_json(const Json &j);

/// Strict object reader: every key must be consumed, unknown keys reject.
void require_keys(const Json &j, std::initializer_list<const char *> required,
                  std::initializer_list<const char *> optional = {});

} // namespace psitoda

#endif
