#pragma once

#include <json.hpp>

#include "chowlab/matroid.hpp"
#include "chowlab/poly.hpp"
#include "chowlab/poset.hpp"
#include "chowlab/verify.hpp"

namespace chowlab {

/// Coefficient array, constant term first; [] for the zero polynomial.
nlohmann::json poly_to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const nlohmann::json& j);

/// Canonical matroid schema:
///   {"ground": n, "kind": "explicit", "flats": [[ints]...], "r": rank}
/// with flats as sorted 0-based element lists, ordered by (size, lex).
/// Parsing also accepts {"kind": "boolean"} and {"kind": "uniform", "r": r}.
nlohmann::json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const nlohmann::json& j);

/// Poset schema {"elements": n, "leq": [[i,j]...], "rank": [[i,j,r]...]}.
/// leq may list any generating relations (the reflexive-transitive closure is
/// taken); interval ranks are propagated by additivity and validated.
PosetPtr poset_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& r);

} // namespace chowlab
