#ifndef KMH_SERIALIZE_HPP
#define KMH_SERIALIZE_HPP

#include <json.hpp>

#include <string>

#include "kmh/affine_hecke.hpp"
#include "kmh/principal_series.hpp"

namespace kmh {

using json = nlohmann::json;

// Laurent scalars are [[qexp, coeff], ...] in increasing exponent; a bare
// integer is read as a constant.
json to_json(const Laurent& c);
Laurent laurent_from_json(const json& j);

json to_json(const Word& w);
Word word_from_json(const json& j);

json to_json(const GroupAlgebraElement& f);
GroupAlgebraElement group_algebra_from_json(const Datum& datum, const json& j);

json to_json(const HeckeElement& h);
HeckeElement hecke_from_json(const Datum& datum, const json& j);

json to_json(const AffineHeckeElement& a);
AffineHeckeElement affine_from_json(const Datum& datum, const json& j);

json to_json(const ModuleVector& v);
ModuleVector module_vector_from_json(const Datum& datum, const json& j);

/// {"values": [...], "q0": ...}; rationals as integers or "p/q" strings.
Character character_from_json(const Datum& datum, const json& j);

/// Echo of a realization: symmetrizer, rank, roots, coroots, and the null
/// root data when the GCM is affine.
json to_json(const RootDatum& d);

IntMatrix cartan_from_json(const json& j);

/// Parses JSON text; syntax errors become ParseError carrying `origin` and
/// the line number.
json parse_json_text(const std::string& text, const std::string& origin);
json read_json_file(const std::string& path);

} // namespace kmh

#endif // KMH_SERIALIZE_HPP
