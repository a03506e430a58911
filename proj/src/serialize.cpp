#include "kmh/serialize.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "kmh/errors.hpp"

namespace kmh {

namespace {

template <class T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad ") + what + ": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

void require_array(const json& j, const char* what) {
  if (!j.is_array())
    throw ParseError(std::string(what) + " must be a JSON array");
}

mpq_class rational_from_json(const json& j) {
  try {
    if (j.is_number_integer())
      return mpq_class(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
      mpq_class r(j.get<std::string>(), 10);
      r.canonicalize();
      if (r.get_den() == 0)
        throw ParseError("zero denominator");
      return r;
    }
  } catch (const std::invalid_argument&) {
  }
  throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

} // namespace

json to_json(const Laurent& c) {
  json out = json::array();
  for (const auto& [e, k] : c.terms())
    out.push_back(json::array({e, k}));
  return out;
}

Laurent laurent_from_json(const json& j) {
  if (j.is_number_integer())
    return Laurent(j.get<std::int64_t>());
  require_array(j, "coeff");
  std::vector<Laurent::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2)
      throw ParseError("coeff entries must be [qexp, int] pairs");
    terms.emplace_back(get_as<int>(t[0], "q exponent"), get_as<std::int64_t>(t[1], "coefficient"));
  }
  return Laurent::from_terms(std::move(terms));
}

json to_json(const Word& w) { return json(w); }

Word word_from_json(const json& j) {
  require_array(j, "word");
  return get_as<Word>(j, "word");
}

json to_json(const GroupAlgebraElement& f) {
  json out = json::array();
  for (const auto& [lambda, c] : f.terms())
    out.push_back({{"lambda", lambda}, {"coeff", to_json(c)}});
  return out;
}

GroupAlgebraElement group_algebra_from_json(const Datum& datum, const json& j) {
  require_array(j, "group algebra element");
  GroupAlgebraElement out(datum);
  for (const auto& t : j) {
    auto lambda = get_as<Weight>(field(t, "lambda"), "lambda");
    if (static_cast<int>(lambda.size()) != datum->lattice_rank())
      throw ParseError("lambda " + field(t, "lambda").dump() + " has wrong length for a rank-" +
                       std::to_string(datum->lattice_rank()) + " lattice");
    out.add_term(lambda, laurent_from_json(field(t, "coeff")));
  }
  return out;
}

json to_json(const HeckeElement& h) {
  json out = json::array();
  for (const auto& [w, c] : h.terms())
    out.push_back({{"word", w}, {"coeff", to_json(c)}});
  return out;
}

HeckeElement hecke_from_json(const Datum& datum, const json& j) {
  require_array(j, "Hecke element");
  HeckeElement out(datum);
  for (const auto& t : j) {
    // Non-reduced input words are multiplied out, not just relabeled.
    Word raw = word_from_json(field(t, "word"));
    WeylElement::from_word(datum, raw); // index validation
    HeckeElement x = HeckeElement::one(datum);
    for (auto it = raw.rbegin(); it != raw.rend(); ++it)
      x = mul_gen_left(*it, x);
    out += laurent_from_json(field(t, "coeff")) * x;
  }
  return out;
}

json to_json(const AffineHeckeElement& a) {
  json out = json::array();
  for (const auto& [w, f] : a.terms())
    out.push_back({{"word", w}, {"poly", to_json(f)}});
  return out;
}

AffineHeckeElement affine_from_json(const Datum& datum, const json& j) {
  require_array(j, "affine Hecke element");
  AffineHeckeElement out(datum);
  for (const auto& t : j) {
    Word raw = word_from_json(field(t, "word"));
    WeylElement::from_word(datum, raw); // index validation
    auto f = group_algebra_from_json(datum, field(t, "poly"));
    auto generators = embed_hecke([&] {
      HeckeElement x = HeckeElement::one(datum);
      for (auto it = raw.rbegin(); it != raw.rend(); ++it)
        x = mul_gen_left(*it, x);
      return x;
    }());
    out += multiply(embed_poly(f), generators);
  }
  return out;
}

json to_json(const ModuleVector& v) {
  json out = json::array();
  for (const auto& [w, c] : v)
    out.push_back({{"word", w}, {"coeff", c.get_str()}});
  return out;
}

ModuleVector module_vector_from_json(const Datum& datum, const json& j) {
  require_array(j, "module vector");
  ModuleVector out;
  for (const auto& t : j) {
    auto w = WeylElement::from_word(datum, word_from_json(field(t, "word")));
    auto& slot = out[w.word()];
    slot += rational_from_json(field(t, "coeff"));
    if (slot == 0)
      out.erase(w.word());
  }
  return out;
}

Character character_from_json(const Datum& datum, const json& j) {
  std::vector<mpq_class> values;
  const auto& vals = field(j, "values");
  require_array(vals, "values");
  for (const auto& v : vals)
    values.push_back(rational_from_json(v));
  return Character(datum, std::move(values), rational_from_json(field(j, "q0")));
}

json to_json(const RootDatum& d) {
  json out{{"cartan", d.gcm().entries()},
           {"symmetrizer", d.gcm().symmetrizer()},
           {"realization", to_string(d.kind())},
           {"rank", d.lattice_rank()},
           {"roots", d.roots()},
           {"coroots", d.coroots()}};
  if (d.delta()) {
    out["null_marks"] = null_marks(d.gcm());
    out["delta"] = *d.delta();
  }
  return out;
}

IntMatrix cartan_from_json(const json& j) {
  const auto& c = field(j, "cartan");
  require_array(c, "cartan");
  return get_as<IntMatrix>(c, "cartan");
}

json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
    throw ParseError(origin + ":" + std::to_string(line) + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

} // namespace kmh
