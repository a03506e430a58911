#include "kmh/cli.hpp"

#include <cctype>

#include "kmh/errors.hpp"

namespace kmh::cli {

Datum datum_from_json(const json& j, std::optional<Realization> override_kind) {
  auto gcm = Gcm::validate(cartan_from_json(j));
  Realization kind = Realization::standard;
  if (override_kind)
    kind = *override_kind;
  else if (j.contains("realization"))
    kind = realization_from_string(j.at("realization").get<std::string>());
  return make_datum(RootDatum::realize(gcm, kind));
}

Datum load_datum(const std::string& cartan_path, std::optional<Realization> override_kind) {
  const auto j = read_json_file(cartan_path);
  try {
    return datum_from_json(j, override_kind);
  } catch (const NotGCM& e) {
    throw NotGCM(cartan_path + ": " + e.what());
  } catch (const NotSymmetrizable& e) {
    throw NotSymmetrizable(cartan_path + ": " + e.what());
  } catch (const NotAffineType& e) {
    throw NotAffineType(cartan_path + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(cartan_path + ": " + e.what());
  }
}

VerifyResult cmd_verify(const Datum& datum, const RunConfig& config) {
  SweepConfig sweep{config.max_length, config.max_coord, config.seed, config.trials, config.exec};
  auto checks = run_suite(datum, sweep);
  std::size_t total = 0;
  json list = json::array();
  for (const auto& c : checks) {
    total += c.failure_count;
    list.push_back(to_json(c));
  }
  json report{{"datum", to_json(*datum)},
              {"config",
               {{"max_length", config.max_length},
                {"max_coord", config.max_coord},
                {"seed", config.seed},
                {"trials", config.trials}}},
              {"checks", std::move(list)},
              {"total_failures", total},
              {"status", total == 0 ? "pass" : "fail"}};
  return {std::move(report), total == 0 ? kExitOk : kExitVerificationFailed};
}

VerifyResult cmd_verify(const RunConfig& config) {
  return cmd_verify(load_datum(config.cartan_path, config.realization), config);
}

namespace {

class Parser {
public:
  Parser(const Datum& datum, const json& defs, const std::string& text)
      : datum_(datum), defs_(defs), text_(text) {}

  AffineHeckeElement parse() {
    auto v = expr();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::int64_t integer() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected an integer");
    try {
      return std::stoll(text_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  std::int64_t signed_integer() {
    if (accept('-'))
      return -integer();
    return integer();
  }

  std::string identifier() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_)
      fail("expected a name");
    return text_.substr(start, pos_ - start);
  }

  bool peek_identifier() {
    skip_space();
    return pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
  }

  static std::optional<int> suffix_index(const std::string& name, const std::string& prefix) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
      return std::nullopt;
    int v = 0;
    for (std::size_t k = prefix.size(); k < name.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(name[k])))
        return std::nullopt;
      v = v * 10 + (name[k] - '0');
    }
    return v;
  }

  std::vector<std::int64_t> int_list() {
    std::vector<std::int64_t> out;
    expect('[');
    if (accept(']'))
      return out;
    do
      out.push_back(signed_integer());
    while (accept(','));
    expect(']');
    return out;
  }

  // --- weights ---
  Weight weight_expr() {
    Weight acc = weight_term();
    for (;;) {
      if (accept('+'))
        acc = acc + weight_term();
      else if (accept('-'))
        acc = acc - weight_term();
      else
        return acc;
    }
  }

  Weight weight_term() {
    if (accept('-'))
      return -weight_term();
    if (peek_digit()) {
      auto k = integer();
      expect('*');
      return scaled(weight_atom(), k);
    }
    return weight_atom();
  }

  Weight weight_atom() {
    const auto r = static_cast<std::size_t>(datum_->lattice_rank());
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '[') {
      auto v = int_list();
      if (v.size() != r)
        fail("weight literal has wrong length");
      return v;
    }
    if (accept('(')) {
      auto v = weight_expr();
      expect(')');
      return v;
    }
    const auto name = identifier();
    if (defs_.contains("weights") && defs_["weights"].contains(name)) {
      auto v = defs_["weights"][name].get<Weight>();
      if (v.size() != r)
        fail("weight '" + name + "' has wrong length");
      return v;
    }
    if (name == "d") {
      if (!datum_->delta())
        fail("'d' needs an affine Cartan matrix");
      return *datum_->delta();
    }
    if (auto k = suffix_index(name, "w")) {
      if (*k >= static_cast<int>(r))
        fail("basis index out of range");
      Weight e(r, 0);
      e[*k] = 1;
      return e;
    }
    if (auto i = suffix_index(name, "a")) {
      if (*i >= datum_->size())
        fail("root index out of range");
      return datum_->root(*i);
    }
    fail("unknown weight '" + name + "'");
  }

  // --- algebra elements ---
  AffineHeckeElement expr() {
    auto acc = product();
    for (;;) {
      if (accept('+'))
        acc += product();
      else if (accept('-'))
        acc -= product();
      else
        return acc;
    }
  }

  AffineHeckeElement product() {
    auto acc = unary();
    while (accept('*'))
      acc = multiply(acc, unary());
    return acc;
  }

  AffineHeckeElement unary() {
    if (accept('-'))
      return -unary();
    return factor();
  }

  AffineHeckeElement scalar(const Laurent& c) {
    return embed_poly(GroupAlgebraElement::scalar(datum_, c));
  }

  AffineHeckeElement factor() {
    if (accept('(')) {
      auto v = expr();
      expect(')');
      return v;
    }
    if (peek_digit())
      return scalar(integer());
    if (!peek_identifier())
      fail("expected a factor");
    const auto name = identifier();
    if (name == "q") {
      int e = 1;
      if (accept('^'))
        e = static_cast<int>(signed_integer());
      return scalar(Laurent::q_pow(e));
    }
    if (name == "theta") {
      expect('(');
      auto lambda = weight_expr();
      expect(')');
      return theta(datum_, lambda);
    }
    if (name == "T") {
      auto w = int_list();
      Word word(w.begin(), w.end());
      WeylElement::from_word(datum_, word);
      return reduce_word_times(word, GroupAlgebraElement::one(datum_));
    }
    if (defs_.contains("elements") && defs_["elements"].contains(name))
      return named_element(defs_["elements"][name]);
    if (auto i = suffix_index(name, "Ts")) {
      if (*i >= datum_->size())
        fail("generator index out of range");
      return AffineHeckeElement::generator(datum_, *i);
    }
    fail("unknown name '" + name + "'");
  }

  AffineHeckeElement named_element(const json& def) {
    const auto type = def.value("type", std::string("affine"));
    const auto& value = def.at("value");
    if (type == "affine")
      return affine_from_json(datum_, value);
    if (type == "hecke")
      return embed_hecke(hecke_from_json(datum_, value));
    if (type == "poly")
      return embed_poly(group_algebra_from_json(datum_, value));
    fail("unknown element type '" + type + "'");
  }

  const Datum& datum_;
  const json& defs_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

} // namespace

AffineHeckeElement evaluate_expression(const Datum& datum, const json& defs,
                                       const std::string& expression) {
  return Parser(datum, defs, expression).parse();
}

json cmd_compute(const Datum& datum, const json& defs, const std::string& expression) {
  return to_json(evaluate_expression(datum, defs, expression));
}

} // namespace kmh::cli
