// Command-line front end.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "kmh/cli.hpp"
#include "kmh/errors.hpp"
#include "kmh/principal_series.hpp"

using namespace kmh;
using kmh::cli::kExitOk;
using kmh::cli::kExitUsage;
using kmh::cli::kExitVerificationFailed;

namespace {

// Inline JSON, or @path to read a file.
json json_arg(const std::string& arg, const std::string& what) {
  if (!arg.empty() && arg[0] == '@')
    return read_json_file(arg.substr(1));
  return parse_json_text(arg, what);
}

void emit(const json& j, const std::string& out) {
  const auto text = j.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f)
    throw ParseError(out + ": cannot open for writing");
  f << text;
}

struct Common {
  std::string cartan;
  std::string realization;
  std::string out;

  void attach(CLI::App* app) {
    app->add_option("--cartan", cartan, "Cartan matrix JSON file")->required();
    app->add_option("--realization", realization, "standard | affine_l1 | affine_l2");
    app->add_option("--out", out, "output file (default: stdout)");
  }

  Datum datum() const {
    std::optional<Realization> kind;
    if (!realization.empty())
      kind = realization_from_string(realization);
    return cli::load_datum(cartan, kind);
  }
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hecke and affine Hecke algebras for Kac-Moody root data"};
  app.require_subcommand(1);
  int status = kExitOk;

  // gcm validate
  Common gcm_opts;
  auto* gcm_cmd = app.add_subcommand("gcm", "Cartan matrix utilities");
  gcm_cmd->require_subcommand(1);
  auto* gcm_validate = gcm_cmd->add_subcommand("validate", "validate and echo the realization");
  gcm_opts.attach(gcm_validate);
  gcm_validate->callback([&] { emit(to_json(*gcm_opts.datum()), gcm_opts.out); });

  // weyl ...
  Common weyl_opts;
  std::string word_a, word_b;
  std::size_t max_length = 6;
  auto* weyl_cmd = app.add_subcommand("weyl", "Weyl group computations");
  weyl_cmd->require_subcommand(1);
  auto* weyl_canon = weyl_cmd->add_subcommand("canon", "canonical reduced word");
  weyl_opts.attach(weyl_canon);
  weyl_canon->add_option("--word", word_a, "JSON array of 0-based indices")->required();
  weyl_canon->callback([&] {
    auto d = weyl_opts.datum();
    auto w = WeylElement::from_word(d, word_from_json(json_arg(word_a, "--word")));
    emit({{"word", w.word()}, {"length", w.length()}}, weyl_opts.out);
  });
  auto* weyl_mult = weyl_cmd->add_subcommand("mult", "product of two words");
  weyl_opts.attach(weyl_mult);
  weyl_mult->add_option("--left", word_a)->required();
  weyl_mult->add_option("--right", word_b)->required();
  weyl_mult->callback([&] {
    auto d = weyl_opts.datum();
    auto u = WeylElement::from_word(d, word_from_json(json_arg(word_a, "--left")));
    auto v = WeylElement::from_word(d, word_from_json(json_arg(word_b, "--right")));
    auto w = multiply(u, v);
    emit({{"word", w.word()}, {"length", w.length()}}, weyl_opts.out);
  });
  auto* weyl_bruhat = weyl_cmd->add_subcommand("bruhat", "Bruhat comparison left <= right");
  weyl_opts.attach(weyl_bruhat);
  weyl_bruhat->add_option("--left", word_a)->required();
  weyl_bruhat->add_option("--right", word_b)->required();
  weyl_bruhat->callback([&] {
    auto d = weyl_opts.datum();
    auto u = WeylElement::from_word(d, word_from_json(json_arg(word_a, "--left")));
    auto v = WeylElement::from_word(d, word_from_json(json_arg(word_b, "--right")));
    emit({{"left", u.word()}, {"right", v.word()}, {"leq", bruhat_leq(u, v)}}, weyl_opts.out);
  });
  auto* weyl_enum = weyl_cmd->add_subcommand("enum", "elements up to a length");
  weyl_opts.attach(weyl_enum);
  weyl_enum->add_option("--max-length", max_length)->required();
  weyl_enum->callback([&] {
    auto d = weyl_opts.datum();
    json list = json::array();
    for (const auto& w : enumerate_up_to_length(d, max_length))
      list.push_back(w.word());
    emit({{"count", list.size()}, {"elements", list}}, weyl_opts.out);
  });

  // aff ...
  Common aff_opts;
  std::string elem_a, elem_b, lambda_arg;
  int max_coord = 3;
  auto* aff_cmd = app.add_subcommand("aff", "affine Hecke algebra computations");
  aff_cmd->require_subcommand(1);
  auto* aff_mult = aff_cmd->add_subcommand("mult", "normal form of a product");
  aff_opts.attach(aff_mult);
  aff_mult->add_option("--left", elem_a, "affine element JSON or @file")->required();
  aff_mult->add_option("--right", elem_b, "affine element JSON or @file")->required();
  aff_mult->callback([&] {
    auto d = aff_opts.datum();
    auto a = affine_from_json(d, json_arg(elem_a, "--left"));
    auto b = affine_from_json(d, json_arg(elem_b, "--right"));
    emit(to_json(multiply(a, b)), aff_opts.out);
  });
  auto* aff_theta = aff_cmd->add_subcommand("theta", "Theta_lambda as an affine element");
  aff_opts.attach(aff_theta);
  aff_theta->add_option("--lambda", lambda_arg, "JSON integer array")->required();
  aff_theta->callback([&] {
    auto d = aff_opts.datum();
    auto lambda = json_arg(lambda_arg, "--lambda").get<Weight>();
    if (static_cast<int>(lambda.size()) != d->lattice_rank())
      throw ParseError("--lambda has wrong length");
    emit(to_json(theta(d, lambda)), aff_opts.out);
  });
  auto* aff_cross = aff_cmd->add_subcommand("verify-cross", "cross relation on the monomial box");
  aff_opts.attach(aff_cross);
  aff_cross->add_option("--max-coord", max_coord);
  aff_cross->callback([&] {
    auto d = aff_opts.datum();
    SweepConfig c;
    c.max_coord = max_coord;
    auto r = check_cross_relation(d, c);
    emit(to_json(r), aff_opts.out);
    if (!r.passed())
      status = kExitVerificationFailed;
  });

  // daha ...
  std::string daha_cartan, daha_out;
  bool center = false;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  auto* daha_cmd = app.add_subcommand("daha", "double affine Hecke algebras");
  daha_cmd->require_subcommand(1);
  auto* daha_build = daha_cmd->add_subcommand("build", "realize an affine GCM");
  daha_build->add_option("--cartan", daha_cartan)->required();
  daha_build->add_option("--center", center, "include the center (rank l+2)");
  daha_build->add_option("--out", daha_out);
  daha_build->callback([&] {
    auto ctx = build_daha(Gcm::validate(cartan_from_json(read_json_file(daha_cartan))), center);
    auto j = to_json(*ctx.datum);
    j["generators"] = ctx.datum->size();
    emit(j, daha_out);
  });
  auto* daha_central = daha_cmd->add_subcommand("central-check", "e^delta is central");
  daha_central->add_option("--cartan", daha_cartan)->required();
  daha_central->add_option("--center", center);
  daha_central->add_option("--seed", seed);
  daha_central->add_option("--trials", trials);
  daha_central->add_option("--out", daha_out);
  daha_central->callback([&] {
    auto ctx = build_daha(Gcm::validate(cartan_from_json(read_json_file(daha_cartan))), center);
    SweepConfig c;
    c.seed = seed;
    c.trials = trials;
    auto r = check_centrality(ctx.datum, c);
    emit(to_json(r), daha_out);
    if (!r.passed())
      status = kExitVerificationFailed;
  });

  // rep apply
  Common rep_opts;
  std::string poly_arg;
  auto* rep_cmd = app.add_subcommand("rep", "polynomial representation");
  rep_cmd->require_subcommand(1);
  auto* rep_apply = rep_cmd->add_subcommand("apply", "apply an element to a polynomial");
  rep_opts.attach(rep_apply);
  rep_apply->add_option("--elem", elem_a, "affine element JSON or @file")->required();
  rep_apply->add_option("--poly", poly_arg, "group algebra element JSON or @file")->required();
  rep_apply->callback([&] {
    auto d = rep_opts.datum();
    auto a = affine_from_json(d, json_arg(elem_a, "--elem"));
    auto f = group_algebra_from_json(d, json_arg(poly_arg, "--poly"));
    emit(to_json(poly_rep_apply(a, f)), rep_opts.out);
  });

  // pseries act
  Common ps_opts;
  std::string chi_path, vector_arg;
  std::size_t root_check = 3;
  auto* ps_cmd = app.add_subcommand("pseries", "principal series modules");
  ps_cmd->require_subcommand(1);
  auto* ps_act = ps_cmd->add_subcommand("act", "act on a vector of M_chi");
  ps_opts.attach(ps_act);
  ps_act->add_option("--chi", chi_path, "character JSON file")->required();
  ps_act->add_option("--elem", elem_a, "affine element JSON or @file")->required();
  ps_act->add_option("--vector", vector_arg, "module vector JSON or @file")->required();
  ps_act->add_option("--root-check-length", root_check);
  ps_act->callback([&] {
    auto d = ps_opts.datum();
    PrincipalSeries m(character_from_json(d, read_json_file(chi_path)), root_check);
    auto a = affine_from_json(d, json_arg(elem_a, "--elem"));
    auto v = module_vector_from_json(d, json_arg(vector_arg, "--vector"));
    emit(to_json(m.apply(a, v)), ps_opts.out);
  });

  // verify
  cli::RunConfig config;
  std::string verify_realization;
  bool serial = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
  verify_cmd->add_option("--cartan", config.cartan_path)->required();
  verify_cmd->add_option("--realization", verify_realization);
  verify_cmd->add_option("--max-length", config.max_length)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--max-coord", config.max_coord)->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", config.seed);
  verify_cmd->add_option("--trials", config.trials)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--out", config.output);
  verify_cmd->add_flag("--serial", serial, "evaluate cases on one thread");
  verify_cmd->callback([&] {
    if (!verify_realization.empty())
      config.realization = realization_from_string(verify_realization);
    config.exec = serial ? Execution::serial : Execution::parallel;
    auto result = cli::cmd_verify(config);
    emit(result.report, config.output);
    status = result.exit_code;
  });

  // compute
  Common compute_opts;
  std::string defs_path, expression;
  auto* compute_cmd = app.add_subcommand("compute", "evaluate a product expression");
  compute_opts.attach(compute_cmd);
  compute_cmd->add_option("--defs", defs_path, "JSON file with named weights and elements");
  compute_cmd->add_option("--expr", expression)->required();
  compute_cmd->callback([&] {
    auto d = compute_opts.datum();
    json defs = defs_path.empty() ? json::object() : read_json_file(defs_path);
    emit(cli::cmd_compute(d, defs, expression), compute_opts.out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const kmh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return status;
}
