#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "liesym/endomorphism.hpp"
#include "liesym/errors.hpp"
#include "liesym/free_lie.hpp"
#include "liesym/metabelian.hpp"
#include "liesym/parse.hpp"
#include "liesym/printing.hpp"
#include "liesym/symmetry.hpp"
#include "liesym/verify.hpp"

namespace {

struct Options {
  int rank = 2;
  std::string variety = "metabelian";
  int cls = 0;
  unsigned long long seed = 1;
  bool json = false;
};

liesym::AlgebraSpec spec_from(const Options& o) {
  if (o.variety == "free") return liesym::AlgebraSpec::free_lie(o.rank);
  if (o.variety == "metabelian") return liesym::AlgebraSpec::metabelian(o.rank);
  if (o.cls < 2)
    throw liesym::DomainError("the nilpotent variety needs --class C with C >= 2");
  return liesym::AlgebraSpec::nilpotent(o.rank, o.cls);
}

std::string print_element(const liesym::Element& e) {
  return std::visit([](const auto& x) { return liesym::print_canonical(x); }, e);
}

std::pair<liesym::Rational, liesym::Rational> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw liesym::ParseError("expected two comma-separated rationals", 1, 1);
  return {liesym::Rational::from_string(text.substr(0, comma)),
          liesym::Rational::from_string(text.substr(comma + 1))};
}

int cmd_normalize(const Options& o, const std::string& expr) {
  std::cout << print_element(liesym::parse_lie(expr, spec_from(o))) << '\n';
  return 0;
}

int cmd_bracket(const Options& o, const std::string& lhs, const std::string& rhs) {
  const auto spec = spec_from(o);
  const auto a = liesym::parse_lie(lhs, spec);
  const auto b = liesym::parse_lie(rhs, spec);
  if (std::holds_alternative<liesym::FreeLieElement>(a))
    std::cout << liesym::print_canonical(
                     free_bracket(std::get<liesym::FreeLieElement>(a),
                                  std::get<liesym::FreeLieElement>(b)))
              << '\n';
  else
    std::cout << liesym::print_canonical(bracket(std::get<liesym::MetabelianElement>(a),
                                                 std::get<liesym::MetabelianElement>(b)))
              << '\n';
  return 0;
}

int cmd_act(const Options& o, const std::string& perm, const std::string& expr) {
  const auto spec = spec_from(o);
  const auto pi = liesym::parse_permutation(perm, o.rank);
  const auto e = liesym::parse_lie(expr, spec);
  std::cout << std::visit(
                   [&](const auto& x) { return liesym::print_canonical(liesym::act(pi, x)); }, e)
            << '\n';
  return 0;
}

int cmd_symmetrize(const Options& o, const std::string& expr) {
  const auto e = liesym::parse_lie(expr, spec_from(o));
  std::cout << std::visit(
                   [](const auto& x) { return liesym::print_canonical(liesym::reynolds(x)); }, e)
            << '\n';
  return 0;
}

int cmd_is_symmetric(const Options& o, const std::string& expr) {
  const auto e = liesym::parse_lie(expr, spec_from(o));
  const bool ok = std::visit([](const auto& x) { return liesym::is_symmetric(x).ok; }, e);
  std::cout << (ok ? "true" : "false") << '\n';
  return 0;
}

int cmd_basis(const Options& o, int degree, bool symmetric) {
  const auto spec = spec_from(o);
  if (spec.variety == liesym::Variety::Free) {
    if (symmetric) {
      for (const auto& e : liesym::symmetric_basis_free(o.rank, degree))
        std::cout << liesym::print_canonical(e) << '\n';
    } else {
      for (const auto& w : liesym::lyndon_words(o.rank, degree))
        std::cout << liesym::print_canonical(liesym::dynkin_bracket(w, o.rank)) << '\n';
    }
    return 0;
  }
  const auto elems =
      symmetric ? liesym::symmetric_basis(spec, degree) : liesym::basis(spec, degree);
  for (const auto& e : elems) std::cout << liesym::print_canonical(e) << '\n';
  return 0;
}

int cmd_apply_aut(const Options& o, const std::string& expr, const std::string& xi_arg,
                  const std::string& psi_arg, const std::string& eps_arg,
                  const std::string& phi_arg) {
  const auto spec = spec_from(o);
  const auto e = liesym::parse_lie(expr, spec);

  if (std::holds_alternative<liesym::FreeLieElement>(e)) {
    if (xi_arg.empty())
      throw liesym::DomainError(
          "only --xi applies under the free variety; inner families need the "
          "metabelian or nilpotent quotient");
    if (o.rank != 2) throw liesym::DomainError("xi(a,b) is a rank-2 map");
    const auto [a, b] = parse_pair(xi_arg);
    std::cout << liesym::print_canonical(
                     liesym::linear_xi(a, b).apply(std::get<liesym::FreeLieElement>(e)))
              << '\n';
    return 0;
  }

  const auto& me = std::get<liesym::MetabelianElement>(e);
  liesym::Endomorphism phi = liesym::Endomorphism::identity(spec);
  if (!xi_arg.empty()) {
    if (o.rank != 2) throw liesym::DomainError("xi(a,b) is a rank-2 map");
    const auto [a, b] = parse_pair(xi_arg);
    phi = liesym::xi_endomorphism(spec, a, b);
  } else if (!psi_arg.empty()) {
    const auto u = std::get<liesym::MetabelianElement>(liesym::parse_lie(psi_arg, spec));
    phi = liesym::inner_psi(u);
  } else if (!eps_arg.empty()) {
    const auto u = std::get<liesym::MetabelianElement>(liesym::parse_lie(eps_arg, spec));
    phi = liesym::inner_eps(u);
  } else {
    if (!spec.is_nilpotent() || o.rank != 2)
      throw liesym::DomainError("--phi needs --variety nilpotent with rank 2");
    phi = liesym::phi_f(liesym::parse_poly(phi_arg, 2), spec.cls);
  }
  std::cout << liesym::print_canonical(phi.apply(me)) << '\n';
  return 0;
}

int cmd_verify(const Options& o, const std::string& target, int maxdeg, int trials, int samples,
               int fdeg, bool mutate, bool paranoid) {
  liesym::VerifyOptions vopt;
  vopt.seed = o.seed;
  vopt.mutate = mutate;
  vopt.paranoid = paranoid;

  liesym::VerificationReport rep;
  if (target == "thm-metabelian") {
    rep = liesym::verify_inner_metabelian(o.rank, maxdeg, trials, vopt);
  } else if (target == "lemma-linear") {
    rep = liesym::verify_lemma_linear(o.rank, vopt);
  } else if (target == "thm-nilpotent") {
    if (o.cls < 3) throw liesym::DomainError("thm-nilpotent needs --class C with C >= 3");
    rep = liesym::verify_inner_nilpotent(o.rank, o.cls, maxdeg, trials, vopt);
  } else if (target == "aut-l2") {
    if (o.rank != 2) throw liesym::DomainError("aut-l2 is a rank-2 result");
    rep = liesym::verify_aut_l2(maxdeg, samples, vopt);
  } else if (target == "cor-f2") {
    if (o.rank != 2) throw liesym::DomainError("cor-f2 is a rank-2 result");
    rep = liesym::verify_corollary_f2(maxdeg, samples, vopt);
  } else {
    if (o.cls < 3) throw liesym::DomainError("phi-l2c needs --class C with C >= 3");
    if (o.rank != 2) throw liesym::DomainError("phi-l2c is a rank-2 result");
    rep = liesym::verify_phi_l2c(o.cls, fdeg, vopt);
  }

  if (o.json)
    std::cout << rep.to_json_string() << '\n';
  else
    std::cout << rep.to_text();
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for free and metabelian Lie algebras"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--rank", opt.rank, "number of generators")->check(CLI::Range(2, 26));
  app.add_option("--variety", opt.variety, "free | metabelian | nilpotent")
      ->check(CLI::IsMember({"free", "metabelian", "nilpotent"}));
  app.add_option("--class", opt.cls, "nilpotency class (nilpotent variety)");
  app.add_option("--seed", opt.seed, "random seed for verifiers");
  app.add_flag("--json", opt.json, "machine-readable verifier reports");

  std::string expr, rhs, perm, target;
  int degree = 1;

  auto* normalize = app.add_subcommand("normalize", "parse and print in canonical form");
  normalize->add_option("expr", expr)->required();

  auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two expressions");
  bracket_cmd->add_option("lhs", expr)->required();
  bracket_cmd->add_option("rhs", rhs)->required();

  auto* act_cmd = app.add_subcommand("act", "apply a generator permutation");
  act_cmd->add_option("perm", perm, "one-line images, e.g. \"2,1,3\"")->required();
  act_cmd->add_option("expr", expr)->required();

  auto* symmetrize = app.add_subcommand("symmetrize", "Reynolds average over S_n");
  symmetrize->add_option("expr", expr)->required();

  auto* is_sym = app.add_subcommand("is-symmetric", "test invariance under S_n");
  is_sym->add_option("expr", expr)->required();

  auto* basis_cmd = app.add_subcommand("basis", "homogeneous basis of one degree");
  basis_cmd->add_option("degree", degree)->required()->check(CLI::PositiveNumber);

  auto* sym_basis = app.add_subcommand("symmetric-basis", "basis of the S_n-fixed slice");
  sym_basis->add_option("degree", degree)->required()->check(CLI::PositiveNumber);

  std::string xi_arg, psi_arg, eps_arg, phi_arg;
  auto* aut = app.add_subcommand("apply-aut", "apply one automorphism family");
  aut->add_option("expr", expr)->required();
  auto* family = aut->add_option_group("family", "exactly one of the four families");
  family->add_option("--xi", xi_arg, "a,b for x1 -> a x1 + b x2, x2 -> b x1 + a x2");
  family->add_option("--psi", psi_arg, "u for psi_u = 1 + ad u");
  family->add_option("--eps", eps_arg, "u for eps_u = exp(ad u), truncated by the class");
  family->add_option("--phi", phi_arg, "f for x -> x + [x,y]f, y -> y - [x,y]f(y,x)");
  family->require_option(1);

  int maxdeg = 6, trials = 50, samples = 100, fdeg = 2;
  bool mutate = false, paranoid = false;
  auto* verify = app.add_subcommand("verify", "run one executable check");
  verify->add_option("target", target)
      ->required()
      ->check(CLI::IsMember({"thm-metabelian", "lemma-linear", "thm-nilpotent", "aut-l2",
                             "cor-f2", "phi-l2c"}));
  verify->add_option("--max-degree", maxdeg, "degree bound")->check(CLI::Range(3, 12));
  verify->add_option("--trials", trials)->check(CLI::PositiveNumber);
  verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
  verify->add_option("--fdeg", fdeg, "degree bound for the polynomial f")
      ->check(CLI::NonNegativeNumber);
  verify->add_flag("--mutate", mutate, "corrupt one hypothesis; the run must fail");
  verify->add_flag("--paranoid", paranoid, "check symmetry over all n! permutations");

  for (auto* sub : {normalize, bracket_cmd, act_cmd, symmetrize, is_sym, basis_cmd, sym_basis,
                    aut, verify})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (normalize->parsed()) return cmd_normalize(opt, expr);
    if (bracket_cmd->parsed()) return cmd_bracket(opt, expr, rhs);
    if (act_cmd->parsed()) return cmd_act(opt, perm, expr);
    if (symmetrize->parsed()) return cmd_symmetrize(opt, expr);
    if (is_sym->parsed()) return cmd_is_symmetric(opt, expr);
    if (basis_cmd->parsed()) return cmd_basis(opt, degree, false);
    if (sym_basis->parsed()) return cmd_basis(opt, degree, true);
    if (aut->parsed()) return cmd_apply_aut(opt, expr, xi_arg, psi_arg, eps_arg, phi_arg);
    if (verify->parsed())
      return cmd_verify(opt, target, maxdeg, trials, samples, fdeg, mutate, paranoid);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
