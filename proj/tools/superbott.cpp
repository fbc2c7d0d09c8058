// superbott: characters and cohomology of Schur bundles on super Grassmannians.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "json_output.hpp"
#include "superbott/superbott.hpp"

namespace {

using namespace superbott;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitMismatch = 3;

struct Options {
  bool json = false;
  std::string dim;
  std::string grass;
  std::string flag;
  std::string alpha = "[]";
  std::string beta = "[]";
  std::string lambda = "[]";
  std::string mu = "[]";
  bool verify = false;
  int jobs = 1;
  std::string lr_lambda, lr_mu, lr_nu;
  std::vector<int> codim_args;
};

std::pair<int, int> parse_pair(const std::string& text, const char* what) {
  const auto v = parse_int_list(text);
  if (v.size() != 2) throw ParseError(std::string(what) + " expects two integers 'a,b'");
  return {v[0], v[1]};
}

SuperDim parse_dim(const std::string& text) {
  if (text.empty()) throw ParseError("--dim is required");
  const auto [m, n] = parse_pair(text, "--dim");
  if (m < 0 || n < 0) throw ParseError("--dim entries must be nonnegative");
  return {m, n};
}

BundleSpec bundle(const Options& o) {
  if (o.grass.empty()) throw ParseError("--grass p,q is required");
  const auto [p, q] = parse_pair(o.grass, "--grass");
  return {p, q, parse_dim(o.dim), parse_partition(o.alpha), parse_partition(o.beta)};
}

FlagSpec flag(const Options& o) {
  FlagSpec f;
  std::stringstream ss(o.flag);
  std::string step;
  while (std::getline(ss, step, ':')) f.steps.push_back(parse_pair(step, "--flag"));
  if (f.steps.empty()) throw ParseError("--flag expects p1,q1:p2,q2:...");
  f.d = parse_dim(o.dim);
  f.alpha = parse_partition(o.alpha);
  f.beta = parse_partition(o.beta);
  return f;
}

// ---------------------------------------------------------------------------
// Table output

void print_character(std::ostream& out, const VirtualCharacter& c, const std::string& indent) {
  if (c.empty()) {
    out << indent << "0\n";
    return;
  }
  for (const auto& [key, mult] : c.terms()) {
    out << indent << to_string(key.first) << " | " << to_string(key.second);
    if (mult != 1) out << "  x" << mult;
    out << "  (dim " << (weyl_dim(key.first) * weyl_dim(key.second)).str() << ")\n";
  }
  out << indent << "total dim " << total_dim(c).str() << "\n";
}

void print_graded(std::ostream& out, const GradedCharacter& g) {
  if (g.empty()) out << "all cohomology vanishes\n";
  for (const auto& [deg, c] : g.degrees()) {
    out << "H^" << deg << ":\n";
    print_character(out, c, "  ");
  }
}

void emit(const Options& o, const json& j, const std::function<void(std::ostream&)>& table) {
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    table(std::cout);
}

// ---------------------------------------------------------------------------
// Commands

int run_char_rational(const Options& o) {
  const SuperDim d = parse_dim(o.dim);
  const Partition lambda = parse_partition(o.lambda), mu = parse_partition(o.mu);
  const VirtualCharacter c = rational_schur_char(lambda, mu, d);
  json j = json_out::character(c);
  j["lambda"] = to_string(lambda);
  j["mu"] = to_string(mu);
  j["dim"] = json_out::dim_string(d);
  j["irreducible_case"] = is_irreducible_case(lambda, mu, d);
  emit(o, j, [&](std::ostream& out) {
    out << "S_[" << to_string(lambda) << ";" << to_string(mu) << "](V), V of dimension " << json_out::dim_string(d)
        << "\n";
    print_character(out, c, "  ");
  });
  return kExitOk;
}

int run_char_super(const Options& o) {
  const SuperDim d = parse_dim(o.dim);
  const Partition lambda = parse_partition(o.lambda);
  const VirtualCharacter c = super_schur_decompose(lambda, d);
  json j = json_out::character(c);
  j["lambda"] = to_string(lambda);
  j["dim"] = json_out::dim_string(d);
  emit(o, j, [&](std::ostream& out) {
    out << "S_" << to_string(lambda) << "(V), V of dimension " << json_out::dim_string(d) << "\n";
    print_character(out, c, "  ");
  });
  return kExitOk;
}

int run_verify(const Options& o, const BundleSpec& s) {
  E1Options eo;
  eo.jobs = o.jobs;
  const VerifyReport r = verify_main_theorem(s, eo);
  emit(o, json_out::verify(r), [&](std::ostream& out) {
    out << "hypothesis: " << to_string(r.hypothesis) << "\n";
    out << "closed form:\n";
    print_graded(out, r.expected);
    if (r.ok()) {
      out << "E1 page agrees in every degree\n";
      return;
    }
    out << "E1 page differs:\n";
    for (const auto& [deg, c] : r.diffs) {
      out << "  degree " << deg << " (E1 minus closed form):\n";
      print_character(out, c, "    ");
    }
  });
  return r.ok() ? kExitOk : kExitMismatch;
}

int run_cohom(const Options& o) {
  if (!o.flag.empty()) {
    if (!o.grass.empty()) throw ParseError("--grass and --flag are mutually exclusive");
    if (o.verify) throw ParseError("--verify is only available for --grass");
    const FlagSpec f = flag(o);
    const GradedCharacter g = partial_flag_char(f);
    json j = json_out::graded(g);
    j["hilbert"] = json_out::hilbert(partial_flag_hilbert(f));
    emit(o, j, [&](std::ostream& out) {
      out << "H(O) = " << to_string(partial_flag_hilbert(f)) << "\n";
      print_graded(out, g);
    });
    return kExitOk;
  }
  const BundleSpec s = bundle(o);
  if (o.verify) return run_verify(o, s);
  const GradedCharacter g = main_theorem_char(s);
  json j = json_out::graded(g);
  j["hypothesis"] = to_string(hypothesis_case(s));
  j["hilbert"] = json_out::hilbert(structure_sheaf_hilbert(s));
  emit(o, j, [&](std::ostream& out) {
    out << "H(O) = " << to_string(structure_sheaf_hilbert(s)) << "\n";
    print_graded(out, g);
  });
  return kExitOk;
}

int run_e1(const Options& o) {
  const BundleSpec s = bundle(o);
  E1Options eo;
  eo.jobs = o.jobs;
  const E1Page page = e1_page(s, eo);
  json j = json_out::e1(page);
  j["hypothesis"] = to_string(hypothesis_case(s));
  emit(o, j, [&](std::ostream& out) {
    for (const auto& [key, c] : page.bigraded) {
      out << "H^" << key.first << ", filtration " << key.second << ":\n";
      print_character(out, c, "  ");
    }
    if (page.bigraded.empty()) out << "E1 page vanishes\n";
    if (page.possibly_nondegenerate()) out << "odd-degree terms present: spectral sequence possibly nondegenerate\n";
  });
  return kExitOk;
}

int run_hilbert_grass(const Options& o) {
  BundleSpec s = bundle(o);
  const HilbertSeries h = structure_sheaf_hilbert(s);
  emit(o, json_out::hilbert(h), [&](std::ostream& out) { out << to_string(h) << "\n"; });
  return kExitOk;
}

int run_hilbert_flag(const Options& o) {
  const HilbertSeries h = partial_flag_hilbert(flag(o));
  emit(o, json_out::hilbert(h), [&](std::ostream& out) { out << to_string(h) << "\n"; });
  return kExitOk;
}

int run_lr(const Options& o) {
  const Partition lambda = parse_partition(o.lr_lambda);
  const Partition mu = parse_partition(o.lr_mu);
  const Partition nu = parse_partition(o.lr_nu);
  const Mult c = lr_coefficient(lambda, mu, nu);
  json j{{"lambda", to_string(lambda)}, {"mu", to_string(mu)}, {"nu", to_string(nu)}, {"coefficient", std::to_string(c)}};
  emit(o, j, [&](std::ostream& out) { out << c << "\n"; });
  return kExitOk;
}

int run_codim(const Options& o) {
  const auto& a = o.codim_args;
  const long long c = ci_codim(a.at(0), a.at(1), a.at(2), a.at(3), a.at(4));
  emit(o, json{{"codim", std::to_string(c)}}, [&](std::ostream& out) { out << c << "\n"; });
  return kExitOk;
}

void report(const std::string& kind, const std::string& message) {
  std::cerr << json_out::error(kind, message).dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Characters and cohomology of Schur bundles on super Grassmannians"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit JSON instead of a table");

  auto add_dim = [&](CLI::App* sub) { sub->add_option("--dim", o.dim, "Super dimension m,n")->required(); };
  auto add_bundle = [&](CLI::App* sub) {
    add_dim(sub);
    sub->add_option("--alpha", o.alpha, "Partition for the quotient bundle, e.g. [2,1]");
    sub->add_option("--beta", o.beta, "Partition for the dual sub-bundle");
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit JSON instead of a table"); };

  auto* char_rational = app.add_subcommand("char-rational", "Character of the rational Schur functor S_[lambda;mu](V)");
  add_dim(char_rational);
  char_rational->add_option("--lambda", o.lambda, "Covariant partition");
  char_rational->add_option("--mu", o.mu, "Contravariant partition");
  add_json(char_rational);

  auto* char_super = app.add_subcommand("char-super", "Character of the super Schur functor S_lambda(V0|V1)");
  add_dim(char_super);
  char_super->add_option("--lambda", o.lambda, "Partition");
  add_json(char_super);

  auto* cohom = app.add_subcommand("cohom", "Cohomology of S_alpha Q (x) S_beta(R*) from the closed form");
  add_bundle(cohom);
  cohom->add_option("--grass", o.grass, "Sub-bundle rank p,q");
  cohom->add_option("--flag", o.flag, "Flag steps p1,q1:p2,q2:...");
  cohom->add_flag("--verify", o.verify, "Compare with the E1 page");
  cohom->add_option("--jobs", o.jobs, "Worker threads for the E1 page")->check(CLI::PositiveNumber);
  add_json(cohom);

  auto* verify = app.add_subcommand("verify", "Compare the E1 page with the closed form");
  add_bundle(verify);
  verify->add_option("--grass", o.grass, "Sub-bundle rank p,q")->required();
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_json(verify);

  auto* e1 = app.add_subcommand("e1", "E1 page of the J-adic spectral sequence");
  add_bundle(e1);
  e1->add_option("--grass", o.grass, "Sub-bundle rank p,q")->required();
  e1->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_json(e1);

  auto* hilbert_grass = app.add_subcommand("hilbert-grass", "Hilbert series of H(X; O_X) for Gr(p|q, V)");
  add_dim(hilbert_grass);
  hilbert_grass->add_option("--grass", o.grass, "Sub-bundle rank p,q")->required();
  add_json(hilbert_grass);

  auto* hilbert_flag = app.add_subcommand("hilbert-flag", "Hilbert series of H(F; O_F) for a partial flag");
  add_dim(hilbert_flag);
  hilbert_flag->add_option("--flag", o.flag, "Flag steps p1,q1:p2,q2:...")->required();
  add_json(hilbert_flag);

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^nu_{lambda,mu}");
  lr->add_option("lambda", o.lr_lambda, "First factor")->required();
  lr->add_option("mu", o.lr_mu, "Second factor")->required();
  lr->add_option("nu", o.lr_nu, "Product component")->required();
  add_json(lr);

  auto* codim = app.add_subcommand("codim", "Codimension of the complete-intersection locus");
  codim->add_option("dims", o.codim_args, "a1 a2 b c1 c2")->required()->expected(5);
  add_json(codim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  try {
    if (*char_rational) return run_char_rational(o);
    if (*char_super) return run_char_super(o);
    if (*cohom) return run_cohom(o);
    if (*verify) return run_verify(o, bundle(o));
    if (*e1) return run_e1(o);
    if (*hilbert_grass) return run_hilbert_grass(o);
    if (*hilbert_flag) return run_hilbert_flag(o);
    if (*lr) return run_lr(o);
    if (*codim) return run_codim(o);
  } catch (const superbott::ParseError& e) {
    report("malformed", e.what());
    return kExitMalformed;
  } catch (const superbott::PreconditionError& e) {
    report("precondition", e.what());
    return kExitPrecondition;
  } catch (const superbott::ResourceError& e) {
    report("resource", e.what());
    return kExitPrecondition;
  }
  return kExitMalformed;
}
