#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>

#include "superschur/alternant.hpp"
#include "superschur/errors.hpp"
#include "superschur/suites.hpp"

namespace superschur::cli {

namespace {

using nlohmann::ordered_json;

// Options whose values may legitimately start with '-'.
const std::vector<std::string> kSignedOptions{"--k", "--lambda", "--mu", "--I", "--J"};

// CLI11 would read "--lambda -2,0" as two flags; glue such pairs into
// "--lambda=-2,0" first.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const bool signed_opt = std::find(kSignedOptions.begin(), kSignedOptions.end(), args[i]) != kSignedOptions.end();
    if (signed_opt && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
        std::isdigit(static_cast<unsigned char>(args[i + 1][1]))) {
      out.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

IntSeq parse_seq(const std::string& text, const std::string& flag) {
  IntSeq out;
  if (text.empty() || text == "-") return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse_error, flag + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

ordered_json context_json(int m, int n) { return {{"m", m}, {"n", n}}; }

ordered_json poly_json(const LaurentPoly& f) {
  ordered_json terms = ordered_json::array();
  for (const auto& t : f.terms()) {
    std::vector<int> x;
    std::vector<int> y;
    for (int i = 0; i < f.m(); ++i) x.push_back(t.monomial[i]);
    for (int j = 0; j < f.n(); ++j) y.push_back(t.monomial[f.m() + j]);
    terms.push_back({{"coeff", t.coeff.get_str()}, {"x", x}, {"y", y}});
  }
  return {{"context", context_json(f.m(), f.n())}, {"terms", terms}};
}

void print_poly(std::ostream& out, const LaurentPoly& f, const std::string& format) {
  if (format == "json") {
    out << poly_json(f).dump() << '\n';
  } else {
    out << to_string(f) << '\n';
  }
}

ordered_json window_json(const Window& w) {
  return {{"index_bound", w.index_bound}, {"degree_bound", w.degree_bound}};
}

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse_error:
    case ErrorKind::invalid_index:
    case ErrorKind::invalid_context:
    case ErrorKind::context_mismatch:
    case ErrorKind::sector_violation:
      return usage;
    default:
      return check_failed;
  }
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Laurent supersymmetric polynomials", "superschur"};
  app.require_subcommand(1);

  int m = 1;
  int n = 0;
  std::string format;
  auto add_context = [&](CLI::App* sub) {
    sub->add_option("--m", m, "number of x variables")->check(CLI::Range(0, kMaxVariables));
    sub->add_option("--n", n, "number of y variables")->check(CLI::Range(0, kMaxVariables));
  };

  // gen
  int k = 0;
  std::string gen_kind = "H";
  auto* gen = app.add_subcommand("gen", "print one generator h_k, h*_k, h_k^(inf), H_k or e_k");
  add_context(gen);
  gen->add_option("--k", k, "index")->required();
  gen->add_option("--kind", gen_kind, "h|hstar|hinf|H|e")
      ->check(CLI::IsMember({"h", "hstar", "hinf", "H", "e"}));
  gen->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  // euler
  std::string lambda_text;
  std::optional<std::string> mu_text;
  auto* euler = app.add_subcommand("euler", "Euler character E_lambda, or the D-weighted character with --mu");
  add_context(euler);
  euler->add_option("--lambda", lambda_text, "comma separated integers")->required();
  euler->add_option("--mu", mu_text, "comma separated integers");
  euler->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  // kac
  std::string kac_mu;
  auto* kac = app.add_subcommand("kac", "Kac determinant K_{lambda,mu}");
  add_context(kac);
  kac->add_option("--lambda", lambda_text, "comma separated integers; empty for none")->required();
  kac->add_option("--mu", kac_mu, "comma separated integers; empty for none")->required();
  kac->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  // verify
  std::string suite;
  std::optional<int> vm;
  std::optional<int> vn;
  SuiteOptions options;
  auto* verify = app.add_subcommand("verify", "run a verification suite and print its report");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--m", vm, "restrict to one context");
  verify->add_option("--n", vn, "restrict to one context");
  verify->add_option("--window", options.window.index_bound, "index bound W")->check(CLI::NonNegativeNumber);
  verify->add_option("--degree", options.window.degree_bound, "degree bound D")->check(CLI::NonNegativeNumber);
  verify->add_option("--trials", options.trials, "random trials")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", options.seed, "random seed");
  verify->add_option("--kind", options.kind, "presentation kind")->check(CLI::IsMember({"Uplus", "U", "Upm"}));
  verify->add_option("--format", format, "json|text")->check(CLI::IsMember({"text", "json"}));

  // expand
  std::string ring = "pm";
  std::string basis;
  std::string input;
  Window window;
  auto* expand = app.add_subcommand("expand", "coordinates of a supersymmetric polynomial in a basis");
  add_context(expand);
  expand->add_option("--ring", ring, "pm|plus|poly")->check(CLI::IsMember({"pm", "plus", "poly"}));
  expand->add_option("--basis", basis, "default for the ring, or kac")->check(CLI::IsMember({"default", "kac"}));
  expand->add_option("--input", input, "polynomial in canonical text")->required();
  expand->add_option("--window", window.index_bound, "index bound W")->check(CLI::NonNegativeNumber);
  expand->add_option("--degree", window.degree_bound, "degree bound D")->check(CLI::NonNegativeNumber);
  expand->add_option("--format", format, "json|text")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed = glue_negative_values(args);
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  try {
    if (gen->parsed()) {
      const RingContext ctx(m, n);
      LaurentPoly f;
      if (gen_kind == "h") f = complete_h(k, ctx);
      if (gen_kind == "hstar") f = dual_h(k, ctx);
      if (gen_kind == "hinf") f = h_infinity(k, ctx);
      if (gen_kind == "H") f = big_H(k, ctx);
      if (gen_kind == "e") f = elementary_e(k, Sector::x, ctx);
      print_poly(out, f, format.empty() ? "text" : format);
      return ok;
    }
    if (euler->parsed()) {
      const RingContext ctx(m, n);
      const IntSeq lambda = parse_seq(lambda_text, "--lambda");
      const LaurentPoly f = mu_text ? euler_D(lambda, parse_seq(*mu_text, "--mu"), ctx) : euler_E(lambda, ctx);
      print_poly(out, f, format.empty() ? "text" : format);
      return ok;
    }
    if (kac->parsed()) {
      const RingContext ctx(m, n);
      print_poly(out, kac_K(parse_seq(lambda_text, "--lambda"), parse_seq(kac_mu, "--mu"), ctx),
                 format.empty() ? "text" : format);
      return ok;
    }
    if (verify->parsed()) {
      options.m = vm;
      options.n = vn;
      const Report report = run_suite(suite, options);
      if (format == "text") {
        out << suite << ": " << report.instances_checked << " checked, " << report.failures.size() << " failed\n";
        for (const auto& f : report.failures) out << "  " << f << '\n';
      } else {
        ordered_json j{{"suite", suite},
                       {"ring", report.ring},
                       {"kind", report.kind},
                       {"window", window_json(report.window)},
                       {"instances_checked", report.instances_checked},
                       {"failures", report.failures},
                       {"ok", report.ok()}};
        out << j.dump(2) << '\n';
      }
      return report.ok() ? ok : check_failed;
    }
    if (expand->parsed()) {
      RingContext ctx = ring == "pm" ? RingContext::laurent(m, n)
                        : ring == "plus" ? RingContext::partially_polynomial(m, n)
                                         : RingContext::polynomial(m, n);
      BasisKind kind = ring == "pm" ? BasisKind::x_pm : ring == "plus" ? BasisKind::x_plus : BasisKind::admissible;
      if (basis == "kac") kind = BasisKind::kac;
      const LaurentPoly f = parse_poly(input, ctx);
      const BasisCatalog catalog(kind, ctx, window);
      const auto coeffs = expand_in_basis(f, catalog);
      ordered_json list = ordered_json::array();
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        const auto& index = catalog.indices()[i];
        list.push_back({{"I", index.I}, {"J", index.J}, {"coeff", coeffs[i].get_str()}});
      }
      if (format == "text") {
        for (const auto& c : list) {
          out << c["coeff"].get<std::string>() << " * " << to_string(c["I"].get<IntSeq>()) << ";"
              << to_string(c["J"].get<IntSeq>()) << '\n';
        }
      } else {
        ordered_json j{{"context", context_json(m, n)},
                       {"ring", ring_name(ctx)},
                       {"basis", std::string(to_string(kind))},
                       {"window", window_json(window)},
                       {"coefficients", list}};
        out << j.dump() << '\n';
      }
      return ok;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e.kind());
  }
  return usage;
}

}  // namespace superschur::cli
