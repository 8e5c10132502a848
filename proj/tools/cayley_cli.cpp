// cayley: command-line front end for the parameterized algebras.
//
//   cayley table    --family Q --p 0 --q 1
//   cayley mul      --family O --x 0,1,0,0,0,0,0,0 --y 0,0,1,0,0,0,0,0
//   cayley norm     --family Q --p -1 --q 1 --x 1,2,0,0
//   cayley classify --p 0 --q -1
//   cayley rep      --family O --verify
//   cayley power    --rho 1 --k 3 --theta 2
//   cayley verify   --family S --identity left-alt --samples 1000 --seed 7

#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cayley/algebra.hpp"
#include "cayley/analysis.hpp"
#include "cayley/errors.hpp"
#include "cayley/io.hpp"
#include "cayley/periodic.hpp"
#include "cayley/representation.hpp"

namespace {

using nlohmann::json;
using namespace cayley;

enum class Format { Text, Json, Csv };

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kCounterexample = 2,
  kDegenerateNorm = 3,
  kPole = 4,
  kSingular = 5,
  kUnsupported = 6,
  kComplexParameters = 7,
};

struct Config {
  std::string family = "Q";
  std::string p = "0";
  std::string q = "1";
  double tol = kDefaultTolerance;
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  std::string branch = "upper";
  Format format = Format::Text;
  bool expect_holds = false;
};

struct Args {
  std::string x, y;
  bool verify = false;
  std::string rho = "1";
  double k = 1.0;
  double theta = 1.0;
  std::string identity;
  unsigned workers = 1;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateNorm: return kDegenerateNorm;
    case ErrorCode::PoleAtEvenK: return kPole;
    case ErrorCode::SingularParameter: return kSingular;
    case ErrorCode::UnsupportedTransform: return kUnsupported;
    case ErrorCode::ComplexParameters: return kComplexParameters;
    default: return kUsage;
  }
}

[[noreturn]] void usage_error(const std::string& message) {
  throw AlgebraError(ErrorCode::InvalidArgument, message);
}

Family family_of(const Config& cfg) {
  const auto family = parse_family(cfg.family);
  if (!family || *family == Family::Scalar) usage_error("unknown family '" + cfg.family + "'");
  return *family;
}

AlgebraSpec spec_of(const Config& cfg) {
  const auto branch = parse_branch(cfg.branch);
  if (!branch) usage_error("unknown branch '" + cfg.branch + "'");
  return make_spec(family_of(cfg), parse_complex(cfg.p), parse_complex(cfg.q), *branch);
}

Element element_arg(const std::string& text, const AlgebraSpec& spec, const char* name) {
  if (text.empty()) usage_error(std::string("missing --") + name);
  Element x = parse_element(text);
  if (x.dim() != spec.dim()) {
    throw AlgebraError(ErrorCode::DimensionMismatch,
                       std::string("--") + name + " has " + std::to_string(x.dim()) +
                           " coefficients, the algebra has dimension " +
                           std::to_string(spec.dim()));
  }
  return x;
}

std::string element_csv(const Element& x) {
  std::string out = "unit,re,im\n";
  for (std::size_t i = 0; i < x.dim(); ++i) {
    out += "e" + std::to_string(i) + "," + format_real(x[i].real()) + "," +
           format_real(x[i].imag()) + "\n";
  }
  return out;
}

json algebra_json(const AlgebraSpec& spec) {
  return {{"family", std::string(to_string(spec.family()))},
          {"p", complex_to_json(spec.p())},
          {"q", complex_to_json(spec.q())}};
}

std::string algebra_label(const AlgebraSpec& spec) {
  return std::string(to_string(spec.family())) + "(" + format_complex(spec.p()) + "," +
         format_complex(spec.q()) + ")";
}

int cmd_table(const Config& cfg, std::ostream& out) {
  const AlgebraSpec spec = spec_of(cfg);
  switch (cfg.format) {
    case Format::Text: out << render_table_text(spec); break;
    case Format::Json: out << table_to_json(spec).dump(2) << '\n'; break;
    case Format::Csv: out << render_table_csv(spec); break;
  }
  return kOk;
}

int cmd_mul(const Config& cfg, const Args& args, std::ostream& out) {
  const AlgebraSpec spec = spec_of(cfg);
  const Element x = element_arg(args.x, spec, "x");
  const Element y = element_arg(args.y, spec, "y");
  const Element xy = multiply(spec, x, y);
  switch (cfg.format) {
    case Format::Text: out << format_element(xy) << '\n'; break;
    case Format::Json: {
      json j = algebra_json(spec);
      j["x"] = element_to_json(x);
      j["y"] = element_to_json(y);
      j["product"] = element_to_json(xy);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: out << element_csv(xy); break;
  }
  return kOk;
}

int cmd_norm(const Config& cfg, const Args& args, std::ostream& out) {
  const AlgebraSpec spec = spec_of(cfg);
  const Element x = element_arg(args.x, spec, "x");
  const Complex n = norm(spec, x);
  switch (cfg.format) {
    case Format::Text: out << format_complex(n) << '\n'; break;
    case Format::Json: {
      json j = algebra_json(spec);
      j["x"] = element_to_json(x);
      j["norm"] = complex_to_json(n);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: out << "re,im\n" << format_real(n.real()) << ',' << format_real(n.imag()) << '\n'; break;
  }
  return kOk;
}

int cmd_classify(const Config& cfg, std::ostream& out) {
  const Complex p = parse_complex(cfg.p);
  const Complex q = parse_complex(cfg.q);
  const std::size_t dim = dimension_of(family_of(cfg));
  const Classification c = classify(p, q, dim, cfg.tol);
  switch (cfg.format) {
    case Format::Text: out << to_string(c.kind) << '\n'; break;
    case Format::Json: {
      json minors = json::array();
      for (const Complex& m : c.minors) minors.push_back(complex_to_json(m));
      json j = {{"p", complex_to_json(p)},
                {"q", complex_to_json(q)},
                {"dim", dim},
                {"kind", std::string(to_string(c.kind))},
                {"minors", std::move(minors)}};
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: out << "dim,kind\n" << dim << ',' << to_string(c.kind) << '\n'; break;
  }
  return kOk;
}

int cmd_rep(const Config& cfg, const Args& args, std::ostream& out) {
  const AlgebraSpec target = spec_of(cfg);
  std::optional<RepSet> reps;
  switch (target.family()) {
    case Family::Q: reps = rep_quadratic_quaternion(target); break;
    case Family::O:
    case Family::S:
      if (target.p() != Complex{0.0, 0.0} || target.q() != Complex{1.0, 0.0}) {
        usage_error("octonion and sedenion representations exist for p = 0, q = 1 only");
      }
      reps = target.family() == Family::O ? rep_octonion() : rep_sedenion();
      break;
    default: usage_error("no 2x2 representation for family " + cfg.family);
  }

  std::optional<RepReport> report;
  if (args.verify) report = verify_rep(*reps, target, cfg.samples, cfg.seed, cfg.tol);

  switch (cfg.format) {
    case Format::Text:
      out << algebra_label(target) << " over "
          << (reps->coeff_spec.family() == Family::Scalar ? std::string("complex scalars")
                                                         : algebra_label(reps->coeff_spec))
          << '\n';
      for (std::size_t m = 0; m < reps->mats.size(); ++m) {
        out << "e" << m << " -> " << format_mat2(reps->mats[m]) << '\n';
      }
      if (report) {
        out << "action: " << report->action_checks - report->action_failures << "/"
            << report->action_checks << " ok, max residual " << format_real(report->max_action_residual)
            << '\n'
            << "products: " << report->product_checks - report->product_failures << "/"
            << report->product_checks << " ok, max residual "
            << format_real(report->max_product_residual) << '\n'
            << "verified: " << (report->passed() ? "yes" : "no") << '\n';
      }
      break;
    case Format::Json: {
      json j = algebra_json(target);
      j["coeff_family"] = std::string(to_string(reps->coeff_spec.family()));
      json mats = json::array();
      for (std::size_t m = 0; m < reps->mats.size(); ++m) {
        mats.push_back({{"unit", "e" + std::to_string(m)}, {"matrix", mat2_to_json(reps->mats[m])}});
      }
      j["matrices"] = std::move(mats);
      if (report) j["verification"] = rep_report_to_json(*report);
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << "unit,m11,m12,m21,m22\n";
      for (std::size_t m = 0; m < reps->mats.size(); ++m) {
        const Mat2& a = reps->mats[m];
        out << 'e' << m;
        for (std::size_t r = 0; r < 2; ++r)
          for (std::size_t c = 0; c < 2; ++c) out << ',' << format_element(a(r, c), UnitNames::Coefficient);
        out << '\n';
      }
      break;
  }
  if (report && !report->passed() && cfg.expect_holds) return kCounterexample;
  return kOk;
}

int cmd_power(const Config& cfg, const Args& args, std::ostream& out) {
  const auto rho = parse_rho(args.rho);
  if (!rho) usage_error("--rho must be 1 or i");
  const Element e = unit_power(*rho, args.k, args.theta);
  const AlgebraSpec spec = periodic_spec(*rho, args.k);
  switch (cfg.format) {
    case Format::Text: out << format_element(e) << '\n'; break;
    case Format::Json: {
      json j = {{"rho", std::string(to_string(*rho))},
                {"k", args.k},
                {"theta", args.theta},
                {"element", element_to_json(e)},
                {"p", complex_to_json(spec.p())},
                {"q", complex_to_json(spec.q())}};
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: out << element_csv(e); break;
  }
  return kOk;
}

int cmd_verify(const Config& cfg, const Args& args, std::ostream& out) {
  const auto identity = parse_identity(args.identity);
  if (!identity) usage_error("unknown identity '" + args.identity + "'");
  const AlgebraSpec spec = spec_of(cfg);
  const IdentityReport report =
      check_identity(spec, *identity, cfg.samples, cfg.seed, cfg.tol, args.workers);
  switch (cfg.format) {
    case Format::Text:
      out << "identity: " << to_string(report.identity) << '\n'
          << "algebra: " << algebra_label(spec) << '\n'
          << "trials: " << report.trials << '\n'
          << "seed: " << report.seed << '\n'
          << "max_residual: " << format_real(report.max_residual) << '\n'
          << "holds: " << (report.holds() ? "yes" : "no") << '\n';
      if (report.counterexample) {
        const Counterexample& c = *report.counterexample;
        out << "counterexample: trial " << c.trial << ", residual " << format_real(c.residual) << '\n'
            << "  X = " << format_element(c.x) << '\n'
            << "  Y = " << format_element(c.y) << '\n';
        if (c.z) out << "  Z = " << format_element(*c.z) << '\n';
      }
      break;
    case Format::Json: out << report_to_json(report).dump(2) << '\n'; break;
    case Format::Csv:
      out << "identity,trials,seed,max_residual,holds,counterexample_trial\n"
          << to_string(report.identity) << ',' << report.trials << ',' << report.seed << ','
          << format_real(report.max_residual) << ',' << (report.holds() ? "yes" : "no") << ','
          << (report.counterexample ? std::to_string(report.counterexample->trial) : "") << '\n';
      break;
  }
  if (!report.holds() && cfg.expect_holds) return kCounterexample;
  return kOk;
}

void report_error(const Config& cfg, std::string_view code, const std::string& message) {
  if (cfg.format == Format::Json) {
    json j = {{"error", {{"code", std::string(code)}, {"message", message}}}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cerr << "error: " << code << ": " << message << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameterized complex, quaternion, octonion and sedenion algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  Args args;

  app.add_option("--family", cfg.family, "C, Q, O or S")->capture_default_str();
  app.add_option("--p", cfg.p, "Complex parameter p, e.g. 0, -1, 0.5+2i")->capture_default_str();
  app.add_option("--q", cfg.q, "Complex parameter q")->capture_default_str();
  app.add_option("--tol", cfg.tol, "Relative tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for random sweeps")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Random trials")
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  app.add_option("--branch", cfg.branch, "upper or lower")->capture_default_str();
  app.add_option("--format", cfg.format, "text, json or csv")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}}));
  app.add_flag("--expect-holds", cfg.expect_holds, "Exit 2 when a counterexample is found");

  auto* table = app.add_subcommand("table", "Unit multiplication table");
  auto* mul = app.add_subcommand("mul", "Product of two elements");
  mul->add_option("--x", args.x, "Coefficients, comma separated")->required();
  mul->add_option("--y", args.y, "Coefficients, comma separated")->required();
  auto* nrm = app.add_subcommand("norm", "Quadratic norm of an element");
  nrm->add_option("--x", args.x, "Coefficients, comma separated")->required();
  auto* cls = app.add_subcommand("classify", "Division, split or nil-degenerate");
  auto* rep = app.add_subcommand("rep", "2x2 matrix representation of the unit basis");
  rep->add_flag("--verify", args.verify, "Check the representation on random elements");
  auto* power = app.add_subcommand("power", "Continuous power of e1 in a periodic algebra");
  power->add_option("--rho", args.rho, "1 or i")->capture_default_str();
  power->add_option("--k", args.k, "Period parameter")->capture_default_str();
  power->add_option("--theta", args.theta, "Exponent")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "Seeded random check of an algebraic identity");
  verify->add_option("--identity", args.identity,
                     "commutativity, associativity, left-alt, right-alt, flexible, norm-composition")
      ->required();
  verify->add_option("--workers", args.workers, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error(cfg, "UsageError", e.what());
    return kUsage;
  }

  try {
    if (*table) return cmd_table(cfg, std::cout);
    if (*mul) return cmd_mul(cfg, args, std::cout);
    if (*nrm) return cmd_norm(cfg, args, std::cout);
    if (*cls) return cmd_classify(cfg, std::cout);
    if (*rep) return cmd_rep(cfg, args, std::cout);
    if (*power) return cmd_power(cfg, args, std::cout);
    if (*verify) return cmd_verify(cfg, args, std::cout);
  } catch (const AlgebraError& e) {
    report_error(cfg, to_string(e.code()), e.what());
    return exit_code_for(e.code());
  }
  return kUsage;
}
