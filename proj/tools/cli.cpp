#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "hahn/error.hpp"
#include "hahn/laurent.hpp"
#include "hahn/puiseux.hpp"
#include "hahn/rayner.hpp"
#include "hahn/text.hpp"
#include "hahn/verify.hpp"

namespace hahn::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string unquote(const std::string& s) {
  const std::string t = trim(s);
  if (t.size() >= 2 && t.front() == '"' && t.back() == '"') return t.substr(1, t.size() - 2);
  return t;
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidArgument, "bad " + what + " '" + text + "'");
}

// Splits "[a, b, c]" at top-level commas; brackets, parentheses and quotes nest.
std::vector<std::string> split_list(const std::string& text) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') {
    throw Error(ErrorCode::InvalidArgument, "expected a bracketed list, got '" + t + "'");
  }
  std::vector<std::string> items;
  std::string current;
  int depth = 0;
  bool quoted = false;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    const char c = t[i];
    if (c == '"') quoted = !quoted;
    if (!quoted) {
      if (c == '[' || c == '(') ++depth;
      if (c == ']' || c == ')') --depth;
      if (c == ',' && depth == 0) {
        items.push_back(trim(current));
        current.clear();
        continue;
      }
    }
    current += c;
  }
  if (!trim(current).empty() || !items.empty()) items.push_back(trim(current));
  return items;
}

FieldAut parse_field_aut(const std::string& text) {
  const std::string t = unquote(text);
  if (t == "id") return FieldAut::Identity;
  if (t == "conj") return FieldAut::Conjugation;
  throw Error(ErrorCode::UnrecognizedFieldAut, "unknown field automorphism '" + t + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void print_nf(std::ostream& out, const AutNormalForm& nf, OutputFormat format) {
  if (format == OutputFormat::Text) {
    out << nf << "\n";
    return;
  }
  out << "rho=" << nf.rho << "\n"
      << "tau=" << nf.tau << "\n";
  for (std::size_t i = 0; i < nf.x.values.size(); ++i) out << "x." << i << "=" << nf.x.values[i] << "\n";
  for (std::size_t i = 0; i < nf.u.values.size(); ++i) out << "u." << i << "=" << nf.u.values[i] << "\n";
  out << "level=" << nf.group().level << "\n";
}

void print_value(std::ostream& out, const std::string& key, const std::string& value,
                 OutputFormat format) {
  if (format == OutputFormat::Text) {
    out << value << "\n";
  } else {
    out << key << "=" << value << "\n";
  }
}

template <class T>
std::string to_text(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// "[[a, b], [c, d]]" with field literals.
MoebiusMap parse_moebius(const std::string& text, const FieldDescriptor& field) {
  std::vector<FieldElement> entries;
  for (const auto& row : split_list(text)) {
    for (const auto& e : split_list(row)) entries.push_back(parse_field_element(e, field));
  }
  if (entries.size() != 4) throw Error(ErrorCode::DimensionError, "a Möbius map needs a 2x2 matrix");
  return MoebiusMap(entries[0], entries[1], entries[2], entries[3], field);
}

std::int64_t integral_cutoff(const SessionConfig& s) {
  const ExpRational c = s.cutoff[0];
  if (c.denominator() != 1) throw Error(ErrorCode::NotIntegral, "this command needs an integral cutoff");
  return c.numerator();
}

GroupDescriptor laurent_group() { return GroupDescriptor::integers(1); }

GroupDescriptor puiseux_group(const SessionConfig& s) {
  if (s.group.kind == GroupKind::RationalLattice && s.group.dimension == 1) return s.group;
  return GroupDescriptor::rationals(1, 1);
}

SessionConfig with_group(SessionConfig s, const GroupDescriptor& group) {
  s.group = group;
  Exponent::Coords c{s.cutoff[0]};
  for (int i = 1; i < group.dimension; ++i) c.emplace_back(0);
  s.cutoff = Exponent(std::move(c));
  return s;
}

// The normal form of a configuration, decomposing substitution images first.
AutNormalForm resolve(const AutConfig& config, const SessionConfig& session) {
  if (!config.images) return config.nf;
  const BlackBoxAut box = substitution_black_box(config.nf.group(), config.nf.field(),
                                                 config.nf.rho, *config.images);
  return decompose(box, session.bound());
}

AutNormalForm load_nf(const std::string& path, const SessionConfig& session) {
  return resolve(parse_aut_config(read_file(path), session), session);
}

void print_suite(std::ostream& out, const SuiteReport& r, OutputFormat format) {
  out << (format == OutputFormat::Text ? format_report_text(r) : format_report_kv(r));
}

void print_rayner(std::ostream& out, const FamilyReport& axioms, const StabilityReport& stability,
                  std::uint64_t seed, const ExpRational& ceiling, std::size_t scale_count,
                  OutputFormat format) {
  const bool ok = axioms.passed() && stability.passed();
  const StabilityCase* escape = nullptr;
  for (const auto& c : stability.cases) {
    if (!c.member) {
      escape = &c;
      break;
    }
  }
  if (format == OutputFormat::KeyValue) {
    out << "family=" << axioms.family << "\n"
        << "seed=" << seed << "\n"
        << "ceiling=" << format_exp_rational(ceiling) << "\n";
    for (const auto& a : axioms.axioms) {
      out << "axiom." << a.axiom << "=" << axiom_status_name(a.status) << "\n"
          << "axiom." << a.axiom << ".checks=" << a.checks << "\n";
      if (!a.witness.empty()) out << "axiom." << a.axiom << ".witness=" << a.witness << "\n";
    }
    out << "stability.scales=" << scale_count << "\n"
        << "stability.cases=" << stability.cases.size() << "\n"
        << "stability=" << (stability.passed() ? "pass" : "fail") << "\n";
    if (escape) {
      out << "stability.witness=" << format_exp_rational(escape->scale) << " * sample "
          << escape->sample << " = " << escape->image << "\n";
    }
    out << "status=" << (ok ? "pass" : "fail") << "\n";
    return;
  }
  out << "family " << axioms.family << " (seed " << seed << ", ceiling "
      << format_exp_rational(ceiling) << ")\n";
  for (const auto& a : axioms.axioms) {
    out << "  " << a.axiom << ": " << axiom_status_name(a.status) << " (" << a.checks << " checks)";
    if (!a.witness.empty()) out << " -- " << a.witness;
    out << "\n";
  }
  out << "  o-Aut stability: " << (stability.passed() ? "pass" : "fail") << " (" << scale_count
      << " scales, " << stability.cases.size() << " cases)\n";
  if (escape) {
    out << "    " << format_exp_rational(escape->scale) << " * sample " << escape->sample << " = "
        << escape->image << " leaves the family\n";
  }
  out << (ok ? "PASS" : "FAIL") << "\n";
}

}  // namespace

FieldDescriptor parse_field_flag(const std::string& text) {
  if (text == "q") return FieldDescriptor::rationals();
  const std::string prefix = "qsqrt:";
  if (text.rfind(prefix, 0) == 0) {
    return FieldDescriptor::quadratic(parse_int(text.substr(prefix.size()), "radicand"));
  }
  throw Error(ErrorCode::InvalidArgument, "bad field '" + text + "' (want q or qsqrt:<m>)");
}

GroupDescriptor parse_group_flag(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() == 2 && parts[0] == "z") {
    return GroupDescriptor::integers(static_cast<int>(parse_int(parts[1], "dimension")));
  }
  if (parts.size() == 3 && parts[0] == "q") {
    return GroupDescriptor::rationals(static_cast<int>(parse_int(parts[1], "dimension")),
                                      parse_int(parts[2], "level"));
  }
  throw Error(ErrorCode::InvalidArgument, "bad group '" + text + "' (want z:<n> or q:<d>:<L>)");
}

SessionConfig make_session(const std::string& field, const std::string& group,
                           const std::string& cutoff, std::uint64_t seed, const std::string& format) {
  SessionConfig s;
  s.field = parse_field_flag(field);
  s.group = parse_group_flag(group);
  s.seed = seed;
  if (format == "text") {
    s.format = OutputFormat::Text;
  } else if (format == "kv") {
    s.format = OutputFormat::KeyValue;
  } else {
    throw Error(ErrorCode::InvalidArgument, "bad format '" + format + "' (want text or kv)");
  }
  s.cutoff = cutoff.empty() ? Exponent::unit(s.group.dimension, 0, 8)
                            : parse_exponent(cutoff, s.group.dimension);
  if (!(s.cutoff > Exponent::zero(s.group.dimension))) {
    throw Error(ErrorCode::InvalidArgument, "cutoff must be positive");
  }
  return s;
}

AutConfig parse_aut_config(const std::string& text, const SessionConfig& session) {
  std::map<std::string, std::string> entries;
  std::istringstream in(text);
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::InvalidArgument, "line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key != "rho" && key != "tau" && key != "x" && key != "u" && key != "level" && key != "images") {
      throw Error(ErrorCode::InvalidArgument, "line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    entries[key] = trim(line.substr(eq + 1));
  }

  GroupDescriptor group = session.group;
  if (auto it = entries.find("level"); it != entries.end()) {
    group = group.with_level(parse_int(it->second, "level"));
  }
  const FieldDescriptor& field = session.field;
  const auto d = static_cast<std::size_t>(group.dimension);
  AutConfig config{AutNormalForm::identity(group, field), std::nullopt};
  AutNormalForm& nf = config.nf;

  if (auto it = entries.find("rho"); it != entries.end()) nf.rho = parse_field_aut(it->second);
  if (auto it = entries.find("tau"); it != entries.end()) {
    OrderAutMatrix::Matrix m;
    for (const auto& row : split_list(it->second)) {
      std::vector<ExpRational> r;
      for (const auto& e : split_list(row)) r.push_back(parse_exp_rational(e));
      m.push_back(std::move(r));
    }
    nf.tau = oaut_check(m, group.kind);
  }
  auto list_of = [&](const std::string& key) {
    auto items = split_list(entries.at(key));
    if (items.size() != d) {
      throw Error(ErrorCode::DimensionError, key + " needs " + std::to_string(d) + " entries");
    }
    return items;
  };
  if (entries.count("x")) {
    const auto items = list_of("x");
    for (std::size_t i = 0; i < d; ++i) nf.x.values[i] = parse_field_element(unquote(items[i]), field);
  }
  if (entries.count("u")) {
    const auto items = list_of("u");
    for (std::size_t i = 0; i < d; ++i) {
      nf.u.values[i] = parse_series(unquote(items[i]), group, field, session.bound());
    }
  }
  if (entries.count("images")) {
    if (entries.count("x") || entries.count("u") || entries.count("tau")) {
      throw Error(ErrorCode::InvalidArgument, "images cannot be combined with tau, x or u");
    }
    const auto items = list_of("images");
    std::vector<Series> images;
    for (std::size_t i = 0; i < d; ++i) {
      const Exponent g = Exponent::unit(group.dimension, static_cast<int>(i), ExpRational(1, group.level));
      images.push_back(parse_series(unquote(items[i]), group, field, Bound(session.cutoff + g)));
    }
    config.images = std::move(images);
  }
  nf.validate();
  return config;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact truncated Hahn series and their valuation-preserving automorphisms", "hahn"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string field_flag = "q", group_flag = "z:1", cutoff_flag, format_flag = "text";
  std::uint64_t seed = 1;
  app.add_option("--field", field_flag, "coefficient field: q | qsqrt:<m>");
  app.add_option("--group", group_flag, "exponent group: z:<n> | q:<d>:<L>");
  app.add_option("--cutoff", cutoff_flag, "truncation exponent (default 8 in the leading coordinate)");
  app.add_option("--seed", seed, "seed for generated cases");
  app.add_option("--format", format_flag, "output: text | kv");

  // Each command fills this; run after parsing.
  std::function<int(const SessionConfig&)> command;

  std::string aut1, aut2, series_text, series2_text;

  auto* eval = app.add_subcommand("eval", "apply an automorphism file to a series");
  eval->add_option("aut", aut1)->required();
  eval->add_option("series", series_text)->required();
  eval->callback([&] {
    command = [&](const SessionConfig& s) {
      const AutNormalForm nf = load_nf(aut1, s);
      const Series a = parse_series(series_text, nf.group(), s.field, s.bound());
      print_value(out, "result", format_series(apply_aut(nf, a)), s.format);
      return kExitOk;
    };
  });

  auto* compose = app.add_subcommand("compose", "normal form of aut1 ∘ aut2");
  compose->add_option("aut1", aut1)->required();
  compose->add_option("aut2", aut2)->required();
  compose->callback([&] {
    command = [&](const SessionConfig& s) {
      print_nf(out, compose_nf(load_nf(aut1, s), load_nf(aut2, s)), s.format);
      return kExitOk;
    };
  });

  auto* decomp = app.add_subcommand("decompose", "normal form of an automorphism from its action on monomials");
  decomp->add_option("aut", aut1)->required();
  decomp->callback([&] {
    command = [&](const SessionConfig& s) {
      const AutConfig config = parse_aut_config(read_file(aut1), s);
      const BlackBoxAut box =
          config.images ? substitution_black_box(config.nf.group(), s.field, config.nf.rho, *config.images)
                        : as_black_box(config.nf);
      const AutNormalForm nf = decompose(box, s.bound());
      const bool verified = config.images || equal_to_cutoff(nf, config.nf);
      print_nf(out, nf, s.format);
      out << (s.format == OutputFormat::Text ? "verdict: " : "verdict=") << (verified ? "OK" : "MISMATCH") << "\n";
      return verified ? kExitOk : kExitInputError;
    };
  });

  auto* invert = app.add_subcommand("invert", "normal form of the inverse");
  invert->add_option("aut", aut1)->required();
  invert->callback([&] {
    command = [&](const SessionConfig& s) {
      print_nf(out, invert_nf(load_nf(aut1, s)), s.format);
      return kExitOk;
    };
  });

  auto* laurent = app.add_subcommand("laurent", "Schilling product on Laurent units (G = Z)");
  laurent->require_subcommand(1);
  auto laurent_unit = [](const std::string& text, const SessionConfig& s) {
    return LaurentUnit(parse_series(text, laurent_group(), s.field, with_group(s, laurent_group()).bound()));
  };
  auto* xs = laurent->add_subcommand("xs", "u1 ×s u2");
  xs->add_option("u1", series_text)->required();
  xs->add_option("u2", series2_text)->required();
  xs->callback([&] {
    command = [&](const SessionConfig& s) {
      const LaurentUnit r = schilling_xs(laurent_unit(series_text, s), laurent_unit(series2_text, s));
      print_value(out, "result", format_series(r.series()), s.format);
      return kExitOk;
    };
  });
  auto* inv = laurent->add_subcommand("inv", "inverse for ×s");
  inv->add_option("u", series_text)->required();
  inv->callback([&] {
    command = [&](const SessionConfig& s) {
      print_value(out, "result", format_series(schilling_inverse(laurent_unit(series_text, s)).series()), s.format);
      return kExitOk;
    };
  });
  std::string rho_flag = "id";
  auto* lapply = laurent->add_subcommand("apply", "σ_u(a), with σ_u(t) = u·t");
  lapply->add_option("u", series_text)->required();
  lapply->add_option("a", series2_text)->required();
  lapply->add_option("--rho", rho_flag, "field automorphism: id | conj");
  lapply->callback([&] {
    command = [&](const SessionConfig& s) {
      const Series a = parse_series(series2_text, laurent_group(), s.field, with_group(s, laurent_group()).bound());
      const Series r = sigma_u_apply(laurent_unit(series_text, s), parse_field_aut(rho_flag), a);
      print_value(out, "result", format_series(r), s.format);
      return kExitOk;
    };
  });

  auto* moebius = app.add_subcommand("moebius", "Möbius maps t ↦ (at+b)/(ct+d)");
  moebius->require_subcommand(1);
  auto* classify = moebius->add_subcommand("classify", "classify [[a, b], [c, d]]");
  classify->add_option("matrix", series_text)->required();
  classify->callback([&] {
    command = [&](const SessionConfig& s) {
      print_value(out, "class", moebius_class_name(moebius_classify(parse_moebius(series_text, s.field))), s.format);
      return kExitOk;
    };
  });
  auto* mcompose = moebius->add_subcommand("compose", "σ_M1 ∘ σ_M2");
  mcompose->add_option("m1", series_text)->required();
  mcompose->add_option("m2", series2_text)->required();
  mcompose->callback([&] {
    command = [&](const SessionConfig& s) {
      const MoebiusMap m = moebius_compose(parse_moebius(series_text, s.field), parse_moebius(series2_text, s.field));
      print_value(out, "result", to_text(m), s.format);
      return kExitOk;
    };
  });
  auto* expand = moebius->add_subcommand("expand", "Laurent expansion of σ_M(t)");
  expand->add_option("matrix", series_text)->required();
  expand->callback([&] {
    command = [&](const SessionConfig& s) {
      const Series e = moebius_to_series(parse_moebius(series_text, s.field), integral_cutoff(s));
      print_value(out, "result", format_series(e), s.format);
      return kExitOk;
    };
  });

  auto* puiseux = app.add_subcommand("puiseux", "Puiseux series (G = Q)");
  puiseux->require_subcommand(1);
  std::string exponent_text;
  auto* pow = puiseux->add_subcommand("pow", "u^q for a 1-unit u and rational q");
  pow->add_option("u", series_text)->required();
  pow->add_option("q", exponent_text)->required();
  pow->callback([&] {
    command = [&](const SessionConfig& s) {
      const Series u = parse_series(series_text, puiseux_group(s), s.field, with_group(s, puiseux_group(s)).bound());
      const Series r = puiseux_unit_pow_q(u, parse_exp_rational(exponent_text));
      print_value(out, "result", to_text(lattice_to_puiseux(r)), s.format);
      return kExitOk;
    };
  });
  auto* papply = puiseux->add_subcommand("apply", "apply an automorphism file to a Puiseux series");
  papply->add_option("aut", aut1)->required();
  papply->add_option("series", series_text)->required();
  papply->callback([&] {
    command = [&](const SessionConfig& s) {
      const AutNormalForm nf = load_nf(aut1, s);
      const Series a = parse_series(series_text, nf.group(), s.field, s.bound());
      print_value(out, "result", to_text(puiseux_apply_aut(nf, lattice_to_puiseux(a))), s.format);
      return kExitOk;
    };
  });

  auto* rayner = app.add_subcommand("rayner", "Rayner field families");
  rayner->require_subcommand(1);
  std::string family_flag = "puiseux", ceiling_flag = "3";
  std::size_t sample_count = 20, scale_count = 50;
  auto* check = rayner->add_subcommand("check", "sample the axioms R1-R6 and o-Aut stability");
  check->add_option("--family", family_flag, "puiseux | countable | lattice | kappa:<n>");
  check->add_option("--ceiling", ceiling_flag, "bound for the finite-sum axiom");
  check->add_option("--samples", sample_count, "number of sampled supports");
  check->add_option("--scales", scale_count, "number of sampled scales");
  check->callback([&] {
    command = [&](const SessionConfig& s) {
      const FamilyPolicy family = parse_family_policy(family_flag);
      const ExpRational ceiling = parse_exp_rational(ceiling_flag);
      const auto samples = family_samples(family, s.seed, sample_count);
      Rng rng(s.seed);
      std::vector<ExpRational> scales;
      for (std::size_t i = 0; i < scale_count; ++i) scales.emplace_back(rng.uniform(1, 6), rng.uniform(1, 6));
      const FamilyReport axioms = family_check_axioms(family, samples, ceiling);
      const StabilityReport stability = family_check_oaut_stability(family, scales, samples);
      print_rayner(out, axioms, stability, s.seed, ceiling, scale_count, s.format);
      return axioms.passed() && stability.passed() ? kExitOk : kExitPropertyFailure;
    };
  });

  std::string suite_name;
  auto* verify = app.add_subcommand("verify", "run a seeded property suite (or `all`)");
  verify->add_option("suite", suite_name)->required();
  verify->callback([&] {
    command = [&](const SessionConfig& s) {
      std::vector<std::string> names{suite_name};
      if (suite_name == "all") names = suite_names();
      bool ok = true;
      for (const auto& n : names) {
        const SuiteReport r = run_suite(n, s.seed);
        print_suite(out, r, s.format);
        ok = ok && r.ok();
      }
      return ok ? kExitOk : kExitPropertyFailure;
    };
  });

  std::vector<const char*> argv{"hahn"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const SessionConfig session = make_session(field_flag, group_flag, cutoff_flag, seed, format_flag);
    return command(session);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::UnknownSuite ? kExitUsage : kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace hahn::cli
