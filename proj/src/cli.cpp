#include "abcalc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "abcalc/errors.hpp"
#include "abcalc/expr.hpp"
#include "abcalc/json_io.hpp"

namespace abcalc {

namespace {

struct GlobalOptions {
  int precision = 32;
  int max_iter = 64;
  int laurent_window = 16;
  std::string format = "text";

  bool json() const { return format == "json"; }
};

std::string read_payload(const std::string& arg, std::istream& in) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(arg);
  if (!file) {
    throw Error(ErrorKind::Domain, "cannot open input file \"" + arg + "\"");
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

Json parse_json_payload(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError(0, {"JSON document"}, "input is not valid JSON");
  }
  return j;
}

std::vector<Rational> parse_rational_csv(const std::string& text) {
  std::vector<Rational> out;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) {
    std::size_t begin = item.find_first_not_of(" \t");
    std::size_t end = item.find_last_not_of(" \t");
    if (begin == std::string::npos) {
      throw SchemaError("empty entry in rational list");
    }
    out.push_back(parse_rational(item.substr(begin, end - begin + 1)));
  }
  if (out.empty()) throw SchemaError("empty rational list");
  return out;
}

void emit(const GlobalOptions& opts, std::ostream& out, const Json& j,
          const std::string& text) {
  if (opts.json()) {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

// --- command bodies ---------------------------------------------------------

void cmd_normalize(const GlobalOptions& opts, const std::string& payload,
                   bool laurent, std::ostream& out) {
  NcElement result =
      evaluate(parse_expression(payload), laurent, opts.laurent_window);
  Json j;
  j["element"] = render(result);
  emit(opts, out, j, render(result) + "\n");
}

void cmd_bpoly(const GlobalOptions& opts, const std::string& payload,
               const std::string& factors, std::ostream& out) {
  HomogeneousElement element = [&] {
    if (!factors.empty()) {
      return bernstein_element(parse_rational_csv(factors));
    }
    NcElement value =
        evaluate(parse_expression(payload), false, opts.laurent_window);
    return HomogeneousElement::from_element(value);
  }();
  int window = std::max(opts.laurent_window, kDefaultLaurentWindow);
  Polynomial b = element_to_bpoly(element, window);
  Json j;
  j["element"] = render(element.to_element());
  j["bernstein_poly"] = polynomial_to_json(b);
  emit(opts, out, j,
       "element: " + render(element.to_element()) + "\n" +
           "bernstein polynomial: " + render_factored(b) + "\n");
}

void cmd_belem(const GlobalOptions& opts, const std::string& payload,
               int degree, std::ostream& out) {
  Polynomial b = parse_polynomial(payload);
  int k = degree >= 0 ? degree : b.degree();
  int window = std::max(opts.laurent_window, kDefaultLaurentWindow);
  HomogeneousElement element = bpoly_to_element(b, k, window);
  Json j;
  j["element"] = render(element.to_element());
  emit(opts, out, j, render(element.to_element()) + "\n");
}

void cmd_divide(const GlobalOptions& opts, const std::string& num,
                const std::string& den, std::ostream& out) {
  HomogeneousElement q = HomogeneousElement::from_element(
      evaluate(parse_expression(num), false, opts.laurent_window));
  HomogeneousElement p = HomogeneousElement::from_element(
      evaluate(parse_expression(den), false, opts.laurent_window));
  HomogeneousElement w = divide_right(q, p);
  int window = std::max(opts.laurent_window, kDefaultLaurentWindow);
  Polynomial c = cofactor_poly(w, q.degree(), p.degree(), window);
  Json j;
  j["quotient"] = render(w.to_element());
  j["cofactor_poly"] = polynomial_to_json(c);
  emit(opts, out, j,
       "quotient: " + render(w.to_element()) + "\n" +
           "cofactor polynomial: " + render_factored(c) + "\n");
}

void cmd_exact_seq(const GlobalOptions& opts, const std::string& bf,
                   const std::string& bh, int rank_h, std::ostream& out) {
  Polynomial b_f = parse_polynomial(bf);
  Polynomial b_h = parse_polynomial(bh);
  int rk = rank_h >= 0 ? rank_h : b_h.degree();
  Polynomial b_g = exact_sequence_bpoly(b_f, b_h, rk);
  Json j;
  j["bernstein_poly"] = polynomial_to_json(b_g);
  emit(opts, out, j, render_factored(b_g) + "\n");
}

void cmd_from_pi(const GlobalOptions& opts, const std::string& payload,
                 std::ostream& out) {
  FrescoPresentation p = presentation_from_json(parse_json_payload(payload));
  NcSeriesElement pi = expand_presentation(p, opts.precision);
  InitialFormResult init = initial_form(pi);
  HomogeneousElement element = HomogeneousElement::from_element(init.element);
  int window = std::max(opts.laurent_window, kDefaultLaurentWindow);
  Polynomial b = element_to_bpoly(element, window);
  GeometricVerdict verdict = is_geometric(b);
  Json j;
  j["rank"] = p.rank();
  j["bernstein_element"] = render(init.element);
  j["initial_degree"] = init.degree;
  j["bernstein_poly"] = polynomial_to_json(b);
  j["verdict"] = verdict_to_json(verdict);
  std::ostringstream text;
  text << "rank: " << p.rank() << "\n";
  text << "bernstein element: " << render(init.element) << "\n";
  text << "bernstein polynomial: " << render_factored(b) << "\n";
  text << "verdict: " << verdict_to_json(verdict).at("status").get<std::string>()
       << "\n";
  emit(opts, out, j, text.str());
}

void cmd_saturate(const GlobalOptions& opts, const std::string& payload,
                  std::ostream& out) {
  Json input = parse_json_payload(payload);
  AbModulePresentation module = [&] {
    if (input.is_object() && input.contains("lambdas")) {
      FrescoPresentation p = presentation_from_json(input);
      return a_matrix_from_presentation(p, opts.precision);
    }
    return abmodule_from_json(input);
  }();
  SaturationConfig config;
  config.max_iter = opts.max_iter;
  config.laurent_window = opts.laurent_window;
  config.precision = opts.precision;
  SaturationResult result = saturate_bernstein(module, config);
  Json j = saturation_result_to_json(result);
  std::ostringstream text;
  text << "characteristic polynomial: " << render_factored(result.char_poly)
       << "\n";
  text << "minimal polynomial: " << render_factored(result.min_poly) << "\n";
  text << "iterations: " << result.iterations << "\n";
  emit(opts, out, j, text.str());
}

void cmd_gm(const GlobalOptions& opts, const std::string& payload,
            int closure_bound, std::ostream& out) {
  MonomialInput input = monomial_input_from_json(parse_json_payload(payload));
  RecurrenceResult result = gauss_manin_pipeline(input, closure_bound);
  emit(opts, out, recurrence_result_to_json(result), report(input, result));
}

void cmd_poles(const GlobalOptions& opts, const std::string& payload,
               std::ostream& out) {
  Json input = parse_json_payload(payload);
  if (!input.is_object() || !input.contains("ledger")) {
    throw SchemaError("poles: expected {\"ledger\": {...}, \"script\": [...]}");
  }
  LedgerFamily family = family_from_json(input.at("ledger"));
  if (input.contains("script")) {
    for (const LedgerScriptOp& op : script_from_json(input.at("script"))) {
      switch (op.kind) {
        case LedgerScriptOp::Kind::A:
          family = apply_generator(family, GenKind::A);
          break;
        case LedgerScriptOp::Kind::B:
          family = apply_generator(family, GenKind::B);
          break;
        case LedgerScriptOp::Kind::Linear:
          family = apply_generator(family, GenKind::Linear, op.lambda0);
          break;
        case LedgerScriptOp::Kind::Series:
          family = apply_series(family, op.series);
          break;
      }
    }
  }
  Json j;
  j["family"] = family_to_json(family);
  auto top = maximal_pole(family);
  if (top) {
    j["maximal_pole"] = Json{{"loc", top->location.str()},
                             {"ord", top->order},
                             {"h", top->h}};
  } else {
    j["maximal_pole"] = nullptr;
  }
  std::ostringstream text;
  for (const auto& [h, ledger] : family.window()) {
    text << "h = " << h << ":";
    for (const auto& [loc, entry] : ledger.entries()) {
      text << " " << loc.str() << (entry.exact ? ": " : ": <=")
           << entry.order << ";";
    }
    text << "\n";
  }
  if (top) {
    text << "maximal pole: " << top->location.str() << " of order "
         << top->order << " at h = " << top->h << "\n";
  } else {
    text << "maximal pole: none\n";
  }
  if (input.contains("root_count")) {
    const Json& f3 = input.at("root_count");
    if (!f3.is_object() || !f3.contains("presentation") || !f3.contains("d")) {
      throw SchemaError("root_count: expected {\"presentation\": {...}, \"d\": n}");
    }
    FrescoPresentation p = presentation_from_json(f3.at("presentation"));
    RootCountResult check =
        check_root_count(family, p, f3.at("d").get<int>(), opts.precision);
    Json cj;
    cj["holds"] = check.holds;
    cj["witnesses"] = check.witnesses;
    j["root_count"] = std::move(cj);
    text << "root-count check: " << (check.holds ? "holds" : "fails")
         << ", witnesses:";
    for (int w : check.witnesses) text << " " << w;
    text << "\n";
  }
  emit(opts, out, j, text.str());
}

int error_exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
      return 2;
    case ErrorKind::Domain:
      return 3;
    case ErrorKind::Exhausted:
      return 4;
  }
  return 3;
}

void report_error(const GlobalOptions& opts, std::ostream& err,
                  const Error& e) {
  if (opts.json()) {
    Json j;
    Json detail;
    switch (e.kind()) {
      case ErrorKind::Parse:
        detail["kind"] = "parse";
        break;
      case ErrorKind::Domain:
        detail["kind"] = "domain";
        break;
      case ErrorKind::Exhausted:
        detail["kind"] = "exhausted";
        break;
    }
    detail["message"] = e.what();
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
      detail["offset"] = static_cast<long long>(pe->offset());
      detail["expected"] = pe->expected();
    }
    if (const auto* nd = dynamic_cast<const NotDivisible*>(&e)) {
      detail["remainder"] = nd->remainder_text;
    }
    j["error"] = std::move(detail);
    err << j.dump(2) << "\n";
  } else {
    err << "error: " << e.what() << "\n";
    if (const auto* nd = dynamic_cast<const NotDivisible*>(&e)) {
      err << "remainder: " << nd->remainder_text << "\n";
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, std::istream& in) {
  GlobalOptions opts;
  CLI::App app{"exact calculator for the operator algebra a.b - b.a = b^2"};
  app.set_help_all_flag("--help-all");
  app.fallthrough();
  app.add_option("--precision", opts.precision, "working b-adic precision")
      ->capture_default_str();
  app.add_option("--max-iter", opts.max_iter, "saturation iteration cap")
      ->capture_default_str();
  app.add_option("--laurent-window", opts.laurent_window,
                 "bound on |b-exponents| in Laurent arithmetic")
      ->capture_default_str();
  app.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.require_subcommand(1);

  std::string expr_arg;
  std::string factors_arg;
  std::string num_arg, den_arg;
  std::string bf_arg, bh_arg;
  int rank_h = -1;
  int degree = -1;
  bool laurent = false;
  std::vector<std::string> files;

  CLI::App* normalize = app.add_subcommand(
      "normalize", "normal-order an expression in a and b");
  normalize->add_option("expr", expr_arg, "expression or - for stdin")
      ->required();
  normalize->add_flag("--laurent", laurent, "allow b^-1");

  CLI::App* bpoly = app.add_subcommand(
      "bpoly", "Bernstein polynomial of a homogeneous element");
  bpoly->add_option("expr", expr_arg, "homogeneous expression, monic in a");
  bpoly->add_option("--factors", factors_arg,
                    "comma list of lambda_j building the ordered product");

  CLI::App* belem = app.add_subcommand(
      "belem", "Bernstein element of a monic polynomial");
  belem->add_option("poly", expr_arg, "polynomial in x")->required();
  belem->add_option("--degree", degree, "rank k (defaults to the degree)");

  CLI::App* divide = app.add_subcommand(
      "divide", "right-divide homogeneous elements and report the cofactor");
  divide->add_option("numerator", num_arg, "expression")->required();
  divide->add_option("denominator", den_arg, "expression")->required();

  CLI::App* exact_seq = app.add_subcommand(
      "exact-seq", "Bernstein polynomial of an exact-sequence middle term");
  exact_seq->add_option("--bf", bf_arg, "polynomial of the sub")->required();
  exact_seq->add_option("--bh", bh_arg, "polynomial of the quotient")
      ->required();
  exact_seq->add_option("--rank-h", rank_h,
                        "rank of the quotient (defaults to deg B_H)");

  CLI::App* from_pi = app.add_subcommand(
      "from-pi", "Bernstein data of a presentation (JSON)");
  from_pi->add_option("inputs", files, "JSON files or -")->required();

  CLI::App* saturate = app.add_subcommand(
      "saturate", "saturation Bernstein polynomial of a module (JSON)");
  saturate->add_option("inputs", files, "JSON files or -")->required();

  int closure_bound = 256;
  CLI::App* gm = app.add_subcommand(
      "gm", "candidate Bernstein divisor of a monomial input (JSON)");
  gm->add_option("inputs", files, "JSON files or -")->required();
  gm->add_option("--closure-bound", closure_bound,
                 "search bound for the closure degree")
      ->capture_default_str();

  CLI::App* poles = app.add_subcommand(
      "poles", "run a pole-ledger script (JSON)");
  poles->add_option("inputs", files, "JSON files or -")->required();

  std::vector<std::string> argv_like;
  argv_like.push_back("abcalc");
  argv_like.insert(argv_like.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_like) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (normalize->parsed()) {
      std::string payload =
          expr_arg == "-" ? read_payload("-", in) : expr_arg;
      cmd_normalize(opts, payload, laurent, out);
    } else if (bpoly->parsed()) {
      if (expr_arg.empty() && factors_arg.empty()) {
        throw Error(ErrorKind::Domain,
                    "bpoly needs an expression or --factors");
      }
      cmd_bpoly(opts, expr_arg, factors_arg, out);
    } else if (belem->parsed()) {
      cmd_belem(opts, expr_arg, degree, out);
    } else if (divide->parsed()) {
      cmd_divide(opts, num_arg, den_arg, out);
    } else if (exact_seq->parsed()) {
      cmd_exact_seq(opts, bf_arg, bh_arg, rank_h, out);
    } else {
      for (const std::string& file : files) {
        std::string payload = read_payload(file, in);
        if (from_pi->parsed()) {
          cmd_from_pi(opts, payload, out);
        } else if (saturate->parsed()) {
          cmd_saturate(opts, payload, out);
        } else if (gm->parsed()) {
          cmd_gm(opts, payload, closure_bound, out);
        } else if (poles->parsed()) {
          cmd_poles(opts, payload, out);
        }
      }
    }
  } catch (const Error& e) {
    report_error(opts, err, e);
    return error_exit_code(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace abcalc
