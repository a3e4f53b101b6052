#include "abcalc/json_io.hpp"

#include "abcalc/errors.hpp"

namespace abcalc {

namespace {

Rational rat_field(const Json& j, const char* where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw SchemaError(std::string(where) + ": rationals are strings like \"-7/10\"");
}

int int_field(const Json& j, const char* where) {
  if (!j.is_number_integer()) {
    throw SchemaError(std::string(where) + ": expected an integer");
  }
  return j.get<int>();
}

std::vector<Rational> rat_list(const Json& j, const char* where) {
  if (!j.is_array()) {
    throw SchemaError(std::string(where) + ": expected an array");
  }
  std::vector<Rational> out;
  for (const Json& item : j) out.push_back(rat_field(item, where));
  return out;
}

TruncatedSeries series_from_coeff_list(const Json& j, const char* where) {
  std::vector<Rational> coeffs = rat_list(j, where);
  if (coeffs.empty()) {
    throw SchemaError(std::string(where) + ": empty coefficient list");
  }
  return TruncatedSeries(std::move(coeffs));
}

Json coeff_list(const TruncatedSeries& s) {
  Json out = Json::array();
  const auto& c = s.coefficients();
  if (c.empty()) {
    out.push_back("0");
    return out;
  }
  for (const Rational& x : c) out.push_back(x.str());
  return out;
}

}  // namespace

FrescoPresentation presentation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lambdas")) {
    throw SchemaError("presentation: expected {\"lambdas\": [...], \"series\": [...]}");
  }
  FrescoPresentation p;
  p.lambdas = rat_list(j.at("lambdas"), "lambdas");
  if (j.contains("series")) {
    if (!j.at("series").is_array()) {
      throw SchemaError("series: expected an array of coefficient lists");
    }
    for (const Json& s : j.at("series")) {
      p.series.push_back(series_from_coeff_list(s, "series"));
    }
  } else if (p.lambdas.size() > 1) {
    // Trivial unit series by default.
    p.series.assign(p.lambdas.size() - 1, TruncatedSeries::one());
  }
  p.validate();
  return p;
}

Json presentation_to_json(const FrescoPresentation& p) {
  Json j;
  Json lambdas = Json::array();
  for (const Rational& l : p.lambdas) lambdas.push_back(l.str());
  j["lambdas"] = std::move(lambdas);
  Json series = Json::array();
  for (const TruncatedSeries& s : p.series) series.push_back(coeff_list(s));
  j["series"] = std::move(series);
  return j;
}

AbModulePresentation abmodule_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("a_matrix")) {
    throw SchemaError(
        "module: expected {\"rank\": r, \"precision\": O, \"a_matrix\": [...]}");
  }
  AbModulePresentation m;
  m.rank = int_field(j.at("rank"), "rank");
  m.precision = j.contains("precision")
                    ? int_field(j.at("precision"), "precision")
                    : 32;
  const Json& rows = j.at("a_matrix");
  if (!rows.is_array()) throw SchemaError("a_matrix: expected an array of rows");
  for (const Json& row : rows) {
    if (!row.is_array()) throw SchemaError("a_matrix: rows are arrays");
    std::vector<TruncatedSeries> out_row;
    for (const Json& entry : row) {
      out_row.push_back(
          series_from_coeff_list(entry, "a_matrix").truncated(m.precision));
    }
    m.a_matrix.push_back(std::move(out_row));
  }
  if (j.contains("basis_note")) m.basis_note = j.at("basis_note").get<std::string>();
  m.validate();
  return m;
}

Json abmodule_to_json(const AbModulePresentation& m) {
  Json j;
  j["rank"] = m.rank;
  j["precision"] = m.precision;
  Json rows = Json::array();
  for (const auto& row : m.a_matrix) {
    Json out_row = Json::array();
    for (const TruncatedSeries& s : row) out_row.push_back(coeff_list(s));
    rows.push_back(std::move(out_row));
  }
  j["a_matrix"] = std::move(rows);
  if (!m.basis_note.empty()) j["basis_note"] = m.basis_note;
  return j;
}

MonomialInput monomial_input_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("monomials")) {
    throw SchemaError("input: expected {\"monomials\": [[...], ...], ...}");
  }
  MonomialInput input;
  const Json& rows = j.at("monomials");
  if (!rows.is_array()) throw SchemaError("monomials: expected an array of rows");
  for (const Json& row : rows) {
    if (!row.is_array()) throw SchemaError("monomials: rows are arrays");
    std::vector<int> r;
    for (const Json& e : row) r.push_back(int_field(e, "monomials"));
    input.monomials.push_back(std::move(r));
  }
  if (j.contains("coefficients")) {
    input.coefficients = rat_list(j.at("coefficients"), "coefficients");
  }
  if (j.contains("distinguished")) {
    for (const Json& e : j.at("distinguished")) {
      input.distinguished.push_back(int_field(e, "distinguished"));
    }
  }
  if (j.contains("form")) {
    for (const Json& e : j.at("form")) {
      input.form_exponents.push_back(int_field(e, "form"));
    }
  }
  input.apply_defaults();
  input.validate();
  return input;
}

Json recurrence_result_to_json(const RecurrenceResult& r) {
  Json j;
  Json weights = Json::array();
  for (const auto& u : r.weights) {
    Json row = Json::array();
    for (const Rational& x : u) row.push_back(x.str());
    weights.push_back(std::move(row));
  }
  j["weights"] = std::move(weights);
  Json alpha = Json::array();
  for (const Rational& a : r.alpha) alpha.push_back(a.str());
  j["alpha"] = std::move(alpha);
  j["b_coeff"] = Json{{"slope", r.recurrence.sigma.slope.str()},
                      {"constant", r.recurrence.sigma.constant.str()}};
  j["rhs_coeff"] = r.recurrence.rhs.str();
  j["closure_degree"] = r.closure.degree;
  Json powers = Json::array();
  for (long long p : r.closure.powers) powers.push_back(p);
  j["closure_exponents"] = std::move(powers);
  j["product"] = render(r.product.to_element());
  j["divisor"] = polynomial_to_json(r.divisor);
  Json roots = Json::array();
  for (const Rational& root : r.divisor_roots) roots.push_back(root.str());
  j["divisor_roots"] = std::move(roots);
  j["warnings"] = r.warnings;
  return j;
}

LedgerFamily family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("q") || !j.contains("cap") ||
      !j.contains("xi_class")) {
    throw SchemaError(
        "ledger: expected {\"q\", \"cap\", \"xi_class\", \"family\"}");
  }
  LedgerParams params;
  params.q = int_field(j.at("q"), "q");
  params.cap = int_field(j.at("cap"), "cap");
  params.xi_class = rat_field(j.at("xi_class"), "xi_class");
  LedgerFamily family(params);
  if (j.contains("family")) {
    const Json& window = j.at("family");
    if (!window.is_object()) {
      throw SchemaError("family: expected an object keyed by the twist h");
    }
    for (const auto& [key, entries] : window.items()) {
      long long h = 0;
      try {
        h = std::stoll(key);
      } catch (const std::exception&) {
        throw SchemaError("family: keys are integers, got \"" + key + "\"");
      }
      PoleLedger ledger(params);
      if (!entries.is_array()) {
        throw SchemaError("family: each twist maps to an entry array");
      }
      for (const Json& e : entries) {
        if (!e.is_object() || !e.contains("loc") || !e.contains("ord")) {
          throw SchemaError("family entry: expected {\"loc\", \"ord\", \"exact\"?}");
        }
        PoleEntry entry;
        entry.order = int_field(e.at("ord"), "ord");
        entry.exact = e.contains("exact") ? e.at("exact").get<bool>() : true;
        ledger.set(rat_field(e.at("loc"), "loc"), entry);
      }
      family.set_ledger(h, std::move(ledger));
    }
  }
  return family;
}

Json family_to_json(const LedgerFamily& f) {
  Json j;
  j["q"] = f.params().q;
  j["cap"] = f.params().cap;
  j["xi_class"] = f.params().xi_class.str();
  Json window = Json::object();
  for (const auto& [h, ledger] : f.window()) {
    Json entries = Json::array();
    for (const auto& [loc, entry] : ledger.entries()) {
      entries.push_back(Json{{"loc", loc.str()},
                             {"ord", entry.order},
                             {"exact", entry.exact}});
    }
    window[std::to_string(h)] = std::move(entries);
  }
  j["family"] = std::move(window);
  return j;
}

std::vector<LedgerScriptOp> script_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("script: expected an array of operations");
  std::vector<LedgerScriptOp> ops;
  for (const Json& item : j) {
    if (!item.is_object() || !item.contains("op")) {
      throw SchemaError("script: each operation carries an \"op\" field");
    }
    std::string op = item.at("op").get<std::string>();
    LedgerScriptOp out{LedgerScriptOp::Kind::A, 0, TruncatedSeries::one()};
    if (op == "a") {
      out.kind = LedgerScriptOp::Kind::A;
    } else if (op == "b") {
      out.kind = LedgerScriptOp::Kind::B;
    } else if (op == "linear") {
      out.kind = LedgerScriptOp::Kind::Linear;
      if (!item.contains("lambda0")) {
        throw SchemaError("script: linear operations need \"lambda0\"");
      }
      out.lambda0 = rat_field(item.at("lambda0"), "lambda0");
    } else if (op == "series") {
      out.kind = LedgerScriptOp::Kind::Series;
      if (!item.contains("coeffs")) {
        throw SchemaError("script: series operations need \"coeffs\"");
      }
      out.series = series_from_coeff_list(item.at("coeffs"), "coeffs");
    } else {
      throw SchemaError("script: unknown operation \"" + op + "\"");
    }
    ops.push_back(std::move(out));
  }
  return ops;
}

Json verdict_to_json(const GeometricVerdict& v) {
  Json j;
  switch (v.status) {
    case GeometricStatus::Geometric:
      j["status"] = "geometric";
      break;
    case GeometricStatus::NotGeometric:
      j["status"] = "not_geometric";
      break;
    case GeometricStatus::Unknown:
      j["status"] = "unknown";
      break;
  }
  Json roots = Json::array();
  for (const Rational& r : v.rational_roots) roots.push_back(r.str());
  j["rational_roots"] = std::move(roots);
  j["unfactored_part"] = v.unfactored.str();
  return j;
}

Json polynomial_to_json(const Polynomial& p) {
  Json j;
  Json coeffs = Json::array();
  for (const Rational& c : p.coefficients()) coeffs.push_back(c.str());
  j["coefficients"] = std::move(coeffs);
  j["rendered"] = render_factored(p);
  return j;
}

Json saturation_result_to_json(const SaturationResult& r) {
  Json j;
  j["char_poly"] = polynomial_to_json(r.char_poly);
  j["min_poly"] = polynomial_to_json(r.min_poly);
  j["iterations"] = r.iterations;
  return j;
}

Json series_to_json(const TruncatedSeries& s) { return coeff_list(s); }

}  // namespace abcalc
