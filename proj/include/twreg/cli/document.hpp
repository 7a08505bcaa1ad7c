#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "twreg/classify.hpp"
#include "twreg/errors.hpp"
#include "twreg/operators.hpp"

namespace twreg::cli {

using json = nlohmann::ordered_json;

class input_error : public error {
 public:
  using error::error;
};

enum class DocumentKind { Twisted, Source };

struct DocumentOptions {
  std::optional<double> theta;
  std::optional<double> tol_zero;
  std::optional<double> tol_lambda;
};

struct OperatorDocument {
  DocumentKind kind = DocumentKind::Source;
  CoeffTable coefficients;
  std::optional<TwistedFrame> frame;
  DocumentOptions options;
};

inline constexpr const char* coefficient_keys[6] = {"a20", "a11", "a02", "a10", "a01", "a00"};

inline cplx* coefficient_slot(CoeffTable& t, int k) {
  cplx* slots[6] = {&t.a20, &t.a11, &t.a02, &t.a10, &t.a01, &t.a00};
  return slots[k];
}

inline json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline cplx complex_from(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw input_error(where + ": expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

inline double number_from(const json& j, const std::string& where) {
  if (!j.is_number()) throw input_error(where + ": expected a number");
  return j.get<double>();
}

inline OperatorDocument document_from_json(const json& j) {
  if (!j.is_object()) throw input_error("document: expected an object");
  OperatorDocument doc;
  if (!j.contains("kind") || !j["kind"].is_string()) throw input_error("document: missing \"kind\"");
  const auto kind = j["kind"].get<std::string>();
  if (kind == "twisted")
    doc.kind = DocumentKind::Twisted;
  else if (kind == "source")
    doc.kind = DocumentKind::Source;
  else
    throw input_error("document: kind must be \"twisted\" or \"source\"");

  if (!j.contains("coefficients") || !j["coefficients"].is_object())
    throw input_error("document: missing \"coefficients\"");
  const auto& c = j["coefficients"];
  for (int k = 0; k < 6; ++k) {
    const std::string key = coefficient_keys[k];
    if (!c.contains(key)) throw input_error("coefficients: missing \"" + key + "\"");
    *coefficient_slot(doc.coefficients, k) = complex_from(c[key], "coefficients." + key);
  }

  if (doc.kind == DocumentKind::Twisted) {
    if (!j.contains("frame") || !j["frame"].is_object()) throw input_error("document: twisted kind needs \"frame\"");
    const auto& f = j["frame"];
    TwistedFrame fr;
    double* slots[4] = {&fr.alpha, &fr.beta, &fr.gamma, &fr.delta};
    const char* names[4] = {"alpha", "beta", "gamma", "delta"};
    for (int k = 0; k < 4; ++k) {
      if (!f.contains(names[k])) throw input_error(std::string("frame: missing \"") + names[k] + "\"");
      *slots[k] = number_from(f[names[k]], std::string("frame.") + names[k]);
    }
    try {
      fr.validate();
    } catch (const frame_error& e) {
      throw input_error(e.what());
    }
    doc.frame = fr;
  } else if (j.contains("frame")) {
    throw input_error("document: \"frame\" is only allowed for kind \"twisted\"");
  }

  if (j.contains("options")) {
    const auto& o = j["options"];
    if (!o.is_object()) throw input_error("options: expected an object");
    if (o.contains("theta")) doc.options.theta = number_from(o["theta"], "options.theta");
    if (o.contains("tol_zero")) doc.options.tol_zero = number_from(o["tol_zero"], "options.tol_zero");
    if (o.contains("tol_lambda")) doc.options.tol_lambda = number_from(o["tol_lambda"], "options.tol_lambda");
  }
  if (doc.coefficients.top_order_mass() == 0.0) throw input_error("document: operator is not of order 2");
  return doc;
}

inline json document_to_json(const OperatorDocument& doc) {
  json j;
  j["kind"] = doc.kind == DocumentKind::Twisted ? "twisted" : "source";
  json c = json::object();
  CoeffTable t = doc.coefficients;
  for (int k = 0; k < 6; ++k) c[coefficient_keys[k]] = complex_json(*coefficient_slot(t, k));
  j["coefficients"] = c;
  if (doc.frame)
    j["frame"] = {{"alpha", doc.frame->alpha},
                  {"beta", doc.frame->beta},
                  {"gamma", doc.frame->gamma},
                  {"delta", doc.frame->delta}};
  json o = json::object();
  if (doc.options.theta) o["theta"] = *doc.options.theta;
  if (doc.options.tol_zero) o["tol_zero"] = *doc.options.tol_zero;
  if (doc.options.tol_lambda) o["tol_lambda"] = *doc.options.tol_lambda;
  if (!o.empty()) j["options"] = o;
  return j;
}

inline OperatorDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

inline OperatorDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

inline ClassifyTolerances tolerances_for(const OperatorDocument& doc) {
  ClassifyTolerances t;
  if (doc.options.tol_zero) t.zero = *doc.options.tol_zero;
  if (doc.options.tol_lambda) t.lambda = *doc.options.tol_lambda;
  return t;
}

/// Shifted Weyl symbol of the document's source operator.
inline WeylSymbol document_symbol(const OperatorDocument& doc) {
  return prepared_symbol(doc.coefficients, doc.options.theta, tolerances_for(doc));
}

}  // namespace twreg::cli
