#include "metafib/io.hpp"

#include <stdexcept>

namespace metafib {

namespace {

Json big(const BigInt& v) { return to_decimal(v); }

BigInt read_big(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a decimal string, got " + j.dump());
}

Index read_index(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw std::invalid_argument(std::string("missing integer field '") + key + "'");
  return j.at(key).get<Index>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<BigInt> read_bigs(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array, got " + j.dump());
  std::vector<BigInt> out;
  for (const auto& e : j) out.push_back(read_big(e));
  return out;
}

Json bigs(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(big(x));
  return a;
}

VerdictKind read_kind(const std::string& s) {
  for (auto k : {VerdictKind::EventuallyConstant, VerdictKind::EventuallyAP,
                 VerdictKind::LinearRecurrence, VerdictKind::Dead, VerdictKind::Unclassified})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown verdict kind '" + s + "'");
}

}  // namespace

void to_json(Json& j, const RecurrenceSpec& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms) {
    if (const auto* sh = std::get_if<Shift>(&t))
      terms.push_back({{"shift", sh->v}});
    else {
      const auto& ne = std::get<Nested>(t);
      terms.push_back({{"nested", {{"d", ne.d}, {"u", ne.u}}}});
    }
  }
  j = Json{{"terms", terms}, {"init", bigs(s.init)}};
  if (const auto* c = std::get_if<NegConstant>(&s.neg))
    j["neg"] = {{"const", big(c->c)}};
  else
    j["neg"] = "strict";
}

void from_json(const Json& j, RecurrenceSpec& s) {
  RecurrenceSpec out;
  const auto& terms = field(j, "terms");
  if (!terms.is_array()) throw std::invalid_argument("'terms' must be an array");
  for (const auto& t : terms) {
    if (t.is_object() && t.contains("shift")) {
      const auto& v = t.at("shift");
      out.terms.push_back(Shift{v.is_number_integer() ? v.get<Index>() : read_index(v, "v")});
    }
    else if (t.is_object() && t.contains("nested")) {
      const auto& n = t.at("nested");
      out.terms.push_back(Nested{n.contains("d") ? read_index(n, "d") : 0, read_index(n, "u")});
    } else
      throw std::invalid_argument("term must be {\"shift\":...} or {\"nested\":...}: " + t.dump());
  }
  out.init = read_bigs(field(j, "init"));
  const auto& neg = field(j, "neg");
  if (neg.is_string() && neg.get<std::string>() == "strict")
    out.neg = NegStrict{};
  else if (neg.is_object() && neg.contains("const"))
    out.neg = NegConstant{read_big(neg.at("const"))};
  else
    throw std::invalid_argument("'neg' must be \"strict\" or {\"const\": c}");
  out.validate();
  s = std::move(out);
}

void to_json(Json& j, const SequenceTable& t) {
  j = Json{{"spec", t.spec}, {"n_max", t.n_max}, {"values", bigs(t.values)}};
  if (t.failure)
    j["failure"] = {{"kind", to_string(t.failure->kind)}, {"at", t.failure->at}};
  else
    j["failure"] = nullptr;
}

void from_json(const Json& j, SequenceTable& t) {
  SequenceTable out;
  out.spec = field(j, "spec").get<RecurrenceSpec>();
  out.n_max = read_index(j, "n_max");
  out.values = read_bigs(field(j, "values"));
  if (j.contains("failure") && !j.at("failure").is_null()) {
    const auto& f = j.at("failure");
    const auto kind = field(f, "kind").get<std::string>();
    if (kind == "died")
      out.failure = Failure{FailureKind::Died, read_index(f, "at")};
    else if (kind == "non-well-founded")
      out.failure = Failure{FailureKind::NonWellFounded, read_index(f, "at")};
    else
      throw std::invalid_argument("unknown failure kind '" + kind + "'");
  }
  t = std::move(out);
}

void to_json(Json& j, const Dfao& d) {
  j = Json{{"base", d.base},
           {"order", d.order == DigitOrder::MostSignificantFirst ? "msd" : "lsd"},
           {"states", d.states},
           {"initial", d.initial},
           {"transitions", d.transitions},
           {"outputs", d.outputs}};
}

void from_json(const Json& j, Dfao& d) {
  Dfao out;
  try {
    out.base = field(j, "base").get<int>();
    const auto order = field(j, "order").get<std::string>();
    if (order != "msd" && order != "lsd") throw std::invalid_argument("order must be msd or lsd");
    out.order = order == "msd" ? DigitOrder::MostSignificantFirst : DigitOrder::LeastSignificantFirst;
    out.states = field(j, "states").get<std::vector<std::string>>();
    out.initial = field(j, "initial").get<std::size_t>();
    out.transitions = field(j, "transitions").get<std::vector<std::vector<std::size_t>>>();
    out.outputs = field(j, "outputs").get<std::vector<std::int64_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed automaton: ") + e.what());
  }
  out.validate();
  d = std::move(out);
}

void to_json(Json& j, const Verdict& v) {
  j = Json{{"kind", to_string(v.kind)}, {"start", v.start}, {"witness_window", v.witness_window}};
  switch (v.kind) {
    case VerdictKind::EventuallyConstant:
    case VerdictKind::EventuallyAP:
      j["difference"] = big(v.difference);
      j["offset"] = big(v.offset);
      break;
    case VerdictKind::LinearRecurrence:
      j["order"] = v.order();
      j["coeffs"] = bigs(v.coeffs);
      j["denominator"] = big(v.denominator);
      break;
    case VerdictKind::Dead:
      if (v.died_at) j["died_at"] = *v.died_at;
      break;
    case VerdictKind::Unclassified:
      break;
  }
}

void from_json(const Json& j, Verdict& v) {
  Verdict out;
  out.kind = read_kind(field(j, "kind").get<std::string>());
  out.start = read_index(j, "start");
  out.witness_window = read_index(j, "witness_window");
  if (j.contains("difference")) out.difference = read_big(j.at("difference"));
  if (j.contains("offset")) out.offset = read_big(j.at("offset"));
  if (j.contains("coeffs")) out.coeffs = read_bigs(j.at("coeffs"));
  if (j.contains("denominator")) out.denominator = read_big(j.at("denominator"));
  if (j.contains("died_at")) out.died_at = read_index(j, "died_at");
  v = std::move(out);
}

void to_json(Json& j, const ClassificationReport& r) {
  j = Json{{"spec", r.spec}, {"modulus", r.modulus}, {"n_max", r.n_max}, {"verdicts", r.verdicts}};
}

void from_json(const Json& j, ClassificationReport& r) {
  ClassificationReport out;
  out.spec = field(j, "spec").get<RecurrenceSpec>();
  out.modulus = read_index(j, "modulus");
  out.n_max = read_index(j, "n_max");
  out.verdicts = field(j, "verdicts").get<std::vector<Verdict>>();
  if (static_cast<Index>(out.verdicts.size()) != out.modulus)
    throw std::invalid_argument("verdict count differs from modulus");
  r = std::move(out);
}

void to_json(Json& j, const CheckResult& c) {
  j = Json{{"id", c.id}, {"params", c.params}, {"pass", c.pass}, {"elapsed_ms", c.elapsed_ms},
           {"detail", c.detail}};
}

void from_json(const Json& j, CheckResult& c) {
  c.id = field(j, "id").get<std::string>();
  c.params = field(j, "params").get<std::string>();
  c.pass = field(j, "pass").get<bool>();
  c.elapsed_ms = field(j, "elapsed_ms").get<double>();
  c.detail = field(j, "detail").get<std::string>();
}

void to_json(Json& j, const SuiteResult& s) {
  j = Json{{"suite", s.suite}, {"pass", s.all_pass()}, {"checks", s.checks}};
}

void from_json(const Json& j, SuiteResult& s) {
  s.suite = field(j, "suite").get<std::string>();
  s.checks = field(j, "checks").get<std::vector<CheckResult>>();
}

RecurrenceSpec parse_spec(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("spec is not valid JSON: ") + e.what());
  }
  return j.get<RecurrenceSpec>();
}

}  // namespace metafib
