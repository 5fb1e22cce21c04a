#pragma once

// JSON forms of the library types. Big values travel as decimal strings;
// readers also accept plain JSON integers where a big value is expected.

#include <json.hpp>

#include "metafib/automata.hpp"
#include "metafib/classifier.hpp"
#include "metafib/recurrence.hpp"
#include "metafib/suite.hpp"

namespace metafib {

using Json = nlohmann::json;

// Readers throw std::invalid_argument on malformed input.
void to_json(Json& j, const RecurrenceSpec& s);
void from_json(const Json& j, RecurrenceSpec& s);

void to_json(Json& j, const SequenceTable& t);
void from_json(const Json& j, SequenceTable& t);

void to_json(Json& j, const Dfao& d);
void from_json(const Json& j, Dfao& d);

void to_json(Json& j, const Verdict& v);
void from_json(const Json& j, Verdict& v);

void to_json(Json& j, const ClassificationReport& r);
void from_json(const Json& j, ClassificationReport& r);

void to_json(Json& j, const CheckResult& c);
void from_json(const Json& j, CheckResult& c);

void to_json(Json& j, const SuiteResult& s);
void from_json(const Json& j, SuiteResult& s);

RecurrenceSpec parse_spec(const std::string& text);

}  // namespace metafib
