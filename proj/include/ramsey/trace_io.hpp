#pragma once

#include <istream>
#include <ostream>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ramsey/book.hpp"
#include "ramsey/es.hpp"
#include "ramsey/search.hpp"
#include "ramsey/symmetric.hpp"

namespace ramsey {

using Json = nlohmann::json;

// Exact rationals are written as "a/b" (or "a") strings.
Json es_step_json(const EsStep& s);
Json book_step_json(const StepRecord& r);
Json sym_step_json(const SymStep& s);

Json report_json(const TraceReport& r);
Json report_json(const SymmetricReport& r);

// {"type":"clique","color":..,"vertices":[..]} or
// {"type":"book","color":..,"spine":[..],"pages":[..]}.
using Witness = std::variant<CliqueWitness, BookWitness>;
Json witness_json(const Witness& w);
Witness witness_from_json(const Json& j, std::size_t universe);

// One header object, then one object per record, each on its own line.
void write_jsonl(std::ostream& os, const Json& header, const std::vector<Json>& records);
std::vector<Json> read_jsonl(std::istream& is);

}  // namespace ramsey
