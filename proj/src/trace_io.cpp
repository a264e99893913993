#include "ramsey/trace_io.hpp"

#include <stdexcept>
#include <string>

namespace ramsey {

namespace {

Json opt_rational(const std::optional<Rational>& r) {
  return r ? Json(r->to_string()) : Json(nullptr);
}

Json members(const VertexSet& s) { return s.members(); }

VertexSet to_set(const Json& arr, std::size_t universe) {
  VertexSet s(universe);
  for (const auto& v : arr) {
    const int x = v.get<int>();
    if (x < 0 || static_cast<std::size_t>(x) >= universe)
      throw std::out_of_range("witness vertex " + std::to_string(x) + " outside the coloring");
    if (s.contains(x)) throw std::invalid_argument("witness repeats vertex " + std::to_string(x));
    s.insert(x);
  }
  return s;
}

Json lemma(const LemmaCheck& c) {
  return {{"realized", c.realized}, {"bound", c.bound}, {"holds", c.holds}};
}

std::string orientation_name(Orientation o) { return o == Orientation::YZ ? "YZ" : "ZY"; }

}  // namespace

Json es_step_json(const EsStep& s) {
  return {{"kind", std::string(to_string(s.kind))},
          {"vertex", s.vertex},
          {"x_before", s.x_before},
          {"x_after", s.x_after}};
}

Json book_step_json(const StepRecord& r) {
  return {{"kind", std::string(to_string(r.kind))},
          {"vertex", r.vertex},
          {"beta", r.beta.to_string()},
          {"alpha", r.alpha},
          {"p_before", r.p_before.to_string()},
          {"p_after", opt_rational(r.p_after)},
          {"x_before", r.x_before},
          {"x_after", r.x_after},
          {"y_before", r.y_before},
          {"y_after", r.y_after},
          {"s", r.s_size},
          {"t", r.t_size},
          {"u", r.u_size},
          {"prosperous", r.prosperous},
          {"es_phase", r.es_phase}};
}

Json sym_step_json(const SymStep& s) {
  return {{"kind", std::string(to_string(s.kind))},
          {"vertex", s.vertex},
          {"kappa", s.kappa},
          {"orientation", orientation_name(s.orientation)},
          {"x_prime_size", s.x_prime_size},
          {"clause_b_red", s.clause_b_red},
          {"clause_b_blue", s.clause_b_blue},
          {"clause_c_color", s.clause_c ? Json(std::string(to_string(*s.clause_c))) : Json(nullptr)},
          {"pr_before", s.pr_before.to_string()},
          {"pb_before", s.pb_before.to_string()},
          {"pr_after", opt_rational(s.pr_after)},
          {"pb_after", opt_rational(s.pb_after)},
          {"alpha_r", s.alpha_r},
          {"alpha_b", s.alpha_b},
          {"x_before", s.x_before},
          {"x_after", s.x_after},
          {"y_before", s.y_before},
          {"y_after", s.y_after},
          {"z_before", s.z_before},
          {"z_after", s.z_after}};
}

Json report_json(const TraceReport& r) {
  return {{"empty", r.empty},
          {"t", r.t},
          {"s", r.s},
          {"b", r.b},
          {"p_floor", lemma(r.p_floor)},
          {"y_size", lemma(r.y_size)},
          {"x_size", lemma(r.x_size)},
          {"zigzag", r.zigzag},
          {"zero_beta_boosts", r.zero_beta_boosts},
          {"beta_harmonic", r.beta_harmonic},
          {"beta_lower", lemma(r.beta_lower)},
          {"small_s", r.small_s},
          {"boost_violations", r.boost_violations},
          {"red_violations", r.red_violations},
          {"chain_consistent", r.chain_consistent}};
}

Json report_json(const SymmetricReport& r) {
  Json constraints = Json::array();
  for (const auto& c : r.constraints) constraints.push_back({{"name", c.name}, {"holds", c.holds}});
  return {{"constraints", constraints},
          {"t_red", r.t_red},
          {"t_blue", r.t_blue},
          {"s_r", r.s_r},
          {"s_b", r.s_b},
          {"kappa_r_mean", r.kappa_r_mean},
          {"kappa_b_mean", r.kappa_b_mean},
          {"zigzag_r", r.zigzag_r},
          {"zigzag_b", r.zigzag_b},
          {"kappa_contribution", r.kappa_contribution},
          {"kappa_contribution_bound", r.kappa_contribution_bound},
          {"log_y", r.log_y},
          {"log_y_bound", r.log_y_bound},
          {"log_z", r.log_z},
          {"log_z_bound", r.log_z_bound},
          {"log_x", r.log_x},
          {"log_x_bound", r.log_x_bound},
          {"x_factor_violations", r.x_factor_violations}};
}

Json witness_json(const Witness& w) {
  if (const auto* c = std::get_if<CliqueWitness>(&w))
    return {{"type", "clique"}, {"color", std::string(to_string(c->color))}, {"vertices", members(c->vertices)}};
  const auto& b = std::get<BookWitness>(w);
  return {{"type", "book"},
          {"color", std::string(to_string(b.color))},
          {"spine", members(b.spine)},
          {"pages", members(b.pages)}};
}

Witness witness_from_json(const Json& j, std::size_t universe) {
  const auto type = j.at("type").get<std::string>();
  const Color c = parse_color(j.at("color").get<std::string>());
  if (type == "clique") return CliqueWitness{c, to_set(j.at("vertices"), universe)};
  if (type == "book") return BookWitness{c, to_set(j.at("spine"), universe), to_set(j.at("pages"), universe)};
  throw std::invalid_argument("unknown witness type '" + type + "'");
}

void write_jsonl(std::ostream& os, const Json& header, const std::vector<Json>& records) {
  Json h = header;
  h["type"] = "header";
  os << h.dump() << '\n';
  for (const auto& r : records) os << r.dump() << '\n';
}

std::vector<Json> read_jsonl(std::istream& is) {
  std::vector<Json> out;
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) out.push_back(Json::parse(line));
  return out;
}

}  // namespace ramsey
