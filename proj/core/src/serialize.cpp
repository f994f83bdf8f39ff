#include "cominimal/serialize.hpp"

#include <fstream>

#include "json.hpp"

namespace cominimal {

using nlohmann::json;

namespace {

json window_json(const IntegerWindow& w) { return json::array({w.lo, w.hi}); }

IntegerWindow window_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw io_error("window must be [lo, hi]");
  return IntegerWindow::of(j[0].get<i64>(), j[1].get<i64>());
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw io_error("invalid JSON");
  return j;
}

json family_json(const FamilySpec& f) {
  json j;
  switch (f.kind) {
    case FamilyKind::J: j = {{"kind", "J"}, {"n", f.n}}; break;
    case FamilyKind::K: j = {{"kind", "K"}, {"n", f.n}}; break;
    case FamilyKind::I: j = {{"kind", "I"}, {"n", f.n}}; break;
    case FamilyKind::ScriptI: j = {{"kind", "scriptI"}, {"n", f.n}}; break;
    case FamilyKind::S: j = {{"kind", "S"}}; break;
    case FamilyKind::T: j = {{"kind", "T"}}; break;
    case FamilyKind::U: j = {{"kind", "U"}}; break;
    case FamilyKind::V: j = {{"kind", "V"}}; break;
    case FamilyKind::ScriptS: j = {{"kind", "scriptS"}, {"budget", f.budget}}; break;
    case FamilyKind::ScriptU: j = {{"kind", "scriptU"}, {"budget", f.budget}}; break;
    case FamilyKind::W: j = {{"kind", "W"}, {"window", window_json(f.w_window)}}; break;
    case FamilyKind::Negated: j = {{"kind", "negate"}, {"base", family_json(*f.base)}}; break;
    case FamilyKind::Shifted:
      j = {{"kind", "shift"}, {"base", family_json(*f.base)}, {"c", f.c}};
      break;
    case FamilyKind::Minus:
      j = {{"kind", "minus"}, {"base", family_json(*f.base)}, {"drop", f.drop}};
      break;
    case FamilyKind::Product: {
      json factors = json::array();
      for (const auto& g : f.factors) factors.push_back(family_json(g));
      j = {{"kind", "product"}, {"factors", factors}};
      break;
    }
  }
  return j;
}

FamilySpec family_from(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw io_error("family spec needs a kind");
  std::string kind = j.at("kind").get<std::string>();
  auto idx = [&]() { return j.at("n").get<int>(); };
  if (kind == "J") return FamilySpec::J(idx());
  if (kind == "K") return FamilySpec::K(idx());
  if (kind == "I") return FamilySpec::I(idx());
  if (kind == "scriptI") return FamilySpec::script_I(idx());
  if (kind == "S") return FamilySpec::S();
  if (kind == "T") return FamilySpec::T();
  if (kind == "U") return FamilySpec::U();
  if (kind == "V") return FamilySpec::V();
  if (kind == "scriptS") return FamilySpec::script_S(j.at("budget").get<int>());
  if (kind == "scriptU") return FamilySpec::script_U(j.at("budget").get<int>());
  if (kind == "W") return FamilySpec::W(window_from(j.at("window")));
  if (kind == "negate") return FamilySpec::negated(family_from(j.at("base")));
  if (kind == "shift") {
    return FamilySpec::shifted(family_from(j.at("base")), j.at("c").get<i64>());
  }
  if (kind == "minus") {
    return FamilySpec::minus(family_from(j.at("base")), j.at("drop").get<std::vector<i64>>());
  }
  if (kind == "product") {
    std::vector<FamilySpec> factors;
    for (const auto& g : j.at("factors")) factors.push_back(family_from(g));
    return FamilySpec::product(std::move(factors));
  }
  throw io_error("unknown family kind: " + kind);
}

}  // namespace

std::string set_to_json(const WindowedSet& s) {
  json j;
  j["window"] = window_json(s.window());
  j["elements"] = s.elements();
  return j.dump();
}

std::string set_to_json_runs(const WindowedSet& s) {
  json j;
  j["window"] = window_json(s.window());
  json runs = json::array();
  for (const auto& [start, len] : s.runs()) runs.push_back(json::array({start, len}));
  j["runs"] = runs;
  return j.dump();
}

WindowedSet set_from_json(const std::string& text) {
  json j = parse(text);
  IntegerWindow w = window_from(j.at("window"));
  WindowedSet s(w);
  if (j.contains("elements")) {
    for (const auto& e : j.at("elements")) s.add(e.get<i64>());
  } else if (j.contains("runs")) {
    for (const auto& run : j.at("runs")) {
      i64 start = run.at(0).get<i64>();
      i64 len = run.at(1).get<i64>();
      for (i64 x = start; x < start + len; ++x) s.add(x);
    }
  } else {
    throw io_error("set JSON needs elements or runs");
  }
  return s;
}

std::string family_to_json(const FamilySpec& f) { return family_json(f).dump(); }

FamilySpec family_from_json(const std::string& text) { return family_from(parse(text)); }

std::string representation_report_to_json(const RepresentationReport& r) {
  json j;
  j["schema"] = "1";
  j["y"] = r.y;
  json pairs = json::array();
  for (const auto& [a, b] : r.pairs) pairs.push_back(json::array({a, b}));
  j["pairs"] = pairs;
  if (r.tail.kind == RepTail::Kind::none) {
    j["tail"] = {{"kind", "none"}};
  } else {
    j["tail"] = {{"kind", "infinite"}, {"k0", r.tail.verdict.k0}, {"desc", r.tail.desc}};
  }
  j["horizon"] = r.horizon;
  return j.dump();
}

std::string claim_result_to_json(const ClaimResult& r) {
  json j;
  j["schema"] = "1";
  j["claim"] = r.claim_id;
  j["n"] = r.n;
  j["holds"] = r.holds;
  if (r.counterexample) {
    j["counterexample"] = *r.counterexample;
  } else {
    j["counterexample"] = nullptr;
  }
  return j.dump();
}

std::string witness_report_to_json(const WitnessReport& r) {
  json j;
  j["schema"] = "1";
  j["direction"] = r.direction == Direction::a_min_over_b ? "A-min-over-B" : "B-min-over-A";
  j["window"] = window_json(r.window);
  j["horizon"] = r.horizon;
  j["certification"] = to_string(r.certification);
  json entries = json::array();
  for (const auto& e : r.entries) {
    json ej;
    ej["removed"] = e.removed;
    if (e.witness) {
      ej["witness"] = *e.witness;
      ej["status"] = "witnessed";
    } else {
      ej["witness"] = nullptr;
      ej["status"] = "unverified-in-window";
    }
    entries.push_back(ej);
  }
  j["entries"] = entries;
  return j.dump();
}

std::string refinement_result_to_json(const RefinementResult& r) {
  json j;
  j["schema"] = "1";
  j["base"] = r.base.describe();
  j["partner"] = r.partner.describe();
  j["budget"] = r.budget;
  j["certification"] = to_string(r.certification);
  j["retained"] = r.retained;
  j["removed"] = r.removed;
  j["flagged"] = r.flagged;
  return j.dump();
}

std::string lattice_set_to_json(const LatticeSet& s) {
  json j;
  json dims = json::array();
  for (const auto& d : s.window().dims) dims.push_back(window_json(d));
  j["dims"] = dims;
  json pts = json::array();
  for (const auto& p : s.points()) pts.push_back(p);
  j["points"] = pts;
  return j.dump();
}

LatticeSet lattice_set_from_json(const std::string& text) {
  json j = parse(text);
  std::vector<IntegerWindow> dims;
  for (const auto& d : j.at("dims")) dims.push_back(window_from(d));
  std::vector<Point> pts;
  for (const auto& p : j.at("points")) pts.push_back(p.get<Point>());
  return LatticeSet(LatticeWindow::of(std::move(dims)), std::move(pts));
}

std::string lattice_pair_report_to_json(const LatticePairReport& r) {
  json j;
  j["schema"] = "1";
  j["a"] = json::parse(lattice_set_to_json(r.a));
  j["b"] = json::parse(lattice_set_to_json(r.b));
  j["coverage_ok"] = r.coverage_ok;
  if (r.first_uncovered) j["first_uncovered"] = *r.first_uncovered;
  auto witnesses = [](const std::vector<std::pair<Point, Point>>& ws) {
    json out = json::array();
    for (const auto& [e, y] : ws) out.push_back(json::array({e, y}));
    return out;
  };
  j["a_witnesses"] = witnesses(r.a_witnesses);
  j["b_witnesses"] = witnesses(r.b_witnesses);
  j["a_unwitnessed"] = r.a_unwitnessed;
  j["b_unwitnessed"] = r.b_unwitnessed;
  j["certification"] = to_string(r.certification);
  j["pass"] = r.pass();
  return j.dump();
}

RunConfig config_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open config file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  json j = parse(text);
  RunConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "representation_horizon_slack") {
      cfg.representation_horizon_slack = value.get<int>();
    } else if (key == "tail_span") {
      cfg.tail_span = value.get<int>();
    } else if (key == "claim_trunc") {
      cfg.claim_trunc = value.get<int>();
    } else if (key == "refine_horizon_slack") {
      cfg.refine_horizon_slack = value.get<int>();
    } else if (key == "default_budget") {
      cfg.default_budget = value.get<int>();
    } else {
      throw io_error("unknown config key: " + key);
    }
  }
  return cfg;
}

}  // namespace cominimal
