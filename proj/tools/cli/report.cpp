#include "report.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace lensfill::cli {

using nlohmann::json;

namespace {

const Int kJsonMin = std::numeric_limits<std::int64_t>::min();
const Int kJsonMax = std::numeric_limits<std::int64_t>::max();

json int_list(const std::vector<Int>& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(int_json(x));
  return out;
}

std::vector<Int> json_int_list(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an integer array");
  std::vector<Int> out;
  for (const json& x : j) out.push_back(json_int(x));
  return out;
}

Rational json_rational(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a rational string");
  return Rational(j.get<std::string>());
}

json witness_json(const Witness& w) {
  json images = json::array();
  for (const DiagVector& v : w.embedding.images) images.push_back(int_list(v.coords()));
  return {{"chain", int_list(w.embedding.source.weights().entries())},
          {"target_rank", w.embedding.target_rank},
          {"images", std::move(images)},
          {"generator", int_list(w.generator.vector.coords())},
          {"square", int_json(w.generator.square)},
          {"changemaker", w.changemaker}};
}

Witness json_witness(const json& j) {
  Witness w;
  w.embedding.source = ChainLattice(ContinuedFraction(json_int_list(j.at("chain"))));
  w.embedding.target_rank = j.at("target_rank").get<std::size_t>();
  for (const json& img : j.at("images")) w.embedding.images.emplace_back(json_int_list(img));
  w.generator.vector = DiagVector(json_int_list(j.at("generator")));
  w.generator.square = json_int(j.at("square"));
  w.changemaker = j.at("changemaker").get<bool>();
  return w;
}

json verdict_json(const Verdict& v) {
  json ws = json::array();
  for (const Witness& w : v.witnesses) ws.push_back(witness_json(w));
  return {{"status", to_string(v.status)}, {"notes", v.notes}, {"witnesses", std::move(ws)}};
}

Verdict json_verdict(const json& j) {
  Verdict v;
  v.status = status_from_string(j.at("status").get<std::string>());
  v.notes = j.at("notes").get<std::string>();
  for (const json& w : j.at("witnesses")) v.witnesses.push_back(json_witness(w));
  return v;
}

}  // namespace

json int_json(const Int& x) {
  if (x >= kJsonMin && x <= kJsonMax) return x.convert_to<std::int64_t>();
  return x.str();
}

Int json_int(const json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<std::uint64_t>())
                                                           : Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

bool Report::complete() const {
  return dehn.status != Status::Indeterminate && h1_filling.status != Status::Indeterminate;
}

bool operator==(const Report& a, const Report& b) {
  auto same_d = [](const std::optional<DSquareResult>& x, const std::optional<DSquareResult>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || (x->value == y->value && x->passes == y->passes);
  };
  return a.subject == b.subject && a.cf == b.cf && a.cf_dual == b.cf_dual &&
         a.dehn == b.dehn && a.h1_filling == b.h1_filling &&
         a.qr_topological == b.qr_topological && a.spin == b.spin &&
         same_d(a.d_square, b.d_square) && a.notes == b.notes;
}

Report build_report(const LensSpace& lens, std::uint64_t budget) {
  Report r;
  r.subject = lens;
  r.cf = hj_expand(lens.p(), lens.q());
  r.cf_dual = hj_expand(lens.p(), lens.p() - lens.q());
  r.dehn = classify_dehn(lens, budget);
  r.h1_filling = h1_filling_obstruction(lens, budget);
  r.qr_topological = is_quadratic_residue(-lens.q(), lens.p());
  r.spin = spin_obstruction(lens);
  r.d_square = d_square_obstruction(SingularityData::from_type(lens.p(), lens.p() - lens.q()));

  if (lens.q() == 1) {
    auto s = sum_of_two_squares(lens.p());
    r.notes.push_back("sum_of_two_squares(" + lens.p().str() + ")=" +
                      (s ? "(" + s->first.str() + "," + s->second.str() + ")" : "none"));
  }
  if (!r.qr_topological) r.notes.push_back("-q is not a square mod p");
  if (r.spin.applicable && r.spin.d_obstructed)
    r.notes.push_back("spin d-invariants exclude a filling with H1 = 0 and form (p)");
  if (r.d_square->passes)
    r.notes.push_back("D = " + to_string(r.d_square->value) + " is a square");
  return r;
}

json to_json(const Report& r) {
  json j;
  j["schema"] = kReportSchema;
  j["subject"] = {{"p", int_json(r.subject.p())}, {"q", int_json(r.subject.q())}};
  j["cf"] = int_list(r.cf.entries());
  j["cf_dual"] = int_list(r.cf_dual.entries());
  j["dehn"] = verdict_json(r.dehn);
  j["h1_filling"] = verdict_json(r.h1_filling);
  j["qr_topological"] = r.qr_topological;
  if (r.spin.applicable) {
    json d = json::array();
    for (const SpinD& s : r.spin.values) d.push_back(to_string(s.d));
    j["spin_d"] = std::move(d);
  } else {
    j["spin_d"] = nullptr;
  }
  json labels = json::array();
  for (const SpinD& s : r.spin.values) labels.push_back(int_json(s.label));
  j["spin"] = {{"applicable", r.spin.applicable},
               {"labels", std::move(labels)},
               {"d_obstructed", r.spin.d_obstructed},
               {"qr_obstructed", r.spin.qr_obstructed},
               {"notes", r.spin.notes}};
  if (r.d_square)
    j["d_square"] = {{"D", to_string(r.d_square->value)}, {"passes", r.d_square->passes}};
  else
    j["d_square"] = nullptr;
  j["notes"] = r.notes;
  return j;
}

Report report_from_json(const json& j) {
  try {
    if (j.at("schema") != kReportSchema)
      throw std::invalid_argument("unsupported schema " + j.at("schema").dump());
    Report r;
    r.subject = LensSpace(json_int(j.at("subject").at("p")), json_int(j.at("subject").at("q")));
    r.cf = ContinuedFraction(json_int_list(j.at("cf")));
    r.cf_dual = ContinuedFraction(json_int_list(j.at("cf_dual")));
    if (hj_evaluate(r.cf).num != r.subject.p() || hj_evaluate(r.cf_dual).num != r.subject.p())
      throw std::invalid_argument("cf does not evaluate to p");
    r.dehn = json_verdict(j.at("dehn"));
    r.h1_filling = json_verdict(j.at("h1_filling"));
    r.qr_topological = j.at("qr_topological").get<bool>();

    const json& s = j.at("spin");
    r.spin.applicable = s.at("applicable").get<bool>();
    r.spin.d_obstructed = s.at("d_obstructed").get<bool>();
    r.spin.qr_obstructed = s.at("qr_obstructed").get<bool>();
    r.spin.notes = s.at("notes").get<std::string>();
    const json& labels = s.at("labels");
    const json& ds = j.at("spin_d");
    if (!ds.is_null()) {
      if (!ds.is_array() || ds.size() != labels.size())
        throw std::invalid_argument("spin_d and spin.labels differ in length");
      for (std::size_t i = 0; i < ds.size(); ++i)
        r.spin.values.push_back({json_int(labels[i]), json_rational(ds[i])});
    }
    if (!j.at("d_square").is_null())
      r.d_square = DSquareResult{json_rational(j.at("d_square").at("D")),
                                 j.at("d_square").at("passes").get<bool>()};
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("malformed report: ") + ex.what());
  }
}

namespace {

void render_verdict(std::ostringstream& os, const char* name, const Verdict& v,
                    const Int& p, bool quiet) {
  os << name << std::string(16 - std::string(name).size(), ' ') << to_string(v.status) << "\n";
  if (quiet) return;
  os << "  " << v.notes << "\n";
  for (const Witness& w : v.witnesses) {
    os << "  " << w.embedding.source.weights().to_string() << "  generator "
       << w.generator.vector.to_string() << "  square " << w.generator.square;
    if (w.generator.square == -p) os << " = -p";
    os << (w.changemaker ? "  changemaker" : "") << "\n";
  }
}

}  // namespace

std::string render_text(const Report& r, bool quiet) {
  std::ostringstream os;
  os << "subject         " << r.subject.to_string() << "\n";
  os << "cf              " << r.cf.to_string() << "\n";
  os << "cf_dual         " << r.cf_dual.to_string() << "\n";
  render_verdict(os, "dehn", r.dehn, r.subject.p(), quiet);
  render_verdict(os, "h1_filling", r.h1_filling, r.subject.p(), quiet);
  os << "qr_topological  " << (r.qr_topological ? "true" : "false") << "\n";
  os << "spin_d          ";
  if (!r.spin.applicable) {
    os << "n/a (p odd)\n";
  } else {
    for (std::size_t i = 0; i < r.spin.values.size(); ++i)
      os << (i ? ", " : "") << "d(" << r.spin.values[i].label << ") = "
         << to_string(r.spin.values[i].d);
    os << (r.spin.d_obstructed ? "  obstructed" : "") << "\n";
  }
  if (r.d_square)
    os << "d_square        D = " << to_string(r.d_square->value)
       << (r.d_square->passes ? " (square)" : " (not a square)") << "\n";
  if (!quiet)
    for (const std::string& n : r.notes) os << "note            " << n << "\n";
  return os.str();
}

}  // namespace lensfill::cli
