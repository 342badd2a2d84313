#include "lensfill/surfaces.hpp"

#include <algorithm>
#include <limits>

#include <nlohmann/json.hpp>

namespace lensfill {

using nlohmann::json;

CurveConfig::CurveConfig(Int degree, const std::string& section,
                         const std::vector<std::string>& fibers)
    : degree_(std::move(degree)) {
  if (degree_ < 0) throw std::invalid_argument("Sigma_n needs n >= 0");
  curves_.push_back({section, {1, 0}});
  for (const std::string& f : fibers) {
    if (has(f)) throw std::invalid_argument("duplicate curve name '" + f + "'");
    curves_.push_back({f, {0, 1}});
  }
}

bool CurveConfig::has(const std::string& name) const {
  return std::any_of(curves_.begin(), curves_.end(),
                     [&](const Curve& c) { return c.name == name; });
}

std::size_t CurveConfig::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < curves_.size(); ++i)
    if (curves_[i].name == name) return i;
  throw std::invalid_argument("unknown curve '" + name + "'");
}

const PicardClass& CurveConfig::class_of(const std::string& name) const {
  return curves_[index_of(name)].cls;
}

Int CurveConfig::pairing(const PicardClass& a, const PicardClass& b) const {
  auto at = [](const PicardClass& v, std::size_t i) { return i < v.size() ? v[i] : Int(0); };
  Int s = -degree_ * at(a, 0) * at(b, 0) + at(a, 0) * at(b, 1) + at(a, 1) * at(b, 0);
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 2; i < n; ++i) s -= at(a, i) * at(b, i);
  return s;
}

Int CurveConfig::pairing(const std::string& a, const std::string& b) const {
  return pairing(class_of(a), class_of(b));
}

void CurveConfig::blow_up(const std::vector<std::string>& through,
                          const std::string& exceptional) {
  if (has(exceptional))
    throw std::invalid_argument("curve name '" + exceptional + "' is already used");
  std::vector<std::size_t> idx;
  for (const std::string& n : through) {
    std::size_t i = index_of(n);
    if (std::find(idx.begin(), idx.end(), i) != idx.end())
      throw std::invalid_argument("curve '" + n + "' listed twice");
    idx.push_back(i);
  }
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (pairing(curves_[idx[a]].cls, curves_[idx[b]].cls) <= 0)
        throw std::invalid_argument("curves '" + curves_[idx[a]].name + "' and '" +
                                    curves_[idx[b]].name + "' do not meet");
  const std::size_t slot = 2 + blowups_;
  ++blowups_;
  for (Curve& c : curves_) c.cls.resize(slot + 1);
  for (std::size_t i : idx) curves_[i].cls[slot] -= 1;
  PicardClass e(slot + 1);
  e[slot] = 1;
  curves_.push_back({exceptional, std::move(e)});
}

ScriptError::ScriptError(const std::string& what, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

namespace {

// Line of the opening brace of each element of the top-level "steps" array.
// Only needs to cope with text that already parsed as JSON.
std::vector<std::size_t> step_lines(std::string_view text) {
  std::vector<std::size_t> out;
  std::size_t line = 1;
  int depth = 0;
  int steps_depth = -1;  // depth of the steps array once entered
  std::string last_key;
  bool expect_steps = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
    } else if (ch == '"') {
      std::string s;
      for (++i; i < text.size() && text[i] != '"'; ++i) {
        if (text[i] == '\\') ++i;
        else s += text[i];
      }
      last_key = s;
    } else if (ch == ':') {
      expect_steps = depth == 1 && last_key == "steps";
    } else if (ch == '[' || ch == '{') {
      if (ch == '[' && expect_steps) steps_depth = depth + 1;
      else if (ch == '{' && depth == steps_depth) out.push_back(line);
      expect_steps = false;
      ++depth;
    } else if (ch == ']' || ch == '}') {
      --depth;
      if (depth < steps_depth) steps_depth = -1;
    }
  }
  return out;
}

std::vector<std::string> string_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw std::invalid_argument(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const json& x : j) {
    if (!x.is_string()) throw std::invalid_argument(what + " must be an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

Int int_field(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument(what + " must be an integer");
}

}  // namespace

BlowupScript parse_blowup_script(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    // The position is a byte offset; turn it into a line number.
    std::size_t line = 1;
    for (std::size_t i = 0; i < ex.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ScriptError(ex.what(), line);
  }
  const std::vector<std::size_t> lines = step_lines(text);
  auto fail = [](const std::string& msg, std::size_t line = 0) -> ScriptError {
    return ScriptError(msg, line);
  };
  if (!j.is_object()) throw fail("script must be a JSON object", 1);
  try {
    if (j.contains("version") && j.at("version") != BlowupScript::kVersion)
      throw fail("unsupported script version " + j.at("version").dump());
    BlowupScript s;
    if (!j.contains("start_degree")) throw fail("missing start_degree");
    s.start_degree = int_field(j.at("start_degree"), "start_degree");
    if (j.contains("section")) {
      if (!j.at("section").is_string()) throw fail("section must be a string");
      s.section = j.at("section").get<std::string>();
    }
    if (j.contains("fibers")) s.fibers = string_list(j.at("fibers"), "fibers");
    if (!j.contains("steps") || !j.at("steps").is_array())
      throw fail("missing steps array");
    const json& steps = j.at("steps");
    for (std::size_t k = 0; k < steps.size(); ++k) {
      const std::size_t line = k < lines.size() ? lines[k] : 0;
      const json& st = steps[k];
      if (!st.is_object() || !st.contains("name") || !st.at("name").is_string())
        throw fail("step " + std::to_string(k + 1) + " needs a string \"name\"", line);
      BlowupStep step;
      step.name = st.at("name").get<std::string>();
      if (st.contains("through")) {
        try {
          step.through = string_list(st.at("through"), "through");
        } catch (const std::invalid_argument& ex) {
          throw fail("step " + std::to_string(k + 1) + ": " + ex.what(), line);
        }
      }
      s.steps.push_back(std::move(step));
    }
    if (j.contains("contract")) s.contract = string_list(j.at("contract"), "contract");
    // Surface the geometric errors here too, where line numbers are known.
    CurveConfig config(s.start_degree, s.section, s.fibers);
    for (std::size_t k = 0; k < s.steps.size(); ++k) {
      try {
        config.blow_up(s.steps[k].through, s.steps[k].name);
      } catch (const std::invalid_argument& ex) {
        throw fail("step " + std::to_string(k + 1) + ": " + ex.what(),
                   k < lines.size() ? lines[k] : 0);
      }
    }
    for (const std::string& c : s.contract)
      if (!config.has(c)) throw fail("contract names unknown curve '" + c + "'");
    return s;
  } catch (const std::invalid_argument& ex) {
    throw fail(ex.what());
  }
}

std::string to_json(const BlowupScript& s) {
  nlohmann::ordered_json j;
  j["version"] = BlowupScript::kVersion;
  if (s.start_degree >= std::numeric_limits<std::int64_t>::min() &&
      s.start_degree <= std::numeric_limits<std::int64_t>::max())
    j["start_degree"] = s.start_degree.convert_to<std::int64_t>();
  else
    j["start_degree"] = s.start_degree.str();
  j["section"] = s.section;
  j["fibers"] = s.fibers;
  auto steps = nlohmann::ordered_json::array();
  for (const BlowupStep& st : s.steps)
    steps.push_back({{"through", st.through}, {"name", st.name}});
  j["steps"] = std::move(steps);
  j["contract"] = s.contract;
  // One step per line keeps error line numbers meaningful.
  std::string out = "{\n";
  const char* keys[] = {"version", "start_degree", "section", "fibers"};
  for (const char* k : keys) out += "  \"" + std::string(k) + "\": " + j[k].dump() + ",\n";
  out += "  \"steps\": [\n";
  for (std::size_t k = 0; k < j["steps"].size(); ++k)
    out += "    " + j["steps"][k].dump() + (k + 1 < j["steps"].size() ? ",\n" : "\n");
  out += "  ],\n  \"contract\": " + j["contract"].dump() + "\n}\n";
  return out;
}

CurveConfig run_script(const BlowupScript& s) {
  CurveConfig config(s.start_degree, s.section, s.fibers);
  for (std::size_t k = 0; k < s.steps.size(); ++k) {
    try {
      config.blow_up(s.steps[k].through, s.steps[k].name);
    } catch (const std::invalid_argument& ex) {
      throw ScriptError("step " + std::to_string(k + 1) + ": " + ex.what(), 0);
    }
  }
  return config;
}

ContinuedFraction contraction_chain_weights(const CurveConfig& config,
                                            const std::vector<std::string>& names) {
  if (names.empty()) throw std::invalid_argument("empty chain");
  std::vector<Int> w;
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      const Int x = config.pairing(names[i], names[j]);
      const Int want = j == i + 1 ? 1 : 0;
      if (x != want)
        throw std::invalid_argument("'" + names[i] + "' . '" + names[j] + "' = " + x.str() +
                                    ", expected " + want.str());
    }
    const Int self = config.pairing(names[i], names[i]);
    if (self > -2)
      throw std::invalid_argument("'" + names[i] + "' has square " + self.str() +
                                  ", not contractible in a chain");
    w.push_back(-self);
  }
  return ContinuedFraction(std::move(w));
}

AbelianGroup h1_of_complement(const CurveConfig& config,
                              const std::vector<std::string>& names) {
  // H^2(X) -> H^2(curves) is x -> (x . Ci); its cokernel is H1 of the
  // complement.
  const std::size_t b2 = config.picard_rank();
  IntMatrix m(names.size(), b2);
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t k = 0; k < b2; ++k) {
      PicardClass basis(b2);
      basis[k] = 1;
      m(i, k) = config.pairing(config.class_of(names[i]), basis);
    }
  AbelianGroup g = cokernel(m);
  if (g.free_rank != 0)
    throw std::invalid_argument("curve classes are linearly dependent");
  return g;
}

std::vector<std::string> builtin_script_names() {
  return {"sec3", "sec4", "ex34", "l17_2"};
}

namespace {

std::string d(long i) { return "D" + std::to_string(i); }
std::string dp(long i) { return "D" + std::to_string(i) + "'"; }

BlowupScript sec3_script(long m, long n) {
  if (m < 3 || n < 1) throw std::invalid_argument("sec3 needs m >= 3, n >= 1");
  BlowupScript s;
  s.start_degree = n;
  s.section = "D0";
  s.fibers = {dp(3), d(m + 1)};
  s.steps = {{{"D0", dp(3)}, dp(1)},
             {{dp(1), dp(3)}, dp(2)},
             {{"D0", d(m + 1)}, d(1)},
             {{d(1), d(m + 1)}, d(m)}};
  std::string last = d(m);
  for (long i = m - 1; i >= 2; --i) {
    s.steps.push_back({{last, d(1)}, d(i)});
    last = d(i);
  }
  s.steps.push_back({{dp(2)}, "E1"});
  s.steps.push_back({{last}, "E2"});
  s.contract = {dp(3), dp(2), dp(1), "D0"};
  for (long i = 1; i <= m + 1; ++i) s.contract.push_back(d(i));
  return s;
}

BlowupScript sec4_script(long m, long n) {
  if (m < 0 || n < 0) throw std::invalid_argument("sec4 needs m, n >= 0");
  BlowupScript s;
  s.start_degree = n;
  s.section = "D0";
  s.fibers = {d(1), dp(1)};
  s.steps = {{{"D0", d(1)}, d(m + 3)},
             {{d(m + 3), d(1)}, d(m + 2)},
             {{"D0", dp(1)}, dp(m + 3)},
             {{dp(m + 3), dp(1)}, dp(m + 2)}};
  std::string left = d(m + 2), right = dp(m + 2);
  for (long i = m + 1; i >= 2; --i) {
    s.steps.push_back({{left, d(1)}, d(i)});
    left = d(i);
  }
  for (long i = m + 1; i >= 2; --i) {
    s.steps.push_back({{right, dp(1)}, dp(i)});
    right = dp(i);
  }
  s.steps.push_back({{left}, "E"});
  s.steps.push_back({{right}, "E'"});
  for (long i = 1; i <= m + 3; ++i) s.contract.push_back(d(i));
  s.contract.push_back("D0");
  for (long i = m + 3; i >= 1; --i) s.contract.push_back(dp(i));
  return s;
}

BlowupScript ex34_script(long m, long n) {
  if (m < 2 || n < 1) throw std::invalid_argument("ex34 needs m >= 2, n >= 1");
  BlowupScript s;
  s.start_degree = n;
  s.section = "s";
  s.fibers = {"f"};
  s.steps.push_back({{"s", "f"}, "E1"});
  for (long i = 2; i <= m; ++i)
    s.steps.push_back({{"E" + std::to_string(i - 1), "f"}, "E" + std::to_string(i)});
  s.steps.push_back({{"E" + std::to_string(m)}, "E"});
  s.contract = {"s"};
  for (long i = 1; i <= m; ++i) s.contract.push_back("E" + std::to_string(i));
  s.contract.push_back("f");
  return s;
}

BlowupScript l17_2_script() {
  BlowupScript s;
  s.start_degree = 2;
  s.section = "s";
  s.fibers = {"f1", "f2"};
  s.steps = {{{"f2"}, "R1"}, {{"f2", "R1"}, "R2"}, {{"R2", "R1"}, "R3"}, {{"R3"}, "A"},
             {{"f1"}, "L1"}, {{"f1", "L1"}, "L2"}, {{"L2"}, "B"}};
  s.contract = {"R1", "R3", "R2", "f2", "s", "f1", "L2", "L1"};
  return s;
}

}  // namespace

BlowupScript builtin_script(const std::string& name, long m, long n) {
  if (name == "sec3") return sec3_script(m, n);
  if (name == "sec4") return sec4_script(m, n);
  if (name == "ex34") return ex34_script(m, n);
  if (name == "l17_2") return l17_2_script();
  throw std::invalid_argument("unknown built-in script '" + name + "'");
}

SurfaceSummary summarize_surface(const BlowupScript& script) {
  CurveConfig config = run_script(script);
  SurfaceSummary out;
  out.chain = contraction_chain_weights(config, script.contract);
  out.lens = hj_evaluate(out.chain);
  out.h1 = h1_of_complement(config, script.contract);
  out.picard_rank = config.picard_rank();
  return out;
}

}  // namespace lensfill
