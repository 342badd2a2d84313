#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lensfill/arith.hpp"
#include "lensfill/intlin.hpp"

namespace lensfill {

// Picard classes of Sigma_n blown up k times, in the basis s, f, E1..Ek
// with s^2 = -n, f^2 = 0, s.f = 1, Ei^2 = -1.  Shorter vectors are padded
// with zeros.
using PicardClass = std::vector<Int>;

struct Curve {
  std::string name;
  PicardClass cls;
  friend bool operator==(const Curve&, const Curve&) = default;
};

class CurveConfig {
 public:
  // Sigma_n with the section of square -n and the given fibers.
  CurveConfig(Int degree, const std::string& section,
              const std::vector<std::string>& fibers);

  const Int& degree() const { return degree_; }
  std::size_t blowups() const { return blowups_; }
  std::size_t picard_rank() const { return blowups_ + 2; }
  const std::vector<Curve>& curves() const { return curves_; }

  bool has(const std::string& name) const;
  const PicardClass& class_of(const std::string& name) const;
  Int pairing(const PicardClass& a, const PicardClass& b) const;
  Int pairing(const std::string& a, const std::string& b) const;

  // Blow up a point lying on exactly the named curves; their strict
  // transforms lose the new exceptional class, which is added as a curve
  // called `exceptional`.  Curves listed together must meet.
  void blow_up(const std::vector<std::string>& through,
               const std::string& exceptional);

 private:
  std::size_t index_of(const std::string& name) const;

  Int degree_;
  std::size_t blowups_ = 0;
  std::vector<Curve> curves_;
};

struct BlowupStep {
  std::vector<std::string> through;
  std::string name;
  friend bool operator==(const BlowupStep&, const BlowupStep&) = default;
};

// Serialized as JSON; see docs/blowup-script.md.
struct BlowupScript {
  static constexpr int kVersion = 1;

  Int start_degree;
  std::string section = "s";
  std::vector<std::string> fibers;
  std::vector<BlowupStep> steps;
  std::vector<std::string> contract;  // chain to contract, end to end

  friend bool operator==(const BlowupScript&, const BlowupScript&) = default;
};

// Malformed or inconsistent script.  line() is 0 when unknown.
class ScriptError : public std::runtime_error {
 public:
  ScriptError(const std::string& what, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

BlowupScript parse_blowup_script(std::string_view json_text);
std::string to_json(const BlowupScript& script);

// Throws ScriptError naming the failing step.
CurveConfig run_script(const BlowupScript& script);

// Weights -Ci^2 of curves forming a linear chain in the given order: each
// meets the next once, no other pairs meet, and every Ci^2 <= -2.  Throws
// std::invalid_argument otherwise.
ContinuedFraction contraction_chain_weights(const CurveConfig& config,
                                            const std::vector<std::string>& names);

// H1 of the complement of the named curves, which is also H1 of the smooth
// locus after contracting them.  Throws std::invalid_argument when the
// classes are linearly dependent.
AbelianGroup h1_of_complement(const CurveConfig& config,
                              const std::vector<std::string>& names);

// Scripts for the configurations shipped with the tool: "sec3" (m >= 3,
// n >= 1), "sec4" (m, n >= 0), "ex34" (m >= 2, n >= 1) and "l17_2" (no
// parameters).
std::vector<std::string> builtin_script_names();
BlowupScript builtin_script(const std::string& name, long m = 0, long n = 0);

struct SurfaceSummary {
  ContinuedFraction chain;
  Fraction lens;  // p / q of the chain
  AbelianGroup h1;
  std::size_t picard_rank = 0;
};

// Runs the script and analyses its contract list.
SurfaceSummary summarize_surface(const BlowupScript& script);

}  // namespace lensfill
