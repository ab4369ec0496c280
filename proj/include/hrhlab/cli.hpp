#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hrhlab/bsato.hpp"
#include "hrhlab/determinantal.hpp"
#include "hrhlab/families.hpp"
#include "hrhlab/spectrum.hpp"

namespace hrhlab {

using Json = nlohmann::ordered_json;

// Singularity expression: a Brieskorn-Pham leaf, a Thom-Sebastiani sum of
// hypersurfaces in disjoint variables (still a hypersurface), or a tuple
// cut out by several equations in disjoint variables (codimensions add).
struct Expr {
  enum class Node { Bp, Ts, Tuple };
  Node node = Node::Bp;
  std::vector<long> exponents;     // Bp leaves
  std::unique_ptr<Expr> lhs, rhs;  // Ts / Tuple

  std::string render() const;
  bool equals(const Expr& o) const;
};

struct SecantInput {
  bool is_p1 = false;
  bool has_vanishing = false;
  friend bool operator==(const SecantInput&, const SecantInput&) = default;
};

struct Command {
  enum class Verb { Spectrum, Hrh, Bsato, Det, Cone, Toric, Secant, Verify };
  enum class Format { Text, Json };

  Verb verb = Verb::Hrh;
  Format format = Format::Text;
  bool format_explicit = false;  // whether --format appeared in the input

  std::unique_ptr<Expr> expr;           // spectrum / hrh / bsato
  std::optional<DetSpec> det;           // det
  std::optional<HodgeDiamond> diamond;  // cone
  std::optional<ToricCone> cone;        // toric
  SecantInput secant;                   // secant
  std::string suite = "all";            // verify

  std::string render() const;           // canonical text form
  bool equals(const Command& o) const;  // ignores format_explicit
};

// Whitespace-insensitive recursive-descent parse with byte-offset errors.
Command parse(std::string_view input);

struct Report {
  int exit_code = 0;
  std::string text;  // newline-terminated
  Json json;
  Command::Format format = Command::Format::Text;

  std::string output() const;  // text or pretty JSON, per format
};

Report run(const Command& cmd);  // never throws; errors become reports

// parse + run with parse errors mapped to reports as well.
Report run_line(std::string_view line,
                Command::Format default_format = Command::Format::Text);

// Items are independent; outputs are returned in input order.
std::vector<Report> run_batch(const std::vector<std::string>& lines,
                              Command::Format default_format);

Int max_mu_cap();  // HRHLAB_MAX_MU, default 10^6

int cli_main(const std::vector<std::string>& args);

}  // namespace hrhlab
