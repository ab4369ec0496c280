#include "hrhlab/cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "hrhlab/accept.hpp"

namespace hrhlab {

namespace {

// ---------------------------------------------------------------- parsing

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    std::ostringstream out;
    out << msg << " at position " << at;
    throw DomainError(Errc::Syntax, out.str(), at);
  }
  bool peek_is(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool try_char(char c) {
    if (!peek_is(c)) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      fail(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  std::string word(std::size_t* at = nullptr) {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '-' ||
            s[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected a word", start);
    if (at) *at = start;
    return std::string(s.substr(start, pos - start));
  }
  long integer(std::size_t* at = nullptr) {
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected an integer", start);
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      if (v > (std::numeric_limits<long>::max() - 9) / 10)
        fail("integer too large", start);
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    if (at) *at = start;
    return neg ? -v : v;
  }
};

std::unique_ptr<Expr> parse_expr(Cursor& cur) {
  std::size_t at = 0;
  std::string head = cur.word(&at);
  auto e = std::make_unique<Expr>();
  if (head == "bp") {
    e->node = Expr::Node::Bp;
    cur.expect('(');
    while (true) {
      std::size_t vat = 0;
      long v = cur.integer(&vat);
      if (v < 2) {
        std::ostringstream out;
        out << "exponent must be >= 2 at position " << vat;
        throw DomainError(Errc::Exponent, out.str(), vat);
      }
      e->exponents.push_back(v);
      if (!cur.try_char(',')) break;
    }
    cur.expect(')');
  } else if (head == "ts" || head == "tuple") {
    e->node = head == "ts" ? Expr::Node::Ts : Expr::Node::Tuple;
    cur.expect('(');
    e->lhs = parse_expr(cur);
    cur.expect(',');
    e->rhs = parse_expr(cur);
    cur.expect(')');
  } else {
    cur.fail("expected bp, ts, or tuple", at);
  }
  return e;
}

// key=value tails like "m=4 n=3 p=2"; stops at end of input or at "--".
std::map<std::string, long> parse_keyvals(Cursor& cur,
                                          const std::vector<std::string>& allowed) {
  std::map<std::string, long> kv;
  while (!cur.eof()) {
    cur.skip_ws();
    if (cur.s.compare(cur.pos, 2, "--") == 0) break;
    std::size_t at = 0;
    std::string key = cur.word(&at);
    bool known = false;
    for (const auto& a : allowed) known = known || a == key;
    if (!known) cur.fail("unknown key '" + key + "'", at);
    if (kv.count(key)) cur.fail("duplicate key '" + key + "'", at);
    cur.expect('=');
    kv[key] = cur.integer();
  }
  return kv;
}

long take_key(Cursor& cur, std::map<std::string, long>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) cur.fail("missing key '" + key + "'", cur.pos);
  long v = it->second;
  kv.erase(it);
  return v;
}

// Scans one balanced {...} block (quote-aware) and parses it as JSON.
Json parse_json_block(Cursor& cur) {
  cur.skip_ws();
  std::size_t start = cur.pos;
  if (start >= cur.s.size() || cur.s[start] != '{') cur.fail("expected '{'", start);
  std::size_t i = start;
  long depth = 0;
  bool in_str = false;
  for (; i < cur.s.size(); ++i) {
    char c = cur.s[i];
    if (in_str) {
      if (c == '\\') ++i;
      else if (c == '"') in_str = false;
      continue;
    }
    if (c == '"') in_str = true;
    else if (c == '{') ++depth;
    else if (c == '}' && --depth == 0) break;
  }
  if (i >= cur.s.size()) cur.fail("unterminated JSON object", start);
  std::string_view block = cur.s.substr(start, i - start + 1);
  cur.pos = i + 1;
  try {
    return Json::parse(block);
  } catch (const Json::parse_error& e) {
    cur.fail(std::string("malformed JSON: ") + e.what(), start);
  }
}

HodgeDiamond diamond_from_json(const Json& j, Cursor& cur, std::size_t at) {
  try {
    long n = j.at("n").get<long>();
    std::vector<std::tuple<long, long, long long>> entries;
    for (const auto& row : j.at("h")) {
      if (!row.is_array() || row.size() != 3)
        throw DomainError(Errc::Domain, "h entries must be [p,q,value]");
      entries.emplace_back(row[0].get<long>(), row[1].get<long>(),
                           row[2].get<long long>());
    }
    return HodgeDiamond(n, entries);
  } catch (const Json::exception& e) {
    cur.fail(std::string("bad diamond JSON: ") + e.what(), at);
  }
}

ToricCone cone_from_json(const Json& j, Cursor& cur, std::size_t at) {
  try {
    std::vector<std::vector<Int>> rays;
    for (const auto& row : j.at("rays")) {
      std::vector<Int> ray;
      for (const auto& c : row) ray.emplace_back(c.get<long long>());
      rays.push_back(std::move(ray));
    }
    return make_toric_cone(rays);
  } catch (const Json::exception& e) {
    cur.fail(std::string("bad cone JSON: ") + e.what(), at);
  }
}

HodgeDiamond parse_diamond(Cursor& cur) {
  if (cur.peek_is('{')) {
    std::size_t at = cur.pos;
    Json j = parse_json_block(cur);
    return diamond_from_json(j, cur, at);
  }
  std::size_t at = 0;
  std::string key = cur.word(&at);
  if (key != "n") cur.fail("expected key 'n'", at);
  cur.expect('=');
  long n = cur.integer();
  key = cur.word(&at);
  if (key != "h") cur.fail("expected key 'h'", at);
  cur.expect('=');
  std::vector<std::tuple<long, long, long long>> entries;
  while (true) {
    long p = cur.integer();
    cur.expect(':');
    long q = cur.integer();
    cur.expect(':');
    long v = cur.integer();
    entries.emplace_back(p, q, v);
    if (!cur.try_char(',')) break;
  }
  return HodgeDiamond(n, entries);
}

ToricCone parse_cone(Cursor& cur) {
  if (cur.peek_is('{')) {
    std::size_t at = cur.pos;
    Json j = parse_json_block(cur);
    return cone_from_json(j, cur, at);
  }
  std::size_t at = 0;
  std::string key = cur.word(&at);
  if (key != "rays") cur.fail("expected key 'rays'", at);
  cur.expect('=');
  std::vector<std::vector<Int>> rays;
  while (true) {
    std::vector<Int> ray;
    ray.emplace_back(cur.integer());
    while (cur.try_char(':')) ray.emplace_back(cur.integer());
    rays.push_back(std::move(ray));
    if (!cur.try_char(',')) break;
  }
  return make_toric_cone(rays);
}

bool parse_bool(Cursor& cur) {
  std::size_t at = 0;
  std::string w = cur.word(&at);
  if (w == "true") return true;
  if (w == "false") return false;
  cur.fail("expected true or false", at);
}

}  // namespace

Command parse(std::string_view input) {
  Cursor cur{input};
  Command cmd;
  std::size_t vat = 0;
  std::string verb = cur.word(&vat);
  if (verb == "spectrum") cmd.verb = Command::Verb::Spectrum;
  else if (verb == "hrh") cmd.verb = Command::Verb::Hrh;
  else if (verb == "bsato") cmd.verb = Command::Verb::Bsato;
  else if (verb == "det") cmd.verb = Command::Verb::Det;
  else if (verb == "cone") cmd.verb = Command::Verb::Cone;
  else if (verb == "toric") cmd.verb = Command::Verb::Toric;
  else if (verb == "secant") cmd.verb = Command::Verb::Secant;
  else if (verb == "verify") cmd.verb = Command::Verb::Verify;
  else cur.fail("unknown verb '" + verb + "'", vat);

  switch (cmd.verb) {
    case Command::Verb::Spectrum:
    case Command::Verb::Hrh:
    case Command::Verb::Bsato:
      cmd.expr = parse_expr(cur);
      break;
    case Command::Verb::Det: {
      std::size_t cat = 0;
      std::string kase = cur.word(&cat);
      DetSpec spec;
      if (kase == "generic") spec.kind = DetCase::Generic;
      else if (kase == "skew-odd") spec.kind = DetCase::SkewOdd;
      else if (kase == "skew-even") spec.kind = DetCase::SkewEven;
      else if (kase == "symmetric") spec.kind = DetCase::Symmetric;
      else cur.fail("unknown determinantal case '" + kase + "'", cat);
      bool generic = spec.kind == DetCase::Generic;
      bool symmetric = spec.kind == DetCase::Symmetric;
      std::vector<std::string> keys;
      if (generic) keys = {"m", "n", "p"};
      else if (symmetric) keys = {"n", "p"};
      else keys = {"m", "p"};
      auto kv = parse_keyvals(cur, keys);
      if (generic || !symmetric) spec.m = take_key(cur, kv, "m");
      if (generic || symmetric) spec.n = take_key(cur, kv, "n");
      spec.p = take_key(cur, kv, "p");
      validate_det_spec(spec);
      cmd.det = spec;
      break;
    }
    case Command::Verb::Cone:
      cmd.diamond = parse_diamond(cur);
      break;
    case Command::Verb::Toric:
      cmd.cone = parse_cone(cur);
      break;
    case Command::Verb::Secant: {
      bool have_p1 = false, have_van = false;
      while (!cur.eof()) {
        cur.skip_ws();
        if (cur.s.compare(cur.pos, 2, "--") == 0) break;
        std::size_t at = 0;
        std::string key = cur.word(&at);
        cur.expect('=');
        if (key == "p1") {
          if (have_p1) cur.fail("duplicate key 'p1'", at);
          cmd.secant.is_p1 = parse_bool(cur);
          have_p1 = true;
        } else if (key == "vanishing") {
          if (have_van) cur.fail("duplicate key 'vanishing'", at);
          cmd.secant.has_vanishing = parse_bool(cur);
          have_van = true;
        } else {
          cur.fail("unknown key '" + key + "'", at);
        }
      }
      if (!have_p1) cur.fail("missing key 'p1'", cur.pos);
      if (!have_van) cur.fail("missing key 'vanishing'", cur.pos);
      break;
    }
    case Command::Verb::Verify:
      break;
  }

  while (!cur.eof()) {
    cur.skip_ws();
    std::size_t fat = cur.pos;
    if (cur.s.compare(cur.pos, 2, "--") != 0)
      cur.fail("unexpected trailing input", cur.pos);
    cur.pos += 2;
    std::string flag = cur.word();
    cur.expect('=');
    std::size_t vat2 = 0;
    std::string value = cur.word(&vat2);
    if (flag == "format") {
      if (value == "text") cmd.format = Command::Format::Text;
      else if (value == "json") cmd.format = Command::Format::Json;
      else cur.fail("format must be text or json", vat2);
      cmd.format_explicit = true;
    } else if (flag == "suite") {
      if (cmd.verb != Command::Verb::Verify)
        cur.fail("--suite is only valid with verify", fat);
      if (value != "all" && value != "spectrum" && value != "det" && value != "families")
        cur.fail("suite must be all, spectrum, det, or families", vat2);
      cmd.suite = value;
    } else {
      cur.fail("unknown flag '--" + flag + "'", fat);
    }
  }
  return cmd;
}

// --------------------------------------------------------------- rendering

std::string Expr::render() const {
  std::ostringstream out;
  switch (node) {
    case Node::Bp: {
      out << "bp(";
      for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i) out << ",";
        out << exponents[i];
      }
      out << ")";
      break;
    }
    case Node::Ts:
      out << "ts(" << lhs->render() << "," << rhs->render() << ")";
      break;
    case Node::Tuple:
      out << "tuple(" << lhs->render() << "," << rhs->render() << ")";
      break;
  }
  return out.str();
}

bool Expr::equals(const Expr& o) const {
  if (node != o.node) return false;
  if (node == Node::Bp) return exponents == o.exponents;
  return lhs->equals(*o.lhs) && rhs->equals(*o.rhs);
}

std::string Command::render() const {
  std::ostringstream out;
  switch (verb) {
    case Verb::Spectrum: out << "spectrum " << expr->render(); break;
    case Verb::Hrh: out << "hrh " << expr->render(); break;
    case Verb::Bsato: out << "bsato " << expr->render(); break;
    case Verb::Det: {
      const DetSpec& d = *det;
      out << "det " << det_case_name(d.kind);
      if (d.kind == DetCase::Generic) out << " m=" << d.m << " n=" << d.n;
      else if (d.kind == DetCase::Symmetric) out << " n=" << d.n;
      else out << " m=" << d.m;
      out << " p=" << d.p;
      break;
    }
    case Verb::Cone: {
      out << "cone n=" << diamond->n() << " h=";
      auto entries = diamond->canonical_entries();
      for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out << ",";
        auto [p, q, v] = entries[i];
        out << p << ":" << q << ":" << v;
      }
      break;
    }
    case Verb::Toric: {
      out << "toric rays=";
      for (std::size_t i = 0; i < cone->rays.size(); ++i) {
        if (i) out << ",";
        for (std::size_t c = 0; c < cone->rays[i].size(); ++c) {
          if (c) out << ":";
          out << cone->rays[i][c].str();
        }
      }
      break;
    }
    case Verb::Secant:
      out << "secant p1=" << (secant.is_p1 ? "true" : "false")
          << " vanishing=" << (secant.has_vanishing ? "true" : "false");
      break;
    case Verb::Verify:
      out << "verify --suite=" << suite;
      break;
  }
  if (format == Format::Json) out << " --format=json";
  return out.str();
}

bool Command::equals(const Command& o) const {
  if (verb != o.verb || format != o.format) return false;
  switch (verb) {
    case Verb::Spectrum:
    case Verb::Hrh:
    case Verb::Bsato:
      return expr->equals(*o.expr);
    case Verb::Det: return det == o.det;
    case Verb::Cone: return diamond == o.diamond;
    case Verb::Toric: return cone == o.cone;
    case Verb::Secant: return secant == o.secant;
    case Verb::Verify: return suite == o.suite;
  }
  return false;
}

// -------------------------------------------------------------- evaluation

namespace {

Json json_int(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

Json json_ext(const ExtValue& v) {
  if (v.is_infinite()) return "inf";
  const Rational& r = v.value();
  if (r.is_integer()) return json_int(r.num());
  return r.str();
}

Json json_hrh(const HRHValue& h) {
  if (h.is_infinite()) return "inf";
  switch (h.kind()) {
    case HRHValue::Kind::Exact: return h.lo();
    case HRHValue::Kind::Interval: return Json::array({h.lo(), h.hi()});
    case HRHValue::Kind::LowerBound: return ">=" + std::to_string(h.lo());
  }
  return nullptr;
}

Json json_spectrum(const SpectrumData& sd) {
  Json values = Json::array();
  for (const auto& [v, m] : sd.values.entries())
    values.push_back(Json{{"alpha", v.str()}, {"mult", json_int(m)}});
  return Json{{"ambient_vars", sd.ambient_vars}, {"values", values}};
}

Json json_roots(const RootSet& rs) {
  Json roots = Json::array();
  for (const auto& [v, m] : rs.roots.entries())
    for (Int i = 0; i < m; ++i) roots.push_back(v.str());
  return Json{{"r", rs.r}, {"roots", roots}};
}

std::string roots_text(const RootSet& rs) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [v, m] : rs.roots.entries())
    for (Int i = 0; i < m; ++i) {
      if (!first) out << ", ";
      first = false;
      out << v.str();
    }
  out << "}";
  return out.str();
}

const char* rhm_text(bool is_rhm) {
  return is_rhm ? "rational homology manifold" : "not a rational homology manifold";
}

struct EvalExpr {
  SpectrumData merged;  // sumset spectrum over all factors
  long r = 1;
  HRHValue hrh = HRHValue::infinity();
  RootSet roots;
};

// Checks the two independent level routes and spectral duality on a
// hypersurface spectrum, then packages the derived data.
EvalExpr eval_hypersurface(SpectrumData sd) {
  EvalExpr ev;
  ev.hrh = hrh_isolated_hypersurface(sd);
  if (!(hrh_from_milnor(milnor_s(sd)) == ev.hrh))
    throw ConsistencyError("Milnor route disagrees with the spectral route");
  if (!check_duality(sd))
    throw ConsistencyError("spectral duality fails");
  ev.roots = roots_from_spectrum(sd);
  ev.r = 1;
  ev.merged = std::move(sd);
  return ev;
}

EvalExpr eval_expr(const Expr& e) {
  switch (e.node) {
    case Expr::Node::Bp: {
      BPSpec spec{e.exponents};
      Int mu = bp_mu(spec);
      if (mu > max_mu_cap())
        throw DomainError(Errc::MuCap, "Milnor number " + mu.str() +
                                           " exceeds HRHLAB_MAX_MU");
      return eval_hypersurface(bp_spectrum(spec));
    }
    case Expr::Node::Ts: {
      EvalExpr a = eval_expr(*e.lhs);
      EvalExpr b = eval_expr(*e.rhs);
      if (a.r != 1 || b.r != 1)
        throw DomainError(Errc::Domain,
                          "ts combines hypersurfaces only; use tuple for higher codimension");
      SpectrumData sd{multiset_sumset(a.merged.values, b.merged.values),
                      a.merged.ambient_vars + b.merged.ambient_vars};
      return eval_hypersurface(std::move(sd));
    }
    case Expr::Node::Tuple: {
      EvalExpr a = eval_expr(*e.lhs);
      EvalExpr b = eval_expr(*e.rhs);
      EvalExpr ev;
      ev.merged = SpectrumData{multiset_sumset(a.merged.values, b.merged.values),
                               a.merged.ambient_vars + b.merged.ambient_vars};
      ev.r = a.r + b.r;
      ev.hrh = hrh_min(a.hrh, b.hrh);
      ev.roots = tuple_ts_roots(a.roots, b.roots);
      return ev;
    }
  }
  throw DomainError(Errc::Domain, "unreachable expression node");
}

void require_hypersurface(const EvalExpr& ev, const char* verb) {
  if (ev.r != 1)
    throw DomainError(Errc::Domain,
                      std::string(verb) + " is defined for hypersurfaces only (r = 1); "
                                          "tuples are handled by bsato");
}

Report report_spectrum(const Command& cmd) {
  EvalExpr ev = eval_expr(*cmd.expr);
  require_hypersurface(ev, "spectrum");
  ExtValue spmin = sp_min_int(ev.merged);
  bool duality = check_duality(ev.merged);
  Report rep;
  rep.json = Json{{"command", cmd.render()},
                  {"verb", "spectrum"},
                  {"spectrum", json_spectrum(ev.merged)},
                  {"mu", json_int(ev.merged.values.total())},
                  {"Sp_min_Z", json_ext(spmin)},
                  {"duality_holds", duality}};
  std::ostringstream out;
  out << "command: " << cmd.render() << "\n";
  out << "ambient_vars = " << ev.merged.ambient_vars << "\n";
  out << "mu = " << ev.merged.values.total().str() << "\n";
  out << "spectrum:\n";
  for (const auto& [v, m] : ev.merged.values.entries())
    out << "  " << v.str() << " : " << m.str() << "\n";
  out << "Sp_min_Z = " << spmin.str() << "\n";
  out << "duality: " << (duality ? "holds" : "FAILS") << "\n";
  rep.text = out.str();
  return rep;
}

Report report_hrh(const Command& cmd) {
  EvalExpr ev = eval_expr(*cmd.expr);
  require_hypersurface(ev, "hrh");
  ExtValue spmin = sp_min_int(ev.merged);
  MilnorVector ms = milnor_s(ev.merged);
  Report rep;
  Json sj = Json::array();
  for (const Int& v : ms.s) sj.push_back(json_int(v));
  rep.json = Json{{"command", cmd.render()},
                  {"verb", "hrh"},
                  {"ambient_vars", ev.merged.ambient_vars},
                  {"mu", json_int(ev.merged.values.total())},
                  {"Sp_min_Z", json_ext(spmin)},
                  {"milnor_s", sj},
                  {"HRH", json_hrh(ev.hrh)},
                  {"is_rhm", ev.hrh.is_infinite()},
                  {"citation", "HRH = Sp_min,Z - 2"}};
  std::ostringstream out;
  out << "command: " << cmd.render() << "\n";
  out << "ambient_vars = " << ev.merged.ambient_vars << "\n";
  out << "mu = " << ev.merged.values.total().str() << "\n";
  out << "Sp_min_Z = " << spmin.str() << "\n";
  out << "milnor_s = [";
  for (std::size_t i = 0; i < ms.s.size(); ++i) {
    if (i) out << ", ";
    out << ms.s[i].str();
  }
  out << "]\n";
  out << "HRH = " << ev.hrh.str() << " (Cor: HRH = Sp_min,Z - 2)\n";
  out << "verdict: " << rhm_text(ev.hrh.is_infinite()) << "\n";
  rep.text = out.str();
  return rep;
}

Report report_bsato(const Command& cmd) {
  EvalExpr ev = eval_expr(*cmd.expr);
  ExtValue alpha = alpha_tilde_int(ev.roots);
  ExtValue spmin = sp_min_int(ev.merged);
  if (ev.r == 1) {
    // Quasi-homogeneous hypersurface: the level equals alpha_tilde_Z - 2.
    ExtValue shifted = alpha.minus(2);
    bool match = ev.hrh.is_infinite() ? shifted.is_infinite()
                                      : (!shifted.is_infinite() &&
                                         shifted.value() == Rational(ev.hrh.lo()));
    if (!match)
      throw ConsistencyError("alpha_tilde_Z - 2 disagrees with the spectral level");
  }
  IneqReport ineq = check_cor_bs(alpha, ev.r, ev.hrh, spmin);
  bool is_rhm = ev.hrh.is_infinite();
  Report rep;
  Json entries = Json::array();
  for (const auto& e : ineq.entries)
    entries.push_back(Json{{"name", e.name},
                           {"lhs", e.lhs},
                           {"rhs", e.rhs},
                           {"holds", e.holds}});
  rep.json = Json{{"command", cmd.render()},
                  {"verb", "bsato"},
                  {"roots", json_roots(ev.roots)},
                  {"alpha_tilde_Z", json_ext(alpha)},
                  {"Sp_min_Z", json_ext(spmin)},
                  {"HRH", json_hrh(ev.hrh)},
                  {"inequalities", entries},
                  {"all_hold", ineq.all_hold()},
                  {"is_rhm", is_rhm}};
  std::ostringstream out;
  out << "command: " << cmd.render() << "\n";
  out << "r = " << ev.roots.r << "\n";
  out << "roots = " << roots_text(ev.roots) << "\n";
  out << "alpha_tilde_Z = " << alpha.str() << "\n";
  out << "Sp_min_Z = " << spmin.str() << "\n";
  out << "HRH = " << ev.hrh.str() << "\n";
  for (const auto& e : ineq.entries)
    out << e.name << ": " << e.lhs << " <= " << e.rhs << " : "
        << (e.holds ? "holds" : "FAILS") << "\n";
  out << "verdict: " << rhm_text(is_rhm) << "\n";
  rep.text = out.str();
  return rep;
}

const char* verdict_name(DetVerdict v) {
  switch (v) {
    case DetVerdict::Smooth: return "smooth";
    case DetVerdict::SpecialRhm: return "special-rhm";
    case DetVerdict::Computed: return "computed";
  }
  return "computed";
}

Report report_det(const Command& cmd) {
  const DetSpec& spec = *cmd.det;
  DetReport dr = det_report(spec);
  Report rep;
  Json j = Json{{"command", cmd.render()},
                {"verb", "det"},
                {"case", det_case_name(spec.kind)}};
  if (spec.kind == DetCase::Generic) {
    j["m"] = spec.m;
    j["n"] = spec.n;
  } else if (spec.kind == DetCase::Symmetric) {
    j["n"] = spec.n;
  } else {
    j["m"] = spec.m;
  }
  j["p"] = spec.p;
  j["verdict"] = verdict_name(dr.verdict);
  j["codim"] = dr.codim;
  j["dim"] = dr.dim;
  std::ostringstream out;
  out << "command: " << cmd.render() << "\n";
  out << "stratum = " << verdict_name(dr.verdict) << "\n";
  out << "codim = " << dr.codim << "\n";
  out << "dim = " << dr.dim << "\n";
  if (dr.verdict == DetVerdict::Computed) {
    Json classes = Json::object();
    out << "classes:\n";
    for (const auto& [s, cl] : dr.groth.classes) {
      std::string key = "D_" + std::to_string(s);
      classes[key] = cl.str();
      out << "  [" << key << "] : " << cl.str() << "\n";
    }
    j["classes"] = classes;
    j["ic_equals_h"] = dr.ic_eq_h;
    j["lcdef_gen"] = dr.lcdef_gen;
    j["lcd"] = dr.lcd;
    j["lcdef"] = dr.lcdef;
    j["nrs_codim"] = dr.nrs;
    j["HRH"] = json_hrh(dr.hrh);
    j["is_rhm"] = dr.is_rhm;
    j["ppbound_holds"] = dr.ppbound_holds;
    j["ppbound_equality"] = dr.ppbound_equality;
    out << "ic_equals_h = " << (dr.ic_eq_h ? "true" : "false") << "\n";
    out << "lcdef_gen = " << dr.lcdef_gen << "\n";
    out << "lcd = " << dr.lcd << "\n";
    out << "lcdef = " << dr.lcdef << "\n";
    out << "nrs_codim = " << dr.nrs << "\n";
    out << "HRH = " << dr.hrh.str() << "\n";
    out << "thm-ppbound: lcdef_gen + 2*HRH_lo + 3 <= nrs_codim : "
        << (dr.ppbound_holds ? "holds" : "FAILS")
        << (dr.ppbound_equality ? " with equality" : "") << "\n";
  } else {
    j["lcdef"] = dr.lcdef;
    j["HRH"] = json_hrh(dr.hrh);
    j["is_rhm"] = dr.is_rhm;
    out << "lcdef = " << dr.lcdef << "\n";
    out << "HRH = " << dr.hrh.str() << "\n";
  }
  out << "verdict: " << rhm_text(dr.is_rhm) << "\n";
  rep.json = std::move(j);
  rep.text = out.str();
  return rep;
}

Report report_cone(const Command& cmd) {
  const HodgeDiamond& dia = *cmd.diamond;
  HRHValue h = cone_hrh(dia);
  long lcdef = cone_lcdef(dia);
  Report rep;
  Json hj = Json::array();
  for (const auto& [p, q, v] : dia.canonical_entries())
    hj.push_back(Json::array({p, q, v}));
  Json betti = Json::array();
  for (long i = 0; i <= 2 * dia.n(); ++i) betti.push_back(dia.betti(i));
  rep.json = Json{{"command", cmd.render()},
                  {"verb", "cone"},
                  {"diamond", Json{{"n", dia.n()}, {"h", hj}}},
                  {"betti", betti},
                  {"HRH", json_hrh(h)},
                  {"lcdef", lcdef},
                  {"is_rhm", h.is_infinite()}};
  std::ostringstream out;
  out << "command: " << cmd.render() << "\n";
  out << "n = " << dia.n() << "\n";
  out << "betti = [";
  for (long i = 0; i <= 2 * dia.n(); ++i) {
    if (i) out << ", ";
    out << dia.betti(i);
  }
  out << "]\n";
  out << "HRH = " << h.str() << "\n";
  out << "lcdef = " << lcdef << "\n";
  out << "verdict: " << rhm_text(h.is_infinite()) << "\n";
  rep.text = out.str();
  return rep;
}

Report report_toric(const Command& cmd) {
  const ToricCone& cone = *cmd.cone;
  long rank = toric_rank(cone);
  HRHValue h = toric_hrh(cone);
  bool simplicial = h.is_infinite();
  Report rep;
  Json rays = Json::array();
  for (const auto& ray : cone.rays) {
    Json r = Json::array();
    for (const Int& c : ray) r.push_back(json_int(c));
    rays.push_back(r);
  }
  rep.json = Json{{"command", cmd.render()},
                  {"verb", "toric"},
                  {"cone", Json{{"rays", rays}}},
                  {"ray_count", cone.rays.size()},
                  {"rank", rank},
                  {"simplicial", simplicial},
                  {"HRH", json_hrh(h)},
                  {"is_rhm", simplicial}};
  std::ostringstream out;
  out << "command: " << cmd.render() << "\n";
  out << "rays = " << cone.rays.size() << ", rank = " << rank << "\n";
  out << "simplicial = " << (simplicial ? "true" : "false") << "\n";
  out << "HRH = " << h.str() << "\n";
  out << "verdict: " << rhm_text(simplicial) << "\n";
  rep.text = out.str();
  return rep;
}

Report report_secant(const Command& cmd) {
  HRHValue h = secant_hrh(cmd.secant.is_p1, cmd.secant.has_vanishing);
  Report rep;
  rep.json = Json{{"command", cmd.render()},
                  {"verb", "secant"},
                  {"is_p1", cmd.secant.is_p1},
                  {"has_vanishing_hi_O", cmd.secant.has_vanishing},
                  {"HRH", json_hrh(h)},
                  {"is_rhm", h.is_infinite()}};
  std::ostringstream out;
  out << "command: " << cmd.render() << "\n";
  out << "HRH = " << h.str() << "\n";
  out << "verdict: " << rhm_text(h.is_infinite()) << "\n";
  rep.text = out.str();
  return rep;
}

Report report_verify(const Command& cmd) {
  auto results = accept::run_suite(cmd.suite);
  bool ok = accept::all_pass(results);
  Report rep;
  rep.exit_code = ok ? 0 : 3;
  Json crit = Json::array();
  for (const auto& r : results)
    crit.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  rep.json = Json{{"command", cmd.render()},
                  {"verb", "verify"},
                  {"suite", cmd.suite},
                  {"criteria", crit},
                  {"all_pass", ok}};
  std::ostringstream out;
  out << "command: " << cmd.render() << "\n";
  for (const auto& r : results)
    out << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
  out << "verify: " << results.size() << " criteria, "
      << (ok ? "all passed" : "FAILURES present") << "\n";
  rep.text = out.str();
  return rep;
}

Report error_report(Errc code, const std::string& msg,
                    const std::optional<std::size_t>& offset, int exit_code) {
  Report rep;
  rep.exit_code = exit_code;
  Json err = Json{{"code", errc_name(code)}, {"message", msg}};
  if (offset) err["offset"] = *offset;
  rep.json = Json{{"error", err}};
  rep.text = std::string("error[") + errc_name(code) + "]: " + msg + "\n";
  return rep;
}

}  // namespace

std::string Report::output() const {
  if (format == Command::Format::Json) return json.dump(2) + "\n";
  return text;
}

Report run(const Command& cmd) {
  Report rep;
  try {
    switch (cmd.verb) {
      case Command::Verb::Spectrum: rep = report_spectrum(cmd); break;
      case Command::Verb::Hrh: rep = report_hrh(cmd); break;
      case Command::Verb::Bsato: rep = report_bsato(cmd); break;
      case Command::Verb::Det: rep = report_det(cmd); break;
      case Command::Verb::Cone: rep = report_cone(cmd); break;
      case Command::Verb::Toric: rep = report_toric(cmd); break;
      case Command::Verb::Secant: rep = report_secant(cmd); break;
      case Command::Verb::Verify: rep = report_verify(cmd); break;
    }
  } catch (const DomainError& e) {
    rep = error_report(e.code(), e.what(), e.offset(), 2);
  } catch (const ConsistencyError& e) {
    rep = error_report(Errc::Domain, e.what(), std::nullopt, 3);
    rep.json["error"]["code"] = "E_CONSISTENCY";
    rep.text = std::string("error[E_CONSISTENCY]: ") + e.what() + "\n";
  }
  rep.format = cmd.format;
  return rep;
}

Report run_line(std::string_view line, Command::Format default_format) {
  try {
    Command cmd = parse(line);
    Report rep = run(cmd);
    rep.format = cmd.format_explicit ? cmd.format : default_format;
    return rep;
  } catch (const DomainError& e) {
    Report rep = error_report(e.code(), e.what(), e.offset(), 2);
    rep.format = default_format;
    return rep;
  }
}

std::vector<Report> run_batch(const std::vector<std::string>& lines,
                              Command::Format default_format) {
  std::vector<Report> reports;
  reports.reserve(lines.size());
  for (const auto& line : lines) reports.push_back(run_line(line, default_format));
  return reports;
}

Int max_mu_cap() {
  const char* env = std::getenv("HRHLAB_MAX_MU");
  if (!env || !*env) return Int(1000000);
  Int cap = 0;
  for (const char* c = env; *c; ++c) {
    if (!std::isdigit(static_cast<unsigned char>(*c)))
      throw DomainError(Errc::Domain, "HRHLAB_MAX_MU must be a positive integer");
    cap = cap * 10 + (*c - '0');
  }
  if (cap < 1) throw DomainError(Errc::Domain, "HRHLAB_MAX_MU must be a positive integer");
  return cap;
}

namespace {

const char* kUsage =
    "usage: hrhlab [--format=text|json] [--batch=FILE] COMMAND...\n"
    "verbs:\n"
    "  spectrum EXPR       spectrum, mu, Sp_min_Z, duality\n"
    "  hrh EXPR            level of an isolated hypersurface singularity\n"
    "  bsato EXPR          Bernstein-Sato roots, alpha_tilde_Z, cor-bs checks\n"
    "  det CASE key=...    determinantal invariants (generic, skew-odd,\n"
    "                      skew-even, symmetric)\n"
    "  cone n=.. h=..      cone over a polarized smooth projective base\n"
    "  toric rays=..       affine toric variety from ray generators\n"
    "  secant p1=.. vanishing=..\n"
    "  verify [--suite=all|spectrum|det|families]\n"
    "EXPR := bp(a1,a2,...) | ts(EXPR,EXPR) | tuple(EXPR,EXPR)\n"
    "exit codes: 0 ok, 2 domain error, 3 consistency error\n"
    "env: HRHLAB_MAX_MU caps enumeration size (default 10^6)\n";

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  std::string batch_file;
  bool have_batch = false;
  Command::Format default_format = Command::Format::Text;
  std::vector<std::string> words;
  std::vector<std::string> tail_flags;

  for (const auto& arg : args) {
    if (arg.rfind("--batch=", 0) == 0) {
      batch_file = arg.substr(8);
      have_batch = true;
    } else if (arg == "--help" || arg == "-h") {
      std::cout << kUsage;
      return 0;
    } else if (arg.rfind("--format=", 0) == 0 || arg.rfind("--suite=", 0) == 0) {
      tail_flags.push_back(arg);
    } else if (arg.rfind("--", 0) == 0) {
      std::cerr << "error[E_SYNTAX]: unknown flag '" << arg << "'\n";
      return 2;
    } else {
      words.push_back(arg);
    }
  }

  if (have_batch) {
    if (!words.empty()) {
      std::cerr << "error[E_SYNTAX]: --batch takes no command words\n";
      return 2;
    }
    for (const auto& f : tail_flags) {
      if (f == "--format=json") default_format = Command::Format::Json;
      else if (f == "--format=text") default_format = Command::Format::Text;
      else {
        std::cerr << "error[E_SYNTAX]: flag '" << f << "' is not valid with --batch\n";
        return 2;
      }
    }
    std::ifstream in(batch_file);
    if (!in) {
      std::cerr << "error[E_IO]: cannot read batch file '" << batch_file << "'\n";
      return 2;
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
      std::size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      lines.push_back(line);
    }
    int exit_code = 0;
    for (const Report& rep : run_batch(lines, default_format)) {
      std::cout << rep.output();
      if (exit_code == 0 && rep.exit_code != 0) exit_code = rep.exit_code;
    }
    return exit_code;
  }

  if (words.empty() && tail_flags.empty()) {
    std::cerr << kUsage;
    return 2;
  }
  std::string text;
  for (const auto& w : words) {
    if (!text.empty()) text += " ";
    text += w;
  }
  for (const auto& f : tail_flags) {
    if (!text.empty()) text += " ";
    text += f;
  }
  Report rep = run_line(text, Command::Format::Text);
  std::cout << rep.output();
  return rep.exit_code;
}

}  // namespace hrhlab
