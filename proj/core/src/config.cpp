#include "realgas/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "realgas/error.hpp"

namespace realgas {

namespace {

struct Value {
  enum class Kind { String, Number, Array };
  Kind kind = Kind::Number;
  std::string text;
  double number = 0.0;
  bool integer = false;
  std::vector<double> numbers;
  int line = 0;
};

using Table = std::map<std::string, Value>;

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Drops a trailing comment, honouring quoted strings.
std::string_view strip_comment(std::string_view s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && quoted) {
      ++i;
    } else if (s[i] == '"') {
      quoted = !quoted;
    } else if (s[i] == '#' && !quoted) {
      return s.substr(0, i);
    }
  }
  return s;
}

double parse_number(std::string_view s, int line, bool* integer = nullptr) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw ConfigError("invalid number '" + std::string(s) + "'", line);
  if (integer) *integer = s.find_first_of(".eE") == std::string_view::npos;
  return v;
}

std::string parse_string(std::string_view s, int line) {
  if (s.size() < 2 || s.front() != '"' || s.back() != '"')
    throw ConfigError("unterminated string", line);
  std::string out;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    char c = s[i];
    if (c == '\\') {
      if (i + 2 >= s.size()) throw ConfigError("dangling escape", line);
      c = s[++i];
      if (c == 'n') c = '\n';
      else if (c == 't') c = '\t';
      else if (c != '"' && c != '\\') throw ConfigError("unsupported escape", line);
    } else if (c == '"') {
      throw ConfigError("unexpected quote in string", line);
    }
    out.push_back(c);
  }
  return out;
}

Value parse_value(std::string_view s, int line) {
  Value v;
  v.line = line;
  s = trim(s);
  if (s.empty()) throw ConfigError("missing value", line);
  if (s.front() == '"') {
    v.kind = Value::Kind::String;
    v.text = parse_string(s, line);
  } else if (s.front() == '[') {
    if (s.back() != ']') throw ConfigError("unterminated array", line);
    v.kind = Value::Kind::Array;
    std::string_view body = trim(s.substr(1, s.size() - 2));
    while (!body.empty()) {
      const auto comma = body.find(',');
      v.numbers.push_back(parse_number(body.substr(0, comma), line));
      if (comma == std::string_view::npos) break;
      body = trim(body.substr(comma + 1));
    }
  } else {
    v.kind = Value::Kind::Number;
    v.number = parse_number(s, line, &v.integer);
  }
  return v;
}

bool valid_key(std::string_view k) {
  if (k.empty()) return false;
  for (char c : k)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
  return true;
}

std::map<std::string, Table> parse_tables(std::string_view text) {
  std::map<std::string, Table> tables;
  std::set<std::string> seen_headers;
  std::string current;
  tables[current];
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const std::string_view line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("malformed table header", line_no);
      current = std::string(trim(line.substr(1, line.size() - 2)));
      if (!valid_key(current)) throw ConfigError("invalid table name", line_no);
      if (!seen_headers.insert(current).second)
        throw ConfigError("duplicate table [" + current + "]", line_no);
      tables[current];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected key = value", line_no);
    const std::string key(trim(line.substr(0, eq)));
    if (!valid_key(key)) throw ConfigError("invalid key '" + key + "'", line_no);
    Value v = parse_value(line.substr(eq + 1), line_no);
    if (!tables[current].emplace(key, std::move(v)).second)
      throw ConfigError("duplicate key '" + key + "'", line_no);
  }
  return tables;
}

const std::string& want_string(const Value& v, const std::string& key) {
  if (v.kind != Value::Kind::String) throw ConfigError(key + " must be a string", v.line);
  return v.text;
}

double want_number(const Value& v, const std::string& key) {
  if (v.kind != Value::Kind::Number) throw ConfigError(key + " must be a number", v.line);
  return v.number;
}

int want_int(const Value& v, const std::string& key) {
  const double x = want_number(v, key);
  if (!v.integer || x < -1e9 || x > 1e9) throw ConfigError(key + " must be an integer", v.line);
  return static_cast<int>(x);
}

const std::vector<double>& want_array(const Value& v, const std::string& key) {
  if (v.kind != Value::Kind::Array) throw ConfigError(key + " must be an array", v.line);
  return v.numbers;
}

Scheme parse_scheme(const Value& v) {
  const std::string& s = want_string(v, "scheme");
  if (s == "godunov") return Scheme::Godunov;
  if (s == "grp") return Scheme::Grp;
  throw ConfigError("scheme must be godunov or grp", v.line);
}

RiemannBackend parse_backend(const Value& v) {
  const std::string& s = want_string(v, "backend");
  if (s == "approximate") return RiemannBackend::Approximate;
  if (s == "exact-eos") return RiemannBackend::ExactEos;
  throw ConfigError("backend must be approximate or exact-eos", v.line);
}

SweepOrder parse_sweep(const Value& v) {
  const std::string& s = want_string(v, "sweep");
  if (s == "xyx") return SweepOrder::XYX;
  if (s == "yxy") return SweepOrder::YXY;
  throw ConfigError("sweep must be xyx or yxy", v.line);
}

BoundaryKind parse_bc(const Value& v, const std::string& key) {
  const std::string& s = want_string(v, key);
  if (s == "transmissive") return BoundaryKind::Transmissive;
  if (s == "reflective") return BoundaryKind::Reflective;
  if (s == "periodic") return BoundaryKind::Periodic;
  throw ConfigError(key + " must be transmissive, reflective or periodic", v.line);
}

FlowState parse_state(const Value& v, const std::string& key) {
  const std::vector<double>& a = want_array(v, key);
  if (a.size() != 3) throw ConfigError(key + " must be [rho, u, p]", v.line);
  return {a[0], a[1], 0.0, a[2]};
}

EosModel parse_eos(const Table& t, int header_line) {
  auto get = [&](const char* key, double fallback) {
    const auto it = t.find(key);
    return it == t.end() ? fallback : want_number(it->second, key);
  };
  const auto kind_it = t.find("kind");
  if (kind_it == t.end()) throw ConfigError("[eos] needs a kind", header_line);
  const std::string& kind = want_string(kind_it->second, "kind");
  const std::map<std::string, std::set<std::string>> allowed{
      {"polytropic", {"kind", "gamma"}},
      {"stiffened", {"kind", "gamma", "p_inf"}},
      {"jwl", {"kind", "rho0", "e0", "Gamma", "A", "B", "R1", "R2"}},
      {"cochran-chan", {"kind", "rho0", "e0", "Gamma", "A", "B", "eps1", "eps2"}}};
  const auto a = allowed.find(kind);
  if (a == allowed.end()) throw ConfigError("unknown eos kind '" + kind + "'", kind_it->second.line);
  for (const auto& [key, v] : t)
    if (!a->second.count(key)) throw ConfigError("unknown key '" + key + "' in [eos]", v.line);
  try {
    if (kind == "polytropic") return EosModel::polytropic(get("gamma", 1.4));
    if (kind == "stiffened") return EosModel::stiffened(get("gamma", 1.4), get("p_inf", 0.0));
    if (kind == "jwl")
      return EosModel::jwl({get("rho0", 1.0), get("e0", 0.0), get("Gamma", 0.0), get("A", 0.0),
                            get("B", 0.0), get("R1", 1.0), get("R2", 1.0)});
    return EosModel::cochran_chan({get("rho0", 1.0), get("e0", 0.0), get("Gamma", 0.0),
                                   get("A", 0.0), get("B", 0.0), get("eps1", 2.0),
                                   get("eps2", 2.0)});
  } catch (const DomainError& e) {
    throw ConfigError(std::string("eos: ") + e.what(), header_line);
  }
}

std::string fmt_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string fmt_array(const std::vector<double>& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += fmt_number(a[i]);
  }
  return s + "]";
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  return out + "\"";
}

constexpr std::array<const char*, 4> kBcKeys{"bc_x_lo", "bc_x_hi", "bc_y_lo", "bc_y_hi"};

}  // namespace

std::string_view to_string(Scheme s) { return s == Scheme::Grp ? "grp" : "godunov"; }

std::string_view to_string(RiemannBackend b) {
  return b == RiemannBackend::ExactEos ? "exact-eos" : "approximate";
}

std::string_view to_string(BoundaryKind b) {
  switch (b) {
    case BoundaryKind::Transmissive: return "transmissive";
    case BoundaryKind::Reflective: return "reflective";
    case BoundaryKind::Periodic: return "periodic";
  }
  return "transmissive";
}

std::string_view to_string(SweepOrder s) { return s == SweepOrder::YXY ? "yxy" : "xyx"; }

RunConfig parse_config(std::string_view text) {
  const auto tables = parse_tables(text);
  RunConfig c;
  for (const auto& [key, v] : tables.at("")) {
    if (key == "problem") c.problem = want_string(v, key);
    else if (key == "scheme") c.scheme = parse_scheme(v);
    else if (key == "backend") c.backend = parse_backend(v);
    else if (key == "cells") c.cells = want_int(v, key);
    else if (key == "cells_y") c.cells_y = want_int(v, key);
    else if (key == "cfl") c.cfl = want_number(v, key);
    else if (key == "limiter") c.limiter = want_number(v, key);
    else if (key == "sweep") c.sweep = parse_sweep(v);
    else if (key == "out_dir") c.out_dir = want_string(v, key);
    else if (key == "times") c.times = want_array(v, key);
    else if (key == "t_final") c.t_final = want_number(v, key);
    else {
      bool bc = false;
      for (std::size_t f = 0; f < kBcKeys.size(); ++f) {
        if (key == kBcKeys[f]) {
          c.bc[f] = parse_bc(v, key);
          bc = true;
        }
      }
      if (!bc) throw ConfigError("unknown key '" + key + "'", v.line);
    }
  }
  for (const auto& [name, t] : tables) {
    if (name.empty() || name == "problem" || name == "eos") continue;
    throw ConfigError("unknown table [" + name + "]", t.empty() ? 0 : t.begin()->second.line);
  }
  const bool has_problem = tables.count("problem") > 0;
  const bool has_eos = tables.count("eos") > 0;
  InlineProblem p;
  if (has_eos) {
    const Table& e = tables.at("eos");
    p.eos = parse_eos(e, e.empty() ? 0 : e.begin()->second.line);
  }
  bool left = false, right = false;
  if (has_problem) {
    for (const auto& [key, v] : tables.at("problem")) {
      if (key == "name") p.name = want_string(v, key);
      else if (key == "x_lo") p.x_lo = want_number(v, key);
      else if (key == "x_hi") p.x_hi = want_number(v, key);
      else if (key == "interface") p.interface_x = want_number(v, key);
      else if (key == "t_final") p.t_final = want_number(v, key);
      else if (key == "left") p.left = parse_state(v, key), left = true;
      else if (key == "right") p.right = parse_state(v, key), right = true;
      else throw ConfigError("unknown key '" + key + "' in [problem]", v.line);
    }
  }
  if (has_problem != has_eos) throw ConfigError("[problem] and [eos] must be given together");
  if (has_problem) {
    if (!c.problem.empty())
      throw ConfigError("give either problem = \"name\" or a [problem] block, not both");
    if (!left || !right) throw ConfigError("[problem] needs left and right states");
    c.inline_problem = p;
  }
  validate_config(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_config(os.str());
}

void validate_config(const RunConfig& c) {
  if (c.problem.empty() && !c.inline_problem) throw ConfigError("problem: no problem given");
  if (!c.problem.empty()) {
    const auto names = problem_names();
    if (std::find(names.begin(), names.end(), c.problem) == names.end())
      throw ConfigError("problem: unknown problem '" + c.problem + "'");
  }
  if (c.cells < 4) throw ConfigError("cells: resolution must be at least 4");
  if (c.cells_y != 0 && c.cells_y < 4) throw ConfigError("cells_y: resolution must be at least 4");
  if (!(c.cfl > 0.0 && c.cfl <= 1.0)) throw ConfigError("cfl: must lie in (0, 1]");
  if (!(c.limiter >= 1.0 && c.limiter < 2.0)) throw ConfigError("limiter: must lie in [1, 2)");
  if (c.backend == RiemannBackend::ExactEos && c.scheme == Scheme::Grp)
    throw ConfigError("backend: exact-eos requires scheme = \"godunov\"");
  for (double t : c.times)
    if (!(t > 0.0)) throw ConfigError("times: snapshot times must be positive");
  if (c.t_final && !(*c.t_final > 0.0)) throw ConfigError("t_final: must be positive");
  if (c.out_dir.empty()) throw ConfigError("out_dir: must not be empty");
  if (c.inline_problem) {
    const InlineProblem& p = *c.inline_problem;
    if (!(p.x_hi > p.x_lo)) throw ConfigError("problem.x_hi: must exceed x_lo");
    if (!(p.interface_x > p.x_lo && p.interface_x < p.x_hi))
      throw ConfigError("problem.interface: must lie inside the domain");
    if (!(p.t_final > 0.0)) throw ConfigError("problem.t_final: must be positive");
    if (!is_admissible(p.eos, p.left.rho, p.left.p))
      throw ConfigError("problem.left: state outside the EOS validity region");
    if (!is_admissible(p.eos, p.right.rho, p.right.p))
      throw ConfigError("problem.right: state outside the EOS validity region");
  }
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream os;
  if (!c.problem.empty()) os << "problem = " << quote(c.problem) << "\n";
  os << "scheme = " << quote(to_string(c.scheme)) << "\n";
  os << "backend = " << quote(to_string(c.backend)) << "\n";
  os << "cells = " << c.cells << "\n";
  if (c.cells_y) os << "cells_y = " << c.cells_y << "\n";
  os << "cfl = " << fmt_number(c.cfl) << "\n";
  os << "limiter = " << fmt_number(c.limiter) << "\n";
  os << "sweep = " << quote(to_string(c.sweep)) << "\n";
  for (std::size_t f = 0; f < kBcKeys.size(); ++f)
    if (c.bc[f]) os << kBcKeys[f] << " = " << quote(to_string(*c.bc[f])) << "\n";
  os << "out_dir = " << quote(c.out_dir) << "\n";
  if (!c.times.empty()) os << "times = " << fmt_array(c.times) << "\n";
  if (c.t_final) os << "t_final = " << fmt_number(*c.t_final) << "\n";
  if (c.inline_problem) {
    const InlineProblem& p = *c.inline_problem;
    os << "\n[problem]\n";
    os << "name = " << quote(p.name) << "\n";
    os << "x_lo = " << fmt_number(p.x_lo) << "\n";
    os << "x_hi = " << fmt_number(p.x_hi) << "\n";
    os << "interface = " << fmt_number(p.interface_x) << "\n";
    os << "t_final = " << fmt_number(p.t_final) << "\n";
    os << "left = " << fmt_array({p.left.rho, p.left.u, p.left.p}) << "\n";
    os << "right = " << fmt_array({p.right.rho, p.right.u, p.right.p}) << "\n";
    os << "\n[eos]\n";
    std::visit(
        [&](const auto& q) {
          using T = std::decay_t<decltype(q)>;
          if constexpr (std::is_same_v<T, PolytropicParams>) {
            os << "kind = \"polytropic\"\ngamma = " << fmt_number(q.gamma) << "\n";
          } else if constexpr (std::is_same_v<T, StiffenedGasParams>) {
            os << "kind = \"stiffened\"\ngamma = " << fmt_number(q.gamma)
               << "\np_inf = " << fmt_number(q.p_inf) << "\n";
          } else if constexpr (std::is_same_v<T, JwlParams>) {
            os << "kind = \"jwl\"\nrho0 = " << fmt_number(q.rho0) << "\ne0 = " << fmt_number(q.e0)
               << "\nGamma = " << fmt_number(q.Gamma) << "\nA = " << fmt_number(q.A)
               << "\nB = " << fmt_number(q.B) << "\nR1 = " << fmt_number(q.R1)
               << "\nR2 = " << fmt_number(q.R2) << "\n";
          } else {
            os << "kind = \"cochran-chan\"\nrho0 = " << fmt_number(q.rho0)
               << "\ne0 = " << fmt_number(q.e0) << "\nGamma = " << fmt_number(q.Gamma)
               << "\nA = " << fmt_number(q.A) << "\nB = " << fmt_number(q.B)
               << "\neps1 = " << fmt_number(q.eps1) << "\neps2 = " << fmt_number(q.eps2) << "\n";
          }
        },
        p.eos.params());
  }
  return os.str();
}

ProblemSpec build_problem(const RunConfig& c) {
  ProblemSpec p;
  if (c.inline_problem) {
    const InlineProblem& ip = *c.inline_problem;
    p.name = ip.name;
    p.dims = 1;
    p.x_lo = ip.x_lo;
    p.x_hi = ip.x_hi;
    p.eos = ip.eos;
    p.t_final = ip.t_final;
    p.interface_x = ip.interface_x;
    Region all;
    all.state = ip.right;
    Region left;
    left.x_hi = ip.interface_x;
    left.state = ip.left;
    p.regions = {all, left};
  } else {
    p = load_problem(c.problem);
  }
  for (std::size_t f = 0; f < 4; ++f)
    if (c.bc[f]) p.bc[f] = *c.bc[f];
  if (c.t_final) p.t_final = *c.t_final;
  if (!c.times.empty()) p.output_times = c.times;
  p.cfl = c.cfl;
  p.cells_x = c.cells;
  if (p.dims == 2) {
    if (c.cells_y > 0) {
      p.cells_y = c.cells_y;
    } else {
      const ProblemSpec base = c.inline_problem ? p : load_problem(c.problem);
      p.cells_y = std::max(4, static_cast<int>(std::lround(static_cast<double>(c.cells) *
                                                           base.cells_y / base.cells_x)));
    }
  }
  return p;
}

RunOptions build_run_options(const RunConfig& c, const ProblemSpec& problem) {
  RunOptions o;
  o.scheme.scheme = c.scheme;
  o.scheme.backend = c.backend;
  o.scheme.cfl = c.cfl;
  o.scheme.limiter = c.limiter;
  o.scheme.sweep = c.sweep;
  o.cells_x = problem.cells_x;
  o.cells_y = problem.cells_y;
  o.output_times = problem.output_times;
  o.t_final = problem.t_final;
  return o;
}

}  // namespace realgas
