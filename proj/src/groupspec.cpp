#include "relfrob/groupspec.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace relfrob {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<Elt> q8_table() {
  // elements 1, -1, i, -i, j, -j, k, -k as (axis, sign): index = 2*axis+sign
  // axis 0 = 1, 1 = i, 2 = j, 3 = k
  auto mul_basis = [](unsigned a, unsigned b, unsigned& axis, unsigned& sign) {
    // quaternion unit products with sign
    static const unsigned axis_tab[4][4] = {{0, 1, 2, 3},
                                            {1, 0, 3, 2},
                                            {2, 3, 0, 1},
                                            {3, 2, 1, 0}};
    static const unsigned sign_tab[4][4] = {{0, 0, 0, 0},
                                            {0, 1, 0, 1},
                                            {0, 1, 1, 0},
                                            {0, 0, 1, 1}};
    axis = axis_tab[a][b];
    sign = sign_tab[a][b];
  };
  std::vector<Elt> table(64);
  for (unsigned x = 0; x < 8; ++x)
    for (unsigned y = 0; y < 8; ++y) {
      unsigned ax = x / 2, sx = x % 2, ay = y / 2, sy = y % 2;
      unsigned az, sz;
      mul_basis(ax, ay, az, sz);
      unsigned sign = (sx + sy + sz) % 2;
      table[x * 8 + y] = az * 2 + sign;
    }
  return table;
}

}  // namespace

GroupSpec parse_group_text(const std::string& text,
                           const std::filesystem::path& base_dir) {
  GroupSpec spec;
  bool have_degree = false, have_source = false;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected '<key>: <value>'", line_no);
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "degree") {
      if (have_source && spec.kind != GroupSpec::Kind::perm)
        throw ParseError("degree not valid for this source", line_no);
      try {
        spec.degree = static_cast<unsigned>(std::stoul(value));
      } catch (...) {
        throw ParseError("bad degree '" + value + "'", line_no);
      }
      if (spec.degree == 0) throw ParseError("degree must be positive", line_no);
      spec.kind = GroupSpec::Kind::perm;
      have_degree = true;
      have_source = true;
    } else if (key == "gen") {
      if (!have_degree)
        throw ParseError("'gen:' before 'degree:'", line_no);
      try {
        Permutation::from_cycles(spec.degree, value);
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()), line_no);
      }
      spec.generator_cycles.push_back(value);
    } else if (key == "cayley") {
      if (have_source) throw ParseError("conflicting group sources", line_no);
      spec.kind = GroupSpec::Kind::cayley;
      std::filesystem::path p = value;
      if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
      spec.cayley_path = p;
      have_source = true;
    } else if (key == "builtin") {
      if (have_source) throw ParseError("conflicting group sources", line_no);
      spec.kind = GroupSpec::Kind::builtin;
      std::istringstream parts(value);
      std::string tok;
      parts >> spec.builtin_name;
      if (spec.builtin_name.empty())
        throw ParseError("builtin name missing", line_no);
      while (parts >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
          throw ParseError("expected n=<..> or q=<..>", line_no);
        std::string k = tok.substr(0, eq);
        unsigned v = 0;
        try {
          v = static_cast<unsigned>(std::stoul(tok.substr(eq + 1)));
        } catch (...) {
          throw ParseError("bad parameter '" + tok + "'", line_no);
        }
        if (k == "n")
          spec.gl_n = v;
        else if (k == "q")
          spec.gl_q = v;
        else
          throw ParseError("unknown parameter '" + k + "'", line_no);
      }
      have_source = true;
    } else {
      throw ParseError("unknown directive '" + key + "'", line_no);
    }
  }
  if (!have_source) throw ParseError("no group definition found", line_no);
  if (spec.kind == GroupSpec::Kind::perm && spec.generator_cycles.empty())
    throw ParseError("permutation group without generators", line_no);
  return spec;
}

GroupSpec parse_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  GroupSpec spec = parse_group_text(buf.str(), path.parent_path());
  spec.description = path.filename().string();
  return spec;
}

namespace {

ResolvedGroup resolve_builtin(const GroupSpec& spec, const Config& cfg) {
  const std::string& name = spec.builtin_name;
  ResolvedGroup out;
  out.description = name;
  auto perm_builtin = [&](unsigned degree,
                          const std::vector<std::string>& gens) {
    std::vector<Permutation> ps;
    for (const auto& g : gens) ps.push_back(Permutation::from_cycles(degree, g));
    PermGroup pg = perm_group_from_generators(degree, ps, cfg);
    out.group = pg.group;
    out.generators = pg.generators;
    out.natural = natural_gset(pg);
  };
  auto cycle_1_to = [](unsigned n) {
    std::string s = "(";
    for (unsigned i = 1; i <= n; ++i) {
      if (i > 1) s += ' ';
      s += std::to_string(i);
    }
    return s + ")";
  };
  if (name == "GL") {
    if (spec.gl_n == 0 || spec.gl_q == 0)
      throw ParseError("builtin GL needs n= and q=");
    GLFlag gl = build_gl_flag(spec.gl_n, spec.gl_q, cfg);
    out.group = gl.group;
    out.natural = gl.flags;
    out.gl = std::move(gl);
    out.description =
        "GL_" + std::to_string(spec.gl_n) + "(F_" + std::to_string(spec.gl_q) + ")";
    return out;
  }
  if (name == "Q8") {
    out.group = FiniteGroup::from_table(
        q8_table(), 8, {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
    return out;
  }
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'S' ||
                           name[0] == 'A' || name[0] == 'D')) {
    unsigned n = 0;
    try {
      n = static_cast<unsigned>(std::stoul(name.substr(1)));
    } catch (...) {
      throw ParseError("unknown builtin '" + name + "'");
    }
    if (n < 1) throw ParseError("builtin parameter must be positive");
    switch (name[0]) {
      case 'C':
        perm_builtin(n, {cycle_1_to(n)});
        return out;
      case 'S':
        if (n == 1)
          perm_builtin(1, {"e"});
        else if (n == 2)
          perm_builtin(2, {"(1 2)"});
        else
          perm_builtin(n, {"(1 2)", cycle_1_to(n)});
        return out;
      case 'A': {
        if (n < 3) throw ParseError("An needs n >= 3");
        std::vector<std::string> gens{"(1 2 3)"};
        if (n > 3) {
          if (n % 2 == 1)
            gens.push_back(cycle_1_to(n));
          else {
            std::string s = "(";
            for (unsigned i = 2; i <= n; ++i) {
              if (i > 2) s += ' ';
              s += std::to_string(i);
            }
            gens.push_back(s + ")");
          }
        }
        perm_builtin(n, gens);
        return out;
      }
      case 'D': {
        // dihedral group of order 2n acting on n vertices
        if (n < 3) throw ParseError("Dn needs n >= 3");
        std::string refl;
        for (unsigned i = 1; i <= n / 2; ++i) {
          unsigned j = n + 1 - i;
          if (i == j) continue;
          refl += "(" + std::to_string(i) + " " + std::to_string(j) + ")";
        }
        perm_builtin(n, {cycle_1_to(n), refl});
        return out;
      }
    }
  }
  throw ParseError("unknown builtin '" + name + "'");
}

}  // namespace

ResolvedGroup resolve_group(const GroupSpec& spec, const Config& cfg) {
  switch (spec.kind) {
    case GroupSpec::Kind::perm: {
      std::vector<Permutation> gens;
      for (const auto& g : spec.generator_cycles)
        gens.push_back(Permutation::from_cycles(spec.degree, g));
      PermGroup pg = perm_group_from_generators(spec.degree, gens, cfg);
      ResolvedGroup out;
      out.group = pg.group;
      out.generators = pg.generators;
      out.natural = natural_gset(pg);
      out.description = spec.description.empty()
                            ? "perm group on " + std::to_string(spec.degree)
                            : spec.description;
      return out;
    }
    case GroupSpec::Kind::cayley: {
      std::ifstream in(spec.cayley_path);
      if (!in)
        throw ParseError("cannot open cayley file " + spec.cayley_path.string());
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad cayley JSON: ") + e.what());
      }
      auto rows = j.at("table").get<std::vector<std::vector<Elt>>>();
      unsigned n = static_cast<unsigned>(rows.size());
      if (n == 0) throw ParseError("empty cayley table");
      if (n > cfg.group_size_cap) throw TooLarge("cayley table beyond cap");
      std::vector<Elt> flat;
      flat.reserve(static_cast<std::size_t>(n) * n);
      for (const auto& row : rows) {
        if (row.size() != n) throw ParseError("cayley table is not square");
        flat.insert(flat.end(), row.begin(), row.end());
      }
      ResolvedGroup out;
      out.group = FiniteGroup::from_table(std::move(flat), n);
      out.description = spec.description.empty() ? "cayley group"
                                                 : spec.description;
      return out;
    }
    case GroupSpec::Kind::builtin: {
      ResolvedGroup out = resolve_builtin(spec, cfg);
      if (!spec.description.empty()) out.description = spec.description;
      return out;
    }
  }
  throw Error("unreachable");
}

ResolvedGroup builtin_group(const std::string& name, const Config& cfg) {
  return resolve_group(parse_group_text("builtin: " + name), cfg);
}

Elt parse_element(const ResolvedGroup& rg, const std::string& expr) {
  const FiniteGroup& G = *rg.group;
  std::string s = trim(expr);
  if (s.empty()) throw ParseError("empty element expression");
  if (s == "e") return 0;
  if (s.find('(') != std::string::npos) {
    if (rg.generators.empty() || !rg.natural)
      throw ParseError("cycle notation needs a permutation group");
    unsigned degree = rg.natural->size();
    Permutation p = Permutation::from_cycles(degree, s);
    // find the element whose action matches
    for (Elt g = 0; g < G.order(); ++g) {
      bool match = true;
      for (Elt x = 0; x < degree && match; ++x)
        match = rg.natural->act(g, x) == p.apply(x);
      if (match) return g;
    }
    throw ParseError("permutation '" + s + "' is not in the group");
  }
  // generator word g<i>[^<exp>] joined by '*'
  Elt acc = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t star = s.find('*', pos);
    std::string tok = trim(s.substr(pos, star == std::string::npos
                                             ? std::string::npos
                                             : star - pos));
    pos = star == std::string::npos ? s.size() : star + 1;
    if (tok.empty()) throw ParseError("empty factor in element word");
    long exp = 1;
    auto caret = tok.find('^');
    std::string base = tok;
    if (caret != std::string::npos) {
      base = trim(tok.substr(0, caret));
      try {
        exp = std::stol(trim(tok.substr(caret + 1)));
      } catch (...) {
        throw ParseError("bad exponent in '" + tok + "'");
      }
    }
    if (base == "e") continue;
    if (base.size() < 2 || base[0] != 'g')
      throw ParseError("bad factor '" + tok + "'");
    unsigned idx = 0;
    try {
      idx = static_cast<unsigned>(std::stoul(base.substr(1)));
    } catch (...) {
      throw ParseError("bad generator index in '" + tok + "'");
    }
    Elt factor;
    if (!rg.generators.empty()) {
      if (idx >= rg.generators.size())
        throw ParseError("generator index out of range in '" + tok + "'");
      // generators are elements 1..k in BFS order only if distinct; find by
      // action instead to stay robust
      const Permutation& p = rg.generators[idx];
      const GSet& nat = *rg.natural;
      factor = G.order();
      for (Elt g = 0; g < G.order(); ++g) {
        bool match = true;
        for (Elt x = 0; x < nat.size() && match; ++x)
          match = nat.act(g, x) == p.apply(x);
        if (match) {
          factor = g;
          break;
        }
      }
      if (factor == G.order())
        throw InternalInconsistency("generator not found in its own group");
    } else {
      // table-defined groups: g<i> addresses element index i
      if (idx >= G.order())
        throw ParseError("element index out of range in '" + tok + "'");
      factor = static_cast<Elt>(idx);
    }
    acc = G.mul(acc, G.power(factor, exp));
  }
  return acc;
}

std::vector<Elt> parse_element_list(const ResolvedGroup& rg,
                                    const std::string& csv) {
  std::vector<Elt> out;
  std::string s = csv;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    // split on commas that are not inside cycle parentheses
    int depth = 0;
    std::size_t cut = s.size();
    for (std::size_t i = pos; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (s[i] == ',' && depth == 0) {
        cut = i;
        break;
      }
    }
    std::string tok = trim(s.substr(pos, cut - pos));
    if (!tok.empty()) out.push_back(parse_element(rg, tok));
    if (cut == s.size()) break;
    pos = cut + 1;
  }
  return out;
}

GSet resolve_gset(const ResolvedGroup& rg, const std::string& spec,
                  const Config& cfg) {
  (void)cfg;
  std::string s = trim(spec);
  if (s == "natural") {
    if (rg.natural) return *rg.natural;
    throw ParseError("group has no natural G-set");
  }
  if (s == "regular") return regular_gset(rg.group);
  if (s == "point") return one_point_gset(rg.group);
  if (s == "flags") {
    if (rg.gl) return rg.gl->flags;
    throw ParseError("'flags' needs the builtin GL group");
  }
  if (s.rfind("cosets:", 0) == 0) {
    std::vector<Elt> gens = parse_element_list(rg, s.substr(7));
    return coset_gset(rg.group, gens);
  }
  throw ParseError("unknown G-set spec '" + s + "'");
}

}  // namespace relfrob
