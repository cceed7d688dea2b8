#pragma once

#include <filesystem>
#include <optional>

#include "relfrob/gln.hpp"
#include "relfrob/gset.hpp"

namespace relfrob {

/// Parsed group definition. Sources:
///   - permutation generators (degree + cycle strings)
///   - an explicit Cayley table from a JSON file
///   - a builtin family: Cn, Sn, An, Dn (order 2n), Q8, GL (with n, q)
struct GroupSpec {
  enum class Kind { perm, cayley, builtin };
  Kind kind = Kind::perm;
  unsigned degree = 0;
  std::vector<std::string> generator_cycles;
  std::filesystem::path cayley_path;
  std::string builtin_name;
  unsigned gl_n = 0, gl_q = 0;
  std::string description;
};

/// Text format, one directive per line ('#' starts a comment):
///   degree: <d>        followed by one or more
///   gen: <cycles>
/// or
///   cayley: <path.json>   ({"table": [[...]]}, identity must be index 0)
/// or
///   builtin: <name> [n=<n>] [q=<q>]
GroupSpec parse_group_file(const std::filesystem::path& path);
GroupSpec parse_group_text(const std::string& text,
                           const std::filesystem::path& base_dir = {});

struct ResolvedGroup {
  GroupPtr group;
  std::optional<GSet> natural;            // permutation groups, GL flags
  std::vector<Permutation> generators;    // permutation groups only
  std::optional<GLFlag> gl;               // builtin GL only
  std::string description;
};

ResolvedGroup resolve_group(const GroupSpec& spec, const Config& cfg = {});

/// Builtin shortcut used by tests and the selftest battery.
ResolvedGroup builtin_group(const std::string& name, const Config& cfg = {});

/// G-set selector: natural | regular | point | cosets:<gens> | flags.
/// Coset generators are comma-separated element expressions.
GSet resolve_gset(const ResolvedGroup& rg, const std::string& spec,
                  const Config& cfg = {});

/// Element expression: "e", a word in generators like "g0*g1^-1*g0"
/// (for groups without stored generators, g<i> addresses element i), or
/// cycle notation for permutation groups.
Elt parse_element(const ResolvedGroup& rg, const std::string& expr);

std::vector<Elt> parse_element_list(const ResolvedGroup& rg,
                                    const std::string& csv);

}  // namespace relfrob
