#pragma once

#include <string>

#include "kanex/kan.hpp"
#include "kanex/shapes.hpp"

namespace kanex {

// A strict-full-subderivator membership predicate: vanishing positions,
// arrows required to be quasi-isomorphisms, squares required bicartesian.
struct SubderivatorSpec {
  std::string name;
  FinPoset shape;
  std::vector<Label> vanishing;
  std::vector<std::pair<Label, Label>> iso_arrows;
  std::vector<SquareRef> bicartesian;
};

struct ConditionReport {
  std::string kind;  // "vanishing" | "iso" | "bicartesian"
  std::string where;
  bool ok = false;
  std::map<int, int> homology;  // offending homology table for vanishing failures
};

struct MembershipReport {
  bool pass = true;
  std::vector<ConditionReport> conditions;
  std::string summary() const;
};

MembershipReport is_member(const SubderivatorSpec& spec, const Diagram& x);

// Named specs: "A(n,2)", "K(n,l,m)", "Mn-ex(n,kmin,kmax)".
SubderivatorSpec spec_a_n2(int n);
SubderivatorSpec spec_k(int n, int l, int m);
SubderivatorSpec spec_mesh_ex(int n, int kmin, int kmax);
SubderivatorSpec spec_by_name(const std::string& name);
// Trivial spec with no conditions over a shape.
SubderivatorSpec spec_none(const FinPoset& shape, const std::string& name);

// Per-object unit check for u_! along u: compares X_a with the bar
// totalization over the slice {a' : u(a') <= u(a)} through the canonical
// 0-chain inclusion, reporting quasi-isomorphism or failure per object.
struct UnitIsoEntry {
  Label object;
  bool ok = false;
  std::map<int, int> value_homology;
  std::map<int, int> hocolim_homology;
};

struct UnitIsoReport {
  bool all_pass = true;
  std::vector<UnitIsoEntry> entries;
  std::string summary() const;
};

UnitIsoReport unit_iso_check(const MonotoneMap& u, const Diagram& x);

}  // namespace kanex
