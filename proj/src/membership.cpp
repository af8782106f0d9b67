#include "kanex/membership.hpp"

#include <sstream>
#include <stdexcept>

namespace kanex {

namespace {

std::string htable(const std::map<int, int>& h) {
  if (h.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, d] : h) {
    if (!first) os << ", ";
    first = false;
    os << n << ":" << d;
  }
  return os.str();
}

}  // namespace

std::string MembershipReport::summary() const {
  std::ostringstream os;
  os << (pass ? "member" : "NOT a member");
  for (const auto& c : conditions)
    if (!c.ok) {
      os << "; " << c.kind << " fails at " << c.where;
      if (c.kind == "vanishing") os << " [H = {" << htable(c.homology) << "}]";
    }
  return os.str();
}

MembershipReport is_member(const SubderivatorSpec& spec, const Diagram& x) {
  if (spec.shape != x.shape())
    throw std::invalid_argument("is_member: diagram shape does not match spec shape");
  MembershipReport r;
  for (const auto& l : spec.vanishing) {
    ConditionReport c;
    c.kind = "vanishing";
    c.where = l.str();
    c.ok = x.at(l).is_acyclic();
    if (!c.ok) c.homology = x.at(l).homology_dims();
    r.pass = r.pass && c.ok;
    r.conditions.push_back(std::move(c));
  }
  for (const auto& [a, b] : spec.iso_arrows) {
    ConditionReport c;
    c.kind = "iso";
    c.where = a.str() + " -> " + b.str();
    c.ok = is_quasi_iso(x.arrow(a, b));
    r.pass = r.pass && c.ok;
    r.conditions.push_back(std::move(c));
  }
  for (const auto& sq : spec.bicartesian) {
    ConditionReport c;
    c.kind = "bicartesian";
    c.where = sq.x00.str() + ".." + sq.x11.str();
    c.ok = is_bicartesian(sq, x);
    r.pass = r.pass && c.ok;
    r.conditions.push_back(std::move(c));
  }
  return r;
}

SubderivatorSpec spec_a_n2(int n) {
  SubderivatorSpec s;
  s.name = "A(" + std::to_string(n) + ",2)";
  s.shape = a_tilde(n);
  for (int xx = 1; xx <= n - 2; ++xx) s.vanishing.push_back(stair_upper(xx));
  return s;
}

SubderivatorSpec spec_k(int n, int l, int m) {
  if (!k_shape_valid(n, l, m)) throw std::invalid_argument("invalid K spec indices");
  SubderivatorSpec s;
  s.name = "K(" + std::to_string(n) + "," + std::to_string(l) + "," + std::to_string(m) + ")";
  s.shape = k_shape(n, l, m);
  const int nn = n - l + 1;
  auto add_level_labels = [&](const Label& base, auto&& fn) {
    if (l == 1) {
      if (s.shape.contains(base)) fn(base);
      return;
    }
    for (int y = 0; y <= l - 1; ++y) {
      Label lab = base;
      lab.c.push_back(y);
      if (s.shape.contains(lab)) fn(lab);
    }
  };
  // Vanishing at the upper diagonal, level-wise.
  for (int xx = 1; xx <= nn - 2; ++xx)
    add_level_labels(stair_upper(xx), [&](const Label& lab) { s.vanishing.push_back(lab); });
  if (l >= 2) {
    // Column arrows required to be quasi-isomorphisms: lower diagonal, the
    // staircase top, and the (vacuously iso) upper columns where present.
    std::vector<Label> columns;
    for (int xx = 1; xx <= nn - 2; ++xx) columns.push_back(stair_lower(xx));
    for (int xx = 1; xx <= nn - 2; ++xx) columns.push_back(stair_upper(xx));
    columns.push_back(stair_top(nn, m == 1));
    for (const auto& base : columns)
      for (int y = 0; y + 1 <= l - 1; ++y) {
        Label from = base, to = base;
        from.c.push_back(y);
        to.c.push_back(y + 1);
        if (s.shape.contains(from) && s.shape.contains(to)) s.iso_arrows.emplace_back(from, to);
      }
  }
  if (m == 2) {
    auto lvl = [&](const Label& base, int y) {
      if (l == 1) return base;
      Label lab = base;
      lab.c.push_back(y);
      return lab;
    };
    const int levels = (l == 1) ? 1 : l;
    for (int y = 0; y < levels; ++y)
      s.bicartesian.push_back(SquareRef{lvl(Label::of(0, 0), y), lvl(Label::of(1, 0), y),
                                        lvl(Label::of(0, 1), y), lvl(stair_interior(), y)});
  }
  return s;
}

SubderivatorSpec spec_mesh_ex(int n, int kmin, int kmax) {
  SubderivatorSpec s;
  s.name = "Mn-ex(" + std::to_string(n) + "," + std::to_string(kmin) + "," + std::to_string(kmax) + ")";
  s.shape = mesh_window(n, kmin, kmax);
  for (int k = kmin; k <= kmax; ++k) {
    s.vanishing.push_back(Label::of(k, 0));
    s.vanishing.push_back(Label::of(k, n + 1));
  }
  for (int k = kmin; k < kmax; ++k)
    for (int l = 1; l <= n; ++l)
      s.bicartesian.push_back(SquareRef{Label::of(k, l), Label::of(k + 1, l - 1),
                                        Label::of(k, l + 1), Label::of(k + 1, l)});
  return s;
}

SubderivatorSpec spec_none(const FinPoset& shape, const std::string& name) {
  SubderivatorSpec s;
  s.name = name;
  s.shape = shape;
  return s;
}

SubderivatorSpec spec_by_name(const std::string& name) {
  auto args_of = [&](const std::string& head) -> std::vector<int> {
    if (name.rfind(head + "(", 0) != 0 || name.back() != ')') return {};
    std::string body = name.substr(head.size() + 1, name.size() - head.size() - 2);
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= body.size()) {
      size_t comma = body.find(',', pos);
      if (comma == std::string::npos) comma = body.size();
      out.push_back(std::stoi(body.substr(pos, comma - pos)));
      pos = comma + 1;
      if (pos > body.size()) break;
    }
    return out;
  };
  if (auto a = args_of("A"); a.size() == 2 && a[1] == 2) return spec_a_n2(a[0]);
  if (auto a = args_of("K"); a.size() == 3) return spec_k(a[0], a[1], a[2]);
  if (auto a = args_of("Mn-ex"); a.size() == 3) return spec_mesh_ex(a[0], a[1], a[2]);
  throw std::invalid_argument("unknown spec name: " + name);
}

std::string UnitIsoReport::summary() const {
  std::ostringstream os;
  os << (all_pass ? "unit is a pointwise quasi-isomorphism" : "unit FAILS");
  for (const auto& e : entries)
    if (!e.ok)
      os << "; at " << e.object.str() << " value H = {" << htable(e.value_homology)
         << "} vs hocolim H = {" << htable(e.hocolim_homology) << "}";
  return os.str();
}

UnitIsoReport unit_iso_check(const MonotoneMap& u, const Diagram& x) {
  if (u.source() != x.shape()) throw std::invalid_argument("unit_iso_check: shape mismatch");
  UnitIsoReport r;
  for (int a = 0; a < u.source().size(); ++a) {
    SliceResult sl = slice(u, u.target().label(u.apply(a)), SliceSide::Under);
    HocolimResult h = hocolim_over(x, sl.source_indices);
    // canonical map X_a -> hocolim: the 0-chain inclusion at a
    int pos = -1;
    for (size_t i = 0; i < sl.source_indices.size(); ++i)
      if (sl.source_indices[i] == a) pos = static_cast<int>(i);
    if (pos < 0) throw std::logic_error("object missing from its own slice");
    UnitIsoEntry e;
    e.object = u.source().label(a);
    e.ok = is_quasi_iso(h.canonical[pos]);
    if (!e.ok) {
      e.value_homology = x.at(a).homology_dims();
      e.hocolim_homology = h.total.homology_dims();
    }
    r.all_pass = r.all_pass && e.ok;
    r.entries.push_back(std::move(e));
  }
  return r;
}

}  // namespace kanex
