#include "kanex/pipeline.hpp"

#include <sstream>
#include <stdexcept>

namespace kanex {

namespace {

Label with_level(const Label& base, int y, bool product) {
  if (!product) return base;
  Label l = base;
  l.c.push_back(y);
  return l;
}

// Terminal-slice sections for the epi connectors.
MonotoneMap tstar_for(int n, int l, int m) {
  if (l == 1 && m == 4) {
    FinPoset src = k_shape(n, 1, 4), tgt = k_shape(n, 2, 1);
    return MonotoneMap::make(src, tgt, [](const Label& a) {
      if (a.c[0] == 1 && a.c[1] == 0) return Label::of(0, 0, 0);
      return Label::of(a.c[0] - 1, a.c[1] - 1, 1);
    });
  }
  if (m == 5 && l == n - 2) {
    FinPoset src = a_n_poset(n), tgt = k_shape(n, n - 2, 5);
    return MonotoneMap::make(src, tgt, [n](const Label& a) {
      const int k = a.c[0];
      if (k == 1) return Label::of(1, 0, 0);
      if (k == n) return Label::of(2, 1, n - 3);
      return Label::of(1, 1, k - 2);
    });
  }
  if (m == 5) {
    FinPoset src = k_shape(n, l, 5), tgt = k_shape(n, l + 1, 1);
    return MonotoneMap::make(src, tgt, [](const Label& a) {
      if (a.c[0] == 1 && a.c[1] == 0) return Label::of(0, 0, 0);
      return Label::of(a.c[0] - 1, a.c[1] - 1, a.c[2] + 1);
    });
  }
  throw std::invalid_argument("no terminal-slice section for these indices");
}

PlanStep make_step(StepKind kind, int n, int l, int m, SubderivatorSpec expected) {
  PlanStep s;
  s.kind = kind;
  s.l = l;
  s.m = m;
  s.u = conn_i(n, l, m);
  if (kind == StepKind::KanLeftTstar) s.tstar = tstar_for(n, l, m);
  s.expected = std::move(expected);
  return s;
}

}  // namespace

std::string PlanStep::describe() const {
  std::ostringstream os;
  switch (kind) {
    case StepKind::Restrict: os << "restrict"; break;
    case StepKind::KanLeftZero: os << "kan_left (zero extension)"; break;
    case StepKind::KanLeftPushout: os << "kan_left (pushout corners)"; break;
    case StepKind::KanRightPullback: os << "kan_right (pullback corners)"; break;
    case StepKind::KanLeftTstar: os << "kan_left (terminal slices)"; break;
    case StepKind::KanLeftFork: os << "kan_left (column collapse)"; break;
  }
  os << " along i(" << l << "," << m << ") -> " << expected.name;
  return os.str();
}

PipelinePlan make_plan(int n, PlanDirection dir) {
  if (n < 3) throw std::invalid_argument("plan needs n >= 3");
  PipelinePlan p;
  p.n = n;
  p.direction = dir;
  if (dir == PlanDirection::ToRelations) {
    if (n >= 4) {
      p.steps.push_back(make_step(StepKind::Restrict, n, n - 2, 5, spec_k(n, n - 2, 5)));
      p.steps.push_back(make_step(StepKind::Restrict, n, n - 2, 4, spec_k(n, n - 2, 4)));
    }
    for (int l = n - 2; l >= 1; --l) {
      if (l < n - 2) {
        if (l >= 2) {
          p.steps.push_back(make_step(StepKind::KanLeftTstar, n, l, 5, spec_k(n, l, 5)));
          p.steps.push_back(make_step(StepKind::Restrict, n, l, 4, spec_k(n, l, 4)));
        } else {
          p.steps.push_back(make_step(StepKind::KanLeftTstar, n, 1, 4, spec_k(n, 1, 4)));
        }
      }
      p.steps.push_back(make_step(StepKind::KanLeftZero, n, l, 3, spec_k(n, l, 3)));
      p.steps.push_back(make_step(StepKind::KanRightPullback, n, l, 2, spec_k(n, l, 2)));
      p.steps.push_back(make_step(StepKind::Restrict, n, l, 1,
                                  l == 1 ? spec_a_n2(n) : spec_k(n, l, 1)));
    }
  } else {
    for (int l = 1; l <= n - 2; ++l) {
      p.steps.push_back(make_step(StepKind::KanLeftPushout, n, l, 1, spec_k(n, l, 2)));
      p.steps.push_back(make_step(StepKind::Restrict, n, l, 2, spec_k(n, l, 3)));
      p.steps.push_back(make_step(StepKind::Restrict, n, l, 3, spec_k(n, l, 4)));
      if (l == 1 && n >= 4) {
        p.steps.push_back(make_step(StepKind::Restrict, n, 1, 4, spec_k(n, 2, 1)));
      } else if (l >= 2 && l < n - 2) {
        p.steps.push_back(make_step(StepKind::KanLeftFork, n, l, 4, spec_k(n, l, 5)));
        p.steps.push_back(make_step(StepKind::Restrict, n, l, 5, spec_k(n, l + 1, 1)));
      } else if (l >= 2 && l == n - 2) {
        p.steps.push_back(make_step(StepKind::KanLeftFork, n, n - 2, 4, spec_k(n, n - 2, 5)));
        p.steps.push_back(make_step(StepKind::KanLeftTstar, n, n - 2, 5,
                                    spec_none(a_n_poset(n), "A_n")));
      }
    }
  }
  return p;
}

namespace {

struct CornerContext {
  const MonotoneMap* u;
  const Diagram* x;
  std::vector<int> preim;  // target index -> source index, -1 off image
  bool product = false;
  int levels = 1;

  int src(const Label& base, int y) const {
    return x->shape().index_checked(with_level(base, y, product));
  }
};

CornerContext corner_context(const PlanStep& s, const Diagram& x) {
  CornerContext c;
  c.u = &s.u;
  c.x = &x;
  c.preim.assign(s.u.target().size(), -1);
  for (int a = 0; a < s.u.source().size(); ++a) c.preim[s.u.apply(a)] = a;
  c.product = s.l >= 2;
  c.levels = s.l >= 2 ? s.l : 1;
  return c;
}

int level_of(const Label& l, bool product) { return product ? l.c.back() : 0; }

Label base_of(const Label& l, bool product) {
  if (!product) return l;
  Label b = l;
  b.c.pop_back();
  return b;
}

Diagram apply_pushout_corners(const PlanStep& s, const Diagram& x) {
  CornerContext cc = corner_context(s, x);
  const FinPoset& tgt = s.u.target();
  const Label interior = stair_interior();
  std::vector<Cylinder> cyls;
  std::vector<PushoutCorner> corners;
  std::vector<int> root_s(cc.levels), leg01_s(cc.levels), leg10_s(cc.levels);
  for (int y = 0; y < cc.levels; ++y) {
    root_s[y] = cc.src(Label::of(0, 0), y);
    leg01_s[y] = cc.src(Label::of(0, 1), y);
    leg10_s[y] = cc.src(Label::of(1, 0), y);
    ChainMap f1 = x.arrow(root_s[y], leg01_s[y]);
    ChainMap f2 = x.arrow(root_s[y], leg10_s[y]);
    cyls.push_back(cylinder(f2));
    corners.push_back(pushout_corner(f1, f2));
  }
  auto classify = [&](int t) -> std::pair<int, int> {
    // (category, level): 0 image, 1 cylinder slot (1,0,y), 2 corner (1,1,y)
    const Label& l = tgt.label(t);
    const Label b = base_of(l, cc.product);
    const int y = level_of(l, cc.product);
    if (cc.preim[t] < 0) return {2, y};
    if (b == Label::of(1, 0)) return {1, y};
    (void)interior;
    return {0, y};
  };
  std::vector<ChainComplex> values;
  for (int t = 0; t < tgt.size(); ++t) {
    auto [cat, y] = classify(t);
    if (cat == 2)
      values.push_back(corners[y].corner);
    else if (cat == 1)
      values.push_back(cyls[y].cyl);
    else
      values.push_back(x.at(cc.preim[t]));
  }
  std::map<std::pair<int, int>, ChainMap> covers;
  for (const auto& [a, b] : tgt.covers()) {
    auto [ca, ya] = classify(a);
    auto [cb, yb] = classify(b);
    ChainMap m;
    if (ca == 0 && cb == 0) {
      m = x.arrow(cc.preim[a], cc.preim[b]);
    } else if (ca == 0 && cb == 1) {
      // root -> cylinder slot at the same level
      m = cyls[yb].i_src;
    } else if (ca == 1 && cb == 1) {
      m = cylinder_map(cyls[ya], cyls[yb], x.arrow(root_s[ya], root_s[yb]),
                       x.arrow(leg10_s[ya], leg10_s[yb]));
    } else if (ca == 1 && cb == 2) {
      m = corners[ya].from_cyl;
    } else if (ca == 0 && cb == 2) {
      m = corners[yb].from_leg1;
    } else if (ca == 2 && cb == 2) {
      m = pushout_corner_map(corners[ya], corners[yb], x.arrow(leg01_s[ya], leg01_s[yb]),
                             x.arrow(root_s[ya], root_s[yb]), x.arrow(leg10_s[ya], leg10_s[yb]));
    } else if (ca == 2 && cb == 0) {
      m = pushout_corner_out(corners[ya], x.arrow(leg01_s[ya], cc.preim[b]),
                             x.arrow(leg10_s[ya], cc.preim[b]));
    } else {
      throw std::logic_error("unexpected cover in pushout-corner step: " + tgt.label(a).str() +
                             " -> " + tgt.label(b).str());
    }
    covers.emplace(std::make_pair(a, b), std::move(m));
  }
  return Diagram::make(tgt, std::move(values), std::move(covers), false);
}

Diagram apply_pullback_corners(const PlanStep& s, const Diagram& x) {
  CornerContext cc = corner_context(s, x);
  const FinPoset& tgt = s.u.target();
  std::vector<Cocylinder> cocyls;
  std::vector<PullbackCorner> corners;
  std::vector<int> leg10_s(cc.levels), leg01_s(cc.levels), apex_s(cc.levels);
  for (int y = 0; y < cc.levels; ++y) {
    leg10_s[y] = cc.src(Label::of(1, 0), y);
    leg01_s[y] = cc.src(Label::of(0, 1), y);
    apex_s[y] = cc.src(stair_interior(), y);
    ChainMap f = x.arrow(leg10_s[y], apex_s[y]);
    ChainMap g = x.arrow(leg01_s[y], apex_s[y]);
    cocyls.push_back(cocylinder(g));
    corners.push_back(pullback_corner(f, g));
  }
  auto classify = [&](int t) -> std::pair<int, int> {
    // 0 image, 1 cocylinder slot (0,1,y), 2 corner (0,0,y)
    const Label& l = tgt.label(t);
    const Label b = base_of(l, cc.product);
    const int y = level_of(l, cc.product);
    if (cc.preim[t] < 0) return {2, y};
    if (b == Label::of(0, 1)) return {1, y};
    return {0, y};
  };
  std::vector<ChainComplex> values;
  for (int t = 0; t < tgt.size(); ++t) {
    auto [cat, y] = classify(t);
    if (cat == 2)
      values.push_back(corners[y].corner);
    else if (cat == 1)
      values.push_back(cocyls[y].cocyl);
    else
      values.push_back(x.at(cc.preim[t]));
  }
  std::map<std::pair<int, int>, ChainMap> covers;
  for (const auto& [a, b] : tgt.covers()) {
    auto [ca, ya] = classify(a);
    auto [cb, yb] = classify(b);
    ChainMap m;
    if (ca == 0 && cb == 0) {
      m = x.arrow(cc.preim[a], cc.preim[b]);
    } else if (ca == 2 && cb == 0) {
      m = corners[ya].pi1;  // corner -> (1,0,y)
    } else if (ca == 2 && cb == 1) {
      m = corners[ya].to_cocyl;
    } else if (ca == 2 && cb == 2) {
      m = pullback_corner_map(corners[ya], corners[yb], x.arrow(leg10_s[ya], leg10_s[yb]),
                              x.arrow(leg01_s[ya], leg01_s[yb]), x.arrow(apex_s[ya], apex_s[yb]));
    } else if (ca == 1 && cb == 0) {
      m = cocyls[ya].eval;  // -> interior apex
    } else if (ca == 1 && cb == 1) {
      m = cocylinder_map(cocyls[ya], cocyls[yb], x.arrow(leg01_s[ya], leg01_s[yb]),
                         x.arrow(apex_s[ya], apex_s[yb]));
    } else {
      throw std::logic_error("unexpected cover in pullback-corner step: " + tgt.label(a).str() +
                             " -> " + tgt.label(b).str());
    }
    covers.emplace(std::make_pair(a, b), std::move(m));
  }
  return Diagram::make(tgt, std::move(values), std::move(covers), false);
}

Diagram apply_fork(const PlanStep& s, const Diagram& x) {
  const FinPoset& tgt = s.u.target();
  const FinPoset& src = s.u.source();
  const int l = s.l;
  auto src_idx = [&](const Label& lab) { return src.index_checked(lab); };
  const int tip = src_idx(Label::of(1, 0, l - 1));  // terminal of the collapsed column
  auto classify = [&](int t) -> int {
    // 0: the collapsed (1,0,0) slot, 1: top level w = l-1, 2: fork
    const Label& lab = tgt.label(t);
    if (lab.c[0] == 1 && lab.c[1] == 0) return 0;
    return lab.c[2] == l - 1 ? 1 : 2;
  };
  std::map<int, PushoutCorner> corners;
  for (int t = 0; t < tgt.size(); ++t) {
    if (classify(t) != 2) continue;
    const Label& lab = tgt.label(t);
    const int w = lab.c[2];
    const int column_w = src_idx(Label::of(1, 0, w));
    ChainMap f1 = x.arrow(column_w, src_idx(lab));
    ChainMap f2 = x.arrow(column_w, tip);
    corners.emplace(t, pushout_corner(f1, f2));
  }
  std::vector<ChainComplex> values;
  for (int t = 0; t < tgt.size(); ++t) {
    const int cat = classify(t);
    if (cat == 0)
      values.push_back(x.at(tip));
    else if (cat == 1)
      values.push_back(x.at(src_idx(tgt.label(t))));
    else
      values.push_back(corners.at(t).corner);
  }
  std::map<std::pair<int, int>, ChainMap> covers;
  for (const auto& [a, b] : tgt.covers()) {
    const int ca = classify(a), cb = classify(b);
    ChainMap m;
    if (ca == 0 && cb == 2) {
      m = corners.at(b).from_tenor;
    } else if (ca == 0 && cb == 1) {
      m = x.arrow(tip, src_idx(tgt.label(b)));
    } else if (ca == 2 && cb == 2) {
      const int wa = tgt.label(a).c[2], wb = tgt.label(b).c[2];
      m = pushout_corner_map(corners.at(a), corners.at(b),
                             x.arrow(src_idx(tgt.label(a)), src_idx(tgt.label(b))),
                             x.arrow(src_idx(Label::of(1, 0, wa)), src_idx(Label::of(1, 0, wb))),
                             ChainMap::identity(x.at(tip)));
    } else if (ca == 2 && cb == 1) {
      m = pushout_corner_out(corners.at(a), x.arrow(src_idx(tgt.label(a)), src_idx(tgt.label(b))),
                             x.arrow(tip, src_idx(tgt.label(b))));
    } else if (ca == 1 && cb == 1) {
      m = x.arrow(src_idx(tgt.label(a)), src_idx(tgt.label(b)));
    } else {
      throw std::logic_error("unexpected cover in fork step: " + tgt.label(a).str() + " -> " +
                             tgt.label(b).str());
    }
    covers.emplace(std::make_pair(a, b), std::move(m));
  }
  return Diagram::make(tgt, std::move(values), std::move(covers), false);
}

}  // namespace

Diagram apply_step(const PlanStep& s, const Diagram& x) {
  switch (s.kind) {
    case StepKind::Restrict:
      return restrict_diagram(s.u, x);
    case StepKind::KanLeftZero: {
      if (sieve_kind(s.u) != SieveKind::Cosieve && sieve_kind(s.u) != SieveKind::Both)
        throw std::logic_error("zero-extension step expects a cosieve");
      return kan_extend(KanSide::Left, s.u, x);
    }
    case StepKind::KanLeftTstar:
      return restrict_diagram(s.tstar, x);
    case StepKind::KanLeftPushout:
      return apply_pushout_corners(s, x);
    case StepKind::KanRightPullback:
      return apply_pullback_corners(s, x);
    case StepKind::KanLeftFork:
      return apply_fork(s, x);
  }
  throw std::logic_error("unhandled step kind");
}

RunResult run_plan(const PipelinePlan& p, const Diagram& x, bool audit) {
  RunResult r{x, {}, true};
  for (const auto& s : p.steps) {
    r.result = apply_step(s, r.result);
    if (audit && !s.expected.name.empty() && s.expected.shape.size() > 0) {
      MembershipReport rep = is_member(s.expected, r.result);
      r.audits_pass = r.audits_pass && rep.pass;
      r.audits.push_back(std::move(rep));
    }
  }
  return r;
}

Diagram g_n(int n, const Diagram& x, bool audit) {
  if (x.shape() != a_n_poset(n)) throw std::invalid_argument("g_n expects a diagram on A_n");
  RunResult r = run_plan(make_plan(n, PlanDirection::ToRelations), x, audit);
  if (audit && !r.audits_pass) {
    std::string what = "g_n intermediate membership audit failed:";
    for (const auto& a : r.audits)
      if (!a.pass) what += " [" + a.summary() + "]";
    throw std::logic_error(what);
  }
  return r.result;
}

Diagram i_n_functor(int n, const Diagram& y, bool audit) {
  MembershipReport pre = is_member(spec_a_n2(n), y);
  if (!pre.pass)
    throw std::invalid_argument("i_n input is not a member of the A(n,2) spec: " + pre.summary());
  RunResult r = run_plan(make_plan(n, PlanDirection::ToLinear), y, audit);
  if (audit && !r.audits_pass) {
    std::string what = "i_n intermediate membership audit failed:";
    for (const auto& a : r.audits)
      if (!a.pass) what += " [" + a.summary() + "]";
    throw std::logic_error(what);
  }
  return r.result;
}

namespace {

DiagramMap transport_pushout(const PlanStep& s, const DiagramMap& f, const Diagram& sx,
                             const Diagram& tx) {
  CornerContext cc = corner_context(s, f.source());
  const FinPoset& tgt = s.u.target();
  std::vector<ChainMap> comps(tgt.size());
  std::vector<Cylinder> cs, ct;
  std::vector<PushoutCorner> ps, pt;
  for (int y = 0; y < cc.levels; ++y) {
    const int root = cc.src(Label::of(0, 0), y);
    const int leg01 = cc.src(Label::of(0, 1), y);
    const int leg10 = cc.src(Label::of(1, 0), y);
    cs.push_back(cylinder(f.source().arrow(root, leg10)));
    ct.push_back(cylinder(f.target().arrow(root, leg10)));
    ps.push_back(pushout_corner(f.source().arrow(root, leg01), f.source().arrow(root, leg10)));
    pt.push_back(pushout_corner(f.target().arrow(root, leg01), f.target().arrow(root, leg10)));
  }
  for (int t = 0; t < tgt.size(); ++t) {
    const Label& lab = tgt.label(t);
    const Label b = base_of(lab, cc.product);
    const int y = level_of(lab, cc.product);
    const int root = cc.src(Label::of(0, 0), y);
    const int leg01 = cc.src(Label::of(0, 1), y);
    const int leg10 = cc.src(Label::of(1, 0), y);
    if (cc.preim[t] < 0) {
      comps[t] = pushout_corner_map(ps[y], pt[y], f.component(leg01), f.component(root),
                                    f.component(leg10));
    } else if (b == Label::of(1, 0)) {
      comps[t] = cylinder_map(cs[y], ct[y], f.component(root), f.component(leg10));
    } else {
      comps[t] = f.component(cc.preim[t]);
    }
  }
  return DiagramMap(sx, tx, std::move(comps), false);
}

DiagramMap transport_pullback(const PlanStep& s, const DiagramMap& f, const Diagram& sx,
                              const Diagram& tx) {
  CornerContext cc = corner_context(s, f.source());
  const FinPoset& tgt = s.u.target();
  std::vector<ChainMap> comps(tgt.size());
  std::vector<Cocylinder> cs, ct;
  std::vector<PullbackCorner> ps, pt;
  for (int y = 0; y < cc.levels; ++y) {
    const int leg10 = cc.src(Label::of(1, 0), y);
    const int leg01 = cc.src(Label::of(0, 1), y);
    const int apex = cc.src(stair_interior(), y);
    cs.push_back(cocylinder(f.source().arrow(leg01, apex)));
    ct.push_back(cocylinder(f.target().arrow(leg01, apex)));
    ps.push_back(pullback_corner(f.source().arrow(leg10, apex), f.source().arrow(leg01, apex)));
    pt.push_back(pullback_corner(f.target().arrow(leg10, apex), f.target().arrow(leg01, apex)));
  }
  for (int t = 0; t < tgt.size(); ++t) {
    const Label& lab = tgt.label(t);
    const Label b = base_of(lab, cc.product);
    const int y = level_of(lab, cc.product);
    const int leg10 = cc.src(Label::of(1, 0), y);
    const int leg01 = cc.src(Label::of(0, 1), y);
    const int apex = cc.src(stair_interior(), y);
    if (cc.preim[t] < 0) {
      comps[t] = pullback_corner_map(ps[y], pt[y], f.component(leg10), f.component(leg01),
                                     f.component(apex));
    } else if (b == Label::of(0, 1)) {
      comps[t] = cocylinder_map(cs[y], ct[y], f.component(leg01), f.component(apex));
    } else {
      comps[t] = f.component(cc.preim[t]);
    }
  }
  return DiagramMap(sx, tx, std::move(comps), false);
}

DiagramMap transport_fork(const PlanStep& s, const DiagramMap& f, const Diagram& sx,
                          const Diagram& tx) {
  const FinPoset& tgt = s.u.target();
  const FinPoset& src = s.u.source();
  const int l = s.l;
  const int tip = src.index_checked(Label::of(1, 0, l - 1));
  std::vector<ChainMap> comps(tgt.size());
  for (int t = 0; t < tgt.size(); ++t) {
    const Label& lab = tgt.label(t);
    if (lab.c[0] == 1 && lab.c[1] == 0) {
      comps[t] = f.component(tip);
    } else if (lab.c[2] == l - 1) {
      comps[t] = f.component(src.index_checked(lab));
    } else {
      const int w = lab.c[2];
      const int cw = src.index_checked(Label::of(1, 0, w));
      const int bsrc = src.index_checked(lab);
      PushoutCorner pa =
          pushout_corner(f.source().arrow(cw, bsrc), f.source().arrow(cw, tip));
      PushoutCorner pb =
          pushout_corner(f.target().arrow(cw, bsrc), f.target().arrow(cw, tip));
      comps[t] = pushout_corner_map(pa, pb, f.component(bsrc), f.component(cw), f.component(tip));
    }
  }
  return DiagramMap(sx, tx, std::move(comps), false);
}

}  // namespace

DiagramMap apply_step_map(const PlanStep& s, const DiagramMap& f) {
  Diagram sx = apply_step(s, f.source());
  Diagram tx = apply_step(s, f.target());
  switch (s.kind) {
    case StepKind::Restrict: {
      std::vector<ChainMap> comps;
      for (int i = 0; i < s.u.source().size(); ++i) comps.push_back(f.component(s.u.apply(i)));
      return DiagramMap(sx, tx, std::move(comps), false);
    }
    case StepKind::KanLeftTstar: {
      std::vector<ChainMap> comps;
      for (int i = 0; i < s.tstar.source().size(); ++i) comps.push_back(f.component(s.tstar.apply(i)));
      return DiagramMap(sx, tx, std::move(comps), false);
    }
    case StepKind::KanLeftZero: {
      std::vector<int> preim(s.u.target().size(), -1);
      for (int a = 0; a < s.u.source().size(); ++a) preim[s.u.apply(a)] = a;
      std::vector<ChainMap> comps;
      for (int t = 0; t < s.u.target().size(); ++t)
        comps.push_back(preim[t] >= 0 ? f.component(preim[t]) : ChainMap::zero(sx.at(t), tx.at(t)));
      return DiagramMap(sx, tx, std::move(comps), false);
    }
    case StepKind::KanLeftPushout:
      return transport_pushout(s, f, sx, tx);
    case StepKind::KanRightPullback:
      return transport_pullback(s, f, sx, tx);
    case StepKind::KanLeftFork:
      return transport_fork(s, f, sx, tx);
  }
  throw std::logic_error("unhandled step kind");
}

DiagramMap g_n_map(int n, const DiagramMap& f) {
  PipelinePlan p = make_plan(n, PlanDirection::ToRelations);
  DiagramMap cur = f;
  for (const auto& s : p.steps) cur = apply_step_map(s, cur);
  return cur;
}

void QuiverComplex::validate() const {
  if (static_cast<int>(c.size()) != n || static_cast<int>(alpha.size()) != (n > 0 ? n - 1 : 0))
    throw std::invalid_argument("quiver complex arity mismatch");
  for (int i = 0; i + 1 < n - 1; ++i)
    if (!compose(alpha[i + 1], alpha[i]).is_zero_map())
      throw std::logic_error("quiver relation alpha_{i+1} alpha_i != 0 at i = " + std::to_string(i));
}

Label backbone_label(int n, int i) {
  if (i == 0) return Label::of(0, 0);
  if (i == n - 1) return stair_top(n, false);
  return stair_lower(i);
}

Label acyclic_label(int i) { return stair_upper(i); }

Diagram quiver_placement(const QuiverComplex& q) {
  q.validate();
  const int n = q.n;
  FinPoset shape = a_tilde(n);
  const FieldSpec f = q.c[0].field();
  std::map<Label, ChainComplex> vals;
  for (int i = 0; i < n; ++i) vals.emplace(backbone_label(n, i), q.c[i]);
  std::map<std::pair<Label, Label>, ChainMap> covers;
  for (int i = 0; i + 1 < n; ++i)
    covers.emplace(std::make_pair(backbone_label(n, i), backbone_label(n, i + 1)), q.alpha[i]);
  return diagram_by_labels(shape, vals, covers, f, /*verify=*/true);
}

StraightenResult straighten(int n, const Diagram& y) {
  MembershipReport pre = is_member(spec_a_n2(n), y);
  if (!pre.pass)
    throw std::invalid_argument("straighten input is not a member of the A(n,2) spec: " +
                                pre.summary());
  const FieldSpec fld = y.field();
  auto N = [&](int i) { return backbone_label(n, i); };
  auto A = [&](int i) { return acyclic_label(i); };
  // Arrows of the input, in staircase roles. A_0 and A_{n-1} are absent.
  auto has_a = [&](int i) { return i >= 1 && i <= n - 2; };
  std::vector<ChainMap> bmaps(n - 1), qmaps(n - 1), dmaps(n - 1), amaps(n - 1);
  for (int i = 0; i + 1 < n; ++i) {
    bmaps[i] = y.arrow(N(i), N(i + 1));
    if (has_a(i + 1)) qmaps[i] = y.arrow(N(i), A(i + 1));
    if (has_a(i)) dmaps[i] = y.arrow(A(i), N(i + 1));
    if (has_a(i) && has_a(i + 1)) amaps[i] = y.arrow(A(i), A(i + 1));
  }
  // The straightened complex: C_i = Y(N_i) (+) Y(A_i).
  QuiverComplex q;
  q.n = n;
  std::vector<SumWithMaps> sums;
  for (int i = 0; i < n; ++i) {
    std::vector<ChainComplex> parts = {y.at(N(i))};
    if (has_a(i)) parts.push_back(y.at(A(i)));
    sums.push_back(direct_sum(parts));
    q.c.push_back(sums.back().sum);
  }
  for (int i = 0; i + 1 < n; ++i) {
    // alpha_i = [[b_i, -d_i], [q_i, -a_i]] in the (N, A) block bases.
    ChainMap m = compose(sums[i + 1].injections[0], compose(bmaps[i], sums[i].projections[0]));
    if (has_a(i)) m = add_maps(m, negate(compose(sums[i + 1].injections[0],
                                                 compose(dmaps[i], sums[i].projections[1]))));
    if (has_a(i + 1)) {
      m = add_maps(m, compose(sums[i + 1].injections[1], compose(qmaps[i], sums[i].projections[0])));
      if (has_a(i))
        m = add_maps(m, negate(compose(sums[i + 1].injections[1],
                                       compose(amaps[i], sums[i].projections[1]))));
    }
    q.alpha.push_back(std::move(m));
  }
  q.validate();

  // Padded diagram (the proof's middle object): P(N_i) = Y(N_i) (+) Y(A_{i-1}) (+) Y(A_i).
  FinPoset shape = y.shape();
  std::vector<SumWithMaps> pads;
  std::vector<ChainComplex> pvals(shape.size(), ChainComplex(fld));
  std::vector<int> bb_of(shape.size(), -1);
  for (int i = 0; i < n; ++i) bb_of[shape.index_checked(N(i))] = i;
  pads.resize(n);
  for (int i = 0; i < n; ++i) {
    std::vector<ChainComplex> parts = {y.at(N(i))};
    if (has_a(i - 1)) parts.push_back(y.at(A(i - 1)));
    if (has_a(i)) parts.push_back(y.at(A(i)));
    pads[i] = direct_sum(parts);
    pvals[shape.index_checked(N(i))] = pads[i].sum;
  }
  for (int i = 1; i <= n - 2; ++i) pvals[shape.index_checked(A(i))] = y.at(A(i));
  // Part indices within pads[i]: 0 = N, then A_{i-1} (if any), then A_i.
  auto left_part = [&](int i) { return has_a(i - 1) ? 1 : -1; };
  auto right_part = [&](int i) { return has_a(i) ? (has_a(i - 1) ? 2 : 1) : -1; };
  std::map<std::pair<int, int>, ChainMap> pcov;
  for (const auto& [sa, sb] : shape.covers()) {
    const Label la = shape.label(sa), lb = shape.label(sb);
    const int ia = bb_of[sa], ib = bb_of[sb];
    ChainMap m;
    if (ia >= 0 && ib >= 0) {
      // N_i -> N_{i+1}: rows [N, A_i(copy), A_{i+1}(copy)], cols [N_i, A_{i-1}, A_i]
      m = compose(pads[ib].injections[0], compose(bmaps[ia], pads[ia].projections[0]));
      if (left_part(ib) >= 0 && right_part(ia) >= 0)
        m = add_maps(m, compose(pads[ib].injections[left_part(ib)],
                                compose(ChainMap::identity(y.at(A(ia))),
                                        pads[ia].projections[right_part(ia)])));
      if (right_part(ib) >= 0)
        m = add_maps(m, compose(pads[ib].injections[right_part(ib)],
                                compose(qmaps[ia], pads[ia].projections[0])));
    } else if (ia >= 0 && ib < 0) {
      // N_i -> A_{i+1}: (q_i, 0, 0)
      m = compose(qmaps[ia], pads[ia].projections[0]);
    } else if (ia < 0 && ib >= 0) {
      // A_i -> N_{i+1}: (d_i, 1, a_i)
      const int i = ib - 1;
      m = compose(pads[ib].injections[0], dmaps[i]);
      m = add_maps(m, compose(pads[ib].injections[left_part(ib)], ChainMap::identity(y.at(A(i)))));
      if (right_part(ib) >= 0) m = add_maps(m, compose(pads[ib].injections[right_part(ib)], amaps[i]));
    } else {
      // A_i -> A_{i+1}
      m = y.arrow(sa, sb);
    }
    pcov.emplace(std::make_pair(sa, sb), std::move(m));
  }
  Diagram padded = Diagram::make(shape, pvals, std::move(pcov), false);

  // Leg 1: pointwise projection padded -> y.
  std::vector<ChainMap> leg1(shape.size());
  for (int t = 0; t < shape.size(); ++t) {
    const int i = bb_of[t];
    leg1[t] = i >= 0 ? pads[i].projections[0] : ChainMap::identity(y.at(t));
  }
  DiagramMap to_input(padded, y, std::move(leg1), false);

  // Leg 2: block comparison padded -> quiver_placement.
  Diagram straight = quiver_placement(q);
  std::vector<ChainMap> leg2(shape.size());
  for (int t = 0; t < shape.size(); ++t) {
    const int i = bb_of[t];
    if (i < 0) {
      leg2[t] = ChainMap::zero(padded.at(t), straight.at(t));
      continue;
    }
    // [[1, -d_{i-1}, 0], [0, -a_{i-1}, 1]] in (N, A_left, A_right) coordinates.
    ChainMap m = compose(sums[i].injections[0], pads[i].projections[0]);
    if (left_part(i) >= 0) {
      m = add_maps(m, negate(compose(sums[i].injections[0],
                                     compose(dmaps[i - 1], pads[i].projections[left_part(i)]))));
      if (has_a(i))
        m = add_maps(m, negate(compose(sums[i].injections[1],
                                       compose(amaps[i - 1], pads[i].projections[left_part(i)]))));
    }
    if (right_part(i) >= 0)
      m = add_maps(m, compose(sums[i].injections[1], pads[i].projections[right_part(i)]));
    leg2[t] = std::move(m);
  }
  DiagramMap to_straight(padded, straight, std::move(leg2), false);
  return StraightenResult{std::move(q), std::move(padded), std::move(straight),
                          std::move(to_input), std::move(to_straight)};
}

Diagram interval_module(int n, int a, int b, FieldSpec f) {
  if (!(1 <= a && a <= b && b <= n)) throw std::invalid_argument("bad interval");
  ChainComplex k0(f, 0, {1}, {});
  std::vector<ChainComplex> vals;
  std::vector<ChainMap> maps;
  for (int i = 1; i <= n; ++i) vals.push_back(a <= i && i <= b ? k0 : ChainComplex(f));
  for (int i = 1; i < n; ++i) {
    if (a <= i && i + 1 <= b)
      maps.push_back(ChainMap::identity(k0));
    else
      maps.push_back(ChainMap::zero(vals[i - 1], vals[i]));
  }
  return chain_diagram(vals, maps, false);
}

}  // namespace kanex
