#include "kanex/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace kanex {

std::string Label::str() const {
  if (pt) return "pt";
  if (c.size() == 1) return std::to_string(c[0]);
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

Label parse_label(const std::string& s) {
  if (s == "pt") return Label::point();
  Label l;
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw std::invalid_argument("bad label: " + s);
    std::string body = s.substr(1, s.size() - 2);
    size_t pos = 0;
    while (pos < body.size()) {
      size_t comma = body.find(',', pos);
      if (comma == std::string::npos) comma = body.size();
      l.c.push_back(std::stoi(body.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    if (l.c.empty()) throw std::invalid_argument("bad label: " + s);
  } else {
    l.c.push_back(std::stoi(s));
  }
  return l;
}

FinPoset FinPoset::make(std::vector<Label> objects,
                        const std::function<bool(const Label&, const Label&)>& leq) {
  const int n = static_cast<int>(objects.size());
  std::vector<std::vector<bool>> t(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = leq(objects[i], objects[j]);
  return from_table(std::move(objects), std::move(t));
}

FinPoset FinPoset::from_table(std::vector<Label> objects, std::vector<std::vector<bool>> leq) {
  FinPoset p;
  const int n = static_cast<int>(objects.size());
  if (static_cast<int>(leq.size()) != n)
    throw std::invalid_argument("leq table size mismatch");
  for (const auto& row : leq)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("leq table not square");
  for (int i = 0; i < n; ++i)
    if (!leq[i][i]) throw std::invalid_argument("leq not reflexive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i])
        throw std::invalid_argument("leq not antisymmetric: " + objects[i].str() + " ~ " + objects[j].str());
      if (leq[i][j])
        for (int k = 0; k < n; ++k)
          if (leq[j][k] && !leq[i][k])
            throw std::invalid_argument("leq not transitive at " + objects[i].str() + " <= " +
                                        objects[j].str() + " <= " + objects[k].str());
    }
  for (int i = 0; i < n; ++i) {
    if (p.index_.count(objects[i]))
      throw std::invalid_argument("duplicate object label " + objects[i].str());
    p.index_.emplace(objects[i], i);
  }
  p.objects_ = std::move(objects);
  p.leq_ = std::move(leq);
  return p;
}

int FinPoset::index(const Label& l) const {
  auto it = index_.find(l);
  return it == index_.end() ? -1 : it->second;
}

int FinPoset::index_checked(const Label& l) const {
  const int i = index(l);
  if (i < 0) throw std::invalid_argument("unknown object label " + l.str());
  return i;
}

std::vector<std::pair<int, int>> FinPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq_[a][b]) continue;
      bool cover = true;
      for (int c = 0; c < n && cover; ++c)
        if (c != a && c != b && leq_[a][c] && leq_[c][b]) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

std::vector<int> FinPoset::upper_covers(int a) const {
  std::vector<int> out;
  for (int b = 0; b < size(); ++b) {
    if (a == b || !leq_[a][b]) continue;
    bool cover = true;
    for (int c = 0; c < size() && cover; ++c)
      if (c != a && c != b && leq_[a][c] && leq_[c][b]) cover = false;
    if (cover) out.push_back(b);
  }
  return out;
}

std::vector<int> FinPoset::lower_covers(int a) const {
  std::vector<int> out;
  for (int b = 0; b < size(); ++b) {
    if (a == b || !leq_[b][a]) continue;
    bool cover = true;
    for (int c = 0; c < size() && cover; ++c)
      if (c != a && c != b && leq_[b][c] && leq_[c][a]) cover = false;
    if (cover) out.push_back(b);
  }
  return out;
}

std::vector<std::vector<int>> FinPoset::chains() const {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> extend = [&](int last) {
    for (int j = 0; j < size(); ++j) {
      if (j == last || !leq_[last][j]) continue;
      cur.push_back(j);
      out.push_back(cur);
      extend(j);
      cur.pop_back();
    }
  };
  for (int i = 0; i < size(); ++i) {
    cur = {i};
    out.push_back(cur);
    extend(i);
  }
  // Lexicographic determinism: the recursion above emits in DFS order per
  // start vertex; sort for a stable global order.
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FinPoset::maximal_elements() const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    bool mx = true;
    for (int b = 0; b < size() && mx; ++b)
      if (a != b && leq_[a][b]) mx = false;
    if (mx) out.push_back(a);
  }
  return out;
}

std::vector<int> FinPoset::minimal_elements() const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    bool mn = true;
    for (int b = 0; b < size() && mn; ++b)
      if (a != b && leq_[b][a]) mn = false;
    if (mn) out.push_back(a);
  }
  return out;
}

FinPoset interval(int n) {
  if (n < 0) throw std::invalid_argument("interval(n) needs n >= 0");
  std::vector<Label> objs;
  for (int i = 0; i <= n; ++i) objs.push_back(Label::of(i));
  return FinPoset::make(std::move(objs), [](const Label& a, const Label& b) { return a.c[0] <= b.c[0]; });
}

FinPoset product(const FinPoset& p, const FinPoset& q) {
  std::vector<Label> objs;
  for (const auto& a : p.objects())
    for (const auto& b : q.objects()) {
      if (a.pt || b.pt) throw std::invalid_argument("product of posets with pt labels unsupported");
      Label l;
      l.c = a.c;
      l.c.insert(l.c.end(), b.c.begin(), b.c.end());
      objs.push_back(std::move(l));
    }
  const int qs = q.size();
  std::vector<std::vector<bool>> t(objs.size(), std::vector<bool>(objs.size(), false));
  for (int i = 0; i < static_cast<int>(objs.size()); ++i)
    for (int j = 0; j < static_cast<int>(objs.size()); ++j)
      t[i][j] = p.leq(i / qs, j / qs) && q.leq(i % qs, j % qs);
  return FinPoset::from_table(std::move(objs), std::move(t));
}

Subposet full_subposet(const FinPoset& p, const std::vector<int>& indices) {
  std::vector<Label> objs;
  for (int i : indices) objs.push_back(p.label(i));
  std::vector<std::vector<bool>> t(indices.size(), std::vector<bool>(indices.size(), false));
  for (size_t i = 0; i < indices.size(); ++i)
    for (size_t j = 0; j < indices.size(); ++j) t[i][j] = p.leq(indices[i], indices[j]);
  Subposet s;
  s.poset = FinPoset::from_table(std::move(objs), std::move(t));
  s.parent_index = indices;
  return s;
}

MonotoneMap MonotoneMap::make(FinPoset source, FinPoset target, std::vector<int> assignment,
                              bool check) {
  MonotoneMap m;
  if (static_cast<int>(assignment.size()) != source.size())
    throw std::invalid_argument("assignment size mismatch");
  for (int v : assignment)
    if (v < 0 || v >= target.size()) throw std::invalid_argument("assignment out of range");
  if (check) {
    for (int a = 0; a < source.size(); ++a)
      for (int b = 0; b < source.size(); ++b)
        if (source.leq(a, b) && !target.leq(assignment[a], assignment[b]))
          throw std::invalid_argument("map not order-preserving at " + source.label(a).str() +
                                      " <= " + source.label(b).str());
  }
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.map_ = std::move(assignment);
  return m;
}

MonotoneMap MonotoneMap::make(FinPoset source, FinPoset target,
                              const std::function<Label(const Label&)>& f, bool check) {
  std::vector<int> assignment;
  assignment.reserve(source.size());
  for (const auto& l : source.objects()) assignment.push_back(target.index_checked(f(l)));
  return make(std::move(source), std::move(target), std::move(assignment), check);
}

MonotoneMap MonotoneMap::identity(const FinPoset& p) {
  std::vector<int> a(p.size());
  for (int i = 0; i < p.size(); ++i) a[i] = i;
  return make(p, p, std::move(a), false);
}

bool MonotoneMap::is_injective() const {
  std::vector<bool> seen(target_.size(), false);
  for (int v : map_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool MonotoneMap::is_full() const {
  for (int a = 0; a < source_.size(); ++a)
    for (int b = 0; b < source_.size(); ++b)
      if (target_.leq(map_[a], map_[b]) != source_.leq(a, b)) return false;
  return true;
}

bool MonotoneMap::is_surjective() const {
  std::vector<bool> seen(target_.size(), false);
  for (int v : map_) seen[v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.target() != g.source()) throw std::invalid_argument("monotone map composition shape mismatch");
  std::vector<int> a(f.source().size());
  for (int i = 0; i < f.source().size(); ++i) a[i] = g.apply(f.apply(i));
  return MonotoneMap::make(f.source(), g.target(), std::move(a), false);
}

SieveKind sieve_kind(const MonotoneMap& u) {
  if (!u.is_injective() || !u.is_full()) return SieveKind::None;
  std::vector<bool> in_image(u.target().size(), false);
  for (int i = 0; i < u.source().size(); ++i) in_image[u.apply(i)] = true;
  bool down_closed = true, up_closed = true;
  for (int b = 0; b < u.target().size(); ++b) {
    if (!in_image[b]) continue;
    for (int c = 0; c < u.target().size(); ++c) {
      if (in_image[c]) continue;
      if (u.target().leq(c, b)) down_closed = false;
      if (u.target().leq(b, c)) up_closed = false;
    }
  }
  if (down_closed && up_closed) return SieveKind::Both;
  if (down_closed) return SieveKind::Sieve;
  if (up_closed) return SieveKind::Cosieve;
  return SieveKind::None;
}

std::string to_string(SieveKind k) {
  switch (k) {
    case SieveKind::None: return "none";
    case SieveKind::Sieve: return "sieve";
    case SieveKind::Cosieve: return "cosieve";
    case SieveKind::Both: return "both";
  }
  return "?";
}

SliceResult slice(const MonotoneMap& u, const Label& b, SliceSide side) {
  const int bi = u.target().index_checked(b);
  std::vector<int> idx;
  for (int a = 0; a < u.source().size(); ++a) {
    const bool in = side == SliceSide::Under ? u.target().leq(u.apply(a), bi)
                                             : u.target().leq(bi, u.apply(a));
    if (in) idx.push_back(a);
  }
  Subposet sp = full_subposet(u.source(), idx);
  SliceResult r;
  r.poset = sp.poset;
  r.source_indices = sp.parent_index;
  r.inclusion = MonotoneMap::make(r.poset, u.source(), sp.parent_index, false);
  return r;
}

}  // namespace kanex
