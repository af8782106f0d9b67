#include "kanex/doldkan.hpp"

#include <sstream>

namespace kanex {

Label backbone_slot_for_degree(int n, int j) {
  if (j == n - 1) return Label::of(0, 0);
  if (j == 0) return stair_top(n, false);
  return stair_lower(n - 1 - j);
}

namespace {

std::map<int, int> shifted_table(const std::map<int, int>& h, int s) {
  std::map<int, int> out;
  for (const auto& [n, d] : h) out.emplace(n + s, d);
  return out;
}

}  // namespace

std::string DoldKanReport::summary() const {
  std::ostringstream os;
  os << (pass ? "consistent shift profile" : "NO consistent shift profile");
  if (pass) os << " (s_j = " << profile_offset << " - (j-1) for j >= 1, total stage at shift 0)";
  return os.str();
}

DoldKanReport dold_kan_check(int n, const Diagram& x) {
  if (x.shape() != a_n_poset(n))
    throw std::invalid_argument("dold_kan_check expects a filtration on A_n");
  Diagram y = g_n(n, x);
  DoldKanReport r;
  const int scan = 2 * (n + 4);
  for (int j = n - 1; j >= 0; --j) {
    DoldKanSlot s;
    s.degree = j;
    s.slot = backbone_slot_for_degree(n, j);
    s.slot_homology = y.at(s.slot).homology_dims();
    if (j == 0) {
      s.reference_homology = x.at(Label::of(n)).homology_dims();
    } else {
      // cofiber of the filtration step X_{j-1} -> X_j (stages are 0-indexed
      // over the A_n objects 1..n, with X_{-1} = 0).
      if (j == 1) {
        s.reference_homology = x.at(Label::of(1)).homology_dims();
      } else {
        s.reference_homology =
            cone(x.arrow(Label::of(j - 1), Label::of(j))).cone.homology_dims();
      }
    }
    if (s.slot_homology.empty() && s.reference_homology.empty()) {
      s.wildcard = true;
    } else {
      for (int sh = -scan; sh <= scan; ++sh)
        if (s.slot_homology == shifted_table(s.reference_homology, sh))
          s.matching_shifts.push_back(sh);
    }
    r.slots.push_back(std::move(s));
  }
  // A single profile: the degree-0 slot matches the total stage at shift 0 and
  // there is one offset c with s_j = c - (j-1) for every j >= 1.
  auto slot_of_degree = [&](int j) -> const DoldKanSlot& {
    for (const auto& s : r.slots)
      if (s.degree == j) return s;
    throw std::logic_error("missing slot");
  };
  const DoldKanSlot& s0 = slot_of_degree(0);
  bool base_ok = s0.wildcard;
  for (int sh : s0.matching_shifts) base_ok = base_ok || sh == 0;
  if (base_ok) {
    for (int c = -scan; c <= scan && !r.pass; ++c) {
      bool ok = true;
      for (int j = 1; j < n && ok; ++j) {
        const DoldKanSlot& s = slot_of_degree(j);
        if (s.wildcard) continue;
        bool found = false;
        for (int sh : s.matching_shifts) found = found || sh == c - (j - 1);
        ok = found;
      }
      if (ok) {
        r.pass = true;
        r.profile_offset = c;
      }
    }
  }
  return r;
}

}  // namespace kanex
