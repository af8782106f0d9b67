#pragma once

#include "kanex/pipeline.hpp"

namespace kanex {

// Backbone slot of chain degree j in the staircase: degree n-1 is (0,0),
// degrees n-2..1 run down the lower diagonal and degree 0 is the top.
Label backbone_slot_for_degree(int n, int j);

struct DoldKanSlot {
  int degree = 0;
  Label slot;
  std::map<int, int> slot_homology;
  std::map<int, int> reference_homology;  // filtration cofiber (or total stage)
  std::vector<int> matching_shifts;       // s with H(slot) = H(ref)[s]
  bool wildcard = false;                  // both acyclic: any shift matches
};

struct DoldKanReport {
  bool pass = false;
  int profile_offset = 0;  // c with s_j = c - (j - 1) for degrees j >= 1
  std::vector<DoldKanSlot> slots;
  std::string summary() const;
};

// Computes g_n(x), reads the backbone through the chain indexing, compares
// each degree-j slot with the filtration cofiber cone(X_{j-1} -> X_j) (the
// degree-0 slot with the total stage), and searches for a single consistent
// shift profile.
DoldKanReport dold_kan_check(int n, const Diagram& x);

}  // namespace kanex
