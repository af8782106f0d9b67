#pragma once

#include "kanex/membership.hpp"

namespace kanex {

enum class PlanDirection { ToRelations, ToLinear };  // A_n -> A(n,2) resp. A(n,2) -> A_n

enum class StepKind {
  Restrict,          // u^* along the named map
  KanLeftZero,       // left extension by zero along a cosieve
  KanLeftPushout,    // add the interior pushout corners (i^n_{l,1})
  KanRightPullback,  // add the initial pullback corners (i^n_{l,2})
  KanLeftTstar,      // left Kan along an epi whose slices all have terminal objects
  KanLeftFork        // left Kan along the column collapse i^n_{l,4}
};

struct PlanStep {
  StepKind kind;
  int l = 0, m = 0;
  MonotoneMap u;          // the named connector
  MonotoneMap tstar;      // terminal-slice section, for KanLeftTstar only
  SubderivatorSpec expected;  // membership audited after the step
  std::string describe() const;
};

struct PipelinePlan {
  int n = 0;
  PlanDirection direction;
  std::vector<PlanStep> steps;
};

PipelinePlan make_plan(int n, PlanDirection dir);

Diagram apply_step(const PlanStep& s, const Diagram& x);
DiagramMap apply_step_map(const PlanStep& s, const DiagramMap& f);

struct RunResult {
  Diagram result;
  std::vector<MembershipReport> audits;  // one per step when auditing
  bool audits_pass = true;
};

RunResult run_plan(const PipelinePlan& p, const Diagram& x, bool audit);

// The two equivalence functors of the main theorem. g_n audits intermediates
// when audit is set and throws logic_error on an audit failure (an
// implementation bug, never a user error). i_n_functor first checks that the
// input is a member of the A(n,2) spec and reports a user error otherwise.
Diagram g_n(int n, const Diagram& x, bool audit = false);
Diagram i_n_functor(int n, const Diagram& y, bool audit = false);
DiagramMap g_n_map(int n, const DiagramMap& f);

// Strict quiver complex: C_0 .. C_{n-1} with alpha_{i+1} alpha_i = 0 exactly.
struct QuiverComplex {
  int n = 0;
  std::vector<ChainComplex> c;
  std::vector<ChainMap> alpha;
  void validate() const;  // throws if the relations fail
};

// A(n,2)-diagram with the quiver complex on the staircase and literal zeros
// at the vanishing slots.
Diagram quiver_placement(const QuiverComplex& q);
// Staircase slot labels: backbone N_0..N_{n-1} and acyclic slots A_1..A_{n-2}.
Label backbone_label(int n, int i);
Label acyclic_label(int i);

struct StraightenResult {
  QuiverComplex quiver;
  Diagram padded;      // the intermediate with slots Y(N_i) (+) A_{i-1} (+) A_i
  Diagram straight;    // quiver_placement(quiver)
  DiagramMap to_input; // padded -> input, pointwise projection qis
  DiagramMap to_straight;  // padded -> straight, the block comparison qis
};
StraightenResult straighten(int n, const Diagram& y);

// The interval module of kA_n supported on [a, b] (1-based, inclusive), as a
// diagram of stalk complexes in degree 0.
Diagram interval_module(int n, int a, int b, FieldSpec f);

}  // namespace kanex
