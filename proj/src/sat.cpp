#include <algorithm>

#include "chainprover/engine.hpp"

namespace chainprover::engine {

namespace {

enum class Assign : unsigned char { Unset, True, False };

struct Solver {
  const GroundProblem& p;
  std::vector<Assign> value;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  bool expired = false;

  explicit Solver(const GroundProblem& problem,
                  std::optional<std::chrono::steady_clock::time_point> dl)
      : p(problem), value(problem.atoms.size(), Assign::Unset), deadline(dl) {}

  bool lit_true(int lit) const {
    Assign v = value[static_cast<std::size_t>(std::abs(lit)) - 1];
    return lit > 0 ? v == Assign::True : v == Assign::False;
  }
  bool lit_false(int lit) const {
    Assign v = value[static_cast<std::size_t>(std::abs(lit)) - 1];
    return lit > 0 ? v == Assign::False : v == Assign::True;
  }

  bool timed_out() {
    if (!deadline) return false;
    if (expired) return true;
    if (std::chrono::steady_clock::now() > *deadline) expired = true;
    return expired;
  }

  // Returns false on conflict. Fills trail with atoms assigned here.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const GroundClause& c : p.clauses) {
        int unassigned = 0;
        int free_lit = 0;
        bool satisfied = false;
        for (int lit : c.literals) {
          if (lit_true(lit)) {
            satisfied = true;
            break;
          }
          if (!lit_false(lit)) {
            ++unassigned;
            free_lit = lit;
          }
        }
        if (satisfied) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          int atom = std::abs(free_lit) - 1;
          value[static_cast<std::size_t>(atom)] =
              free_lit > 0 ? Assign::True : Assign::False;
          trail.push_back(atom);
          changed = true;
        }
      }
    }
    return true;
  }

  void assign_pure_literals(std::vector<int>& trail) {
    std::vector<bool> pos(p.atoms.size(), false), neg(p.atoms.size(), false);
    for (const GroundClause& c : p.clauses) {
      bool satisfied = std::any_of(c.literals.begin(), c.literals.end(),
                                   [&](int l) { return lit_true(l); });
      if (satisfied) continue;
      for (int lit : c.literals) {
        if (lit_false(lit)) continue;
        std::size_t atom = static_cast<std::size_t>(std::abs(lit)) - 1;
        (lit > 0 ? pos : neg)[atom] = true;
      }
    }
    for (std::size_t atom = 0; atom < p.atoms.size(); ++atom) {
      if (value[atom] != Assign::Unset) continue;
      if (pos[atom] && !neg[atom]) {
        value[atom] = Assign::True;
        trail.push_back(static_cast<int>(atom));
      } else if (neg[atom] && !pos[atom]) {
        value[atom] = Assign::False;
        trail.push_back(static_cast<int>(atom));
      }
    }
  }

  bool solve() {
    if (timed_out()) return false;
    std::vector<int> trail;
    if (!propagate(trail)) {
      undo(trail);
      return false;
    }
    assign_pure_literals(trail);
    if (!propagate(trail)) {
      undo(trail);
      return false;
    }

    int branch = -1;
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (value[i] == Assign::Unset) {
        // only branch on atoms still constraining an open clause
        branch = static_cast<int>(i);
        break;
      }
    }
    if (branch < 0) return true;

    for (Assign choice : {Assign::True, Assign::False}) {
      if (timed_out()) break;
      value[static_cast<std::size_t>(branch)] = choice;
      if (solve()) return true;
      value[static_cast<std::size_t>(branch)] = Assign::Unset;
    }
    undo(trail);
    return false;
  }

  void undo(const std::vector<int>& trail) {
    for (int atom : trail) value[static_cast<std::size_t>(atom)] = Assign::Unset;
  }
};

}  // namespace

std::optional<SatResult> sat(
    const GroundProblem& p,
    std::optional<std::chrono::steady_clock::time_point> deadline) {
  for (const GroundClause& c : p.clauses)
    if (c.literals.empty()) return SatResult{false, {}};
  Solver solver(p, deadline);
  bool satisfiable = solver.solve();
  if (solver.expired) return std::nullopt;
  if (!satisfiable) return SatResult{false, {}};
  SatResult res{true, std::vector<bool>(p.atoms.size(), false)};
  for (std::size_t i = 0; i < p.atoms.size(); ++i)
    res.model[i] = solver.value[i] == Assign::True;
  return res;
}

}  // namespace chainprover::engine
