#include <functional>
#include <unordered_map>

#include "chainprover/engine.hpp"

namespace chainprover::engine {

namespace {

std::string render_term(const HTerm& t) {
  std::string out = t.name;
  if (!t.args.empty()) {
    out += '(';
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i) out += ',';
      out += render_term(t.args[i]);
    }
    out += ')';
  }
  return out;
}

std::string render_atom(const Literal& lit,
                        const std::map<std::string, HTerm>& binding) {
  std::function<std::string(const HTerm&)> rec = [&](const HTerm& t) {
    if (t.is_var) {
      auto it = binding.find(t.name);
      if (it == binding.end())
        throw EngineError("ground: unbound variable " + t.name);
      return render_term(it->second);
    }
    std::string out = t.name;
    if (!t.args.empty()) {
      out += '(';
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) out += ',';
        out += rec(t.args[i]);
      }
      out += ')';
    }
    return out;
  };
  std::string out = lit.predicate;
  out += '(';
  for (std::size_t i = 0; i < lit.args.size(); ++i) {
    if (i) out += ',';
    out += rec(lit.args[i]);
  }
  out += ')';
  return out;
}

void collect_vars(const HTerm& t, std::set<std::string>& out) {
  if (t.is_var) out.insert(t.name);
  for (const HTerm& a : t.args) collect_vars(a, out);
}

}  // namespace

GroundProblem ground(const ClauseSet& cs, const fol::Signature& sig, int depth,
                     std::size_t max_ground_clauses) {
  // Herbrand universe up to the requested function-nesting depth.
  std::vector<HTerm> universe;
  for (const std::string& c : sig.constants)
    universe.push_back(HTerm{c, {}, false});
  for (const std::string& c : cs.skolem_constants)
    universe.push_back(HTerm{c, {}, false});
  if (universe.empty()) universe.push_back(HTerm{"herb0", {}, false});

  std::set<std::string> seen;
  for (const HTerm& t : universe) seen.insert(render_term(t));
  std::vector<HTerm> frontier = universe;
  for (int level = 1; level <= depth; ++level) {
    std::vector<HTerm> next;
    for (const auto& [fn, arity] : cs.skolem_functions) {
      // argument tuples over terms of depth < level, at least one at level-1
      std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
      std::vector<HTerm> pool = universe;
      if (pool.empty()) break;
      bool done = false;
      while (!done) {
        std::vector<HTerm> args;
        for (std::size_t k = 0; k < idx.size(); ++k) args.push_back(pool[idx[k]]);
        HTerm candidate{fn, std::move(args), false};
        if (seen.insert(render_term(candidate)).second)
          next.push_back(std::move(candidate));
        // odometer
        std::size_t k = 0;
        for (; k < idx.size(); ++k) {
          if (++idx[k] < pool.size()) break;
          idx[k] = 0;
        }
        done = k == idx.size();
        if (next.size() > max_ground_clauses)
          throw GroundingBudgetExceeded(max_ground_clauses);
      }
    }
    universe.insert(universe.end(), next.begin(), next.end());
    frontier = std::move(next);
    if (frontier.empty()) break;
  }

  GroundProblem p;
  std::unordered_map<std::string, int> atom_index;
  auto atom_id = [&](const std::string& name) {
    auto [it, inserted] =
        atom_index.emplace(name, static_cast<int>(p.atoms.size()));
    if (inserted) p.atoms.push_back(name);
    return it->second;
  };

  for (const Clause& clause : cs.clauses) {
    std::set<std::string> vars;
    for (const Literal& lit : clause.literals)
      for (const HTerm& t : lit.args) collect_vars(t, vars);
    std::vector<std::string> var_list(vars.begin(), vars.end());
    std::vector<std::size_t> idx(var_list.size(), 0);
    bool done = false;
    while (!done) {
      std::map<std::string, HTerm> binding;
      for (std::size_t k = 0; k < var_list.size(); ++k)
        binding[var_list[k]] = universe[idx[k]];
      GroundClause gc;
      for (const Literal& lit : clause.literals) {
        int id = atom_id(render_atom(lit, binding));
        gc.literals.push_back(lit.positive ? id + 1 : -(id + 1));
      }
      p.clauses.push_back(std::move(gc));
      if (p.clauses.size() > max_ground_clauses)
        throw GroundingBudgetExceeded(max_ground_clauses);
      if (var_list.empty()) break;
      std::size_t k = 0;
      for (; k < var_list.size(); ++k) {
        if (++idx[k] < universe.size()) break;
        idx[k] = 0;
      }
      done = k == var_list.size();
    }
  }
  return p;
}

}  // namespace chainprover::engine
