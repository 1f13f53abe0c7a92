#pragma once

// Conflict-driven clause learning in two modes. Ordered: the lowest
// unassigned variable is always decided next, true first, with no restarts;
// the first model found is then the least one in that order. Free: activity
// ordering, phase saving and restarts, for settling SAT/UNSAT quickly. Both
// are deterministic.

#include <cstdint>
#include <functional>
#include <vector>

namespace hjx::detail {

class Cdcl {
 public:
  enum class Mode { Ordered, Free };

  /// Clauses in DIMACS literals over variables 1..num_vars.
  Cdcl(std::uint32_t num_vars, const std::vector<std::vector<std::int32_t>>& clauses,
       Mode mode);

  /// `tick` is called once per decision and per conflict and may throw to
  /// abandon the search.
  bool solve(const std::function<void()>& tick);

  /// model()[v] for v = 1..num_vars after a satisfiable solve.
  const std::vector<bool>& model() const { return model_; }

 private:
  using Lit = std::uint32_t;  // 2·var + negated, var 0-based
  static constexpr std::uint32_t kNoReason = 0xffffffff;

  static Lit from_dimacs(std::int32_t lit);
  std::int8_t value(Lit l) const;  // 1 true, 0 false, -1 unassigned
  void enqueue(Lit l, std::uint32_t reason);
  void attach(std::uint32_t clause);
  std::uint32_t propagate();  // conflicting clause or kNoReason
  void analyze(std::uint32_t conflict, std::vector<Lit>& learnt, std::uint32_t& back_level);
  void cancel_until(std::uint32_t level);
  bool pick_branch(Lit& out);
  void bump(std::uint32_t var);
  void rebuild_heap();
  std::uint32_t level() const { return static_cast<std::uint32_t>(trail_lim_.size()); }

  std::uint32_t num_vars_;
  Mode mode_;
  bool inconsistent_ = false;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<std::uint32_t>> watches_;  // by literal
  std::vector<std::int8_t> assigns_;
  std::vector<std::uint32_t> levels_;
  std::vector<std::uint32_t> reasons_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t head_ = 0;
  std::uint32_t scan_ = 0;
  std::vector<bool> seen_;
  std::vector<bool> model_;

  // Free mode only.
  std::vector<double> activity_;
  double increment_ = 1.0;
  std::vector<std::pair<double, std::uint32_t>> heap_;  // may hold stale entries
  std::vector<std::int8_t> saved_phase_;
};

}  // namespace hjx::detail
