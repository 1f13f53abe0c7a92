#include "cdcl.hpp"

#include <algorithm>
#include <utility>

namespace hjx::detail {

Cdcl::Lit Cdcl::from_dimacs(std::int32_t lit) {
  return lit > 0 ? 2 * static_cast<Lit>(lit - 1) : 2 * static_cast<Lit>(-lit - 1) + 1;
}

Cdcl::Cdcl(std::uint32_t num_vars, const std::vector<std::vector<std::int32_t>>& clauses,
           Mode mode)
    : num_vars_(num_vars),
      mode_(mode),
      watches_(2 * std::size_t{num_vars}),
      assigns_(num_vars, -1),
      levels_(num_vars, 0),
      reasons_(num_vars, kNoReason),
      seen_(num_vars, false) {
  if (mode_ == Mode::Free) {
    activity_.assign(num_vars, 0.0);
    saved_phase_.assign(num_vars, 0);
    for (std::uint32_t v = 0; v < num_vars; ++v) heap_.emplace_back(0.0, num_vars - 1 - v);
    std::make_heap(heap_.begin(), heap_.end());
  }
  for (const auto& dimacs : clauses) {
    std::vector<Lit> clause;
    for (std::int32_t lit : dimacs) clause.push_back(from_dimacs(lit));
    std::sort(clause.begin(), clause.end());
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    bool tautology = false;
    for (std::size_t i = 1; i < clause.size(); ++i) {
      if ((clause[i] ^ 1) == clause[i - 1]) tautology = true;
    }
    if (tautology) continue;
    if (clause.empty()) {
      inconsistent_ = true;
    } else if (clause.size() == 1) {
      const std::int8_t v = value(clause[0]);
      if (v == 0) inconsistent_ = true;
      if (v == -1) enqueue(clause[0], kNoReason);
    } else {
      clauses_.push_back(std::move(clause));
      attach(static_cast<std::uint32_t>(clauses_.size() - 1));
    }
  }
}

std::int8_t Cdcl::value(Lit l) const {
  const std::int8_t a = assigns_[l >> 1];
  return a < 0 ? a : static_cast<std::int8_t>(a ^ static_cast<std::int8_t>(l & 1));
}

void Cdcl::enqueue(Lit l, std::uint32_t reason) {
  const std::uint32_t var = l >> 1;
  assigns_[var] = static_cast<std::int8_t>((l & 1) ^ 1);
  levels_[var] = level();
  reasons_[var] = reason;
  trail_.push_back(l);
}

void Cdcl::attach(std::uint32_t clause) {
  watches_[clauses_[clause][0]].push_back(clause);
  watches_[clauses_[clause][1]].push_back(clause);
}

std::uint32_t Cdcl::propagate() {
  while (head_ < trail_.size()) {
    const Lit falsified = trail_[head_++] ^ 1;
    auto& ws = watches_[falsified];
    std::size_t keep = 0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const std::uint32_t ci = ws[i];
      auto& c = clauses_[ci];
      if (c[0] == falsified) std::swap(c[0], c[1]);
      if (value(c[0]) == 1) {
        ws[keep++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < c.size(); ++k) {
        if (value(c[k]) != 0) {
          std::swap(c[1], c[k]);
          watches_[c[1]].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      ws[keep++] = ci;
      if (value(c[0]) == 0) {
        while (++i < ws.size()) ws[keep++] = ws[i];
        ws.resize(keep);
        head_ = trail_.size();
        return ci;
      }
      enqueue(c[0], ci);
    }
    ws.resize(keep);
  }
  return kNoReason;
}

// First unique implication point; learnt[0] is the asserting literal and
// learnt[1] the literal of the level to jump back to.
void Cdcl::analyze(std::uint32_t conflict, std::vector<Lit>& learnt, std::uint32_t& back_level) {
  learnt.assign(1, 0);
  std::uint32_t open = 0;
  std::size_t index = trail_.size();
  Lit p = 0;
  bool first = true;
  std::uint32_t clause = conflict;
  do {
    const auto& c = clauses_[clause];
    for (std::size_t j = first ? 0 : 1; j < c.size(); ++j) {
      const std::uint32_t var = c[j] >> 1;
      if (seen_[var] || levels_[var] == 0) continue;
      seen_[var] = true;
      if (mode_ == Mode::Free) bump(var);
      if (levels_[var] == level()) {
        ++open;
      } else {
        learnt.push_back(c[j]);
      }
    }
    first = false;
    while (!seen_[trail_[--index] >> 1]) {
    }
    p = trail_[index];
    clause = reasons_[p >> 1];
    seen_[p >> 1] = false;
    --open;
  } while (open > 0);
  learnt[0] = p ^ 1;

  back_level = 0;
  std::size_t at = 1;
  for (std::size_t i = 1; i < learnt.size(); ++i) {
    seen_[learnt[i] >> 1] = false;
    if (levels_[learnt[i] >> 1] > back_level) {
      back_level = levels_[learnt[i] >> 1];
      at = i;
    }
  }
  if (learnt.size() > 1) std::swap(learnt[1], learnt[at]);
}

void Cdcl::cancel_until(std::uint32_t target) {
  if (level() <= target) return;
  for (std::size_t i = trail_.size(); i > trail_lim_[target]; --i) {
    const std::uint32_t var = trail_[i - 1] >> 1;
    if (mode_ == Mode::Free) {
      saved_phase_[var] = assigns_[var];
      heap_.emplace_back(activity_[var], num_vars_ - 1 - var);
      std::push_heap(heap_.begin(), heap_.end());
    }
    assigns_[var] = -1;
    reasons_[var] = kNoReason;
    scan_ = std::min(scan_, var);
  }
  trail_.resize(trail_lim_[target]);
  trail_lim_.resize(target);
  head_ = trail_.size();
}

void Cdcl::rebuild_heap() {
  heap_.clear();
  for (std::uint32_t v = 0; v < num_vars_; ++v) {
    if (assigns_[v] < 0) heap_.emplace_back(activity_[v], num_vars_ - 1 - v);
  }
  std::make_heap(heap_.begin(), heap_.end());
}

void Cdcl::bump(std::uint32_t var) {
  activity_[var] += increment_;
  if (activity_[var] > 1e100) {
    for (double& a : activity_) a *= 1e-100;
    increment_ *= 1e-100;
    rebuild_heap();
    return;
  }
  if (assigns_[var] < 0) {
    heap_.emplace_back(activity_[var], num_vars_ - 1 - var);
    std::push_heap(heap_.begin(), heap_.end());
  }
}

bool Cdcl::pick_branch(Lit& out) {
  if (mode_ == Mode::Ordered) {
    while (scan_ < num_vars_ && assigns_[scan_] >= 0) ++scan_;
    if (scan_ == num_vars_) return false;
    out = 2 * scan_;
    return true;
  }
  if (heap_.size() > 16 * std::size_t{num_vars_} + 1024) rebuild_heap();
  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end());
    const auto [act, key] = heap_.back();
    heap_.pop_back();
    const std::uint32_t var = num_vars_ - 1 - key;
    if (assigns_[var] >= 0 || act != activity_[var]) continue;
    out = 2 * var + (saved_phase_[var] == 1 ? 0 : 1);
    return true;
  }
  return false;
}

namespace {

// 1, 1, 2, 1, 1, 2, 4, ...
std::uint64_t luby(std::uint64_t i) {
  std::uint64_t size = 1;
  std::uint64_t seq = 0;
  while (size < i + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != i) {
    size = (size - 1) >> 1;
    --seq;
    i %= size;
  }
  return std::uint64_t{1} << seq;
}

}  // namespace

bool Cdcl::solve(const std::function<void()>& tick) {
  if (inconsistent_) return false;
  std::vector<Lit> learnt;
  std::uint64_t restarts = 0;
  std::uint64_t conflicts_left = 100 * luby(0);
  while (true) {
    const std::uint32_t conflict = propagate();
    if (conflict != kNoReason) {
      tick();
      if (level() == 0) return false;
      std::uint32_t back_level = 0;
      analyze(conflict, learnt, back_level);
      cancel_until(back_level);
      if (learnt.size() == 1) {
        enqueue(learnt[0], kNoReason);
      } else {
        clauses_.push_back(learnt);
        const auto ci = static_cast<std::uint32_t>(clauses_.size() - 1);
        attach(ci);
        enqueue(learnt[0], ci);
      }
      if (mode_ == Mode::Free) {
        increment_ /= 0.95;
        if (--conflicts_left == 0) {
          conflicts_left = 100 * luby(++restarts);
          cancel_until(0);
        }
      }
      continue;
    }
    Lit decision = 0;
    if (!pick_branch(decision)) break;
    tick();
    trail_lim_.push_back(trail_.size());
    enqueue(decision, kNoReason);
  }
  model_.assign(num_vars_ + 1, false);
  for (std::uint32_t v = 0; v < num_vars_; ++v) model_[v + 1] = assigns_[v] == 1;
  return true;
}

}  // namespace hjx::detail
