#include "hjx/laws.hpp"

#include <algorithm>
#include <set>

#include "hjx/error.hpp"

namespace hjx {

std::vector<LocatedWord> phi(const LocatedWord& x, std::span<const LocatedWord> universe) {
  std::vector<LocatedWord> out;
  const PositionSet dom = x.domain();
  for (const LocatedWord& y : universe) {
    if (disjoint(dom, y.domain())) out.push_back(y);
  }
  return out;
}

bool check_adequacy_sample(std::span<const LocatedWord> sample, std::uint32_t n,
                           const Alphabet& alphabet, bool admit_empty) {
  for (const LocatedWord& y : enumerate_universe(n, alphabet)) {
    if (y.empty() && !admit_empty) continue;
    if (std::all_of(sample.begin(), sample.end(),
                    [&](const LocatedWord& x) { return combinable(x, y); })) {
      return true;
    }
  }
  return false;
}

namespace {

std::optional<std::vector<LocatedWord>> shifted(const LocatedWord& s,
                                                const std::vector<LocatedWord>& member,
                                                bool left) {
  std::vector<LocatedWord> image;
  image.reserve(member.size());
  for (const LocatedWord& f : member) {
    auto product = left ? try_combine(s, f) : try_combine(f, s);
    if (!product) return std::nullopt;
    image.push_back(std::move(*product));
  }
  std::sort(image.begin(), image.end());
  return image;
}

}  // namespace

std::optional<InvarianceViolation> check_invariance(const WordFamily& family,
                                                    std::span<const LocatedWord> sample) {
  std::set<std::vector<LocatedWord>> members;
  for (auto member : family) {
    std::sort(member.begin(), member.end());
    members.insert(std::move(member));
  }
  for (const LocatedWord& s : sample) {
    for (const auto& member : members) {
      for (bool left : {true, false}) {
        auto image = shifted(s, member, left);
        if (image && !members.contains(*image)) {
          return InvarianceViolation{s, member, std::move(*image), left};
        }
      }
    }
  }
  return std::nullopt;
}

WordFamily variable_line_family(std::uint32_t n, std::uint32_t sigma, const ConfigFamily& family) {
  if (family.kind() == FamilyKind::PlainLines) {
    throw InvalidArgument("variable-line families need a family of sets F");
  }
  if (family.window() > n) throw InvalidArgument("family window exceeds N");
  const Alphabet with_v(sigma, true);
  WordFamily out;
  for (const PositionSet& f : family.members()) {
    PositionSet rest;
    for (Position p = 1; p <= n; ++p) {
      if (!std::binary_search(f.begin(), f.end(), p)) rest.push_back(p);
    }
    if (rest.empty()) continue;
    for (const LocatedWord& w :
         enumerate_universe(static_cast<std::uint32_t>(rest.size()), with_v)) {
      if (w.is_constant()) continue;
      std::vector<Entry> relabeled;
      for (const Entry& e : w.entries()) relabeled.push_back({rest[e.position - 1], e.symbol});
      const LocatedWord beta = LocatedWord::from_entries(std::move(relabeled));
      std::vector<LocatedWord> member;
      for (Position t : f) {
        member.push_back(combine(beta, LocatedWord::from_entries({{t, kVariable}})));
      }
      std::sort(member.begin(), member.end());
      out.push_back(std::move(member));
    }
  }
  return out;
}

void WindowSet::validate() const {
  for (std::int64_t a : members) {
    if (a < 1 || a > M) {
      throw InvalidArgument("window member " + std::to_string(a) + " outside [1, " +
                            std::to_string(M) + "]");
    }
  }
}

bool pws_window_check(const WindowSet& set, std::uint32_t r, std::uint32_t length) {
  if (r == 0 || length == 0) throw InvalidArgument("r and L must be at least 1");
  set.validate();
  // A − n ranges over [1 − r, M − 1].
  const std::int64_t lo = 1 - static_cast<std::int64_t>(r);
  std::vector<bool> covered(set.M - lo, false);
  for (std::int64_t a : set.members) {
    for (std::uint32_t n = 1; n <= r; ++n) covered[a - n - lo] = true;
  }
  std::uint32_t run = 0;
  for (bool c : covered) {
    run = c ? run + 1 : 0;
    if (run >= length) return true;
  }
  return false;
}

bool associativity_holds(const LocatedWord& a, const LocatedWord& b, const LocatedWord& c) {
  std::optional<LocatedWord> left;
  if (auto ab = try_combine(a, b)) left = try_combine(*ab, c);
  std::optional<LocatedWord> right;
  if (auto bc = try_combine(b, c)) right = try_combine(a, *bc);
  return left == right;
}

bool symmetry_holds(const LocatedWord& a, const LocatedWord& b) {
  return try_combine(a, b) == try_combine(b, a);
}

bool homomorphism_holds(Symbol s, const LocatedWord& a, const LocatedWord& b) {
  auto ab = try_combine(a, b);
  if (!ab) return true;
  auto images = try_combine(substitute(s, a), substitute(s, b));
  return images && *images == substitute(s, *ab);
}

LocatedWord random_word(std::mt19937_64& rng, std::uint32_t n, const Alphabet& alphabet) {
  const UniverseIndex index(n, alphabet);
  std::uniform_int_distribution<std::uint64_t> pick(0, index.size() - 1);
  return index.unrank(pick(rng));
}

namespace {

// Words with a random density, so that products are defined often enough.
LocatedWord sparse_word(std::mt19937_64& rng, std::uint32_t n, const Alphabet& alphabet) {
  std::uniform_real_distribution<double> density(0.0, 0.6);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::uint32_t> symbol(0, alphabet.symbol_count() - 1);
  const double p = density(rng);
  std::vector<Entry> entries;
  for (Position t = 1; t <= n; ++t) {
    if (coin(rng) < p) entries.push_back({t, alphabet.symbol(symbol(rng))});
  }
  return LocatedWord::from_entries(std::move(entries));
}

void record(LawReport& report, bool ok, const std::string& detail) {
  if (ok) return;
  if (report.violations++ == 0) report.first_violation = detail;
}

}  // namespace

LawReport run_law_check(const std::string& check, std::uint32_t n, std::uint32_t sigma,
                        std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LawReport report;
  report.check = check;
  report.samples = samples;
  const Alphabet with_v(sigma, true);
  const Alphabet constants(sigma);

  if (check == "associativity") {
    std::uniform_int_distribution<std::uint32_t> pick_symbol(0, sigma - 1);
    for (std::uint64_t i = 0; i < samples; ++i) {
      const LocatedWord a = sparse_word(rng, n, with_v);
      const LocatedWord b = sparse_word(rng, n, with_v);
      const LocatedWord c = sparse_word(rng, n, with_v);
      const Symbol s(pick_symbol(rng));
      const std::string where = a.to_string() + " " + b.to_string() + " " + c.to_string();
      record(report, associativity_holds(a, b, c), "associativity: " + where);
      record(report, symmetry_holds(a, b), "symmetry: " + where);
      record(report, homomorphism_holds(s, a, b), "theta homomorphism: " + where);
    }
  } else if (check == "phi") {
    const auto universe = enumerate_universe(n, with_v);
    for (std::uint64_t i = 0; i < samples; ++i) {
      const LocatedWord x = sparse_word(rng, n, with_v);
      std::vector<LocatedWord> by_definedness;
      for (const LocatedWord& y : universe) {
        if (try_combine(x, y)) by_definedness.push_back(y);
      }
      record(report, phi(x, universe) == by_definedness, "phi: " + x.to_string());
    }
  } else if (check == "adequacy") {
    std::uniform_int_distribution<int> sample_size(1, 4);
    for (std::uint64_t i = 0; i < samples; ++i) {
      std::vector<LocatedWord> sample;
      for (int k = sample_size(rng); k > 0; --k) sample.push_back(sparse_word(rng, n, constants));
      record(report, check_adequacy_sample(sample, n, constants),
             "adequacy refuted on a sample of " + std::to_string(sample.size()));
    }
  } else if (check == "invariance") {
    if (n < 3) throw InvalidArgument("invariance needs N >= 3 for a line to fit");
    const WordFamily family = variable_line_family(n, sigma, ConfigFamily::arithmetic(1, n));
    std::vector<LocatedWord> shifts;
    for (std::uint64_t i = 0; i < samples; ++i) shifts.push_back(sparse_word(rng, n, with_v));
    if (auto bad = check_invariance(family, shifts)) {
      report.violations = 1;
      report.first_violation = "shift " + bad->shift.to_string() + " leaves the family";
    }
  } else if (check == "pws") {
    std::uniform_int_distribution<std::uint32_t> pick_m(1, 200);
    std::uniform_int_distribution<std::uint32_t> pick_r(1, 5);
    std::uniform_int_distribution<std::uint32_t> pick_l(1, 30);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::uint64_t i = 0; i < samples; ++i) {
      WindowSet set;
      set.M = pick_m(rng);
      const double p = coin(rng);
      for (std::int64_t a = 1; a <= set.M; ++a) {
        if (coin(rng) < p) set.members.push_back(a);
      }
      const std::uint32_t r = pick_r(rng);
      const std::uint32_t length = pick_l(rng);
      const bool base = pws_window_check(set, r, length);
      record(report, !base || pws_window_check(set, r + 1, length), "pws not monotone in r");
      record(report, !base || length == 1 || pws_window_check(set, r, length - 1),
             "pws not anti-monotone in L");
    }
  } else {
    throw InvalidArgument("unknown law check '" + check + "'");
  }
  return report;
}

}  // namespace hjx
