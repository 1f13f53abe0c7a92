#pragma once

// Bounded checks of the partial-semigroup structure on located words. All of
// these quantify over a finite universe or sample, so a pass means "not
// refuted at this scale" and nothing more.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hjx/configurations.hpp"
#include "hjx/words.hpp"

namespace hjx {

/// φ(x): the words y of the universe for which x ⊎ y is defined.
std::vector<LocatedWord> phi(const LocatedWord& x, std::span<const LocatedWord> universe);

/// ∩_{x ∈ sample} φ(x) ≠ ∅ over the N-universe. With admit_empty=false the
/// empty word is left out of the universe.
bool check_adequacy_sample(std::span<const LocatedWord> sample, std::uint32_t n,
                           const Alphabet& alphabet, bool admit_empty = true);

/// A family of finite word sets, each member sorted canonically.
using WordFamily = std::vector<std::vector<LocatedWord>>;

struct InvarianceViolation {
  LocatedWord shift;
  std::vector<LocatedWord> member;
  std::vector<LocatedWord> image;
  bool left = true;  // s·F when true, F·s otherwise
};

/// Checks that s·F and F·s stay in the family whenever they are defined, for
/// each sampled s and each member F. Returns the first violation.
std::optional<InvarianceViolation> check_invariance(const WordFamily& family,
                                                    std::span<const LocatedWord> sample);

/// {{β ⊎ {(t,v)} : t ∈ F} : β variable word, F ∈ family, dom β ∩ F = ∅},
/// restricted to positions in [N]. The alphabet's constants are used; v is
/// adjoined.
WordFamily variable_line_family(std::uint32_t n, std::uint32_t sigma, const ConfigFamily& family);

/// A ⊆ {1..M}.
struct WindowSet {
  std::uint32_t M = 1;
  std::vector<std::int64_t> members;  // sorted, each in [1, M]

  /// Throws InvalidArgument when a member falls outside [1, M].
  void validate() const;
};

/// True iff ∪_{n=1..r} (A − n) contains L consecutive integers.
bool pws_window_check(const WindowSet& set, std::uint32_t r, std::uint32_t length);

/// (a⊎b)⊎c defined iff a⊎(b⊎c) defined, equal when defined.
bool associativity_holds(const LocatedWord& a, const LocatedWord& b, const LocatedWord& c);
/// a⊎b defined iff b⊎a defined, equal when defined.
bool symmetry_holds(const LocatedWord& a, const LocatedWord& b);
/// a⊎b defined implies θ_s(a)⊎θ_s(b) defined and equal to θ_s(a⊎b).
bool homomorphism_holds(Symbol s, const LocatedWord& a, const LocatedWord& b);

/// Uniform word of the N-universe.
LocatedWord random_word(std::mt19937_64& rng, std::uint32_t n, const Alphabet& alphabet);

struct LawReport {
  std::string check;
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  std::string first_violation;
};

/// Runs one named check ("associativity", "phi", "adequacy", "invariance",
/// "pws") on `samples` random instances drawn from seed. Throws
/// InvalidArgument for an unknown name.
LawReport run_law_check(const std::string& check, std::uint32_t n, std::uint32_t sigma,
                        std::uint64_t samples, std::uint64_t seed);

}  // namespace hjx
