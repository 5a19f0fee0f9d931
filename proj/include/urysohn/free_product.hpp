#ifndef URYSOHN_FREE_PRODUCT_HPP
#define URYSOHN_FREE_PRODUCT_HPP

#include "urysohn/perm_group.hpp"
#include "urysohn/permutation.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace urysohn {

/// Shape of the free product F = G * F_n * Z. G may be absent (trivial).
struct FreeProductSignature {
  std::shared_ptr<const EnumeratedGroup> g; // nullptr = trivial G
  int n_letters = 0;
  bool has_z = false;

  std::size_t g_order() const { return g ? g->order() : 1; }
};

/// One syllable of a free-product word.
struct Syllable {
  enum class Tag : std::uint8_t { G, Free, Z };
  Tag tag;
  int g = 0;                  // element index, Tag::G
  std::vector<int> fword;     // reduced word over letters, entries +-(i+1), Tag::Free
  long long zpow = 0;         // nonzero, Tag::Z

  bool operator==(const Syllable &o) const {
    return tag == o.tag && g == o.g && fword == o.fword && zpow == o.zpow;
  }
};

/// Word of F in normal form: no identity syllables, adjacent syllables have
/// distinct factor tags, free-word payloads freely reduced. Equal group
/// elements have identical normal forms.
class FreeProductWord {
public:
  FreeProductWord() = default;

  static FreeProductWord identity() { return FreeProductWord(); }
  static FreeProductWord g_elem(int index);
  static FreeProductWord free_letter(int letter, long long power = 1);
  static FreeProductWord z_power(long long power);

  bool is_identity() const { return syl_.empty(); }
  const std::vector<Syllable> &syllables() const { return syl_; }

  bool operator==(const FreeProductWord &o) const { return syl_ == o.syl_; }

  /// Stable byte encoding for hashing/dedup.
  std::string key() const;

  /// Text form, e.g. "g3*f1^2*t^-1"; identity is "e".
  std::string str() const;
  static FreeProductWord parse(const std::string &text, const FreeProductSignature &sig);

  friend FreeProductWord normal_form(std::vector<Syllable> raw, const FreeProductSignature &sig);

private:
  std::vector<Syllable> syl_; // invariant: normal form
};

/// Reduces a raw syllable list to normal form.
FreeProductWord normal_form(std::vector<Syllable> raw, const FreeProductSignature &sig);

FreeProductWord mul(const FreeProductWord &a, const FreeProductWord &b,
                    const FreeProductSignature &sig);
FreeProductWord inverse(const FreeProductWord &a, const FreeProductSignature &sig);

/// The set V: words plus the symmetrized letter list V u V^-1 (identity and
/// duplicate normal forms dropped).
class GeneratingSet {
public:
  GeneratingSet(std::vector<FreeProductWord> words, const FreeProductSignature &sig);

  const std::vector<FreeProductWord> &words() const { return words_; }
  /// V u V^-1 without identity, deduplicated, in first-seen order.
  const std::vector<FreeProductWord> &symmetrized() const { return letters_; }

private:
  std::vector<FreeProductWord> words_;
  std::vector<FreeProductWord> letters_;
};

struct BallStats {
  int radius = 0;
  std::vector<std::size_t> level_sizes;
  std::size_t total = 0;
  bool capped = false;
};

/// Ball cap overflow carries the growth data observed so far.
struct BallCapExceeded : std::runtime_error {
  BallStats stats;
  explicit BallCapExceeded(BallStats s)
      : std::runtime_error("ball enumeration exceeded cap after " +
                           std::to_string(s.level_sizes.size() - 1) + " levels (" +
                           std::to_string(s.total) + " normal forms)"),
        stats(std::move(s)) {}
};

/// B_V(radius) as normal forms, BFS order, words[0] = e. parent/via give the
/// derivation words[i] = words[parent[i]] * letter[via[i]].
struct Ball {
  std::vector<FreeProductWord> words;
  std::vector<int> parent;
  std::vector<int> via;
  BallStats stats;
};

Ball enumerate_ball(const GeneratingSet &V, int radius, std::size_t cap,
                    const FreeProductSignature &sig);

constexpr int kOverCap = -1;

/// Least k <= cap with word a product of <= k elements of V u V^-1 (0 for e);
/// kOverCap when the word is outside the radius-cap ball (the l_V = infinity
/// convention covers words outside <V>).
int reduced_length(const FreeProductWord &word, const GeneratingSet &V, int cap,
                   const FreeProductSignature &sig, std::size_t ball_cap = 1000000);

/// Images of the factor generators under a homomorphism F -> Sym(degree).
/// g_images is index-aligned with the enumerated G and must already be a
/// homomorphism on G; build_assignment verifies that.
struct HomAssignment {
  int degree = 0;
  std::vector<Permutation> g_images;
  std::vector<Permutation> letter_images;
  Permutation z_image = Permutation(0);
};

/// Extends generator images to all of G along its BFS decomposition and
/// verifies the relations phi(x*s) = phi(x)phi(s). Throws if the G part is
/// not a homomorphism.
HomAssignment build_assignment(const FreeProductSignature &sig,
                               const std::vector<Permutation> &g_generator_images,
                               std::vector<Permutation> letter_images,
                               Permutation z_image, int degree);

Permutation evaluate_hom(const HomAssignment &phi, const FreeProductWord &word,
                         const FreeProductSignature &sig);

} // namespace urysohn

#endif
