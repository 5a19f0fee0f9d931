#include "urysohn/free_product.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace urysohn {

namespace {

bool syllable_trivial(const Syllable &s) {
  switch (s.tag) {
  case Syllable::Tag::G:
    return s.g == 0;
  case Syllable::Tag::Free:
    return s.fword.empty();
  case Syllable::Tag::Z:
    return s.zpow == 0;
  }
  return true;
}

void reduce_fword(std::vector<int> &w) {
  std::vector<int> out;
  for (int letter : w) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  w = std::move(out);
}

// merge b into a (same tag); true if the merged syllable vanished
bool merge_syllables(Syllable &a, const Syllable &b, const FreeProductSignature &sig) {
  switch (a.tag) {
  case Syllable::Tag::G:
    a.g = sig.g ? sig.g->mult(a.g, b.g) : 0;
    return a.g == 0;
  case Syllable::Tag::Free: {
    std::vector<int> joined = a.fword;
    joined.insert(joined.end(), b.fword.begin(), b.fword.end());
    reduce_fword(joined);
    a.fword = std::move(joined);
    return a.fword.empty();
  }
  case Syllable::Tag::Z:
    a.zpow += b.zpow;
    return a.zpow == 0;
  }
  return true;
}

void validate_syllable(const Syllable &s, const FreeProductSignature &sig) {
  switch (s.tag) {
  case Syllable::Tag::G:
    if (s.g < 0 || static_cast<std::size_t>(s.g) >= sig.g_order())
      throw std::invalid_argument("free product word: G element index out of range");
    break;
  case Syllable::Tag::Free:
    for (int l : s.fword)
      if (l == 0 || std::abs(l) > sig.n_letters)
        throw std::invalid_argument("free product word: free letter out of range");
    break;
  case Syllable::Tag::Z:
    if (!sig.has_z && s.zpow != 0)
      throw std::invalid_argument("free product word: signature has no Z factor");
    break;
  }
}

} // namespace

FreeProductWord FreeProductWord::g_elem(int index) {
  FreeProductWord w;
  if (index != 0)
    w.syl_.push_back({Syllable::Tag::G, index, {}, 0});
  return w;
}

FreeProductWord FreeProductWord::free_letter(int letter, long long power) {
  FreeProductWord w;
  if (power != 0) {
    Syllable s{Syllable::Tag::Free, 0, {}, 0};
    int entry = (power > 0) ? letter + 1 : -(letter + 1);
    for (long long i = 0; i < std::llabs(power); ++i)
      s.fword.push_back(entry);
    w.syl_.push_back(std::move(s));
  }
  return w;
}

FreeProductWord FreeProductWord::z_power(long long power) {
  FreeProductWord w;
  if (power != 0)
    w.syl_.push_back({Syllable::Tag::Z, 0, {}, power});
  return w;
}

FreeProductWord normal_form(std::vector<Syllable> raw, const FreeProductSignature &sig) {
  FreeProductWord out;
  for (Syllable &s : raw) {
    validate_syllable(s, sig);
    if (s.tag == Syllable::Tag::Free)
      reduce_fword(s.fword);
    if (syllable_trivial(s))
      continue;
    // merge with the tail when tags match; a vanishing merge exposes a tail
    // pair that already had distinct tags, so no cascade is needed
    if (!out.syl_.empty() && out.syl_.back().tag == s.tag) {
      if (merge_syllables(out.syl_.back(), s, sig))
        out.syl_.pop_back();
    } else {
      out.syl_.push_back(std::move(s));
    }
  }
  return out;
}

FreeProductWord mul(const FreeProductWord &a, const FreeProductWord &b,
                    const FreeProductSignature &sig) {
  std::vector<Syllable> raw = a.syllables();
  raw.insert(raw.end(), b.syllables().begin(), b.syllables().end());
  return normal_form(std::move(raw), sig);
}

FreeProductWord inverse(const FreeProductWord &a, const FreeProductSignature &sig) {
  std::vector<Syllable> raw;
  raw.reserve(a.syllables().size());
  for (auto it = a.syllables().rbegin(); it != a.syllables().rend(); ++it) {
    Syllable s = *it;
    switch (s.tag) {
    case Syllable::Tag::G:
      s.g = sig.g ? sig.g->inv(s.g) : 0;
      break;
    case Syllable::Tag::Free:
      std::reverse(s.fword.begin(), s.fword.end());
      for (int &l : s.fword)
        l = -l;
      break;
    case Syllable::Tag::Z:
      s.zpow = -s.zpow;
      break;
    }
    raw.push_back(std::move(s));
  }
  return normal_form(std::move(raw), sig);
}

std::string FreeProductWord::key() const {
  std::string k;
  for (const Syllable &s : syl_) {
    k.push_back(static_cast<char>(s.tag));
    switch (s.tag) {
    case Syllable::Tag::G:
      k.append(reinterpret_cast<const char *>(&s.g), sizeof(s.g));
      break;
    case Syllable::Tag::Free: {
      int len = static_cast<int>(s.fword.size());
      k.append(reinterpret_cast<const char *>(&len), sizeof(len));
      k.append(reinterpret_cast<const char *>(s.fword.data()), s.fword.size() * sizeof(int));
      break;
    }
    case Syllable::Tag::Z:
      k.append(reinterpret_cast<const char *>(&s.zpow), sizeof(s.zpow));
      break;
    }
  }
  return k;
}

std::string FreeProductWord::str() const {
  if (syl_.empty())
    return "e";
  std::ostringstream os;
  bool first = true;
  for (const Syllable &s : syl_) {
    switch (s.tag) {
    case Syllable::Tag::G:
      os << (first ? "" : "*") << "g" << s.g;
      first = false;
      break;
    case Syllable::Tag::Free: {
      // run-length encode consecutive equal letters
      std::size_t i = 0;
      while (i < s.fword.size()) {
        std::size_t j = i;
        while (j < s.fword.size() && s.fword[j] == s.fword[i])
          ++j;
        long long pow = static_cast<long long>(j - i) * (s.fword[i] > 0 ? 1 : -1);
        os << (first ? "" : "*") << "f" << std::abs(s.fword[i]);
        first = false;
        if (pow != 1)
          os << "^" << pow;
        i = j;
      }
      break;
    }
    case Syllable::Tag::Z:
      os << (first ? "" : "*") << "t";
      first = false;
      if (s.zpow != 1)
        os << "^" << s.zpow;
      break;
    }
  }
  return os.str();
}

FreeProductWord FreeProductWord::parse(const std::string &text,
                                       const FreeProductSignature &sig) {
  if (text == "e" || text.empty())
    return FreeProductWord();
  std::vector<Syllable> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    char kind = text[i++];
    if (kind == '*')
      kind = text[i++];
    std::size_t num_start = i;
    if (i < text.size() && (kind == 'g' || kind == 'f')) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
    }
    long long index = 0;
    if (kind != 't') {
      if (num_start == i)
        throw std::invalid_argument("word parse: missing index after '" + std::string(1, kind) + "'");
      index = std::stoll(text.substr(num_start, i - num_start));
    }
    long long power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t p_start = i;
      if (i < text.size() && text[i] == '-')
        ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      power = std::stoll(text.substr(p_start, i - p_start));
    }
    switch (kind) {
    case 'g': {
      if (power < 0)
        throw std::invalid_argument("word parse: g syllables take no negative power; invert the element");
      for (long long p = 0; p < power; ++p)
        raw.push_back({Syllable::Tag::G, static_cast<int>(index), {}, 0});
      break;
    }
    case 'f': {
      Syllable s{Syllable::Tag::Free, 0, {}, 0};
      int entry = power > 0 ? static_cast<int>(index) : -static_cast<int>(index);
      for (long long p = 0; p < std::llabs(power); ++p)
        s.fword.push_back(entry);
      raw.push_back(std::move(s));
      break;
    }
    case 't':
      raw.push_back({Syllable::Tag::Z, 0, {}, power});
      break;
    default:
      throw std::invalid_argument("word parse: unknown factor '" + std::string(1, kind) + "'");
    }
  }
  return normal_form(std::move(raw), sig);
}

GeneratingSet::GeneratingSet(std::vector<FreeProductWord> words,
                             const FreeProductSignature &sig)
    : words_(std::move(words)) {
  std::unordered_set<std::string> seen;
  for (const auto &w : words_) {
    if (w.is_identity())
      continue;
    if (seen.insert(w.key()).second)
      letters_.push_back(w);
  }
  for (const auto &w : words_) {
    FreeProductWord wi = inverse(w, sig);
    if (wi.is_identity())
      continue;
    if (seen.insert(wi.key()).second)
      letters_.push_back(std::move(wi));
  }
}

Ball enumerate_ball(const GeneratingSet &V, int radius, std::size_t cap,
                    const FreeProductSignature &sig) {
  Ball ball;
  ball.stats.radius = radius;
  std::unordered_set<std::string> seen;
  ball.words.push_back(FreeProductWord::identity());
  ball.parent.push_back(-1);
  ball.via.push_back(-1);
  seen.insert(ball.words[0].key());
  ball.stats.level_sizes.push_back(1);
  std::size_t level_begin = 0, level_end = 1;
  for (int r = 1; r <= radius; ++r) {
    std::size_t produced = 0;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t li = 0; li < V.symmetrized().size(); ++li) {
        FreeProductWord next = mul(ball.words[i], V.symmetrized()[li], sig);
        auto key = next.key();
        if (!seen.insert(std::move(key)).second)
          continue;
        if (ball.words.size() >= cap) {
          ball.stats.total = ball.words.size();
          ball.stats.capped = true;
          ball.stats.level_sizes.push_back(produced);
          throw BallCapExceeded(ball.stats);
        }
        ball.words.push_back(std::move(next));
        ball.parent.push_back(static_cast<int>(i));
        ball.via.push_back(static_cast<int>(li));
        ++produced;
      }
    }
    ball.stats.level_sizes.push_back(produced);
    level_begin = level_end;
    level_end = ball.words.size();
    if (produced == 0)
      break;
  }
  ball.stats.total = ball.words.size();
  return ball;
}

int reduced_length(const FreeProductWord &word, const GeneratingSet &V, int cap,
                   const FreeProductSignature &sig, std::size_t ball_cap) {
  if (cap < 0)
    throw std::invalid_argument("reduced_length: cap must be >= 0");
  if (word.is_identity())
    return 0;
  std::unordered_set<std::string> seen;
  std::vector<FreeProductWord> frontier{FreeProductWord::identity()};
  seen.insert(frontier[0].key());
  std::string target = word.key();
  for (int r = 1; r <= cap; ++r) {
    std::vector<FreeProductWord> next_frontier;
    for (const auto &w : frontier)
      for (const auto &l : V.symmetrized()) {
        FreeProductWord next = mul(w, l, sig);
        auto key = next.key();
        if (key == target)
          return r;
        if (seen.insert(std::move(key)).second) {
          if (seen.size() > ball_cap) {
            BallStats stats;
            stats.radius = r;
            stats.total = seen.size();
            stats.capped = true;
            throw BallCapExceeded(stats);
          }
          next_frontier.push_back(std::move(next));
        }
      }
    frontier = std::move(next_frontier);
    if (frontier.empty())
      break;
  }
  return kOverCap;
}

HomAssignment build_assignment(const FreeProductSignature &sig,
                               const std::vector<Permutation> &g_generator_images,
                               std::vector<Permutation> letter_images,
                               Permutation z_image, int degree) {
  HomAssignment phi;
  phi.degree = degree;
  phi.letter_images = std::move(letter_images);
  phi.z_image = std::move(z_image);
  if (static_cast<int>(phi.letter_images.size()) != sig.n_letters)
    throw std::invalid_argument("build_assignment: one image per free letter required");
  for (const auto &p : phi.letter_images)
    if (p.degree() != degree)
      throw std::invalid_argument("build_assignment: letter image degree mismatch");
  if (sig.has_z && phi.z_image.degree() != degree)
    throw std::invalid_argument("build_assignment: z image degree mismatch");

  const std::size_t n = sig.g_order();
  phi.g_images.reserve(n);
  phi.g_images.push_back(Permutation(degree));
  if (sig.g) {
    if (g_generator_images.size() != sig.g->generator_count())
      throw std::invalid_argument("build_assignment: one image per G generator required");
    for (std::size_t i = 1; i < n; ++i) {
      const Permutation &par = phi.g_images[sig.g->parent(static_cast<int>(i))];
      phi.g_images.push_back(par.compose(g_generator_images[sig.g->via_generator(static_cast<int>(i))]));
    }
    // phi is a homomorphism on G iff consistent against every generator
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t s = 0; s < sig.g->generator_count(); ++s) {
        int xs = sig.g->mult(static_cast<int>(x), sig.g->generator_indices()[s]);
        if (!(phi.g_images[xs] == phi.g_images[x].compose(g_generator_images[s])))
          throw std::invalid_argument("build_assignment: images do not define a homomorphism on G");
      }
  }
  return phi;
}

Permutation evaluate_hom(const HomAssignment &phi, const FreeProductWord &word,
                         const FreeProductSignature &sig) {
  Permutation acc(phi.degree);
  for (const Syllable &s : word.syllables()) {
    switch (s.tag) {
    case Syllable::Tag::G:
      acc = acc.compose(phi.g_images[s.g]);
      break;
    case Syllable::Tag::Free:
      for (int l : s.fword) {
        const Permutation &img = phi.letter_images[std::abs(l) - 1];
        acc = acc.compose(l > 0 ? img : img.inverse());
      }
      break;
    case Syllable::Tag::Z: {
      if (!sig.has_z)
        throw std::invalid_argument("evaluate_hom: word uses Z but signature has none");
      Permutation p = s.zpow > 0 ? phi.z_image : phi.z_image.inverse();
      for (long long i = 0; i < std::llabs(s.zpow); ++i)
        acc = acc.compose(p);
      break;
    }
    }
  }
  return acc;
}

} // namespace urysohn
