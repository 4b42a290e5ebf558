#include "wordmaps/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>

namespace wordmaps {

namespace {

void check_rank(int rank) {
  if (rank < 1) throw InvalidArgument("free group rank must be positive, got " + std::to_string(rank));
}

void check_same_rank(const Word& a, const Word& b, const char* op) {
  if (a.rank() != b.rank()) {
    throw InvalidArgument(std::string(op) + ": rank mismatch (" + std::to_string(a.rank()) + " vs " +
                          std::to_string(b.rank()) + ")");
  }
}

}  // namespace

Word::Word(int rank) : rank_(rank) { check_rank(rank); }

Word Word::reduce(int rank, const std::vector<Syllable>& raw) {
  Word w(rank);
  auto& out = w.syllables_;
  for (const Syllable& s : raw) {
    if (s.generator < 1 || s.generator > rank) {
      throw InvalidArgument("generator x" + std::to_string(s.generator) + " outside F_" + std::to_string(rank));
    }
    if (s.exponent == 0) continue;
    if (!out.empty() && out.back().generator == s.generator) {
      out.back().exponent += s.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return w;
}

Word Word::generator(int rank, int index, int exponent) { return reduce(rank, {{index, exponent}}); }

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& s : syllables_) n += std::abs(static_cast<std::int64_t>(s.exponent));
  return n;
}

int Word::max_generator() const {
  int m = 0;
  for (const auto& s : syllables_) m = std::max(m, s.generator);
  return m;
}

Word Word::with_rank(int rank) const {
  if (rank < max_generator()) {
    throw InvalidArgument("cannot view word in F_" + std::to_string(rank) + ": uses x" +
                          std::to_string(max_generator()));
  }
  Word w(rank);
  w.syllables_ = syllables_;
  return w;
}

// ---------------------------------------------------------------------------
// Parsing and rendering

namespace {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  std::vector<Syllable> parse(int& max_index) {
    std::vector<Syllable> raw;
    skip_separators();
    while (pos_ < text_.size()) {
      const std::size_t term_start = pos_;
      const char c = text_[pos_];
      if (c == 'e') {
        ++pos_;
      } else if (c == 'x') {
        ++pos_;
        const std::int64_t index = number(false);
        if (index == 0) fail("generator index 0", term_start);
        std::int64_t exponent = 1;
        skip_spaces();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          skip_spaces();
          const std::size_t exp_pos = pos_;
          exponent = number(true);
          if (exponent == 0) fail("exponent 0", exp_pos);
        }
        if (index > kMaxLiteral || std::abs(exponent) > kMaxLiteral) fail("literal too large", term_start);
        max_index = std::max(max_index, static_cast<int>(index));
        raw.push_back({static_cast<int>(index), static_cast<int>(exponent)});
      } else {
        fail(std::string("unexpected character '") + c + "'", pos_);
      }
      const std::size_t before = pos_;
      skip_separators();
      if (pos_ == before && pos_ < text_.size() && text_[pos_] != 'x' && text_[pos_] != 'e') {
        fail(std::string("unexpected character '") + text_[pos_] + "'", pos_);
      }
    }
    return raw;
  }

 private:
  static constexpr std::int64_t kMaxLiteral = 1'000'000;

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError("word syntax error at position " + std::to_string(at) + ": " + msg, at);
  }

  void skip_spaces() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void skip_separators() {
    while (pos_ < text_.size() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '*')) {
      ++pos_;
    }
  }

  std::int64_t number(bool allow_sign) {
    const std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer", start);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, value);
    if (ec != std::errc{} || ptr != text_.data() + pos_) fail("integer out of range", start);
    return negative ? -value : value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text, int rank) {
  check_rank(rank);
  int max_index = 0;
  auto raw = WordParser(text).parse(max_index);
  if (max_index > rank) {
    throw ParseError("generator x" + std::to_string(max_index) + " exceeds rank " + std::to_string(rank));
  }
  return Word::reduce(rank, raw);
}

Word parse_word(std::string_view text) {
  int max_index = 0;
  auto raw = WordParser(text).parse(max_index);
  return Word::reduce(std::max(1, max_index), raw);
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(s.generator);
    if (s.exponent != 1) {
      out += '^';
      out += std::to_string(s.exponent);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Group operations

Word invert(const Word& w) {
  std::vector<Syllable> raw(w.syllables().rbegin(), w.syllables().rend());
  for (auto& s : raw) s.exponent = -s.exponent;
  return Word::reduce(w.rank(), raw);
}

Word concat(const Word& a, const Word& b) {
  check_same_rank(a, b, "concat");
  std::vector<Syllable> raw = a.syllables();
  raw.insert(raw.end(), b.syllables().begin(), b.syllables().end());
  return Word::reduce(a.rank(), raw);
}

Word power(const Word& w, int exponent) {
  const Word base = exponent < 0 ? invert(w) : w;
  Word out(w.rank());
  for (int i = 0; i < std::abs(exponent); ++i) out = concat(out, base);
  return out;
}

std::vector<int> letters(const Word& w) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(w.length()));
  for (const auto& s : w.syllables()) {
    const int letter = 2 * (s.generator - 1) + (s.exponent < 0 ? 1 : 0);
    for (int i = 0; i < std::abs(s.exponent); ++i) out.push_back(letter);
  }
  return out;
}

Word from_letters(int rank, const std::vector<int>& seq) {
  std::vector<Syllable> raw;
  raw.reserve(seq.size());
  for (int l : seq) raw.push_back({l / 2 + 1, (l & 1) ? -1 : 1});
  return Word::reduce(rank, raw);
}

bool length_lex_less(const Word& a, const Word& b) {
  const auto la = letters(a);
  const auto lb = letters(b);
  if (la.size() != lb.size()) return la.size() < lb.size();
  return la < lb;
}

// ---------------------------------------------------------------------------
// Endomorphisms

NielsenMove NielsenMove::inverse() const {
  switch (kind) {
    case NielsenKind::kTransvect: return {NielsenKind::kTransvectInverse, index};
    case NielsenKind::kTransvectInverse: return {NielsenKind::kTransvect, index};
    default: return *this;
  }
}

std::string to_string(const NielsenMove& m) {
  switch (m.kind) {
    case NielsenKind::kSwapAdjacent:
      return "swap(x" + std::to_string(m.index) + ",x" + std::to_string(m.index + 1) + ")";
    case NielsenKind::kInvertFirst: return "x1->x1^-1";
    case NielsenKind::kTransvect: return "x1->x1*x2";
    case NielsenKind::kTransvectInverse: return "x1->x1*x2^-1";
  }
  return "?";
}

FreeGroupEndo::FreeGroupEndo(int rank, std::vector<Word> images) : rank_(rank), images_(std::move(images)) {
  check_rank(rank);
  if (static_cast<int>(images_.size()) != rank) {
    throw InvalidArgument("endomorphism of F_" + std::to_string(rank) + " needs " + std::to_string(rank) +
                          " images, got " + std::to_string(images_.size()));
  }
  for (const auto& w : images_) {
    if (w.rank() != rank) throw InvalidArgument("endomorphism image has rank " + std::to_string(w.rank()));
  }
}

FreeGroupEndo FreeGroupEndo::identity(int rank) {
  check_rank(rank);
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i));
  FreeGroupEndo e(rank, std::move(images));
  e.recipe_ = std::vector<NielsenMove>{};
  return e;
}

FreeGroupEndo FreeGroupEndo::from_move(int rank, const NielsenMove& m) {
  FreeGroupEndo e = identity(rank);
  switch (m.kind) {
    case NielsenKind::kSwapAdjacent:
      if (m.index < 1 || m.index >= rank) throw InvalidArgument("swap index out of range");
      std::swap(e.images_[m.index - 1], e.images_[m.index]);
      break;
    case NielsenKind::kInvertFirst:
      e.images_[0] = Word::generator(rank, 1, -1);
      break;
    case NielsenKind::kTransvect:
    case NielsenKind::kTransvectInverse:
      if (rank < 2) throw InvalidArgument("transvection needs rank >= 2");
      e.images_[0] = Word::reduce(rank, {{1, 1}, {2, m.kind == NielsenKind::kTransvect ? 1 : -1}});
      break;
  }
  e.recipe_ = std::vector<NielsenMove>{m};
  return e;
}

const std::vector<NielsenMove>& FreeGroupEndo::recipe() const {
  if (!recipe_) throw InvalidArgument("endomorphism carries no automorphism witness");
  return *recipe_;
}

FreeGroupEndo FreeGroupEndo::inverse() const {
  const auto& moves = recipe();
  FreeGroupEndo inv = identity(rank_);
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    inv = compose(from_move(rank_, it->inverse()), inv);
  }
  return inv;
}

Word substitute(const Word& w, const FreeGroupEndo& e) {
  if (w.rank() != e.rank()) {
    throw InvalidArgument("substitute: rank mismatch (" + std::to_string(w.rank()) + " vs " +
                          std::to_string(e.rank()) + ")");
  }
  std::vector<Syllable> raw;
  for (const auto& s : w.syllables()) {
    const Word& img = e.image(s.generator);
    const auto& run = s.exponent > 0 ? img : invert(img);
    for (int k = 0; k < std::abs(s.exponent); ++k) {
      raw.insert(raw.end(), run.syllables().begin(), run.syllables().end());
    }
  }
  return Word::reduce(w.rank(), raw);
}

FreeGroupEndo compose(const FreeGroupEndo& outer, const FreeGroupEndo& inner) {
  if (outer.rank() != inner.rank()) throw InvalidArgument("compose: rank mismatch");
  std::vector<Word> images;
  images.reserve(inner.images().size());
  for (const auto& img : inner.images()) images.push_back(substitute(img, outer));
  FreeGroupEndo e(outer.rank(), std::move(images));
  if (outer.recipe_ && inner.recipe_) {
    std::vector<NielsenMove> moves = *inner.recipe_;
    moves.insert(moves.end(), outer.recipe_->begin(), outer.recipe_->end());
    e.recipe_ = std::move(moves);
  }
  return e;
}

std::string describe(const FreeGroupEndo& e) {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= e.rank(); ++i) {
    if (i > 1) os << ", ";
    os << 'x' << i << "->" << to_string(e.image(i));
  }
  os << ']';
  return os.str();
}

std::vector<FreeGroupEndo> nielsen_generators(int rank) {
  check_rank(rank);
  std::vector<FreeGroupEndo> gens;
  for (int i = 1; i < rank; ++i) gens.push_back(FreeGroupEndo::from_move(rank, {NielsenKind::kSwapAdjacent, i}));
  gens.push_back(FreeGroupEndo::from_move(rank, {NielsenKind::kInvertFirst, 1}));
  if (rank >= 2) gens.push_back(FreeGroupEndo::from_move(rank, {NielsenKind::kTransvect, 1}));
  return gens;
}

FreeGroupEndo random_automorphism(int rank, int length, std::uint64_t seed) {
  if (length < 0) throw InvalidArgument("random_automorphism: negative length");
  const auto gens = nielsen_generators(rank);
  std::mt19937_64 rng(seed);
  FreeGroupEndo theta = FreeGroupEndo::identity(rank);
  for (int k = 0; k < length; ++k) theta = compose(gens[rng() % gens.size()], theta);
  return theta;
}

FreeAntiAuto::FreeAntiAuto(FreeGroupEndo theta) : theta_(std::move(theta)) {
  if (!theta_.automorphism_witnessed()) {
    throw InvalidArgument("anti-automorphism needs an automorphism-witnessed theta");
  }
}

FreeAntiAuto FreeAntiAuto::inversion(int rank) { return FreeAntiAuto(FreeGroupEndo::identity(rank)); }

Word apply_anti(const Word& w, const FreeAntiAuto& gamma) { return substitute(invert(w), gamma.theta()); }

FreeGroupEndo compose(const FreeAntiAuto& outer, const FreeAntiAuto& inner) {
  // outer(inner(w)) = t1((t2(w^-1))^-1) = t1(t2(w))
  return compose(outer.theta(), inner.theta());
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Word> enumerate_words(int rank, int max_len) {
  check_rank(rank);
  if (max_len < 0) throw InvalidArgument("enumerate_words: negative length bound");
  const int alphabet = 2 * rank;
  std::vector<Word> out;
  out.emplace_back(rank);
  std::vector<int> seq;
  for (int len = 1; len <= max_len; ++len) {
    seq.assign(static_cast<std::size_t>(len), 0);
    // Depth-first odometer over reduced sequences in lexicographic order.
    auto valid_at = [&](std::size_t i) { return i == 0 || seq[i] != (seq[i - 1] ^ 1); };
    std::size_t depth = 0;
    seq[0] = -1;
    while (true) {
      ++seq[depth];
      while (seq[depth] < alphabet && !valid_at(depth)) ++seq[depth];
      if (seq[depth] >= alphabet) {
        if (depth == 0) break;
        --depth;
        continue;
      }
      if (depth + 1 == seq.size()) {
        out.push_back(from_letters(rank, seq));
      } else {
        ++depth;
        seq[depth] = -1;
      }
    }
  }
  return out;
}

Word canonical_form(const Word& w) {
  const int d = w.rank();
  const auto base = letters(w);
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = base;
  std::vector<int> img(base.size());
  do {
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      for (std::size_t i = 0; i < base.size(); ++i) {
        const int g = base[i] / 2;
        const int inv = (base[i] & 1) ^ static_cast<int>((mask >> g) & 1u);
        img[i] = 2 * perm[static_cast<std::size_t>(g)] + inv;
      }
      if (img < best) best = img;
      std::vector<int> rev(img.rbegin(), img.rend());
      for (int& l : rev) l ^= 1;
      if (rev < best) best = rev;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return from_letters(d, best);
}

std::vector<Word> enumerate_canonical_words(int rank, int max_len) {
  std::vector<Word> out;
  for (auto& w : enumerate_words(rank, max_len)) {
    if (canonical_form(w) == w) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace wordmaps
