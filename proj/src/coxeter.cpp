#include "weylmon/coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <set>
#include <sstream>

namespace weylmon {

std::string WeylElement::to_string(int index_base) const {
  if (word_.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i) os << ' ';
    os << static_cast<int>(word_[i]) + index_base;
  }
  return os.str();
}

WeylGroup::WeylGroup(CartanMatrix A, Realization rz) : A_(std::move(A)), rz_(std::move(rz)) {
  if (rz_.m != A_.size()) fail(Errc::InvalidArgument, "realization does not match matrix");
}

WeylElement WeylGroup::generator(int i) const {
  if (i < 0 || i >= A_.size()) fail(Errc::InvalidArgument, "generator index out of range");
  return WeylElement(Word{static_cast<Gen>(i)});
}

IntVec WeylGroup::simple_root(int i) const {
  IntVec v(A_.size(), Int(0));
  v[i] = 1;
  return v;
}

void WeylGroup::reflect_root(int i, IntVec& v) const {
  // r_i(alpha_j) = alpha_j - a_ij alpha_i, so only coefficient i changes.
  Int p = 0;
  for (int j = 0; j < A_.size(); ++j) p += Int(A_.entry(i, j)) * v[j];
  v[i] -= p;
}

void WeylGroup::reflect_weight(int i, RatVec& coords) const {
  const Rat t = coords[i];
  if (t == 0) return;
  for (int k = 0; k < rz_.dim; ++k) coords[k] -= t * Rat(rz_.pairings[k][i]);
}

IntVec WeylGroup::act_on_root(const WeylElement& w, IntVec v) const {
  const Word& word = w.word();
  for (size_t idx = word.size(); idx-- > 0;) reflect_root(word[idx], v);
  return v;
}

RatVec WeylGroup::act_on_weight(const WeylElement& w, RatVec coords) const {
  const Word& word = w.word();
  for (size_t idx = word.size(); idx-- > 0;) reflect_weight(word[idx], coords);
  return coords;
}

bool WeylGroup::root_is_negative(const IntVec& v) const {
  for (const Int& c : v) {
    if (c < 0) return true;
    if (c > 0) return false;
  }
  return false;
}

bool WeylGroup::is_right_descent(const WeylElement& w, int s) const {
  return root_is_negative(act_on_root(w, simple_root(s)));
}

bool WeylGroup::is_left_descent(const WeylElement& w, int s) const {
  // w^{-1}(alpha_s) < 0; the inverse acts by applying the letters of w in
  // word order.
  IntVec v = simple_root(s);
  for (Gen g : w.word()) reflect_root(g, v);
  return root_is_negative(v);
}

// Right-multiplies the reduced word r by the generator s, keeping it reduced.
// Walking alpha_s backwards through the word, the image either stays positive
// (append s) or flips at the unique letter whose simple root it has become
// (strong exchange: delete that letter).
void WeylGroup::right_multiply_reduced(Word& r, Gen s) const {
  IntVec v = simple_root(s);
  for (size_t idx = r.size(); idx-- > 0;) {
    bool is_simple = v[r[idx]] == 1;
    if (is_simple) {
      for (int j = 0; j < A_.size(); ++j)
        if (j != r[idx] && v[j] != 0) is_simple = false;
    }
    if (is_simple) {
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(idx));
      return;
    }
    reflect_root(r[idx], v);
  }
  r.push_back(s);
}

// ShortLex normal form: repeatedly emit the smallest left descent.
Word WeylGroup::shortlex(Word r) const {
  Word out;
  out.reserve(r.size());
  while (!r.empty()) {
    int descent = -1;
    for (int s = 0; s < A_.size() && descent < 0; ++s) {
      IntVec v = simple_root(s);
      for (Gen g : r) reflect_root(g, v);
      if (root_is_negative(v)) descent = s;
    }
    assert(descent >= 0);
    // Delete the letter where alpha_descent lands (left exchange).
    IntVec y = simple_root(descent);
    size_t del = r.size();
    for (size_t idx = 0; idx < r.size(); ++idx) {
      bool is_simple = y[r[idx]] == 1;
      if (is_simple) {
        for (int j = 0; j < A_.size(); ++j)
          if (j != r[idx] && y[j] != 0) is_simple = false;
      }
      if (is_simple) {
        del = idx;
        break;
      }
      reflect_root(r[idx], y);
    }
    assert(del < r.size());
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(del));
    out.push_back(static_cast<Gen>(descent));
  }
  return out;
}

WeylElement WeylGroup::from_word(const std::vector<int>& letters) const {
  Word r;
  for (int s : letters) {
    if (s < 0 || s >= A_.size()) fail(Errc::InvalidArgument, "generator index out of range");
    right_multiply_reduced(r, static_cast<Gen>(s));
  }
  return WeylElement(shortlex(std::move(r)));
}

WeylElement WeylGroup::parse(const std::string& text) const {
  std::istringstream is(text);
  std::string tok;
  std::vector<int> letters;
  while (is >> tok) {
    if (tok == "e" && letters.empty()) {
      if (is >> tok) fail(Errc::ElementParseError, "unexpected token after 'e'");
      return identity();
    }
    try {
      const int v = std::stoi(tok);
      if (v < 1 || v > A_.size()) throw std::out_of_range("index");
      letters.push_back(v - 1);
    } catch (const std::exception&) {
      fail(Errc::ElementParseError, "bad generator token '" + tok + "'");
    }
  }
  return from_word(letters);
}

WeylElement WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  Word r = a.word();
  for (Gen s : b.word()) right_multiply_reduced(r, s);
  return WeylElement(shortlex(std::move(r)));
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
  Word r(w.word().rbegin(), w.word().rend());
  return WeylElement(shortlex(std::move(r)));
}

Subset WeylGroup::support(const WeylElement& w) const {
  Subset s = 0;
  for (Gen g : w.word()) s |= (Subset{1} << g);
  return s;
}

bool WeylGroup::in_standard_parabolic(const WeylElement& w, Subset J) const {
  return (support(w) & ~J) == 0;
}

WeylElement WeylGroup::min_coset_rep(WeylElement w, Subset J, Side side) const {
  for (;;) {
    int s = -1;
    for (int i : subset_indices(J)) {
      const bool descent =
          side == Side::Right ? is_right_descent(w, i) : is_left_descent(w, i);
      if (descent) {
        s = i;
        break;
      }
    }
    if (s < 0) return w;
    w = side == Side::Right ? multiply(w, generator(s)) : multiply(generator(s), w);
  }
}

DoubleCosetFactorization WeylGroup::double_coset_factorize(const WeylElement& w, Subset I,
                                                           Subset J) const {
  DoubleCosetFactorization f{identity(), w, identity()};
  for (;;) {
    int s = -1;
    for (int i : subset_indices(I)) {
      if (is_left_descent(f.middle, i)) {
        s = i;
        break;
      }
    }
    if (s >= 0) {
      f.middle = multiply(generator(s), f.middle);
      f.left = multiply(f.left, generator(s));
      continue;
    }
    for (int i : subset_indices(J)) {
      if (is_right_descent(f.middle, i)) {
        s = i;
        break;
      }
    }
    if (s < 0) break;
    f.middle = multiply(f.middle, generator(s));
    f.right = multiply(generator(s), f.right);
  }
  return f;
}

OrbitResult WeylGroup::orbit_enumerate(const RatVec& mu, Subset I, size_t cap) const {
  if (static_cast<int>(mu.size()) != rz_.dim)
    fail(Errc::InvalidArgument, "weight has wrong dimension");
  if (cap < 1) fail(Errc::InvalidArgument, "cap must be positive");
  OrbitResult out;
  out.complete = true;
  if (I == 0) {
    out.points.push_back(mu);
    return out;
  }
  std::set<RatVec> seen{mu};
  std::vector<RatVec> discovery{mu};
  std::vector<RatVec> level{mu};
  while (!level.empty()) {
    std::vector<RatVec> next;
    for (const RatVec& v : level) {
      for (int i : subset_indices(I)) {
        RatVec u = v;
        reflect_weight(i, u);
        if (seen.insert(u).second) {
          discovery.push_back(u);
          next.push_back(std::move(u));
        }
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
    if (seen.size() > cap) {
      out.complete = false;
      discovery.resize(cap);
      break;
    }
  }
  std::sort(discovery.begin(), discovery.end());
  out.points = std::move(discovery);
  return out;
}

std::vector<WeylElement> WeylGroup::elements_up_to_length(Subset J, int bound, bool* exhausted,
                                                          size_t cap) const {
  std::vector<WeylElement> out{identity()};
  std::set<WeylElement> level{identity()};
  bool done = false;
  for (int len = 1; len <= bound + 1; ++len) {
    std::set<WeylElement> next;
    for (const WeylElement& w : level) {
      for (int s : subset_indices(J)) {
        if (is_right_descent(w, s)) continue;
        next.insert(multiply(w, generator(s)));
      }
    }
    if (next.empty()) {
      done = true;
      break;
    }
    if (len > bound) break;  // probe level only decides exhaustion
    for (const WeylElement& w : next) {
      out.push_back(w);
      if (out.size() > cap) fail(Errc::TooLarge, "group enumeration exceeded cap");
    }
    level = std::move(next);
  }
  if (exhausted) *exhausted = done;
  return out;
}

std::optional<WeylGroup::RealRootDecomposition> WeylGroup::real_root_decompose(
    const IntVec& root) const {
  if (static_cast<int>(root.size()) != A_.size()) return std::nullopt;
  bool any = false;
  bool nonneg = true, nonpos = true;
  for (const Int& c : root) {
    if (c != 0) any = true;
    if (c < 0) nonneg = false;
    if (c > 0) nonpos = false;
  }
  if (!any || (!nonneg && !nonpos)) return std::nullopt;
  const bool positive = nonneg;
  IntVec v = root;
  if (!positive)
    for (Int& c : v) c = -c;
  std::vector<int> letters;
  for (;;) {
    int simple = -1;
    for (int i = 0; i < A_.size(); ++i) {
      if (v[i] != 1) continue;
      bool only = true;
      for (int j = 0; j < A_.size(); ++j)
        if (j != i && v[j] != 0) only = false;
      if (only) {
        simple = i;
        break;
      }
    }
    if (simple >= 0) {
      RealRootDecomposition d;
      d.simple_index = simple;
      d.positive = positive;
      if (positive) {
        d.w = from_word(letters);
      } else {
        letters.push_back(simple);
        d.w = from_word(letters);
      }
      return d;
    }
    int descent = -1;
    for (int i = 0; i < A_.size(); ++i) {
      Int p = 0;
      for (int j = 0; j < A_.size(); ++j) p += Int(A_.entry(i, j)) * v[j];
      if (p > 0) {
        descent = i;
        break;
      }
    }
    if (descent < 0) return std::nullopt;  // imaginary or not a root
    reflect_root(descent, v);
    letters.push_back(descent);
    for (const Int& c : v)
      if (c < 0) return std::nullopt;
  }
}

std::vector<IntVec> WeylGroup::positive_real_roots_up_to_height(int bound) const {
  auto height = [](const IntVec& v) {
    Int h = 0;
    for (const Int& c : v) h += c;
    return h;
  };
  std::set<IntVec> seen;
  std::vector<IntVec> work;
  for (int i = 0; i < A_.size(); ++i) {
    if (bound < 1) break;
    seen.insert(simple_root(i));
    work.push_back(simple_root(i));
  }
  while (!work.empty()) {
    IntVec v = std::move(work.back());
    work.pop_back();
    for (int i = 0; i < A_.size(); ++i) {
      IntVec u = v;
      reflect_root(i, u);
      if (root_is_negative(u) || height(u) > bound) continue;
      if (seen.insert(u).second) work.push_back(u);
    }
  }
  return std::vector<IntVec>(seen.begin(), seen.end());
}

Rat WeylGroup::pairing_with_coroot(const RatVec& coords, const IntVec& real_root) const {
  auto dec = real_root_decompose(real_root);
  if (!dec) fail(Errc::NotARealRoot, "pairing with a non-real root");
  const RatVec moved = act_on_weight(inverse(dec->w), coords);
  return moved[dec->simple_index];
}

Word WeylGroup::reduce_with_choices(const std::vector<int>& letters, std::uint64_t seed) const {
  Word r;
  for (int s : letters) right_multiply_reduced(r, static_cast<Gen>(s));
  std::mt19937_64 rng(seed);
  Word out;
  while (!r.empty()) {
    std::vector<int> descents;
    for (int s = 0; s < A_.size(); ++s) {
      IntVec v = simple_root(s);
      for (Gen g : r) reflect_root(g, v);
      if (root_is_negative(v)) descents.push_back(s);
    }
    assert(!descents.empty());
    const int s = descents[rng() % descents.size()];
    IntVec y = simple_root(s);
    size_t del = r.size();
    for (size_t idx = 0; idx < r.size(); ++idx) {
      bool is_simple = y[r[idx]] == 1;
      if (is_simple) {
        for (int j = 0; j < A_.size(); ++j)
          if (j != r[idx] && y[j] != 0) is_simple = false;
      }
      if (is_simple) {
        del = idx;
        break;
      }
      reflect_root(r[idx], y);
    }
    assert(del < r.size());
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(del));
    out.push_back(static_cast<Gen>(s));
  }
  return out;
}

}  // namespace weylmon
