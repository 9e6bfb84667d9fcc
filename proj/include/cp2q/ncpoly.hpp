// Free noncommutative polynomials over Q(v) (or its radical extension) and
// a rewriting engine: normal forms, overlap checks, bounded completion.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cp2q/qcoeff.hpp"

namespace cp2q {

using Letter = char8_t;
using Word = std::u8string;

/// Generator names plus per-letter integer weights (e.g. (z-degree, z*-degree)).
struct Alphabet {
  std::vector<std::string> names;
  std::vector<std::vector<int>> weights;

  std::size_t size() const { return names.size(); }
  /// Letter for a name; throws std::invalid_argument for unknown names.
  Letter letter(const std::string& name) const;
  std::optional<Letter> find(const std::string& name) const;
  std::string word_string(const Word& w) const;  // "z1 z2*", "1" for empty
};

template <class C>
class Poly {
 public:
  using Terms = std::map<Word, C>;

  Poly() = default;
  Poly(const C& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(Word(), c);
  }
  static Poly word(Word w, const C& c = C(1)) {
    Poly p;
    if (!c.is_zero()) p.terms_.emplace(std::move(w), c);
    return p;
  }
  static Poly letter(Letter l, const C& c = C(1)) { return word(Word(1, l), c); }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  C coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C() : it->second;
  }
  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.size());
    return d;
  }

  void add_term(const Word& w, const C& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  Poly& operator+=(const Poly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }
  Poly& operator*=(const RatV& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const RatV& s) { return a *= s; }
  friend Poly operator*(const RatV& s, Poly a) { return a *= s; }
  /// Free (unreduced) product: concatenation of words.
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [w1, c1] : a.terms_)
      for (const auto& [w2, c2] : b.terms_) r.add_term(w1 + w2, c1 * c2);
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Coefficient-wise map to another coefficient type.
  template <class D, class F>
  Poly<D> map_coeffs(F f) const {
    Poly<D> r;
    for (const auto& [w, c] : terms_) r.add_term(w, f(c));
    return r;
  }

 private:
  Terms terms_;
};

using PolyR = Poly<RatV>;
using PolyX = Poly<Radical>;

inline PolyX to_radical(const PolyR& p) {
  return p.map_coeffs<Radical>([](const RatV& c) { return Radical(c); });
}

inline PolyX operator*(const PolyX& p, const Radical& c) {
  PolyX r;
  for (const auto& [w, x] : p.terms()) r.add_term(w, x * c);
  return r;
}

/// Degree-lexicographic order by letter rank (DegLex) or degree, then
/// exponent vector compared in letter-priority order, then word-lex by rank
/// (DegCommLex).
class MonomialOrder {
 public:
  enum class Kind { DegLex, DegCommLex };
  MonomialOrder() = default;
  MonomialOrder(Kind kind, std::vector<int> rank, std::vector<Letter> priority = {});

  Kind kind() const { return kind_; }
  const std::vector<int>& rank() const { return rank_; }
  const std::vector<Letter>& priority() const { return priority_; }
  /// Negative, zero or positive as a <, =, > b.
  int compare(const Word& a, const Word& b) const;
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }
  std::string describe(const Alphabet& alpha) const;

 private:
  Kind kind_ = Kind::DegLex;
  std::vector<int> rank_;
  std::vector<Letter> priority_;
};

struct RewriteRule {
  Word lhs;
  PolyR rhs;
};

struct Overlap {
  Word word;          // the ambiguous word
  std::size_t rule_a;  // indices into the rule list
  std::size_t rule_b;
  PolyR difference;   // normal form of (reduct_a - reduct_b)
  bool resolved() const { return difference.is_zero(); }
};

struct ConfluenceReport {
  std::size_t degree_bound = 0;
  std::size_t overlaps_checked = 0;
  std::vector<Overlap> unresolved;
  bool confluent() const { return unresolved.empty(); }
};

/// Oriented relations plus a monomial order. An optional central relation
/// f = 0 (f with sorted leading word, f central in the algebra presented by
/// the word rules) reduces any locally normal word whose letter multiset
/// contains that of lm(f); this makes normal forms canonical at all degrees
/// for algebras such as A(SU_q(3)), where word-level completion does not
/// terminate.
class RewriteSystem {
 public:
  RewriteSystem(std::string name, Alphabet alphabet, MonomialOrder order);

  const std::string& name() const { return name_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const std::optional<PolyR>& central() const { return central_; }
  std::size_t watermark() const { return watermark_; }
  void set_watermark(std::size_t d) { watermark_ = d; }

  /// Adds lhs -> rhs; throws std::invalid_argument unless every word of
  /// rhs is smaller than lhs.
  void add_rule(Word lhs, PolyR rhs);
  /// Adds the relation p = 0, oriented by its leading word.
  void add_relation(const PolyR& p);
  void set_central(PolyR relation);

  Word leading_word(const PolyR& p) const;

  const PolyR& normal_form(const Word& w) const;
  template <class C>
  Poly<C> normal_form(const Poly<C>& p) const {
    Poly<C> r;
    for (const auto& [w, c] : p.terms()) {
      const PolyR& nf = normal_form(w);
      for (const auto& [u, d] : nf.terms()) r.add_term(u, c * d);
    }
    return r;
  }
  template <class C>
  Poly<C> multiply(const Poly<C>& a, const Poly<C>& b) const {
    return normal_form(a * b);
  }
  bool is_normal(const Word& w) const;

  /// Normal words of weight == target with length <= max_len.
  std::vector<Word> graded_basis(const std::vector<int>& target, std::size_t max_len) const;
  /// All normal words with length <= max_len accepted by the filter.
  std::vector<Word> normal_words(std::size_t max_len, const std::function<bool(const Word&)>& keep) const;
  std::vector<int> weight(const Word& w) const;

  std::size_t cache_size() const { return nf_cache_.size(); }
  void clear_cache() const;

 private:
  friend ConfluenceReport check_local_confluence(const RewriteSystem& sys, std::size_t degree_bound);
  const RewriteRule* find_suffix_rule(const Word& w) const;
  const RewriteRule* find_rule_at(const Word& w, std::size_t pos) const;
  bool central_applies(const Word& w) const;
  PolyR central_step(const Word& w) const;
  const PolyR& local_normal_form(const Word& w) const;
  PolyR reduce_appended(const Word& w, bool use_central) const;

  std::string name_;
  Alphabet alphabet_;
  MonomialOrder order_;
  std::vector<RewriteRule> rules_;
  std::unordered_map<Word, std::size_t> rule_index_;
  std::size_t max_lhs_ = 0;
  std::optional<PolyR> central_;
  std::vector<int> central_exponents_;
  std::size_t watermark_ = 0;
  mutable std::unordered_map<Word, PolyR> nf_cache_;
  mutable std::unordered_map<Word, PolyR> local_cache_;
};

ConfluenceReport check_local_confluence(const RewriteSystem& sys, std::size_t degree_bound);

struct CompletionResult {
  std::size_t rules_added = 0;
  std::size_t rounds = 0;
  ConfluenceReport final_report;
};

/// Adds oriented consequences of unresolved overlaps up to degree_bound
/// until every overlap there resolves. Throws std::runtime_error if a
/// consequence is a nonzero constant (the presentation collapses).
CompletionResult complete(RewriteSystem& sys, std::size_t degree_bound);

/// Star of a polynomial given the images of the letters: words reversed,
/// coefficients unchanged (q real), letters replaced, result reduced.
template <class C>
Poly<C> star_poly(const Poly<C>& p, const std::vector<PolyR>& letter_star, const RewriteSystem& sys) {
  Poly<C> out;
  for (const auto& [w, c] : p.terms()) {
    Poly<C> term(c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const PolyR& img = letter_star.at(*it);
      if (img.is_zero()) throw std::invalid_argument("generator without a star image");
      Poly<C> next;
      for (const auto& [u, a] : term.terms())
        for (const auto& [x, b] : img.terms()) next.add_term(u + x, a * b);
      term = sys.normal_form(next);
    }
    out += term;
  }
  return out;
}

// ---- text ------------------------------------------------------------------

/// Terms in ascending monomial order, e.g. "1 - z1 z1* - z2 z2*".
template <class C>
std::string to_string(const Poly<C>& p, const Alphabet& alpha, const MonomialOrder& order);

/// Parses sums of products of tokens: generator names, integers, rationals
/// "a/b", "q^k" (k integer or fraction), "v^k"; '+' and '-' separate terms.
PolyR parse_poly(const std::string& text, const Alphabet& alpha);

/// Deterministic cache file text for a system; load reproduces it exactly.
std::string serialize_system(const RewriteSystem& sys);
RewriteSystem deserialize_system(const std::string& text);

}  // namespace cp2q
