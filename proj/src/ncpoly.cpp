#include "cp2q/ncpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cp2q {

// ---- Alphabet --------------------------------------------------------------

std::optional<Letter> Alphabet::find(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter Alphabet::letter(const std::string& name) const {
  if (auto l = find(name)) return *l;
  throw std::invalid_argument("unknown generator '" + name + "'");
}

std::string Alphabet::word_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += names.at(w[i]);
  }
  return s;
}

// ---- MonomialOrder ---------------------------------------------------------

MonomialOrder::MonomialOrder(Kind kind, std::vector<int> rank, std::vector<Letter> priority)
    : kind_(kind), rank_(std::move(rank)), priority_(std::move(priority)) {
  if (kind_ == Kind::DegCommLex && priority_.size() != rank_.size())
    throw std::invalid_argument("DegCommLex order needs a priority for every letter");
}

int MonomialOrder::compare(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (kind_ == Kind::DegCommLex) {
    std::vector<int> ca(rank_.size(), 0), cb(rank_.size(), 0);
    for (Letter l : a) ++ca[l];
    for (Letter l : b) ++cb[l];
    for (Letter l : priority_)
      if (ca[l] != cb[l]) return ca[l] < cb[l] ? -1 : 1;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return rank_[a[i]] < rank_[b[i]] ? -1 : 1;
  return 0;
}

std::string MonomialOrder::describe(const Alphabet& alpha) const {
  std::vector<Letter> by_rank(rank_.size());
  for (std::size_t l = 0; l < rank_.size(); ++l) by_rank[static_cast<std::size_t>(rank_[l])] = static_cast<Letter>(l);
  std::string s = kind_ == Kind::DegLex ? "deglex" : "degcommlex";
  s += " ";
  for (std::size_t i = 0; i < by_rank.size(); ++i) s += (i ? "<" : "") + alpha.names[by_rank[i]];
  if (kind_ == Kind::DegCommLex) {
    s += " priority ";
    for (std::size_t i = 0; i < priority_.size(); ++i) s += (i ? ">" : "") + alpha.names[priority_[i]];
  }
  return s;
}

// ---- RewriteSystem ---------------------------------------------------------

RewriteSystem::RewriteSystem(std::string name, Alphabet alphabet, MonomialOrder order)
    : name_(std::move(name)), alphabet_(std::move(alphabet)), order_(std::move(order)) {
  if (order_.rank().size() != alphabet_.size()) throw std::invalid_argument("order and alphabet sizes differ");
}

Word RewriteSystem::leading_word(const PolyR& p) const {
  if (p.is_zero()) throw std::invalid_argument("leading word of zero");
  const Word* best = nullptr;
  for (const auto& [w, c] : p.terms())
    if (!best || order_.less(*best, w)) best = &w;
  return *best;
}

void RewriteSystem::add_rule(Word lhs, PolyR rhs) {
  if (lhs.empty()) throw std::invalid_argument("rule with empty left side");
  for (const auto& [w, c] : rhs.terms())
    if (!order_.less(w, lhs))
      throw std::invalid_argument("rule " + alphabet_.word_string(lhs) + " -> ... is not order compatible (" +
                                  alphabet_.word_string(w) + ")");
  rule_index_.try_emplace(lhs, rules_.size());
  max_lhs_ = std::max(max_lhs_, lhs.size());
  rules_.push_back({std::move(lhs), std::move(rhs)});
  clear_cache();
}

void RewriteSystem::add_relation(const PolyR& p) {
  Word lead = leading_word(p);
  RatV c = p.coeff(lead);
  PolyR rest = p - PolyR::word(lead, c);
  add_rule(lead, rest * (-c.inverse()));
}

void RewriteSystem::set_central(PolyR relation) {
  Word lead = leading_word(relation);
  central_exponents_.assign(alphabet_.size(), 0);
  for (Letter l : lead) ++central_exponents_[l];
  central_ = std::move(relation);
  clear_cache();
}

void RewriteSystem::clear_cache() const {
  nf_cache_.clear();
  local_cache_.clear();
}

const RewriteRule* RewriteSystem::find_suffix_rule(const Word& w) const {
  for (std::size_t len = 1; len <= std::min(max_lhs_, w.size()); ++len) {
    auto it = rule_index_.find(w.substr(w.size() - len));
    if (it != rule_index_.end()) return &rules_[it->second];
  }
  return nullptr;
}

const RewriteRule* RewriteSystem::find_rule_at(const Word& w, std::size_t pos) const {
  for (std::size_t len = 1; len <= max_lhs_ && pos + len <= w.size(); ++len) {
    auto it = rule_index_.find(w.substr(pos, len));
    if (it != rule_index_.end()) return &rules_[it->second];
  }
  return nullptr;
}

bool RewriteSystem::central_applies(const Word& w) const {
  if (!central_) return false;
  std::vector<int> counts(alphabet_.size(), 0);
  for (Letter l : w) ++counts[l];
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (counts[i] < central_exponents_[i]) return false;
  return true;
}

PolyR RewriteSystem::central_step(const Word& w) const {
  std::vector<int> drop = central_exponents_;
  Word rest;
  for (Letter l : w) {
    if (drop[l] > 0)
      --drop[l];
    else
      rest += l;
  }
  PolyR prod;
  for (const auto& [u, c] : central_->terms()) {
    const PolyR& nf = local_normal_form(rest + u);
    for (const auto& [x, d] : nf.terms()) prod.add_term(x, c * d);
  }
  if (prod.is_zero() || leading_word(prod) != w)
    throw std::logic_error("central relation does not reproduce the word " + alphabet_.word_string(w));
  RatV c = prod.coeff(w);
  // w = w - prod/c, and prod = 0 in the algebra.
  PolyR r = PolyR::word(w) - prod * c.inverse();
  return r;
}

PolyR RewriteSystem::reduce_appended(const Word& w, bool use_central) const {
  auto nf_of = [&](const Word& u) -> const PolyR& { return use_central ? normal_form(u) : local_normal_form(u); };
  if (const RewriteRule* r = find_suffix_rule(w)) {
    Word head = w.substr(0, w.size() - r->lhs.size());
    PolyR out;
    for (const auto& [u, c] : r->rhs.terms()) {
      const PolyR& nf = nf_of(head + u);
      for (const auto& [x, d] : nf.terms()) out.add_term(x, c * d);
    }
    return out;
  }
  if (use_central && central_applies(w)) {
    PolyR step = central_step(w);
    PolyR out;
    for (const auto& [u, c] : step.terms()) {
      const PolyR& nf = normal_form(u);
      for (const auto& [x, d] : nf.terms()) out.add_term(x, c * d);
    }
    return out;
  }
  return PolyR::word(w);
}

namespace {

template <class Reduce, class Recurse>
PolyR nf_by_prefix(const Word& w, Reduce reduce_appended, Recurse recurse) {
  if (w.size() <= 1) return reduce_appended(w);
  PolyR prefix = recurse(w.substr(0, w.size() - 1));
  const Letter last = w.back();
  PolyR out;
  for (const auto& [t, c] : prefix.terms()) {
    PolyR part = reduce_appended(t + last);
    for (const auto& [x, d] : part.terms()) out.add_term(x, c * d);
  }
  return out;
}

}  // namespace

const PolyR& RewriteSystem::normal_form(const Word& w) const {
  if (auto it = nf_cache_.find(w); it != nf_cache_.end()) return it->second;
  PolyR r = nf_by_prefix(
      w, [&](const Word& u) { return reduce_appended(u, true); }, [&](const Word& u) { return normal_form(u); });
  return nf_cache_.insert_or_assign(w, std::move(r)).first->second;
}

const PolyR& RewriteSystem::local_normal_form(const Word& w) const {
  if (auto it = local_cache_.find(w); it != local_cache_.end()) return it->second;
  PolyR r = nf_by_prefix(
      w, [&](const Word& u) { return reduce_appended(u, false); }, [&](const Word& u) { return local_normal_form(u); });
  return local_cache_.insert_or_assign(w, std::move(r)).first->second;
}

bool RewriteSystem::is_normal(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    if (find_rule_at(w, pos)) return false;
  return !central_applies(w);
}

std::vector<int> RewriteSystem::weight(const Word& w) const {
  std::size_t dims = alphabet_.weights.empty() ? 0 : alphabet_.weights[0].size();
  std::vector<int> s(dims, 0);
  for (Letter l : w)
    for (std::size_t i = 0; i < dims; ++i) s[i] += alphabet_.weights[l][i];
  return s;
}

std::vector<Word> RewriteSystem::normal_words(std::size_t max_len, const std::function<bool(const Word&)>& keep) const {
  std::vector<Word> out;
  std::vector<Word> frontier{Word()};
  if (keep(Word())) out.push_back(Word());
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (std::size_t l = 0; l < alphabet_.size(); ++l) {
        Word u = w + static_cast<Letter>(l);
        if (find_suffix_rule(u) || central_applies(u)) continue;
        if (keep(u)) out.push_back(u);
        next.push_back(std::move(u));
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return order_.less(a, b); });
  return out;
}

std::vector<Word> RewriteSystem::graded_basis(const std::vector<int>& target, std::size_t max_len) const {
  bool nonneg = true;
  for (const auto& wt : alphabet_.weights)
    for (int x : wt) nonneg = nonneg && x >= 0;
  std::vector<Word> out;
  std::vector<Word> frontier{Word()};
  if (weight(Word()) == target) out.push_back(Word());
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (std::size_t l = 0; l < alphabet_.size(); ++l) {
        Word u = w + static_cast<Letter>(l);
        if (find_suffix_rule(u) || central_applies(u)) continue;
        std::vector<int> wt = weight(u);
        if (nonneg) {
          bool over = false;
          for (std::size_t i = 0; i < wt.size(); ++i) over = over || wt[i] > target[i];
          if (over) continue;
        }
        if (wt == target) out.push_back(u);
        next.push_back(std::move(u));
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return order_.less(a, b); });
  return out;
}

// ---- confluence and completion ---------------------------------------------

ConfluenceReport check_local_confluence(const RewriteSystem& sys, std::size_t degree_bound) {
  ConfluenceReport rep;
  rep.degree_bound = degree_bound;
  const auto& rules = sys.rules();
  auto resolve = [&](const Word& word, std::size_t a, std::size_t b, const PolyR& ra, const PolyR& rb) {
    ++rep.overlaps_checked;
    PolyR d = sys.normal_form(ra) - sys.normal_form(rb);
    if (!d.is_zero()) rep.unresolved.push_back({word, a, b, std::move(d)});
  };
  for (std::size_t a = 0; a < rules.size(); ++a) {
    const Word& la = rules[a].lhs;
    for (std::size_t b = 0; b < rules.size(); ++b) {
      const Word& lb = rules[b].lhs;
      // la = X Y, lb = Y Z with Y a proper nonempty overlap.
      for (std::size_t k = 1; k < std::min(la.size(), lb.size()) + 0; ++k) {
        if (la.compare(la.size() - k, k, lb, 0, k) != 0) continue;
        Word word = la + lb.substr(k);
        if (word.size() > degree_bound) continue;
        PolyR ra = rules[a].rhs * PolyR::word(lb.substr(k));
        PolyR rb = PolyR::word(la.substr(0, la.size() - k)) * rules[b].rhs;
        resolve(word, a, b, ra, rb);
      }
      // lb occurs inside la.
      if (a != b && lb.size() <= la.size() && la.size() <= degree_bound) {
        for (std::size_t p = 0; p + lb.size() <= la.size(); ++p) {
          if (la.compare(p, lb.size(), lb) != 0) continue;
          PolyR rb = PolyR::word(la.substr(0, p)) * rules[b].rhs * PolyR::word(la.substr(p + lb.size()));
          resolve(la, a, b, rules[a].rhs, rb);
        }
      }
    }
  }
  return rep;
}

CompletionResult complete(RewriteSystem& sys, std::size_t degree_bound) {
  CompletionResult res;
  for (;;) {
    ConfluenceReport rep = check_local_confluence(sys, degree_bound);
    if (rep.confluent()) {
      res.final_report = std::move(rep);
      break;
    }
    ++res.rounds;
    std::sort(rep.unresolved.begin(), rep.unresolved.end(),
              [](const Overlap& x, const Overlap& y) { return x.word.size() < y.word.size(); });
    for (const auto& ov : rep.unresolved) {
      PolyR d = sys.normal_form(ov.difference);
      if (d.is_zero()) continue;
      Word lead = sys.leading_word(d);
      if (lead.empty()) throw std::runtime_error("completion derived a nonzero constant: the presentation collapses");
      sys.add_relation(d);
      ++res.rules_added;
    }
  }
  sys.set_watermark(std::max(sys.watermark(), degree_bound));
  return res;
}

// ---- text ------------------------------------------------------------------

namespace {

template <class C>
std::string term_text(const C& c, const std::string& word) {
  if (word == "1") return to_string(c);
  std::string cs = to_factor_string(c);
  if (cs == "1") return word;
  if (cs == "-1") return "-" + word;
  return cs + " " + word;
}

}  // namespace

template <class C>
std::string to_string(const Poly<C>& p, const Alphabet& alpha, const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const Word, C>*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(), [&](auto* a, auto* b) { return order.less(a->first, b->first); });
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string t = term_text(terms[i]->second, alpha.word_string(terms[i]->first));
    if (i == 0)
      out = t;
    else if (t.front() == '-')
      out += " - " + t.substr(1);
    else
      out += " + " + t;
  }
  return out;
}

template std::string to_string(const Poly<RatV>&, const Alphabet&, const MonomialOrder&);
template std::string to_string(const Poly<Radical>&, const Alphabet&, const MonomialOrder&);

namespace {

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad number '" + s + "'");
  r.canonicalize();
  return r;
}

// Exponent of v for "q^k" / "v^k" tokens.
int parse_power(const std::string& tok) {
  const bool is_q = tok[0] == 'q';
  if (tok.size() == 1) return is_q ? 4 : 1;
  if (tok[1] != '^') throw std::invalid_argument("bad power token '" + tok + "'");
  std::string e = tok.substr(2);
  if (!e.empty() && e.front() == '(' && e.back() == ')') e = e.substr(1, e.size() - 2);
  Rational k = parse_rational(e);
  Rational scaled = is_q ? k * 4 : k;
  if (scaled.get_den() != 1) throw std::invalid_argument("exponent in '" + tok + "' is not a multiple of 1/4");
  return static_cast<int>(scaled.get_num().get_si());
}

}  // namespace

PolyR parse_poly(const std::string& text, const Alphabet& alpha) {
  // Split "+" / "-" that are glued to tokens only at term starts.
  std::vector<std::string> toks;
  std::istringstream is(text);
  for (std::string t; is >> t;) toks.push_back(t);
  if (toks.empty()) throw std::invalid_argument("empty expression");
  PolyR out;
  RatV coeff(1);
  Word word;
  bool have_factor = false;
  auto flush = [&] {
    if (!have_factor) throw std::invalid_argument("dangling sign in expression");
    out.add_term(word, coeff);
    coeff = RatV(1);
    word.clear();
    have_factor = false;
  };
  for (std::string t : toks) {
    if (t == "+" || t == "-") {
      if (have_factor) flush();
      if (t == "-") coeff = -coeff;
      continue;
    }
    if (t.size() > 1 && t.front() == '-' && !(t[1] == '(')) {
      coeff = -coeff;
      t = t.substr(1);
    }
    if (auto l = alpha.find(t)) {
      word += *l;
    } else if (t[0] == 'q' || t[0] == 'v') {
      coeff *= RatV::vpow(parse_power(t));
    } else if (std::isdigit(static_cast<unsigned char>(t[0]))) {
      coeff *= RatV(parse_rational(t));
    } else {
      throw std::invalid_argument("unknown token '" + t + "'");
    }
    have_factor = true;
  }
  flush();
  return out;
}

// ---- cache files -----------------------------------------------------------

namespace {

constexpr const char* kCacheMagic = "cp2q-rewrite-cache";
constexpr int kCacheVersion = 1;

std::string encode_word(const Word& w, const Alphabet& a) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "." : "") + a.names[w[i]];
  return s;
}

Word decode_word(const std::string& s, const Alphabet& a) {
  if (s == "1") return {};
  Word w;
  std::stringstream ss(s);
  for (std::string n; std::getline(ss, n, '.');) w += a.letter(n);
  return w;
}

std::string encode_poly(const PolyR& p, const Alphabet& a) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    s += (first ? "" : " | ") + c.encode() + "@" + encode_word(w, a);
    first = false;
  }
  return s;
}

PolyR decode_poly(const std::string& s, const Alphabet& a) {
  PolyR p;
  if (s == "0") return p;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t bar = s.find(" | ", start);
    std::string item = s.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
    auto at = item.find('@');
    if (at == std::string::npos) throw std::invalid_argument("bad term in cache: " + item);
    p.add_term(decode_word(item.substr(at + 1), a), RatV::decode(item.substr(0, at)));
    if (bar == std::string::npos) break;
    start = bar + 3;
  }
  return p;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<int> split_ints(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  for (std::string x; std::getline(ss, x, ',');)
    if (!x.empty()) v.push_back(std::stoi(x));
  return v;
}

std::string expect_line(std::istream& in, const std::string& key) {
  std::string line;
  if (!std::getline(in, line) || line.rfind(key + " ", 0) != 0) throw std::invalid_argument("cache file: expected '" + key + "'");
  return line.substr(key.size() + 1);
}

}  // namespace

std::string serialize_system(const RewriteSystem& sys) {
  const Alphabet& a = sys.alphabet();
  std::ostringstream os;
  os << kCacheMagic << " " << kCacheVersion << "\n";
  os << "presentation " << sys.name() << "\n";
  os << "alphabet";
  for (const auto& n : a.names) os << " " << n;
  os << "\n";
  os << "weights";
  for (const auto& w : a.weights) os << " " << join_ints(w);
  os << "\n";
  const auto& ord = sys.order();
  std::vector<int> prio(ord.priority().begin(), ord.priority().end());
  os << "order " << (ord.kind() == MonomialOrder::Kind::DegLex ? "deglex" : "degcommlex") << " rank "
     << join_ints(ord.rank()) << " priority " << (prio.empty() ? "-" : join_ints(prio)) << "\n";
  os << "watermark " << sys.watermark() << "\n";
  os << "rules " << sys.rules().size() << "\n";
  for (const auto& r : sys.rules()) os << encode_word(r.lhs, a) << " => " << encode_poly(r.rhs, a) << "\n";
  os << "central " << (sys.central() ? encode_poly(*sys.central(), a) : "none") << "\n";
  os << "end\n";
  return os.str();
}

RewriteSystem deserialize_system(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  std::getline(in, header);
  if (header != std::string(kCacheMagic) + " " + std::to_string(kCacheVersion))
    throw std::invalid_argument("not a rewrite cache file of a supported version");
  std::string name = expect_line(in, "presentation");
  Alphabet a;
  {
    std::istringstream ls(expect_line(in, "alphabet"));
    for (std::string n; ls >> n;) a.names.push_back(n);
  }
  {
    std::istringstream ls(expect_line(in, "weights"));
    for (std::string w; ls >> w;) a.weights.push_back(split_ints(w));
  }
  MonomialOrder order;
  {
    std::istringstream ls(expect_line(in, "order"));
    std::string kind, rk, ranks, pk, prios;
    ls >> kind >> rk >> ranks >> pk >> prios;
    std::vector<Letter> pr;
    if (prios != "-")
      for (int x : split_ints(prios)) pr.push_back(static_cast<Letter>(x));
    order = MonomialOrder(kind == "deglex" ? MonomialOrder::Kind::DegLex : MonomialOrder::Kind::DegCommLex, split_ints(ranks), pr);
  }
  RewriteSystem sys(name, a, order);
  sys.set_watermark(std::stoul(expect_line(in, "watermark")));
  std::size_t n = std::stoul(expect_line(in, "rules"));
  for (std::size_t i = 0; i < n; ++i) {
    std::string line;
    std::getline(in, line);
    auto arrow = line.find(" => ");
    if (arrow == std::string::npos) throw std::invalid_argument("cache file: bad rule line");
    sys.add_rule(decode_word(line.substr(0, arrow), a), decode_poly(line.substr(arrow + 4), a));
  }
  std::string central = expect_line(in, "central");
  if (central != "none") sys.set_central(decode_poly(central, a));
  return sys;
}

}  // namespace cp2q
