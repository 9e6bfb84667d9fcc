#include "cp2q/qalgebras.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

namespace cp2q {

// ---- letters ---------------------------------------------------------------

Letter u_letter(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3) throw std::invalid_argument("u index out of range");
  return static_cast<Letter>(3 * (i - 1) + (j - 1));
}
Letter z_letter(int j) {
  if (j < 1 || j > 3) throw std::invalid_argument("z index out of range");
  return static_cast<Letter>(j - 1);
}
Letter zs_letter(int j) {
  if (j < 1 || j > 3) throw std::invalid_argument("z* index out of range");
  return static_cast<Letter>(j + 2);
}
PolyR u_gen(int i, int j) { return PolyR::letter(u_letter(i, j)); }
PolyR z_gen(int j) { return PolyR::letter(z_letter(j)); }
PolyR zs_gen(int j) { return PolyR::letter(zs_letter(j)); }

namespace {

int row_of(Letter l) { return l / 3 + 1; }
int col_of(Letter l) { return l % 3 + 1; }

RatV signed_qpow(int k) {  // (-q)^k
  RatV r = qpow(k);
  return (k % 2 == 0) ? r : -r;
}

// Minor expansion used by the involution; the two words are already sorted.
PolyR minor_star(int i, int j) {
  int k[2], l[2], a = 0, b = 0;
  for (int x = 1; x <= 3; ++x) {
    if (x != i) k[a++] = x;
    if (x != j) l[b++] = x;
  }
  PolyR p = u_gen(k[0], l[0]) * u_gen(k[1], l[1]) - u_gen(k[0], l[1]) * u_gen(k[1], l[0]) * qpow(1);
  return p * signed_qpow(j - i);
}

}  // namespace

PolyR quantum_determinant() {
  // permutations of {1,2,3} with their lengths (inversion counts)
  const int perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  PolyR d;
  for (const auto& s : perms) {
    int inv = 0;
    for (int x = 0; x < 3; ++x)
      for (int y = x + 1; y < 3; ++y) inv += s[x] > s[y];
    d += u_gen(1, s[0]) * u_gen(2, s[1]) * u_gen(3, s[2]) * signed_qpow(inv);
  }
  return d;
}

RewriteSystem build_frt_system() {
  Alphabet a;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      a.names.push_back("u" + std::to_string(i) + std::to_string(j));
      a.weights.push_back({1});
    }
  std::vector<int> rank(9);
  std::vector<Letter> prio(9);
  for (int i = 0; i < 9; ++i) {
    rank[i] = i;
    prio[i] = static_cast<Letter>(i);
  }
  RewriteSystem sys("frt", a, MonomialOrder(MonomialOrder::Kind::DegCommLex, rank, prio));
  const RatV qmqi = qpow(1) - qpow(-1);
  for (Letter x = 0; x < 9; ++x)
    for (Letter y = 0; y < x; ++y) {
      // x = u^{r1}_{c1} placed before y = u^{r2}_{c2} with y < x: sort.
      const int r1 = row_of(x), c1 = col_of(x), r2 = row_of(y), c2 = col_of(y);
      PolyR yx = PolyR::word(Word{y, x});
      Word lhs{x, y};
      if (r1 == r2 || c1 == c2) {
        sys.add_rule(lhs, yx * qpow(-1));
      } else if (c1 < c2) {
        sys.add_rule(lhs, yx);  // [u^i_l, u^j_k] = 0
      } else {
        // u^j_l u^i_k = u^i_k u^j_l - (q - q^-1) u^i_l u^j_k
        sys.add_rule(lhs, yx - u_gen(r2, c1) * u_gen(r1, c2) * qmqi);
      }
    }
  return sys;
}

RewriteSystem build_suq3_system(bool with_central_rule) {
  RewriteSystem frt = build_frt_system();
  RewriteSystem sys("suq3", frt.alphabet(), frt.order());
  for (const auto& r : frt.rules()) sys.add_rule(r.lhs, r.rhs);
  PolyR rel = quantum_determinant() - PolyR(RatV(1));
  sys.add_relation(rel);
  if (with_central_rule) sys.set_central(rel);
  return sys;
}

std::vector<PolyR> determinant_commutators() {
  RewriteSystem frt = build_frt_system();
  const PolyR d = quantum_determinant();
  std::vector<PolyR> out;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) out.push_back(frt.normal_form(u_gen(i, j) * d - d * u_gen(i, j)));
  return out;
}

RewriteSystem build_s5q_system() {
  Alphabet a;
  a.names = {"z1", "z2", "z3", "z1*", "z2*", "z3*"};
  a.weights = {{1, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}};
  // z1 < z2 < z3 < z3* < z2* < z1*
  RewriteSystem sys("s5q", a, MonomialOrder(MonomialOrder::Kind::DegLex, {0, 1, 2, 5, 4, 3}));
  auto z = [](int j) { return z_letter(j); };
  auto zs = [](int j) { return zs_letter(j); };
  const RatV one_minus_q2 = RatV(1) - qpow(2);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      sys.add_rule(Word{z(j), z(i)}, PolyR::word(Word{z(i), z(j)}, qpow(-1)));     // z_i z_j = q z_j z_i
      sys.add_rule(Word{zs(i), zs(j)}, PolyR::word(Word{zs(j), zs(i)}, qpow(-1)));  // its star
    }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) sys.add_rule(Word{zs(i), z(j)}, PolyR::word(Word{z(j), zs(i)}, qpow(1)));  // z_i^* z_j = q z_j z_i^*
  PolyR p1 = PolyR::word(Word{z(1), zs(1)});
  PolyR p2 = PolyR::word(Word{z(2), zs(2)});
  sys.add_rule(Word{zs(1), z(1)}, p1);
  sys.add_rule(Word{zs(2), z(2)}, p2 + p1 * one_minus_q2);
  // z3^* z3 = z3 z3^* + (1-q^2)(z1 z1^* + z2 z2^*), with the sphere relation applied
  sys.add_rule(Word{zs(3), z(3)}, PolyR(RatV(1)) - (p1 + p2) * qpow(2));
  sys.add_rule(Word{z(3), zs(3)}, PolyR(RatV(1)) - p1 - p2);
  return sys;
}

std::vector<std::pair<std::string, PolyR>> s5q_relations() {
  std::vector<std::pair<std::string, PolyR>> out;
  const RatV one_minus_q2 = RatV(1) - qpow(2);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      out.emplace_back("z" + std::to_string(i) + " z" + std::to_string(j) + " = q z" + std::to_string(j) + " z" + std::to_string(i),
                       z_gen(i) * z_gen(j) - z_gen(j) * z_gen(i) * qpow(1));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j)
        out.emplace_back("z" + std::to_string(i) + "* z" + std::to_string(j) + " = q z" + std::to_string(j) + " z" + std::to_string(i) + "*",
                         zs_gen(i) * z_gen(j) - z_gen(j) * zs_gen(i) * qpow(1));
  out.emplace_back("[z1*, z1] = 0", zs_gen(1) * z_gen(1) - z_gen(1) * zs_gen(1));
  out.emplace_back("[z2*, z2] = (1-q^2) z1 z1*", zs_gen(2) * z_gen(2) - z_gen(2) * zs_gen(2) - z_gen(1) * zs_gen(1) * one_minus_q2);
  out.emplace_back("[z3*, z3] = (1-q^2)(z1 z1* + z2 z2*)",
                   zs_gen(3) * z_gen(3) - z_gen(3) * zs_gen(3) - (z_gen(1) * zs_gen(1) + z_gen(2) * zs_gen(2)) * one_minus_q2);
  out.emplace_back("z1 z1* + z2 z2* + z3 z3* = 1",
                   z_gen(1) * zs_gen(1) + z_gen(2) * zs_gen(2) + z_gen(3) * zs_gen(3) - PolyR(RatV(1)));
  return out;
}

namespace {

Presentation make_suq3() {
  for (const auto& c : determinant_commutators())
    if (!c.is_zero()) throw std::logic_error("quantum determinant is not central in the FRT algebra");
  Presentation p{build_suq3_system(true), {}, {}};
  p.completion = complete(p.sys, 6);
  for (Letter l = 0; l < 9; ++l) p.star.push_back(p.sys.normal_form(minor_star(row_of(l), col_of(l))));
  return p;
}

Presentation make_s5q() {
  Presentation p{build_s5q_system(), {}, {}};
  p.completion = complete(p.sys, 6);
  for (int j = 1; j <= 3; ++j) p.star.push_back(zs_gen(j));
  for (int j = 1; j <= 3; ++j) p.star.push_back(z_gen(j));
  return p;
}

}  // namespace

const Presentation& suq3() {
  static const Presentation p = make_suq3();
  return p;
}

const Presentation& s5q() {
  static const Presentation p = make_s5q();
  return p;
}

const Presentation& presentation(const std::string& name) {
  if (name == "suq3") return suq3();
  if (name == "s5q") return s5q();
  throw std::invalid_argument("unknown presentation '" + name + "' (expected suq3 or s5q)");
}

PolyR star_u(int i, int j) { return suq3().sys.normal_form(minor_star(i, j)); }

// ---- embedding -------------------------------------------------------------

namespace {

struct EmbedCache {
  std::unordered_map<Word, PolyR> words;
};

EmbedCache& embed_cache() {
  static EmbedCache c;
  return c;
}

const PolyR& embed_word(const Word& w) {
  auto& cache = embed_cache().words;
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  const Presentation& su = suq3();
  PolyR r;
  if (w.empty()) {
    r = PolyR(RatV(1));
  } else {
    const Letter x = w.back();
    PolyR img = x < 3 ? u_gen(3, x + 1) : su.star[u_letter(3, x - 2)];
    r = su.sys.normal_form(embed_word(w.substr(0, w.size() - 1)) * img);
  }
  return cache.insert_or_assign(w, std::move(r)).first->second;
}

}  // namespace

PolyR embed_s5(const PolyR& x) {
  PolyR out;
  for (const auto& [w, c] : x.terms())
    for (const auto& [u, d] : embed_word(w).terms()) out.add_term(u, c * d);
  return out;
}

PolyX embed_s5(const PolyX& x) {
  PolyX out;
  for (const auto& [w, c] : x.terms())
    for (const auto& [u, d] : embed_word(w).terms()) out.add_term(u, c * d);
  return out;
}

// ---- actions ---------------------------------------------------------------

namespace {

bool is_k(UqGen g) { return g == UqGen::K1 || g == UqGen::K2 || g == UqGen::K1i || g == UqGen::K2i; }
int gen_index(UqGen g) {  // 1 or 2
  return (g == UqGen::E1 || g == UqGen::F1 || g == UqGen::K1 || g == UqGen::K1i) ? 1 : 2;
}

// v-exponent of K_i on u^j_k (right: depends on the row j, left: on the column k).
int suq3_k_exponent(Side side, int i, Letter l) {
  const int idx = side == Side::Right ? row_of(l) : col_of(l);
  return 2 * ((idx == i + 1 ? 1 : 0) - (idx == i ? 1 : 0));
}

// Image of a letter under E_i / F_i, or -1 if zero.
int suq3_letter_image(Side side, UqGen g, Letter l) {
  const int i = gen_index(g);
  const bool e = g == UqGen::E1 || g == UqGen::E2;
  const int r = row_of(l), c = col_of(l);
  if (side == Side::Right) {
    if (e) return r == i + 1 ? u_letter(i, c) : -1;  // u^j_k <| E_i = delta_{i+1,j} u^i_k
    return r == i ? u_letter(i + 1, c) : -1;         // u^j_k <| F_i = delta_{i,j} u^{i+1}_k
  }
  if (e) return c == i ? u_letter(r, i + 1) : -1;  // E_i |> u^j_k = delta_{i,k} u^j_{i+1}
  return c == i + 1 ? u_letter(r, i) : -1;         // F_i |> u^j_k = delta_{i+1,k} u^j_i
}

int word_k_exponent(Side side, int i, const Word& w) {
  int s = 0;
  for (Letter l : w) s += suq3_k_exponent(side, i, l);
  return s;
}

struct ActionCache {
  // [side][generator] -> word -> image
  std::array<std::array<std::unordered_map<Word, PolyR>, 8>, 2> table;
};

ActionCache& action_cache() {
  static ActionCache c;
  return c;
}

const PolyR& act_word(Side side, UqGen g, const Word& w) {
  auto& cache = action_cache().table[side == Side::Left ? 0 : 1][static_cast<int>(g)];
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  const RewriteSystem& sys = suq3().sys;
  const int i = gen_index(g);
  PolyR r;
  if (is_k(g)) {
    int e = word_k_exponent(side, i, w);
    if (g == UqGen::K1i || g == UqGen::K2i) e = -e;
    r = PolyR::word(w, RatV::vpow(e));
  } else if (!w.empty()) {
    const Word p = w.substr(0, w.size() - 1);
    const Letter x = w.back();
    // (p x) . g = (p . g)(x . K) + (p . K^-1)(x . g)
    const PolyR& head = act_word(side, g, p);
    if (!head.is_zero())
      r += sys.normal_form(head * PolyR::letter(x)) * RatV::vpow(suq3_k_exponent(side, i, x));
    int img = suq3_letter_image(side, g, x);
    if (img >= 0) r += sys.normal_form(PolyR::word(p + static_cast<Letter>(img))) * RatV::vpow(-word_k_exponent(side, i, p));
  }
  return cache.insert_or_assign(w, std::move(r)).first->second;
}

template <class C>
Poly<C> act_gen_poly(Side side, UqGen g, const Poly<C>& a) {
  Poly<C> out;
  const Poly<C> na = suq3().sys.normal_form(a);
  for (const auto& [w, c] : na.terms())
    for (const auto& [u, d] : act_word(side, g, w).terms()) out.add_term(u, c * d);
  return out;
}

template <class C, class ActGen>
Poly<C> act_word_sequence(Side side, const UqElement& h, const Poly<C>& a, ActGen act) {
  Poly<C> total;
  for (const auto& [w, c] : h.terms()) {
    Poly<C> cur = a;
    if (side == Side::Right) {
      for (char8_t x : w) cur = act(static_cast<UqGen>(x), cur);
    } else {
      for (auto it = w.rbegin(); it != w.rend(); ++it) cur = act(static_cast<UqGen>(*it), cur);
    }
    for (const auto& [u, d] : cur.terms()) total.add_term(u, d * c);
  }
  return total;
}

}  // namespace

PolyR act_suq3(Side side, UqGen g, const PolyR& a) { return act_gen_poly(side, g, a); }

PolyX act_suq3(Side side, const UqElement& h, const PolyX& a) {
  return act_word_sequence(side, h, a, [&](UqGen g, const PolyX& x) { return act_gen_poly(side, g, x); });
}

PolyX act_right(const PolyX& a, const UqElement& h) { return act_suq3(Side::Right, h, a); }
PolyX act_left(const UqElement& h, const PolyX& a) { return act_suq3(Side::Left, h, a); }

// ---- S^5_q-level left action -----------------------------------------------

namespace {

// Letter weights on S^5_q: z_j carries the weight of u^3_j, z_j^* its negative.
int s5_k_exponent(Side side, int i, Letter l) {
  if (l < 3) return suq3_k_exponent(side, i, u_letter(3, l + 1));
  return -suq3_k_exponent(side, i, u_letter(3, l - 2));
}

// Left images of the S^5_q letters, found by pulling back the A(SU_q(3))
// action through the embedding.
const PolyR& s5_letter_left_image(UqGen g, Letter l) {
  static std::map<std::pair<int, int>, PolyR> table;
  auto key = std::make_pair(static_cast<int>(g), static_cast<int>(l));
  if (auto it = table.find(key); it != table.end()) return it->second;
  PolyR img = act_suq3(Side::Left, g, embed_s5(PolyR::letter(l)));
  PolyR pre;
  const RewriteSystem& su = suq3().sys;
  while (!img.is_zero()) {
    Word lead = su.leading_word(img);
    bool found = false;
    for (Letter y = 0; y < 6 && !found; ++y) {
      PolyR e = embed_s5(PolyR::letter(y));
      if (su.leading_word(e) != lead) continue;
      RatV c = img.coeff(lead) / e.coeff(lead);
      pre.add_term(Word(1, y), c);
      img -= e * c;
      found = true;
    }
    if (!found) throw std::logic_error("left action leaves the span of the S^5_q generators");
  }
  return table.emplace(key, std::move(pre)).first->second;
}

std::array<std::unordered_map<Word, PolyR>, 8>& s5_action_cache() {
  static std::array<std::unordered_map<Word, PolyR>, 8> cache;
  return cache;
}

const PolyR& act_word_s5(UqGen g, const Word& w) {
  auto& c = s5_action_cache()[static_cast<int>(g)];
  if (auto it = c.find(w); it != c.end()) return it->second;
  const RewriteSystem& sys = s5q().sys;
  const int i = gen_index(g);
  auto wexp = [&](const Word& u) {
    int s = 0;
    for (Letter l : u) s += s5_k_exponent(Side::Left, i, l);
    return s;
  };
  PolyR r;
  if (is_k(g)) {
    int e = wexp(w);
    if (g == UqGen::K1i || g == UqGen::K2i) e = -e;
    r = PolyR::word(w, RatV::vpow(e));
  } else if (!w.empty()) {
    const Word p = w.substr(0, w.size() - 1);
    const Letter x = w.back();
    const PolyR& head = act_word_s5(g, p);
    if (!head.is_zero()) r += sys.normal_form(head * PolyR::letter(x)) * RatV::vpow(s5_k_exponent(Side::Left, i, x));
    const PolyR& img = s5_letter_left_image(g, x);
    if (!img.is_zero()) r += sys.normal_form(PolyR::word(p) * img) * RatV::vpow(-wexp(p));
  }
  return c.insert_or_assign(w, std::move(r)).first->second;
}

template <class C>
Poly<C> act_left_s5_poly(UqGen g, const Poly<C>& a) {
  Poly<C> out;
  const Poly<C> na = s5q().sys.normal_form(a);
  for (const auto& [w, c] : na.terms())
    for (const auto& [u, d] : act_word_s5(g, w).terms()) out.add_term(u, c * d);
  return out;
}

}  // namespace

PolyR act_left_s5(UqGen g, const PolyR& a) { return act_left_s5_poly(g, a); }

PolyX act_left_s5(const UqElement& h, const PolyX& a) {
  return act_word_sequence(Side::Left, h, a, [](UqGen g, const PolyX& x) { return act_left_s5_poly(g, x); });
}

std::pair<int, int> k_weight(Side side, const Presentation& p, const Word& w) {
  const bool s5 = p.name() == "s5q";
  int k1 = 0, k2 = 0;
  for (Letter l : w) {
    k1 += s5 ? s5_k_exponent(side, 1, l) : suq3_k_exponent(side, 1, l);
    k2 += s5 ? s5_k_exponent(side, 2, l) : suq3_k_exponent(side, 2, l);
  }
  return {k1, k2};
}

int line_degree(const Word& w) {
  int d = 0;
  for (Letter l : w) d += l < 3 ? 1 : -1;
  return d;
}

bool is_in_S5(const PolyX& a) {
  const PolyX r = suq3().sys.normal_form(a);
  if (!act_suq3(Side::Right, UqElement::gen(UqGen::E1), r).is_zero()) return false;
  if (!act_suq3(Side::Right, UqElement::gen(UqGen::F1), r).is_zero()) return false;
  for (const auto& [w, c] : r.terms())
    if (k_weight(Side::Right, suq3(), w).first != 0) return false;
  return true;
}

bool is_in_LN(const PolyX& a, int N) {
  if (!is_in_S5(a)) return false;
  const PolyX na = suq3().sys.normal_form(a);
  for (const auto& [w, c] : na.terms()) {
    auto [k1, k2] = k_weight(Side::Right, suq3(), w);
    if (k1 + 2 * k2 != 4 * N) return false;
  }
  return true;
}

bool is_in_CP2(const PolyX& a) { return is_in_LN(a, 0); }

// ---- Peter-Weyl elements ---------------------------------------------------

UqElement x_operator(int n1, int n2, int j1, int j2, int m2) {
  WeightLabel l{n1, n2, j1, j2, m2};
  if (!l.valid()) throw std::invalid_argument("invalid label for X: " + l.str());
  using F = SqrtFactor;
  const int a = (j1 + j2 - m2) / 2;  // (j1+j2)/2 - m
  const int b = (j1 + j2 + m2) / 2;  // (j1+j2)/2 + m
  Radical norm = Radical::sqrt_factored({F::qint(j1 + j2 + 1), F::qfact(b), F::qfact(n2 - j2), F::qfact(j1),
                                         F::qfact(n1 + j2 + 1), F::qfact(n2 + j1 + 1), F::qfact(a, -1),
                                         F::qfact(n1 - j1, -1), F::qfact(j2, -1), F::qfact(n1, -1), F::qfact(n2, -1),
                                         F::qfact(n1 + n2 + 1, -1)});
  const UqElement f1 = UqElement::gen(UqGen::F1), f2 = UqElement::gen(UqGen::F2);
  const UqElement comm = q_commutator(f2, f1);
  UqElement sum;
  for (int k = 0; k <= n1 - j1; ++k) {
    RatV c = qpow(-k * (j1 + j2 + k + 1)) / q_factorial(j1 + j2 + k + 1) * q_binomial(n1 - j1, k);
    sum += f1.pow(a + k) * comm.pow(n1 - j1 - k) * f2.pow(j2 + k) * Radical(c);
  }
  return sum * norm;
}

PolyX pw_element(const WeightLabel& lower, const WeightLabel& upper) {
  if (!lower.valid() || !upper.valid()) throw std::invalid_argument("invalid Peter-Weyl label");
  if (lower.n1 != upper.n1 || lower.n2 != upper.n2) throw std::invalid_argument("labels from different representations");
  static std::map<std::pair<WeightLabel, WeightLabel>, PolyX> cache;
  auto key = std::make_pair(lower, upper);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const Presentation& su = suq3();
  PolyR seed(RatV(1));
  for (int i = 0; i < lower.n1; ++i) seed = su.mul(seed, su.star[u_letter(1, 1)]);
  for (int i = 0; i < lower.n2; ++i) seed = su.mul(seed, u_gen(3, 3));
  UqElement xl = x_operator(lower.n1, lower.n2, lower.j1, lower.j2, lower.m2);
  UqElement xu = star_uq(x_operator(upper.n1, upper.n2, upper.j1, upper.j2, upper.m2));
  PolyX t = act_right(act_left(xl, to_radical(seed)), xu);
  return cache.emplace(key, std::move(t)).first->second;
}

EquivarianceResult q_equivariance_check(const WeightLabel& lower, const WeightLabel& upper, const UqElement& h) {
  PolyX lhs = act_right(pw_element(lower, upper), h);
  RepMatrix m = RepMatrix::of(theta(h), upper.n1, upper.n2);
  const std::size_t col = m.index(upper);
  PolyX rhs;
  for (const auto& [rc, x] : m.entries()) {
    if (rc.second != col) continue;
    PolyX t = pw_element(lower, m.basis()[rc.first]);
    for (const auto& [w, c] : t.terms()) rhs.add_term(w, c * x);
  }
  EquivarianceResult r;
  PolyX diff = lhs - rhs;
  r.pass = diff.is_zero();
  if (!r.pass) r.detail = "difference " + suq3().str(diff);
  return r;
}

// ---- operator matrices -----------------------------------------------------

OperatorMatrix operator_matrix(const std::vector<PolyR>& images, const Presentation& target, const std::vector<Word>* codomain) {
  OperatorMatrix om;
  std::map<Word, std::size_t> row_of_word;
  if (codomain) {
    om.rows = *codomain;
  } else {
    std::vector<Word> words;
    for (const auto& img : images)
      for (const auto& [w, c] : img.terms()) words.push_back(w);
    const auto& ord = target.sys.order();
    std::sort(words.begin(), words.end(), [&](const Word& a, const Word& b) { return ord.less(a, b); });
    words.erase(std::unique(words.begin(), words.end()), words.end());
    om.rows = std::move(words);
  }
  for (std::size_t i = 0; i < om.rows.size(); ++i) row_of_word.emplace(om.rows[i], i);
  om.matrix = SparseMatrix(om.rows.size(), images.size());
  for (std::size_t c = 0; c < images.size(); ++c)
    for (const auto& [w, x] : images[c].terms()) {
      auto it = row_of_word.find(w);
      if (it == row_of_word.end())
        throw std::domain_error("image escapes the ambient space: " + target.alphabet().word_string(w));
      om.matrix.add(it->second, c, x);
    }
  return om;
}

OperatorMatrix right_action_matrix(const UqElement& h, const std::vector<Word>& s5_domain, const std::vector<Word>* codomain) {
  std::vector<PolyR> images;
  images.reserve(s5_domain.size());
  for (const auto& w : s5_domain) {
    PolyX img = act_right(to_radical(embed_s5(PolyR::word(w))), h);
    images.push_back(img.map_coeffs<RatV>([](const Radical& c) { return c.as_rational(); }));
  }
  return operator_matrix(images, suq3(), codomain);
}

void clear_algebra_caches() {
  embed_cache().words.clear();
  for (auto& side : action_cache().table)
    for (auto& m : side) m.clear();
  for (auto& m : s5_action_cache()) m.clear();
  suq3().sys.clear_cache();
  s5q().sys.clear_cache();
}

}  // namespace cp2q
