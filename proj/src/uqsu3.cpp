#include "cp2q/uqsu3.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cp2q {

namespace {

bool is_inverse_pair(UqGen a, UqGen b) {
  return (a == UqGen::K1 && b == UqGen::K1i) || (a == UqGen::K1i && b == UqGen::K1) ||
         (a == UqGen::K2 && b == UqGen::K2i) || (a == UqGen::K2i && b == UqGen::K2);
}

UqGen swap_ef(UqGen g) {
  switch (g) {
    case UqGen::E1: return UqGen::F1;
    case UqGen::E2: return UqGen::F2;
    case UqGen::F1: return UqGen::E1;
    case UqGen::F2: return UqGen::E2;
    default: return g;
  }
}

UqElement reverse_swap(const UqElement& h) {
  UqElement out;
  for (const auto& [w, c] : h.terms()) {
    UqWord r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r += static_cast<char8_t>(swap_ef(static_cast<UqGen>(*it)));
    out += UqElement::word(r, c);
  }
  return out;
}

}  // namespace

// ---- UqElement -------------------------------------------------------------

UqWord cancel_k(const UqWord& w) {
  UqWord out;
  for (char8_t x : w) {
    if (!out.empty() && is_inverse_pair(static_cast<UqGen>(out.back()), static_cast<UqGen>(x)))
      out.pop_back();
    else
      out += x;
  }
  return out;
}

UqElement::UqElement(const Radical& c) {
  if (!c.is_zero()) terms_.emplace(UqWord(), c);
}

UqElement UqElement::gen(UqGen g) { return word(UqWord(1, static_cast<char8_t>(g))); }

UqElement UqElement::word(UqWord w, const Radical& c) {
  UqElement h;
  h.add_term(cancel_k(w), c);
  return h;
}

void UqElement::add_term(UqWord w, const Radical& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(std::move(w), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UqElement& UqElement::operator+=(const UqElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

UqElement& UqElement::operator-=(const UqElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

UqElement& UqElement::operator*=(const Radical& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

UqElement operator*(const UqElement& a, const UqElement& b) {
  UqElement r;
  for (const auto& [w1, c1] : a.terms_)
    for (const auto& [w2, c2] : b.terms_) r.add_term(cancel_k(w1 + w2), c1 * c2);
  return r;
}

UqElement UqElement::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power of a U_q element");
  UqElement r(Radical(1));
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

std::string gen_name(UqGen g) {
  switch (g) {
    case UqGen::E1: return "E1";
    case UqGen::E2: return "E2";
    case UqGen::F1: return "F1";
    case UqGen::F2: return "F2";
    case UqGen::K1: return "K1";
    case UqGen::K2: return "K2";
    case UqGen::K1i: return "K1i";
    case UqGen::K2i: return "K2i";
  }
  return "?";
}

UqGen parse_gen(const std::string& name) {
  for (UqGen g : {UqGen::E1, UqGen::E2, UqGen::F1, UqGen::F2, UqGen::K1, UqGen::K2, UqGen::K1i, UqGen::K2i})
    if (gen_name(g) == name) return g;
  throw std::invalid_argument("unknown U_q generator '" + name + "'");
}

UqElement parse_uq_word(const std::string& text) {
  UqWord w;
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1' && !any) {
      ++i;
      any = true;
      continue;
    }
    if ((c != 'E' && c != 'F' && c != 'K') || i + 1 >= text.size())
      throw std::invalid_argument("bad U_q word '" + text + "'");
    std::string tok = text.substr(i, 2);
    i += 2;
    if (c == 'K' && i < text.size() && text[i] == 'i') {
      tok += 'i';
      ++i;
    }
    w += static_cast<char8_t>(parse_gen(tok));
    any = true;
  }
  if (!any) throw std::invalid_argument("empty U_q word");
  return UqElement::word(w);
}

std::string to_string(const UqElement& h) {
  if (h.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : h.terms()) {
    std::string ws;
    for (char8_t x : w) ws += (ws.empty() ? "" : " ") + gen_name(static_cast<UqGen>(x));
    std::string t;
    std::string cs = to_factor_string(c);
    if (ws.empty())
      t = to_string(c);
    else if (cs == "1")
      t = ws;
    else if (cs == "-1")
      t = "-" + ws;
    else
      t = cs + " " + ws;
    if (first)
      out = t;
    else
      out += t.front() == '-' ? " - " + t.substr(1) : " + " + t;
    first = false;
  }
  return out;
}

UqElement theta(const UqElement& h) { return reverse_swap(h); }

UqElement star_uq(const UqElement& h) { return reverse_swap(h); }

UqElement q_commutator(const UqElement& a, const UqElement& b) {
  return a * b - (b * a) * Radical(qpow(-1));
}

// ---- labels ----------------------------------------------------------------

bool WeightLabel::valid() const {
  if (n1 < 0 || n2 < 0 || j1 < 0 || j1 > n1 || j2 < 0 || j2 > n2) return false;
  const int t = j1 + j2;  // (j1+j2)/2 - |m| in N  <=>  t - |2m| even and >= 0
  return t - std::abs(m2) >= 0 && (t - std::abs(m2)) % 2 == 0;
}

std::string WeightLabel::str() const {
  std::ostringstream os;
  os << "|" << n1 << "," << n2 << "," << j1 << "," << j2 << ",";
  if (m2 % 2 == 0)
    os << m2 / 2;
  else
    os << m2 << "/2";
  os << ">";
  return os.str();
}

std::vector<WeightLabel> rep_basis(int n1, int n2) {
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("rep_basis: negative highest weight");
  std::vector<WeightLabel> out;
  for (int j1 = 0; j1 <= n1; ++j1)
    for (int j2 = 0; j2 <= n2; ++j2)
      for (int m2 = -(j1 + j2); m2 <= j1 + j2; m2 += 2) out.push_back({n1, n2, j1, j2, m2});
  return out;
}

int rep_dimension(int n1, int n2) { return (n1 + 1) * (n2 + 1) * (n1 + n2 + 2) / 2; }

std::vector<std::pair<WeightLabel, Radical>> act_generator(UqGen g, const WeightLabel& l) {
  if (!l.valid()) throw std::invalid_argument("invalid weight label " + l.str());
  using F = SqrtFactor;
  std::vector<std::pair<WeightLabel, Radical>> out;
  const int a = (l.j1 + l.j2 - l.m2) / 2;  // (j1+j2)/2 - m
  const int b = (l.j1 + l.j2 + l.m2) / 2;  // (j1+j2)/2 + m
  auto push = [&](WeightLabel t, Radical c) {
    if (!c.is_zero() && t.valid()) out.emplace_back(t, std::move(c));
  };
  switch (g) {
    case UqGen::K1:
    case UqGen::K1i: {
      int e = 2 * l.m2;  // q^m = v^(4m)
      push(l, Radical(RatV::vpow(g == UqGen::K1 ? e : -e)));
      break;
    }
    case UqGen::K2:
    case UqGen::K2i: {
      // q^(3/4 (j1-j2) + 1/2 (n2-n1-m))
      int e = 3 * (l.j1 - l.j2) + 2 * (l.n2 - l.n1) - l.m2;
      push(l, Radical(RatV::vpow(g == UqGen::K2 ? e : -e)));
      break;
    }
    case UqGen::E1:
      push({l.n1, l.n2, l.j1, l.j2, l.m2 + 2}, Radical::sqrt_factored({F::qint(a), F::qint(b + 1)}));
      break;
    case UqGen::E2: {
      if (l.j1 < l.n1)
        push({l.n1, l.n2, l.j1 + 1, l.j2, l.m2 - 1},
             Radical::sqrt_factored({F::qint(a + 1), F::qint(l.n1 - l.j1), F::qint(l.n2 + l.j1 + 2), F::qint(l.j1 + 1),
                                     F::qint(l.j1 + l.j2 + 1, -1), F::qint(l.j1 + l.j2 + 2, -1)}));
      if (l.j2 > 0) {
        // j1 + j2 > 0 here, so the general branch of B applies.
        push({l.n1, l.n2, l.j1, l.j2 - 1, l.m2 - 1},
             Radical::sqrt_factored({F::qint(b), F::qint(l.n1 + l.j2 + 1), F::qint(l.n2 - l.j2 + 1), F::qint(l.j2),
                                     F::qint(l.j1 + l.j2, -1), F::qint(l.j1 + l.j2 + 1, -1)}));
      }
      break;
    }
    case UqGen::F1:
    case UqGen::F2: {
      // Transpose of E_i: collect every source t whose E_i-image contains l.
      const UqGen e = g == UqGen::F1 ? UqGen::E1 : UqGen::E2;
      std::vector<WeightLabel> sources;
      if (g == UqGen::F1)
        sources.push_back({l.n1, l.n2, l.j1, l.j2, l.m2 - 2});
      else {
        sources.push_back({l.n1, l.n2, l.j1 - 1, l.j2, l.m2 + 1});
        sources.push_back({l.n1, l.n2, l.j1, l.j2 + 1, l.m2 + 1});
      }
      for (const auto& s : sources) {
        if (!s.valid()) continue;
        for (auto& [t, c] : act_generator(e, s))
          if (t == l) push(s, c);
      }
      break;
    }
  }
  return out;
}

// ---- RepMatrix -------------------------------------------------------------

RepMatrix::RepMatrix(int n1, int n2) : n1_(n1), n2_(n2), basis_(rep_basis(n1, n2)) {}

std::size_t RepMatrix::index(const WeightLabel& l) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), l);
  if (it == basis_.end() || *it != l) throw std::invalid_argument("label not in basis: " + l.str());
  return static_cast<std::size_t>(it - basis_.begin());
}

Radical RepMatrix::get(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Radical() : it->second;
}

void RepMatrix::add(std::size_t r, std::size_t c, const Radical& x) {
  if (x.is_zero()) return;
  auto [it, fresh] = entries_.try_emplace({r, c}, x);
  if (!fresh) {
    it->second += x;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

RepMatrix RepMatrix::of(UqGen g, int n1, int n2) {
  RepMatrix m(n1, n2);
  for (std::size_t s = 0; s < m.basis_.size(); ++s)
    for (const auto& [t, c] : act_generator(g, m.basis_[s])) m.add(m.index(t), s, c);
  return m;
}

RepMatrix RepMatrix::identity(int n1, int n2) {
  RepMatrix m(n1, n2);
  for (std::size_t i = 0; i < m.dim(); ++i) m.add(i, i, Radical(1));
  return m;
}

RepMatrix RepMatrix::of(const UqElement& h, int n1, int n2) {
  RepMatrix total(n1, n2);
  std::map<UqGen, RepMatrix> gens;
  for (const auto& [w, c] : h.terms()) {
    RepMatrix m = identity(n1, n2);
    for (char8_t x : w) {
      UqGen g = static_cast<UqGen>(x);
      auto it = gens.find(g);
      if (it == gens.end()) it = gens.emplace(g, of(g, n1, n2)).first;
      m = m * it->second;
    }
    total += m * c;
  }
  return total;
}

RepMatrix RepMatrix::transpose() const {
  RepMatrix t(n1_, n2_);
  for (const auto& [rc, x] : entries_) t.entries_.emplace(std::make_pair(rc.second, rc.first), x);
  return t;
}

RepMatrix& RepMatrix::operator+=(const RepMatrix& o) {
  for (const auto& [rc, x] : o.entries_) add(rc.first, rc.second, x);
  return *this;
}

RepMatrix& RepMatrix::operator*=(const Radical& s) {
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [rc, x] : entries_) x *= s;
  return *this;
}

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
  if (a.n1_ != b.n1_ || a.n2_ != b.n2_) throw std::invalid_argument("matrix product across representations");
  // Group b by row for a sparse product.
  std::map<std::size_t, std::vector<std::pair<std::size_t, const Radical*>>> brows;
  for (const auto& [rc, x] : b.entries_) brows[rc.first].emplace_back(rc.second, &x);
  RepMatrix r(a.n1_, a.n2_);
  for (const auto& [rc, x] : a.entries_) {
    auto it = brows.find(rc.second);
    if (it == brows.end()) continue;
    for (const auto& [col, y] : it->second) r.add(rc.first, col, x * *y);
  }
  return r;
}

// ---- relations -------------------------------------------------------------

std::vector<RelationCheck> verify_relations(int n1, int n2) {
  const RepMatrix E[2] = {RepMatrix::of(UqGen::E1, n1, n2), RepMatrix::of(UqGen::E2, n1, n2)};
  const RepMatrix F[2] = {RepMatrix::of(UqGen::F1, n1, n2), RepMatrix::of(UqGen::F2, n1, n2)};
  const RepMatrix K[2] = {RepMatrix::of(UqGen::K1, n1, n2), RepMatrix::of(UqGen::K2, n1, n2)};
  const RepMatrix Ki[2] = {RepMatrix::of(UqGen::K1i, n1, n2), RepMatrix::of(UqGen::K2i, n1, n2)};
  const RepMatrix I = RepMatrix::identity(n1, n2);
  const Radical q(qpow(1)), qi(qpow(-1)), qh(RatV::vpow(2)), qhi(RatV::vpow(-2));
  const Radical two(q_int(2));
  const Radical inv_qmq(RatV(1) / (qpow(1) - qpow(-1)));

  std::vector<RelationCheck> out;
  auto check = [&](const std::string& name, const RepMatrix& diff) {
    RelationCheck c{name, diff.is_zero(), ""};
    if (!c.pass) {
      const auto& [rc, x] = *diff.entries().begin();
      c.witness = "entry " + diff.basis()[rc.first].str() + " <- " + diff.basis()[rc.second].str() + ": " + to_string(x);
    }
    out.push_back(std::move(c));
  };
  const std::string idx[2] = {"1", "2"};
  check("K1 K2 = K2 K1", K[0] * K[1] - K[1] * K[0]);
  for (int i = 0; i < 2; ++i) {
    check("K" + idx[i] + " K" + idx[i] + "^-1 = 1", K[i] * Ki[i] - I);
    check("K" + idx[i] + " E" + idx[i] + " = q E" + idx[i] + " K" + idx[i], K[i] * E[i] - E[i] * K[i] * q);
    check("K" + idx[i] + " F" + idx[i] + " = q^-1 F" + idx[i] + " K" + idx[i], K[i] * F[i] - F[i] * K[i] * qi);
    check("[E" + idx[i] + ",F" + idx[i] + "] = (K^2 - K^-2)/(q - q^-1)",
          E[i] * F[i] - F[i] * E[i] - (K[i] * K[i] - Ki[i] * Ki[i]) * inv_qmq);
    const int j = 1 - i;
    check("K" + idx[i] + " E" + idx[j] + " = q^(-1/2) E" + idx[j] + " K" + idx[i], K[i] * E[j] - E[j] * K[i] * qhi);
    check("K" + idx[i] + " F" + idx[j] + " = q^(1/2) F" + idx[j] + " K" + idx[i], K[i] * F[j] - F[j] * K[i] * qh);
    check("[E" + idx[i] + ",F" + idx[j] + "] = 0", E[i] * F[j] - F[j] * E[i]);
    check("Serre E" + idx[i] + "^2 E" + idx[j],
          E[i] * E[i] * E[j] + E[j] * E[i] * E[i] - E[i] * E[j] * E[i] * two);
    check("Serre F" + idx[i] + "^2 F" + idx[j],
          F[i] * F[i] * F[j] + F[j] * F[i] * F[i] - F[i] * F[j] * F[i] * two);
    check("F" + idx[i] + " = transpose(E" + idx[i] + ")", F[i] - E[i].transpose());
  }
  return out;
}

}  // namespace cp2q
