#include "cp2q/haar.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>

#include "cp2q/exactla.hpp"

namespace cp2q {

std::pair<int, int> bidegree(const Word& w) {
  int a = 0, b = 0;
  for (Letter l : w) (l < 3 ? a : b) += 1;
  return {a, b};
}

int sigma_exponent(const Word& w) {
  auto [l1, l2] = k_weight(Side::Left, s5q(), w);
  auto [r1, r2] = k_weight(Side::Right, s5q(), w);
  return -4 * (l1 + l2 + r1 + r2);
}

PolyR sigma(const PolyR& x) {
  const PolyR nx = s5q().reduce(x);
  PolyR r;
  for (const auto& [w, c] : nx.terms()) r.add_term(w, c * RatV::vpow(sigma_exponent(w)));
  return r;
}

// ---- Haar state --------------------------------------------------------------

namespace {

bool in_slice(const Word& w, int D) {
  auto [a, b] = bidegree(w);
  return a <= D && b <= D;
}

}  // namespace

HaarTable::HaarTable(int D) : D_(D) {
  const auto& sys = s5q().sys;
  const std::vector<Word> words = sys.normal_words(static_cast<std::size_t>(2 * D), [D](const Word& w) { return in_slice(w, D); });
  std::map<Word, std::size_t> col;
  for (std::size_t i = 0; i < words.size(); ++i) col[words[i]] = i;

  SparseMatrix m(0, words.size());
  auto add_row = [&](const PolyR& image) {
    if (image.is_zero()) return;
    SparseRow row;
    for (const auto& [w, c] : image.terms()) {
      auto it = col.find(w);
      if (it == col.end()) throw std::logic_error("left action left the Haar slice at " + s5q().sys.alphabet().word_string(w));
      row[it->second] = c;
    }
    m.append_row(std::move(row));
  };
  for (const auto& w : words) {
    auto [l1, l2] = k_weight(Side::Left, s5q(), w);
    if (l1 != 0 || l2 != 0 || line_degree(w) != 0) add_row(PolyR::word(w));
    for (UqGen g : {UqGen::E1, UqGen::E2, UqGen::F1, UqGen::F2}) add_row(act_left_s5(g, PolyR::word(w)));
  }
  constraints_ = m.rows();

  const Subspace ker = kernel(m);
  if (ker.dim() != 1)
    throw std::runtime_error("Haar functional not unique on slice D=" + std::to_string(D) + ": kernel dimension " +
                             std::to_string(ker.dim()));
  const DenseVec& v = ker.basis().front();
  const RatV unit = v[col.at(Word{})];
  if (unit.is_zero()) throw std::runtime_error("invariant functional vanishes on 1");
  const RatV inv = unit.inverse();
  for (std::size_t i = 0; i < words.size(); ++i)
    if (!v[i].is_zero()) values_[words[i]] = v[i] * inv;
}

RatV HaarTable::operator()(const PolyR& x) const {
  const PolyR nx = s5q().reduce(x);
  RatV s;
  for (const auto& [w, c] : nx.terms()) {
    if (!in_slice(w, D_)) throw std::domain_error("outside the Haar slice: " + s5q().sys.alphabet().word_string(w));
    auto it = values_.find(w);
    if (it != values_.end()) s += c * it->second;
  }
  return s;
}

const HaarTable& haar_table(int D) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<HaarTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[D];
  if (!slot) slot = std::make_unique<HaarTable>(D);
  return *slot;
}

RatV haar_state(const PolyR& x, int D) { return haar_table(D)(x); }

bool twisted_trace_check(const PolyR& x, const PolyR& y, int D) {
  const Presentation& s = s5q();
  return haar_state(s.mul(x, y), D) == haar_state(s.mul(sigma(y), x), D);
}

double positivity_probe(const PolyR& a, const Rational& q0) {
  const Presentation& s = s5q();
  const PolyR aa = s.mul(a, s.star_of(a));
  int D = 0;
  for (const auto& [w, c] : aa.terms()) {
    auto [x, y] = bidegree(w);
    D = std::max({D, x, y});
  }
  return eval_numeric(haar_state(aa, D), q0);
}

// ---- cochains ----------------------------------------------------------------

Cochain::Cochain(std::size_t arity, int bound, Fn on_words)
    : arity_(arity), bound_(bound), fn_(std::make_shared<const Fn>(std::move(on_words))) {
  if (arity == 0) throw std::invalid_argument("cochain arity must be positive");
}

RatV Cochain::operator()(const std::vector<PolyR>& args) const {
  if (args.size() != arity_) throw std::invalid_argument("cochain arity mismatch");
  std::vector<std::vector<std::pair<Word, RatV>>> terms(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    const PolyR na = s5q().reduce(args[i]);
    for (const auto& [w, c] : na.terms()) {
      if (!in_slice(w, bound_)) throw std::domain_error("cochain argument escapes the truncation: " + s5q().sys.alphabet().word_string(w));
      terms[i].emplace_back(w, c);
    }
    if (terms[i].empty()) return RatV();
  }
  RatV total;
  std::vector<std::size_t> idx(arity_, 0);
  std::vector<Word> ws(arity_);
  while (true) {
    RatV c(1);
    for (std::size_t i = 0; i < arity_; ++i) {
      ws[i] = terms[i][idx[i]].first;
      c *= terms[i][idx[i]].second;
    }
    total += c * (*fn_)(ws);
    std::size_t k = 0;
    while (k < arity_ && ++idx[k] == terms[k].size()) idx[k++] = 0;
    if (k == arity_) break;
  }
  return total;
}

Cochain b_sigma(const Cochain& phi) {
  const std::size_t n1 = phi.arity();  // n + 1
  return Cochain(n1 + 1, phi.bound(), [phi, n1](const std::vector<Word>& a) {
    const Presentation& s = s5q();
    RatV total;
    for (std::size_t i = 0; i < n1; ++i) {
      std::vector<PolyR> args;
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (k == i + 1) continue;
        args.push_back(k == i ? s.mul(PolyR::word(a[i]), PolyR::word(a[i + 1])) : PolyR::word(a[k]));
      }
      RatV v = phi(args);
      total += i % 2 == 0 ? v : -v;
    }
    std::vector<PolyR> args{s.mul(sigma(PolyR::word(a[n1])), PolyR::word(a[0]))};
    for (std::size_t k = 1; k < n1; ++k) args.push_back(PolyR::word(a[k]));
    RatV v = phi(args);
    total += n1 % 2 == 0 ? v : -v;
    return total;
  });
}

Cochain lambda_sigma(const Cochain& phi) {
  const std::size_t n1 = phi.arity();
  return Cochain(n1, phi.bound(), [phi, n1](const std::vector<Word>& a) {
    std::vector<PolyR> args{sigma(PolyR::word(a[n1 - 1]))};
    for (std::size_t k = 0; k + 1 < n1; ++k) args.push_back(PolyR::word(a[k]));
    RatV v = phi(args);
    return (n1 - 1) % 2 == 0 ? v : -v;
  });
}

Cochain random_twisted_cochain(std::size_t arity, int bound, unsigned seed) {
  return Cochain(arity, bound, [seed](const std::vector<Word>& ws) {
    int e = 0;
    for (const auto& w : ws) e += sigma_exponent(w);
    if (e != 0) return RatV();
    // FNV-1a over the seed and the words
    std::uint64_t h = 1469598103934665603ull ^ seed;
    for (const auto& w : ws) {
      for (Letter l : w) h = (h ^ (l + 1u)) * 1099511628211ull;
      h = (h ^ 0xffu) * 1099511628211ull;
    }
    return RatV(static_cast<long>(h % 7) - 3);
  });
}

}  // namespace cp2q
