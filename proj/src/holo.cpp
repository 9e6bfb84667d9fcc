#include "cp2q/holo.hpp"

#include <map>
#include <stdexcept>

namespace cp2q {

namespace {

const UqElement& uq(const char* word) {
  static std::map<std::string, UqElement> cache;
  auto it = cache.find(word);
  if (it == cache.end()) it = cache.emplace(word, parse_uq_word(word)).first;
  return it->second;
}

PolyX ract(const PolyX& a, const char* word) { return act_right(a, uq(word)); }

PolyX mul(const PolyX& a, const PolyX& b) { return suq3().mul(a, b); }

PolyX embed(const PolyR& s5) { return to_radical(embed_s5(s5)); }

PolyR monomial(int j, int k, int l) {
  PolyR p(RatV(1));
  for (int i = 0; i < j; ++i) p = p * z_gen(1);
  for (int i = 0; i < k; ++i) p = p * z_gen(2);
  for (int i = 0; i < l; ++i) p = p * z_gen(3);
  return p;
}

std::string witness_of(const PolyX& p) { return p.is_zero() ? "" : suq3().str(p); }

Check check_zero(std::string name, const PolyX& p) { return {std::move(name), p.is_zero(), witness_of(p)}; }

Check check_zero(std::string name, const std::vector<PolyX>& ps) {
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (!ps[i].is_zero()) return {std::move(name), false, "component " + std::to_string(i) + ": " + suq3().str(ps[i])};
  return {std::move(name), true, ""};
}

void require_line(const PolyX& xi, int N) {
  if (!is_in_LN(xi, N)) throw std::invalid_argument("element is not in L_" + std::to_string(N));
}

}  // namespace

// ---- forms -----------------------------------------------------------------

FormPair& FormPair::operator+=(const FormPair& o) {
  plus += o.plus;
  minus += o.minus;
  return *this;
}

FormPair& FormPair::operator*=(const RatV& s) {
  plus *= s;
  minus *= s;
  return *this;
}

FormPair operator-(FormPair a, const FormPair& b) {
  a.plus -= b.plus;
  a.minus -= b.minus;
  return a;
}

FormPair FormPair::times_right(const PolyX& x) const { return {mul(plus, x), mul(minus, x)}; }
FormPair FormPair::times_left(const PolyX& x) const { return {mul(x, plus), mul(x, minus)}; }

std::string FormPair::str() const {
  auto s = [](const PolyX& p) { return p.is_zero() ? std::string("0") : suq3().str(p); };
  return "(" + s(plus) + ", " + s(minus) + ")";
}

FormPair dbar(const PolyX& a) {
  if (!is_in_CP2(a)) throw std::invalid_argument("dbar: argument is not in A(CP^2_q)");
  return {ract(a, "F2 F1"), ract(a, "F2")};
}

FormPair del(const PolyX& a) {
  if (!is_in_CP2(a)) throw std::invalid_argument("del: argument is not in A(CP^2_q)");
  return {ract(a, "E2"), ract(a, "F2 E1")};
}

bool is_antiholomorphic_form(const FormPair& p) {
  auto weights_ok = [](const PolyX& v, int k1_want) {
    for (const auto& [w, c] : v.terms()) {
      auto [k1, k2] = k_weight(Side::Right, suq3(), w);
      if (k1 != k1_want || k1 + 2 * k2 != 6) return false;
    }
    return true;
  };
  const PolyX plus = suq3().reduce(p.plus), minus = suq3().reduce(p.minus);
  if (!weights_ok(plus, 2) || !weights_ok(minus, -2)) return false;
  return ract(plus, "F1").is_zero() && ract(minus, "F1") == plus && ract(plus, "E1") == minus &&
         ract(minus, "E1").is_zero();
}

// ---- frames ----------------------------------------------------------------

namespace {

Frame build_frame(int N) {
  Frame f;
  f.N = N;
  const int n = N < 0 ? -N : N;
  const Presentation& s5 = s5q();
  for (int j = 0; j <= n; ++j)
    for (int k = 0; j + k <= n; ++k) {
      const int l = n - j - k;
      using F = SqrtFactor;
      Radical c = Radical::sqrt_factored({F::qfact(n), F::qfact(j, -1), F::qfact(k, -1), F::qfact(l, -1),
                                          F::vpower(-4L * (j * k + k * l + l * j))});
      PolyR m = monomial(j, k, l);
      PolyR ms = s5.star_of(m);
      if (N < 0) c *= qpow(2 * j + k);
      f.index.push_back({j, k, l});
      f.coeff.push_back(c);
      PolyX psi = embed(N < 0 ? m : ms), dag = embed(N < 0 ? ms : m);
      f.psi.push_back(psi * c);
      f.psi_dag.push_back(dag * c);
    }
  return f;
}

PolyX frame_norm(const Frame& f) {
  PolyX s;
  for (std::size_t i = 0; i < f.psi.size(); ++i) s += mul(f.psi_dag[i], f.psi[i]);
  return s;
}

}  // namespace

const Frame& frame(int N) {
  static std::map<int, Frame> cache;
  if (auto it = cache.find(N); it != cache.end()) return it->second;
  Frame f = build_frame(N);
  PolyX d = frame_norm(f) - PolyX(Radical(1));
  if (!d.is_zero()) throw std::logic_error("frame certification failed for N = " + std::to_string(N) + ": " + suq3().str(d));
  return cache.emplace(N, std::move(f)).first->second;
}

std::vector<Check> verify_frame_identities(int N) {
  const Frame& f = frame(N);
  std::vector<Check> out;
  const std::size_t n = f.psi.size();
  std::vector<PolyX> v;
  if (N >= 0) {
    for (const auto& d : f.psi_dag) v.push_back(ract(d, "F2"));
    out.push_back(check_zero("Psi^dag <| F2 = 0", v));
  } else {
    for (const auto& p : f.psi) v.push_back(ract(p, "F2"));
    out.push_back(check_zero("Psi <| F2 = 0", v));
  }
  PolyX s1, s2;
  for (std::size_t i = 0; i < n; ++i) {
    s1 += mul(f.psi_dag[i], ract(f.psi[i], "F2"));
    s2 += mul(f.psi_dag[i], ract(f.psi[i], "F2 F1"));
  }
  out.push_back(check_zero("Psi^dag (Psi <| F2) = 0", s1));
  out.push_back(check_zero("Psi^dag (Psi <| F2 F1) = 0", s2));
  std::vector<PolyX> f1, k1, k2;
  for (const auto& p : f.psi) {
    f1.push_back(ract(p, "F1"));
    k1.push_back(ract(p, "K1") - p);
    k2.push_back(ract(p, "K2") - p * Radical(RatV::vpow(-2 * N)));
  }
  out.push_back(check_zero("Psi <| F1 = 0", f1));
  out.push_back(check_zero("Psi <| K1 = Psi", k1));
  out.push_back(check_zero("Psi <| K2 = q^(-N/2) Psi", k2));
  out.push_back(check_zero("Psi^dag Psi = 1", frame_norm(f) - PolyX(Radical(1))));
  return out;
}

std::vector<Check> flatness_check(int N) {
  const Frame& f = frame(N);
  const std::size_t n = f.psi.size();
  std::vector<PolyX> r2(n), r21(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      PolyX p = mul(f.psi[i], f.psi_dag[j]);
      r2[j] += mul(f.psi_dag[i], ract(p, "F2"));
      r21[j] += mul(f.psi_dag[i], ract(p, "F2 F1"));
    }
  return {check_zero("Psi^dag (P_N <| F2) = 0", r2), check_zero("Psi^dag (P_N <| F2 F1) = 0", r21)};
}

// ---- connection ------------------------------------------------------------

ConnectionResult connection_dbar(int N, const PolyX& x) {
  const PolyX xi = suq3().reduce(x);
  require_line(xi, N);
  const Frame& f = frame(N);
  ConnectionResult r;
  for (std::size_t i = 0; i < f.psi.size(); ++i) {
    PolyX p = mul(f.psi[i], xi);
    r.via_frame.plus += mul(f.psi_dag[i], ract(p, "F2 F1"));
    r.via_frame.minus += mul(f.psi_dag[i], ract(p, "F2"));
  }
  r.via_frame *= qpow(-N);
  r.closed_form = FormPair{ract(xi, "F2 F1"), ract(xi, "F2")} * RatV::vpow(-2 * N);
  r.agree = r.via_frame == r.closed_form;
  return r;
}

Radical gamma_coefficient(int n, int N) {
  using F = SqrtFactor;
  if (N >= 0) return Radical::sqrt_factored({F::qint(n), F::qint(n + N + 2), F::qint(2, -1)});
  return Radical::sqrt_factored({F::qint(n - N), F::qint(n + 2), F::qint(2, -1)});
}

// ---- holomorphic sections --------------------------------------------------

std::vector<Word> line_bundle_words(int N, int D) {
  if (D < 0) return {};
  return s5q().sys.normal_words(static_cast<std::size_t>(D), [N](const Word& w) { return line_degree(w) == N; });
}

std::vector<PolyR> SectionSpace::sections() const {
  std::vector<PolyR> out;
  for (const auto& v : kernel.basis()) {
    PolyR p;
    for (std::size_t i = 0; i < v.size(); ++i) p.add_term(words[i], v[i]);
    out.push_back(std::move(p));
  }
  return out;
}

SectionSpace h0_solve(int N, int D) {
  SectionSpace s;
  s.N = N;
  s.D = D;
  s.words = line_bundle_words(N, D);
  // The right action commutes with the left one, so it preserves left weights.
  std::map<std::pair<int, int>, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < s.words.size(); ++i) blocks[k_weight(Side::Left, s5q(), s.words[i])].push_back(i);
  std::vector<DenseVec> kernel_vectors;
  for (const auto& [wt, idx] : blocks) {
    std::vector<Word> dom;
    for (std::size_t i : idx) dom.push_back(s.words[i]);
    OperatorMatrix a = right_action_matrix(uq("F2"), dom);
    OperatorMatrix b = right_action_matrix(uq("F2 F1"), dom);
    SparseMatrix m = a.matrix;
    m.stack(b.matrix);
    const Subspace ker = kernel(m);
    for (const auto& v : ker.basis()) {
      DenseVec full(s.words.size());
      for (std::size_t c = 0; c < idx.size(); ++c) full[idx[c]] = v[c];
      kernel_vectors.push_back(std::move(full));
    }
    s.blocks.push_back(std::move(m));
  }
  s.kernel = Subspace::span(s.words.size(), kernel_vectors);
  return s;
}

// ---- twist -----------------------------------------------------------------

FormPair twist_phi1(int N, const FormPair& omega, const PolyX& xi) {
  if (!is_antiholomorphic_form(omega)) throw std::invalid_argument("phi1: not a (0,1)-form");
  require_line(xi, N);
  return omega.times_right(xi) * RatV::vpow(2 * N);
}

FormPair twist_phi2(int N, const PolyX& xi, const FormPair& omega) {
  if (!is_antiholomorphic_form(omega)) throw std::invalid_argument("phi2: not a (0,1)-form");
  require_line(xi, N);
  return omega.times_left(xi) * RatV::vpow(-2 * N);
}

ImageComparison compare_twist_images(int N, int D) {
  const auto& s5 = s5q().sys;
  auto cp2 = [&](std::size_t len) { return s5.normal_words(len, [](const Word& w) { return line_degree(w) == 0; }); };
  std::vector<Word> a_words = cp2(static_cast<std::size_t>(std::max(D, 0)));
  std::vector<Word> xi_words = line_bundle_words(N, D);
  std::vector<std::pair<FormPair, FormPair>> gens;  // (phi1 image, phi2 image)
  std::map<Word, FormPair> dbar_cache;
  for (const auto& b : a_words) {
    if (b.empty()) continue;
    FormPair db = dbar(embed(PolyR::word(b)));
    if (db.is_zero()) continue;
    for (const auto& a : a_words) {
      if (a.size() + b.size() > static_cast<std::size_t>(D)) continue;
      FormPair omega = db.times_left(embed(PolyR::word(a)));
      for (const auto& x : xi_words) {
        if (a.size() + b.size() + x.size() > static_cast<std::size_t>(D)) continue;
        PolyX xi = embed(PolyR::word(x));
        gens.emplace_back(twist_phi1(N, omega, xi), twist_phi2(N, xi, omega));
      }
    }
  }
  // coordinates: (component, word)
  std::map<std::pair<int, Word>, std::size_t> coord;
  auto index_of = [&](int comp, const Word& w) {
    auto [it, fresh] = coord.try_emplace({comp, w}, coord.size());
    return it->second;
  };
  auto to_sparse = [&](const FormPair& p) {
    std::vector<std::pair<std::size_t, RatV>> v;
    for (const auto& [w, c] : p.plus.terms()) v.emplace_back(index_of(0, w), c.as_rational());
    for (const auto& [w, c] : p.minus.terms()) v.emplace_back(index_of(1, w), c.as_rational());
    return v;
  };
  std::vector<std::vector<std::pair<std::size_t, RatV>>> v1, v2;
  for (const auto& [g1, g2] : gens) {
    v1.push_back(to_sparse(g1));
    v2.push_back(to_sparse(g2));
  }
  auto dense = [&](const std::vector<std::vector<std::pair<std::size_t, RatV>>>& vs) {
    std::vector<DenseVec> out;
    for (const auto& v : vs) {
      DenseVec d(coord.size());
      for (const auto& [i, c] : v) d[i] += c;
      out.push_back(std::move(d));
    }
    return out;
  };
  ImageComparison r;
  r.phi1_images = dense(v1);
  r.phi2_images = dense(v2);
  Subspace s1 = Subspace::span(coord.size(), r.phi1_images);
  Subspace s2 = Subspace::span(coord.size(), r.phi2_images);
  r.generators = gens.size();
  r.dim_phi1 = s1.dim();
  r.dim_phi2 = s2.dim();
  r.equal = subspace_equal(s1, s2);
  return r;
}

Check twisted_leibniz_check(int N, const PolyX& xi_in, const PolyX& a_in) {
  const PolyX xi = suq3().reduce(xi_in), a = suq3().reduce(a_in);
  require_line(xi, N);
  if (!is_in_CP2(a)) throw std::invalid_argument("twisted Leibniz: a is not in A(CP^2_q)");
  const RatV half = RatV::vpow(2 * N);  // q^(N/2)
  FormPair lhs = connection_dbar(N, mul(xi, a)).via_frame * half;
  FormPair rhs = connection_dbar(N, xi).via_frame.times_right(a) * half + twist_phi2(N, xi, dbar(a));
  FormPair d = lhs - rhs;
  return {"twisted Leibniz", d.is_zero(), d.is_zero() ? "" : d.str()};
}

Check tensor_connection_check(int N, int M, const PolyX& x1, const PolyX& x2) {
  const PolyX xi1 = suq3().reduce(x1), xi2 = suq3().reduce(x2);
  require_line(xi1, N);
  require_line(xi2, M);
  FormPair lhs = connection_dbar(N + M, mul(xi1, xi2)).via_frame;
  FormPair rhs = connection_dbar(N, xi1).via_frame.times_right(xi2) +
                 connection_dbar(M, xi2).via_frame.times_left(xi1) * qpow(-N);
  FormPair d = lhs - rhs;
  return {"tensor connection", d.is_zero(), d.is_zero() ? "" : d.str()};
}

// ---- coordinate ring -------------------------------------------------------

PolyX closed_form_section(int N, int j2, int m2) {
  if (N < 0 || j2 < 0 || j2 > N || (j2 - m2) % 2 != 0 || m2 < -j2 || m2 > j2)
    throw std::invalid_argument("closed_form_section: label violation");
  const int r = (j2 - m2) / 2;  // j2/2 - m
  const int s = (j2 + m2) / 2;  // j2/2 + m
  using F = SqrtFactor;
  Radical c = Radical::sqrt_factored({F::qfact(N), F::qfact(r, -1), F::qfact(s, -1), F::qfact(N - j2, -1)});
  c *= q_factorial(j2 + 1);
  // 4 alpha = -2 j2 N - 2 r j2 + 2 j2^2 + 2 r^2 (in powers of v = q^(1/4))
  const int four_alpha = -2 * j2 * N - 2 * r * j2 + 2 * j2 * j2 + 2 * r * r;
  c *= RatV::vpow(four_alpha);
  return PolyX::word(monomial(r, s, N - j2).terms().begin()->first, c);
}

std::vector<Check> ring_relations_check(int max_n, int slack) {
  std::vector<Check> out;
  const Presentation& s5 = s5q();
  // (a) the degree-one sections commute up to q in L_2
  SectionSpace h1 = h0_solve(1, 1 + slack);
  auto secs = h1.sections();
  bool ok = true;
  std::string wit;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      PolyR r = s5.reduce(z_gen(i) * z_gen(j) - z_gen(j) * z_gen(i) * qpow(1));
      if (!r.is_zero()) {
        ok = false;
        wit = s5.str(r);
      }
    }
  Subspace span1 = h1.kernel;
  for (int i = 1; i <= 3; ++i) {
    DenseVec v(h1.words.size());
    for (std::size_t c = 0; c < h1.words.size(); ++c)
      if (h1.words[c] == Word{z_letter(i)}) v[c] = RatV(1);
    if (!span1.contains(v)) {
      ok = false;
      wit = "z" + std::to_string(i) + " is not a section";
    }
  }
  out.push_back({"H0(L_1) = span(z1, z2, z3) with z_i z_j = q z_j z_i", ok && h1.dimension() == 3, wit});
  // (b), (c)
  std::vector<PolyX> deg1;
  for (int m2 : {-1, 1}) deg1.push_back(closed_form_section(1, 1, m2));
  deg1.push_back(closed_form_section(1, 0, 0));
  std::vector<PolyR> deg1r;
  for (const auto& p : deg1) deg1r.push_back(p.map_coeffs<RatV>([](const Radical& c) { return c.as_rational(); }));
  std::vector<PolyR> prods{PolyR(RatV(1))};
  for (int n = 1; n <= max_n; ++n) {
    std::vector<PolyR> next;
    for (const auto& p : prods)
      for (const auto& x : deg1r) next.push_back(s5.mul(p, x));
    prods = std::move(next);
    SectionSpace h = h0_solve(n, n + slack);
    std::map<Word, std::size_t> pos;
    for (std::size_t c = 0; c < h.words.size(); ++c) pos.emplace(h.words[c], c);
    std::vector<DenseVec> vs;
    bool inside = true;
    for (const auto& p : prods) {
      DenseVec v(h.words.size());
      for (const auto& [w, c] : p.terms()) {
        auto it = pos.find(w);
        if (it == pos.end()) {
          inside = false;
          break;
        }
        v[it->second] = c;
      }
      vs.push_back(std::move(v));
    }
    bool span_ok = inside && subspace_equal(Subspace::span(h.words.size(), vs), h.kernel);
    out.push_back({"products of degree-one closed-form sections span H0(L_" + std::to_string(n) + ")", span_ok, ""});
    const std::size_t want = static_cast<std::size_t>((n + 1) * (n + 2) / 2);
    out.push_back({"dim H0(L_" + std::to_string(n) + ") = " + std::to_string(want), h.dimension() == want,
                   "got " + std::to_string(h.dimension())});
  }
  return out;
}

}  // namespace cp2q
