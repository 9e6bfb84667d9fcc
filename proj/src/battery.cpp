#include "cp2q/battery.hpp"

#include <chrono>
#include <cmath>
#include <memory>
#include <random>
#include <sstream>

#include "cp2q/haar.hpp"
#include "cp2q/holo.hpp"
#include "cp2q/numeric.hpp"

namespace cp2q {

void NumericLedger::add(const std::string& suite, std::string label, const Radical& exact, double recomputed) {
  items.push_back({suite, std::move(label), eval_numeric(exact, q0), recomputed});
}

void NumericLedger::add(const std::string& suite, std::string label, double exact, double recomputed) {
  items.push_back({suite, std::move(label), exact, recomputed});
}

namespace {

using Clock = std::chrono::steady_clock;

class Timer {
 public:
  explicit Timer(SuiteReport& r) : r_(r), t0_(Clock::now()) {}
  ~Timer() { r_.seconds = std::chrono::duration<double>(Clock::now() - t0_).count(); }

 private:
  SuiteReport& r_;
  Clock::time_point t0_;
};

PolyX embed(const PolyR& s5) { return to_radical(embed_s5(s5)); }

std::string words_text(const Word& w) { return s5q().alphabet().word_string(w); }

long triangle(long n) { return (n + 1) * (n + 2) / 2; }

long rep_dim_formula(long n1, long n2) { return (n1 + 1) * (n2 + 1) * (n1 + n2 + 2) / 2; }

RatV random_coeff(std::mt19937& rng) {
  long c = static_cast<long>(rng() % 5) - 2;
  if (c == 0) c = 1;
  return qpow(static_cast<int>(rng() % 3) - 1) * RatV(c);
}

PolyR random_combination(std::mt19937& rng, const std::vector<Word>& words, int max_terms = 3) {
  PolyR p;
  const int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
  for (int t = 0; t < terms; ++t) p.add_term(words[rng() % words.size()], random_coeff(rng));
  return p;
}

PolyR random_free(std::mt19937& rng, std::size_t letters, int len) {
  Word w;
  for (int i = 0; i < len; ++i) w += static_cast<Letter>(rng() % letters);
  PolyR p = PolyR::word(w, random_coeff(rng));
  Word w2;
  for (int i = 0; i < static_cast<int>(rng() % static_cast<unsigned>(len + 1)); ++i) w2 += static_cast<Letter>(rng() % letters);
  p.add_term(w2, random_coeff(rng));
  return p;
}

std::vector<Word> haar_slice_words(int D) {
  return s5q().sys.normal_words(static_cast<std::size_t>(2 * D), [D](const Word& w) {
    auto [a, b] = bidegree(w);
    return a <= D && b <= D;
  });
}

// one check per batch of relation checks, keeping the first failure
void add_summary(SuiteReport& r, const std::string& name, const std::vector<RelationCheck>& cs) {
  std::size_t bad = 0;
  std::string witness;
  for (const auto& c : cs)
    if (!c.pass && bad++ == 0) witness = c.name + ": " + c.witness;
  r.add(name, bad == 0, std::to_string(cs.size()) + " hold", std::to_string(cs.size() - bad) + " hold", witness);
}

}  // namespace

// ---- single-topic suites -----------------------------------------------------

SuiteReport rep_suite(int n1, int n2) {
  SuiteReport r;
  Timer t(r);
  r.suite = "rep";
  r.params["n1"] = n1;
  r.params["n2"] = n2;
  r.add_all(verify_relations(n1, n2));
  r.add("dim V(n1,n2)", static_cast<long>(rep_basis(n1, n2).size()) == rep_dim_formula(n1, n2),
        std::to_string(rep_dim_formula(n1, n2)), std::to_string(rep_basis(n1, n2).size()));
  return r;
}

SuiteReport h0_suite(int N, int D, NumericLedger* ledger) {
  SuiteReport r;
  Timer t(r);
  r.suite = "h0";
  r.params["N"] = N;
  r.params["D"] = D;
  const SectionSpace s = h0_solve(N, D);
  const std::size_t want = N >= 0 ? static_cast<std::size_t>(triangle(N)) : 0;
  r.params["slice_words"] = s.words.size();
  r.params["dimension"] = s.dimension();
  auto& basis = r.params["basis"] = nlohmann::ordered_json::array();
  for (const auto& p : s.sections()) basis.push_back(s5q().str(p));
  r.add("dim H0(L_" + std::to_string(N) + ")", s.dimension() == want, std::to_string(want), std::to_string(s.dimension()));
  bool killed = true, eigen = true;
  for (const auto& p : s.sections()) {
    const PolyX x = embed(p);
    killed = killed && connection_dbar(N, x).closed_form.is_zero();
    eigen = eigen && act_right(x, parse_uq_word("K1 K2 K2")) == x * Radical(qpow(N));
  }
  r.add("sections are killed by dbar", killed);
  r.add("sections are q^N eigenvectors of K1 K2^2", eigen);
  if (ledger) {
    std::size_t nul = 0;
    for (const auto& b : s.blocks) nul += numeric::nullity(b, ledger->q());
    ledger->add("h0", "dim H0(L_" + std::to_string(N) + "), D=" + std::to_string(D), static_cast<double>(s.dimension()),
                static_cast<double>(nul));
  }
  return r;
}

SuiteReport frame_suite(int N, bool with_flatness, NumericLedger* ledger) {
  SuiteReport r;
  Timer t(r);
  r.suite = "frame";
  r.params["N"] = N;
  r.add_all(verify_frame_identities(N));
  if (with_flatness) r.add_all(flatness_check(N));
  const Frame& f = frame(N);
  auto& comps = r.params["components"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < f.index.size(); ++i) {
    const auto [j, k, l] = f.index[i];
    std::string label = "(" + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
    comps.push_back(label + " " + to_string(f.coeff[i]));
    if (ledger)
      ledger->add("frame", "Psi_" + std::to_string(N) + " coefficient " + label, f.coeff[i],
                  numeric::frame_coefficient(N, j, k, l, ledger->q()));
  }
  return r;
}

SuiteReport ring_suite(int max_n) {
  SuiteReport r;
  Timer t(r);
  r.suite = "ring";
  r.params["maxN"] = max_n;
  r.add_all(ring_relations_check(max_n));
  return r;
}

SuiteReport haar_suite(int D, int probes, const Rational& q0, NumericLedger* ledger) {
  SuiteReport r;
  Timer t(r);
  r.suite = "haar";
  r.params["D"] = D;
  r.params["probes"] = probes;
  r.params["q0"] = q0.get_str();
  const HaarTable* table = nullptr;
  try {
    table = &haar_table(D);
    r.add("invariant functional unique on the slice", true, "kernel dimension 1", "kernel dimension 1");
  } catch (const std::runtime_error& e) {
    r.add("invariant functional unique on the slice", false, "kernel dimension 1", e.what());
    return r;
  }
  const HaarTable& h = *table;
  r.params["constraints"] = h.constraints();
  auto& vals = r.params["values"] = nlohmann::ordered_json::object();
  for (const auto& [w, v] : h.values()) vals[words_text(w)] = to_string(v);
  r.expect_eq("h(1)", h(PolyR(RatV(1))), RatV(1));
  if (D >= 1) {
    RatV sum;
    for (int i = 1; i <= 3; ++i) sum += h(z_gen(i) * zs_gen(i));
    r.expect_eq("sum_i h(z_i z_i^*)", sum, RatV(1));
  }

  std::unique_ptr<numeric::Haar> nh;
  if (ledger) nh = std::make_unique<numeric::Haar>(D, ledger->q());
  if (ledger) {
    ledger->add("haar", "numeric invariant functionals (D=" + std::to_string(D) + ")", 1.0,
                static_cast<double>(nh->kernel_dimension()));
    if (nh->kernel_dimension() == 1)
      for (const auto& [w, v] : h.values()) ledger->add("haar", "h(" + words_text(w) + ")", Radical(v), (*nh)(PolyR::word(w)));
  }

  const auto words = haar_slice_words(D);
  std::size_t pairs = 0, bad = 0;
  std::string witness;
  for (const auto& x : words)
    for (const auto& y : words) {
      auto [a1, b1] = bidegree(x);
      auto [a2, b2] = bidegree(y);
      if (a1 + a2 > D || b1 + b2 > D) continue;
      ++pairs;
      const PolyR px = PolyR::word(x), py = PolyR::word(y);
      if (!twisted_trace_check(px, py, D) && bad++ == 0) witness = words_text(x) + " | " + words_text(y);
      if (nh && nh->kernel_dimension() == 1 && pairs % 7 == 0) {
        const PolyR xy = s5q().mul(px, py);
        ledger->add("haar", "h(" + words_text(x) + " . " + words_text(y) + ")", Radical(h(xy)), (*nh)(xy));
      }
    }
  r.add("h(xy) = h(sigma(y) x) on all monomial pairs", bad == 0, std::to_string(pairs), std::to_string(pairs - bad), witness);

  if (probes > 0) {
    std::mt19937 rng(2024);
    const auto deg2 = s5q().sys.normal_words(2, [](const Word&) { return true; });
    double worst = INFINITY;
    std::unique_ptr<numeric::Haar> nh4;
    for (int p = 0; p < probes; ++p) {
      const PolyR a = random_combination(rng, deg2);
      const double v = positivity_probe(a, q0);
      worst = std::min(worst, v);
      if (ledger) {
        if (!nh4) nh4 = std::make_unique<numeric::Haar>(4, ledger->q());
        const PolyR aa = s5q().mul(a, s5q().star_of(a));
        ledger->add("haar", "h(a a^*) probe " + std::to_string(p), v, (*nh4)(aa));
      }
    }
    std::ostringstream got;
    got << "min " << worst;
    r.add("h(a a^*) >= -1e-12 at q0 for random degree<=2 a", worst >= -1e-12, ">= -1e-12", got.str());
  }
  return r;
}

// ---- acceptance battery --------------------------------------------------------

std::string criterion_title(int k) {
  static const char* titles[] = {"",
                                 "representation relations",
                                 "representation dimensions",
                                 "presentation consistency",
                                 "confluence and normal-form laws",
                                 "Peter-Weyl slice counts",
                                 "no nonconstant holomorphic functions",
                                 "dimensions of holomorphic sections",
                                 "frame identities and flatness",
                                 "connection closed form",
                                 "homogeneous coordinate ring",
                                 "bimodule twist and tensor connections",
                                 "Haar state and twisted cochains",
                                 "numeric consistency"};
  if (k < 1 || k > 13) throw std::out_of_range("criterion out of range");
  return titles[k];
}

namespace {

void merge(SuiteReport& into, const SuiteReport& part, const std::string& prefix) {
  for (auto c : part.checks) {
    c.name = prefix + c.name;
    into.checks.push_back(std::move(c));
  }
}

void criterion_1(SuiteReport& r, Level level) {
  const int top = level == Level::Full ? 4 : 2;
  r.params["max n1+n2"] = top;
  for (int n1 = 0; n1 <= top; ++n1)
    for (int n2 = 0; n1 + n2 <= top; ++n2)
      add_summary(r, "V(" + std::to_string(n1) + "," + std::to_string(n2) + ")", verify_relations(n1, n2));
}

void criterion_2(SuiteReport& r) {
  for (int n1 = 0; n1 <= 4; ++n1)
    for (int n2 = 0; n2 <= 4; ++n2) {
      const long want = rep_dim_formula(n1, n2);
      const long got = static_cast<long>(rep_basis(n1, n2).size());
      r.add("dim V(" + std::to_string(n1) + "," + std::to_string(n2) + ")", got == want, std::to_string(want), std::to_string(got));
    }
}

void criterion_3(SuiteReport& r) {
  for (const auto& [name, rel] : s5q_relations()) {
    const PolyR img = embed_s5(rel);
    r.add("relation " + name + " maps to 0", img.is_zero(), "0", suq3().str(img));
  }
  for (const Presentation* p : {&s5q(), &suq3()})
    for (Letter l = 0; l < p->alphabet().size(); ++l) {
      const PolyR back = p->star_of(p->star[l]);
      r.add("star(star(" + p->alphabet().names[l] + "))", back == PolyR::letter(l), p->alphabet().names[l], p->str(back));
    }
}

void criterion_4(SuiteReport& r, Level level) {
  for (const Presentation* p : {&s5q(), &suq3()}) {
    const auto rep = check_local_confluence(p->sys, 6);
    r.add(p->name() + " overlaps unresolved at degree <= 6", rep.confluent(), "0", std::to_string(rep.unresolved.size()));
  }
  const int samples = level == Level::Full ? 500 : 50;
  r.params["random products per presentation"] = samples;
  std::mt19937 rng(41);
  for (const Presentation* p : {&s5q(), &suq3()}) {
    int bad = 0;
    std::string witness;
    for (int t = 0; t < samples; ++t) {
      const int la = static_cast<int>(rng() % 6);
      const int lb = static_cast<int>(rng() % static_cast<unsigned>(6 - la));
      const PolyR a = random_free(rng, p->alphabet().size(), la), b = random_free(rng, p->alphabet().size(), lb);
      if (p->reduce(a * b) != p->reduce(p->reduce(a) * p->reduce(b)) && bad++ == 0) witness = p->str(a) + " | " + p->str(b);
    }
    r.add(p->name() + " reduce(ab) = reduce(reduce(a) reduce(b))", bad == 0, std::to_string(samples),
          std::to_string(samples - bad), witness);
  }
}

void criterion_5(SuiteReport& r) {
  auto one = [&](int N, int D) {
    long want = 0;
    for (int n = 0; N + 2 * n <= D; ++n) want += rep_dim_formula(n, n + N);
    const long got = static_cast<long>(line_bundle_words(N, D).size());
    r.add("L_" + std::to_string(N) + " slice D=" + std::to_string(D), got == want, std::to_string(want), std::to_string(got));
  };
  one(0, 2);
  for (int N = 0; N <= 2; ++N) one(N, N + 6);
}

void criterion_6(SuiteReport& r, NumericLedger& ledger) {
  for (int a = 0; a <= 3; ++a) {
    const SuiteReport part = h0_suite(0, 2 * a, &ledger);
    merge(r, part, "CP2 slice a=b<=" + std::to_string(a) + ": ");
  }
}

void criterion_7(SuiteReport& r, Level level, NumericLedger& ledger) {
  const int top = level == Level::Full ? 4 : 2;
  for (int N = 0; N <= top; ++N) merge(r, h0_suite(N, N + 6, &ledger), "");
  for (int N = 1; N <= 3; ++N) merge(r, h0_suite(-N, N + 6, &ledger), "");
}

void criterion_8(SuiteReport& r, NumericLedger& ledger) {
  for (int N = 0; N <= 3; ++N) merge(r, frame_suite(N, N <= 2, &ledger), "N=" + std::to_string(N) + ": ");
}

void criterion_9(SuiteReport& r, Level level, NumericLedger& ledger) {
  const int extra = level == Level::Full ? 4 : 2;
  for (int N = 1; N <= 2; ++N) {
    const auto words = line_bundle_words(N, N + extra);
    std::size_t bad = 0;
    std::string witness;
    for (const auto& w : words) {
      const auto c = connection_dbar(N, embed(PolyR::word(w)));
      if (!c.agree && bad++ == 0) witness = words_text(w) + ": " + c.via_frame.str() + " vs " + c.closed_form.str();
    }
    r.add("L_" + std::to_string(N) + " slice D=" + std::to_string(N + extra) + ": frame connection = closed form",
          bad == 0, std::to_string(words.size()), std::to_string(words.size() - bad), witness);
  }
  // t(n, n+N)^0_j <| F2 = gamma_n t(n, n+N)^{1,0,-1/2}_j, the coefficient the closed form rests on
  for (int N = 0; N <= 1; ++N)
    for (int n = 0; n <= 1; ++n) {
      std::size_t bad = 0, total = 0;
      for (const auto& l : rep_basis(n, n + N)) {
        ++total;
        const PolyX lhs = act_right(pw_element(l, {n, n + N, 0, 0, 0}), UqElement::gen(UqGen::F2));
        const PolyX rhs = n == 0 ? PolyX() : pw_element(l, {n, n + N, 1, 0, -1}) * gamma_coefficient(n, N);
        bad += lhs != rhs;
      }
      r.add("t(" + std::to_string(n) + "," + std::to_string(n + N) + ")^0 <| F2 = gamma_n t^{1,0,-1/2}", bad == 0,
            std::to_string(total), std::to_string(total - bad));
    }
  for (int N = -3; N <= 3; ++N)
    for (int n = 0; n <= 6; ++n) {
      const Radical g = gamma_coefficient(n, N);
      const bool want_zero = N >= 0 && n == 0;
      r.add("gamma_" + std::to_string(n) + " (N=" + std::to_string(N) + ") " + (want_zero ? "= 0" : "!= 0"),
            g.is_zero() == want_zero, want_zero ? "0" : "nonzero", to_string(g));
      ledger.add("connection", "gamma_" + std::to_string(n) + " N=" + std::to_string(N), g,
                 numeric::gamma_coefficient(n, N, ledger.q()));
    }
}

void criterion_10(SuiteReport& r, NumericLedger& ledger) {
  merge(r, ring_suite(3), "");
  const Presentation& s = s5q();
  auto s5x = [](const PolyR& p) { return to_radical(p); };
  auto expect = [&](const std::string& name, const PolyX& got, const PolyX& want) {
    r.add(name, got == want, s.str(want), s.str(got));
  };
  expect("closed_form_section(1, 1, -1/2) = [2] z1", closed_form_section(1, 1, -1), s5x(z_gen(1) * RatV(q_int(2))));
  expect("closed_form_section(1, 1, +1/2) = q[2] z2", closed_form_section(1, 1, 1), s5x(z_gen(2) * (RatV(q_int(2)) * qpow(1))));
  expect("closed_form_section(1, 0, 0) = z3", closed_form_section(1, 0, 0), s5x(z_gen(3)));
  for (int N = 1; N <= 2; ++N)
    for (const auto& l : rep_basis(0, N)) {
      const PolyX pw = pw_element(l, {0, N, 0, 0, 0});
      const PolyX cf = embed_s5(closed_form_section(N, l.j2, l.m2));
      r.add("pw_element t(0," + std::to_string(N) + ")^0_" + l.str() + " = closed_form_section", pw == cf, suq3().str(cf),
            suq3().str(pw));
    }
  for (int N = 0; N <= 3; ++N)
    for (int j2 = 0; j2 <= N; ++j2)
      for (int m2 = -j2; m2 <= j2; m2 += 2) {
        const PolyX cf = closed_form_section(N, j2, m2);
        const Radical c = cf.terms().begin()->second;
        ledger.add("ring", "closed-form coefficient N=" + std::to_string(N) + " j2=" + std::to_string(j2) + " 2m=" + std::to_string(m2),
                   c, numeric::closed_form_coefficient(N, j2, m2, ledger.q()));
      }
}

void criterion_11(SuiteReport& r, Level level, NumericLedger& ledger) {
  const int top = level == Level::Full ? 4 : 3;
  for (int D = 1; D <= top; ++D) {
    const ImageComparison c = compare_twist_images(1, D);
    r.add("Im phi1 = Im phi2, N=1, D=" + std::to_string(D), c.equal,
          "equal spans", std::to_string(c.dim_phi1) + " / " + std::to_string(c.dim_phi2) + " from " + std::to_string(c.generators) + " generators");
    ledger.add("twist", "dim Im phi1 (D=" + std::to_string(D) + ")", static_cast<double>(c.dim_phi1),
               static_cast<double>(numeric::rank(c.phi1_images, ledger.q())));
    ledger.add("twist", "dim Im phi2 (D=" + std::to_string(D) + ")", static_cast<double>(c.dim_phi2),
               static_cast<double>(numeric::rank(c.phi2_images, ledger.q())));
  }
  std::mt19937 rng(77);
  const auto l1 = line_bundle_words(1, 3), cp = line_bundle_words(0, 2), l2 = line_bundle_words(2, 4);
  {
    const int pairs = level == Level::Full ? 50 : 10;
    int bad = 0;
    std::string witness;
    for (int t = 0; t < pairs; ++t) {
      const auto c = twisted_leibniz_check(1, embed(random_combination(rng, l1, 2)), embed(random_combination(rng, cp, 2)));
      if (!c.pass && bad++ == 0) witness = c.witness;
    }
    r.add("twisted Leibniz rule, N=1, random pairs", bad == 0, std::to_string(pairs), std::to_string(pairs - bad), witness);
  }
  auto tensor = [&](int N, int M, const std::vector<Word>& a, const std::vector<Word>& b, int pairs) {
    int bad = 0;
    std::string witness;
    for (int t = 0; t < pairs; ++t) {
      const auto c = tensor_connection_check(N, M, embed(random_combination(rng, a, 2)), embed(random_combination(rng, b, 2)));
      if (!c.pass && bad++ == 0) witness = c.witness;
      clear_algebra_caches();
    }
    r.add("tensor connection (N,M)=(" + std::to_string(N) + "," + std::to_string(M) + ")", bad == 0, std::to_string(pairs),
          std::to_string(pairs - bad), witness);
  };
  tensor(1, 1, l1, l1, level == Level::Full ? 20 : 4);
  tensor(1, 2, l1, l2, level == Level::Full ? 8 : 2);
}

void criterion_12(SuiteReport& r, Level level, NumericLedger& ledger) {
  merge(r, haar_suite(2, level == Level::Full ? 100 : 20, ledger.q0, &ledger), "");
  std::mt19937 rng(5);
  const Presentation& s = s5q();
  const auto w1 = haar_slice_words(1);
  {
    int bad = 0;
    for (int t = 0; t < 100; ++t) {
      const PolyR x = random_combination(rng, w1), y = random_combination(rng, w1);
      bad += sigma(s.mul(x, y)) != s.mul(sigma(x), sigma(y));
    }
    r.add("sigma(xy) = sigma(x) sigma(y), random pairs", bad == 0, "100", std::to_string(100 - bad));
  }
  {
    int bad = 0;
    const UqGen gens[] = {UqGen::E1, UqGen::E2, UqGen::F1, UqGen::F2, UqGen::K1, UqGen::K2, UqGen::K1i, UqGen::K2i};
    for (int t = 0; t < 100; ++t) {
      UqElement h(Radical(1));
      const int len = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < len; ++i) h = h * UqElement::gen(gens[rng() % 8]);
      h = h + UqElement::gen(gens[rng() % 8]) * Radical(random_coeff(rng));
      bad += theta(theta(h)) != h;
    }
    r.add("theta(theta(h)) = h, random elements", bad == 0, "100", std::to_string(100 - bad));
  }
  for (std::size_t n1 = 1; n1 <= 3; ++n1) {
    const Cochain phi = random_twisted_cochain(n1, 3, static_cast<unsigned>(n1 * 31));
    Cochain lam = phi;
    for (std::size_t k = 0; k < n1; ++k) lam = lambda_sigma(lam);
    const Cochain bb = b_sigma(b_sigma(phi));
    int bad_bb = 0, bad_lam = 0;
    const int samples = 30;
    for (int t = 0; t < samples; ++t) {
      std::vector<PolyR> a;
      for (std::size_t k = 0; k < n1 + 2; ++k) a.push_back(PolyR::word(w1[rng() % w1.size()]));
      bad_bb += !bb(a).is_zero();
      const std::vector<PolyR> head(a.begin(), a.begin() + static_cast<long>(n1));
      bad_lam += lam(head) != phi(head);
    }
    const std::string ar = std::to_string(n1);
    r.add("twisted cochain arity " + ar + ": lambda^" + ar + " phi = phi", bad_lam == 0, std::to_string(samples),
          std::to_string(samples - bad_lam));
    r.add("b_sigma b_sigma phi = 0, arity " + ar, bad_bb == 0, std::to_string(samples), std::to_string(samples - bad_bb));
  }
}

void criterion_13(SuiteReport& r, const NumericLedger& ledger) {
  constexpr double tol = 1e-9;
  r.params["q0"] = ledger.q0.get_str();
  r.params["tolerance"] = tol;
  std::map<std::string, std::pair<std::size_t, double>> per_suite;
  std::size_t reported = 0;
  for (const auto& it : ledger.items) {
    const double dev = std::abs(it.exact_at_q0 - it.recomputed);
    auto& [count, worst] = per_suite[it.suite];
    ++count;
    const bool ok = dev <= tol;  // false for NaN
    worst = ok ? std::max(worst, dev) : INFINITY;
    if (!ok && reported++ < 20) {
      std::ostringstream got;
      got.precision(17);
      got << it.exact_at_q0 << " vs " << it.recomputed;
      r.add(it.suite + ": " + it.label, false, "|difference| <= 1e-9", got.str());
    }
  }
  for (const auto& [suite, cw] : per_suite) {
    std::ostringstream got;
    got << cw.first << " scalars, max |difference| " << cw.second;
    r.add(suite + " scalars agree at q0", std::isfinite(cw.second) && cw.second <= tol, "<= 1e-9", got.str());
  }
  if (ledger.items.empty()) r.add("scalars recorded", false, "> 0", "0");
}

}  // namespace

SuiteReport run_criterion(int k, Level level, NumericLedger& ledger) {
  SuiteReport r;
  r.suite = "criterion " + std::to_string(k) + ": " + criterion_title(k);
  r.params["level"] = level == Level::Full ? "full" : "smoke";
  Timer t(r);
  try {
    switch (k) {
      case 1: criterion_1(r, level); break;
      case 2: criterion_2(r); break;
      case 3: criterion_3(r); break;
      case 4: criterion_4(r, level); break;
      case 5: criterion_5(r); break;
      case 6: criterion_6(r, ledger); break;
      case 7: criterion_7(r, level, ledger); break;
      case 8: criterion_8(r, ledger); break;
      case 9: criterion_9(r, level, ledger); break;
      case 10: criterion_10(r, ledger); break;
      case 11: criterion_11(r, level, ledger); break;
      case 12: criterion_12(r, level, ledger); break;
      case 13: criterion_13(r, ledger); break;
      default: throw std::out_of_range("criterion out of range");
    }
  } catch (const std::exception& e) {
    r.add("completed without error", false, "no exception", e.what());
  }
  if (r.checks.empty()) r.add("produced checks", false, "> 0", "0");
  clear_algebra_caches();
  return r;
}

std::vector<SuiteReport> run_battery(Level level) {
  NumericLedger ledger;
  std::vector<SuiteReport> out;
  for (int k = 1; k <= 13; ++k) out.push_back(run_criterion(k, level, ledger));
  return out;
}

}  // namespace cp2q
