// Command-line front end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 bad arguments or unparsable input.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cp2q/battery.hpp"
#include "cp2q/haar.hpp"
#include "cp2q/holo.hpp"

using namespace cp2q;

namespace {

struct Output {
  std::string format = "json";
  std::string path;
  bool with_time = false;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
  }

  int emit(const std::vector<SuiteReport>& reports) const {
    bool ok = true;
    std::string text;
    if (format == "tsv") {
      for (const auto& r : reports) text += r.to_tsv();
    } else {
      nlohmann::ordered_json j;
      if (reports.size() == 1) {
        j = reports.front().to_json(with_time);
      } else {
        j = nlohmann::ordered_json::array();
        for (const auto& r : reports) j.push_back(r.to_json(with_time));
      }
      text = j.dump(2) + "\n";
    }
    for (const auto& r : reports) ok = ok && r.pass();
    write(text);
    return ok ? 0 : 1;
  }

  int emit_value(const std::string& value) const {
    write(value + "\n");
    return 0;
  }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_label(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad label component '" + item + "' in '" + text + "'");
    }
  }
  if (v.size() != 3) throw UsageError("label must be three comma-separated integers: " + text);
  return v;
}

Rational parse_q0(const std::string& text) {
  try {
    Rational q(text);
    q.canonicalize();
    if (q <= 0 || q >= 1) throw UsageError("q0 must lie in (0, 1): " + text);
    return q;
  } catch (const std::invalid_argument&) {
    throw UsageError("q0 is not a rational number: " + text);
  }
}

std::string default_q0() {
  const char* env = std::getenv("CP2Q_Q0");
  return env ? env : "1/2";
}

// Writes the completed rewrite systems to `path`, or checks them against it.
void sync_cache(const std::string& path) {
  std::ifstream in(path);
  std::string text;
  for (const Presentation* p : {&s5q(), &suq3()}) text += serialize_system(p->sys);
  if (in) {
    std::stringstream buf;
    buf << in.rdbuf();
    if (buf.str() != text) std::cerr << "warning: rewrite cache " << path << " is stale; rewriting\n";
    else return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on the quantum projective plane CP^2_q"};
  app.require_subcommand(1);
  Output out;
  std::string cache;
  app.add_option("--format", out.format, "Report format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--out", out.path, "Write the report to a file");
  app.add_flag("--time", out.with_time, "Include wall time in JSON reports");
  app.add_option("--cache", cache, "Rewrite-system cache file (written, or checked if present)");

  // qnum
  auto* qnum = app.add_subcommand("qnum", "Exact q-numbers: int n | fact n | binom n m | trinom j k l");
  std::string qkind;
  std::vector<long> qargs;
  qnum->add_option("kind", qkind)->required()->check(CLI::IsMember({"int", "fact", "binom", "trinom"}));
  qnum->add_option("args", qargs)->required();

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Normal form of an expression");
  std::string alg = "s5q", expr;
  reduce->add_option("--alg", alg)->check(CLI::IsMember({"s5q", "suq3"}));
  reduce->add_option("expr", expr)->required();

  // rep verify
  auto* rep = app.add_subcommand("rep", "Representations of U_q(su(3))");
  auto* rep_verify = rep->add_subcommand("verify", "Check every defining relation on V(n1, n2)");
  rep->require_subcommand(1);
  int n1 = 0, n2 = 0;
  rep_verify->add_option("--n1", n1)->required()->check(CLI::NonNegativeNumber);
  rep_verify->add_option("--n2", n2)->required()->check(CLI::NonNegativeNumber);

  // act
  auto* act = app.add_subcommand("act", "Apply a Hopf action to an element of A(SU_q(3)) or A(S^5_q)");
  std::string side = "right", hword, act_alg = "suq3", act_expr;
  act->set_help_flag("--help", "Print this help message and exit");
  act->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  act->add_option("--h", hword, "Generator word, e.g. \"F2 F1\"")->required();
  act->add_option("--alg", act_alg, "Algebra the expression is written in")->check(CLI::IsMember({"s5q", "suq3"}));
  act->add_option("expr", act_expr)->required();

  // pw
  auto* pw = app.add_subcommand("pw", "Peter-Weyl element t(n1,n2)^upper_lower");
  std::string lower, upper;
  int pn1 = 0, pn2 = 0;
  pw->add_option("--n1", pn1)->required()->check(CLI::NonNegativeNumber);
  pw->add_option("--n2", pn2)->required()->check(CLI::NonNegativeNumber);
  pw->add_option("--lower", lower, "j1,j2,2m")->required();
  pw->add_option("--upper", upper, "l1,l2,2k")->required();

  // h0
  auto* h0 = app.add_subcommand("h0", "Holomorphic sections of L_N on a slice");
  int hN = 0, hD = 0;
  h0->add_option("--N", hN)->required();
  h0->add_option("--degree", hD)->required()->check(CLI::NonNegativeNumber);

  // frame verify
  auto* frame_cmd = app.add_subcommand("frame", "Frames of L_N");
  auto* frame_verify = frame_cmd->add_subcommand("verify", "Frame identities and flatness");
  frame_cmd->require_subcommand(1);
  int fN = 0;
  frame_verify->add_option("--N", fN)->required();

  // ring verify
  auto* ring = app.add_subcommand("ring", "Homogeneous coordinate ring");
  auto* ring_verify = ring->add_subcommand("verify", "Ring relations and section spans");
  ring->require_subcommand(1);
  int maxN = 2;
  ring_verify->add_option("--maxN", maxN)->required()->check(CLI::PositiveNumber);

  // haar
  auto* haar = app.add_subcommand("haar", "Haar table, twisted trace and positivity probes");
  int haarD = 2, probes = 0;
  std::string q0text = default_q0();
  haar->add_option("--degree", haarD)->required()->check(CLI::NonNegativeNumber);
  haar->add_option("--probe", probes)->check(CLI::NonNegativeNumber);
  haar->add_option("--q", q0text, "q0 in (0,1), default $CP2Q_Q0 or 1/2");

  // suite all
  auto* suite = app.add_subcommand("suite", "Verification suites");
  auto* suite_all = suite->add_subcommand("all", "The acceptance battery");
  suite->require_subcommand(1);
  std::string level = "smoke";
  suite_all->add_option("--level", level)->check(CLI::IsMember({"smoke", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!cache.empty()) sync_cache(cache);

    if (*qnum) {
      const std::size_t want = qkind == "int" || qkind == "fact" ? 1 : qkind == "binom" ? 2 : 3;
      if (qargs.size() != want) throw UsageError("qnum " + qkind + " takes " + std::to_string(want) + " argument(s)");
      RatV v;
      if (qkind == "int") v = q_int(qargs[0]);
      else if (qkind == "fact") v = q_factorial(qargs[0]);
      else if (qkind == "binom") v = q_binomial(qargs[0], qargs[1]);
      else v = q_trinomial(qargs[0], qargs[1], qargs[2]);
      return out.emit_value(to_string(v));
    }
    if (*reduce) {
      const Presentation& p = presentation(alg);
      PolyR x;
      try {
        x = p.parse(expr);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      return out.emit_value(p.str(x));
    }
    if (*rep_verify) return out.emit({rep_suite(n1, n2)});
    if (*act) {
      UqElement h;
      PolyR x;
      try {
        h = parse_uq_word(hword);
        x = presentation(act_alg).parse(act_expr);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const PolyX a = to_radical(act_alg == "s5q" ? embed_s5(x) : x);
      const PolyX r = act_suq3(side == "left" ? Side::Left : Side::Right, h, a);
      return out.emit_value(suq3().str(r));
    }
    if (*pw) {
      const auto lo = parse_label(lower), up = parse_label(upper);
      const WeightLabel l{pn1, pn2, lo[0], lo[1], lo[2]}, u{pn1, pn2, up[0], up[1], up[2]};
      if (!l.valid() || !u.valid()) throw UsageError("label outside V(n1, n2)");
      return out.emit_value(suq3().str(pw_element(l, u)));
    }
    if (*h0) return out.emit({h0_suite(hN, hD)});
    if (*frame_verify) return out.emit({frame_suite(fN, fN >= 0 && fN <= 2)});
    if (*ring_verify) return out.emit({ring_suite(maxN)});
    if (*haar) return out.emit({haar_suite(haarD, probes, parse_q0(q0text))});
    if (*suite_all) return out.emit(run_battery(level == "full" ? Level::Full : Level::Smoke));
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
