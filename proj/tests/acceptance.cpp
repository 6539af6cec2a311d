// One line per acceptance criterion: "ACn PASS|FAIL name (detail)".

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <algorithm>
#include <sstream>
#include <string>

#include "calegari/cli.hpp"
#include "calegari/json_io.hpp"
#include "calegari/report.hpp"
#include "calegari/trace_verifier.hpp"
#include "support.hpp"

using namespace calegari;

namespace {

  struct Outcome {
    bool ok;
    std::string detail;
  };

  int failures = 0;

  void criterion(int number, char const* name, double seconds_limit,
                 std::function<Outcome()> const& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now()
                                                - start)
                      .count();
    if (seconds_limit > 0 && secs >= seconds_limit) {
      o.ok = false;
      o.detail += " over time limit";
    }
    std::printf("AC%d %s %s (%s; %.3f s)\n", number, o.ok ? "PASS" : "FAIL", name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += o.ok ? 0 : 1;
  }

  std::vector<oracle::Raw> raw_images(FreeEndomorphism const& e) {
    std::vector<oracle::Raw> out;
    for (auto const& w : e.images()) {
      out.push_back(w.to_signed());
    }
    return out;
  }

  oracle::Mat to_mat(IntMatrix const& m) {
    oracle::Mat out;
    for (auto const& r : m.to_rows()) {
      out.emplace_back(r.begin(), r.end());
    }
    return out;
  }

  std::vector<long long> coeffs(PolynomialZ const& p) {
    auto c = p.coefficients();
    return std::vector<long long>(c.begin(), c.end());
  }

  int run_cli(std::vector<std::string> const& args, std::string const& input,
              std::string& out) {
    std::istringstream in(input);
    std::ostringstream o, e;
    int code = cli::run(args, in, o, e);
    out      = o.str();
    return code;
  }

  Outcome word_core() {
    std::mt19937_64 rng(1);
    int const cases = 10000;
    int bad         = 0;
    for (int k = 0; k < cases; ++k) {
      auto ra = oracle::random_raw(rng, 4, 20);
      auto rb = oracle::random_raw(rng, 4, 20);
      auto rc = oracle::random_raw(rng, 4, 20);
      Word a = support::from_raw(ra), b = support::from_raw(rb),
           c = support::from_raw(rc);
      // reduce-idempotence, against the oracle
      bad += a.to_signed() != oracle::reduce(ra);
      bad += support::from_raw(a.to_signed()) != a;
      // group laws
      bad += multiply(multiply(a, b), c) != multiply(a, multiply(b, c));
      bad += multiply(a, Word()) != a || multiply(Word(), a) != a;
      bad += !multiply(a, invert(a)).empty() || !multiply(invert(a), a).empty();
      bad += multiply(a, b).to_signed() != oracle::reduce(oracle::concat(ra, rb));
      bad += invert(a).to_signed() != oracle::reduce(oracle::inverse(ra));
      // exponent sums are a homomorphism to Z^4
      auto ab = multiply(a, b);
      auto ta = oracle::tally(ra, 4), tb = oracle::tally(rb, 4);
      for (int g = 1; g <= 4; ++g) {
        bad += exponent_sum(ab, g) != ta[g - 1] + tb[g - 1];
        bad += exponent_sum(a, g) != ta[g - 1];
      }
    }
    return {bad == 0, std::to_string(cases) + " cases, " + std::to_string(bad)
                          + " mismatches"};
  }

  Outcome automorphisms() {
    auto const id = FreeEndomorphism::identity(4);
    int certified = 0;
    std::mt19937_64 lengths(2);
    for (int k = 0; k < 500; ++k) {
      int moves = 1 + static_cast<int>(lengths() % 30);
      auto a    = random_automorphism(4, moves, 1000 + k);
      auto c    = certify_automorphism(a.forward());
      if (c && compose(c->forward(), c->inverse()) == id
          && compose(c->inverse(), c->forward()) == id) {
        ++certified;
      }
    }
    auto square = certify_automorphism(
        FreeEndomorphism(2, {support::w({1, 1}), support::w({2})}));
    bool rejected = !square.has_value();
    return {certified == 500 && rejected,
            std::to_string(certified) + "/500 certified, x1->x1^2 "
                + (rejected ? "rejected" : "accepted")};
  }

  Outcome functoriality() {
    std::mt19937_64 rng(3);
    int bad = 0;
    for (int k = 0; k < 1000; ++k) {
      int n = 1 + static_cast<int>(rng() % 5);
      std::vector<Word> fi, gi;
      for (int i = 0; i < n; ++i) {
        fi.push_back(support::from_raw(oracle::random_raw(rng, n, 8)));
        gi.push_back(support::from_raw(oracle::random_raw(rng, n, 8)));
      }
      FreeEndomorphism f(n, fi), g(n, gi);
      auto fg = compose(f, g);
      // Composition itself against letter substitution.
      for (int i = 1; i <= n; ++i) {
        bad += fg.image(i).to_signed()
               != oracle::substitute(raw_images(f), g.image(i).to_signed());
      }
      bad += abelianization_matrix(fg) != abelianization_matrix(f) * abelianization_matrix(g);
    }
    return {bad == 0, "1000 pairs, " + std::to_string(bad) + " mismatches"};
  }

  Outcome boundary() {
    int checked = 0, bad = 0;
    for (int g = 1; g <= 3; ++g) {
      Word d = boundary_word(g);
      for (int c = 1; c <= 2 * g; ++c) {
        for (int p : {1, -1}) {
          ++checked;
          bad += apply(twist_action(g, {c, p}).forward(), d) != d;
        }
      }
    }
    for (auto const& e : catalog()) {
      if (e.genus() > 3) {
        continue;
      }
      ++checked;
      Word d = boundary_word(e.genus());
      bad += apply(monodromy_automorphism(e.monodromy).forward(), d) != d;
    }
    return {bad == 0, std::to_string(checked) + " maps, " + std::to_string(bad)
                          + " move the boundary"};
  }

  Outcome alexander() {
    std::string detail;
    bool ok = true;
    for (char const* name : {"trefoil", "figure-eight", "T(2,5)", "T(2,7)"}) {
      auto e   = find_knot(name);
      auto phi = monodromy_automorphism(e->monodromy);
      auto got = oracle::unit_normal(coeffs(alexander_from_monodromy(phi)));
      auto ref = oracle::unit_normal(oracle::seifert_alexander(to_mat(e->seifert_matrix)));
      long long at1 = 0;
      for (auto c : got) {
        at1 += c;
      }
      bool good = got == ref && (at1 == 1 || at1 == -1);
      ok        = ok && good;
      detail += std::string(name) + (good ? " ok " : " MISMATCH ");
    }
    return {ok, detail};
  }

  Outcome det_condition() {
    bool ok = true;
    std::string detail;
    for (auto const& e : catalog()) {
      auto d = homology_check(monodromy_automorphism(e.monodromy)).det_A_minus_I;
      ok     = ok && (d == 1 || d == -1);
      detail += e.name + "=" + std::to_string(d) + " ";
    }
    auto id = homology_check(Automorphism::identity(4)).det_A_minus_I;
    ok      = ok && id == 0;
    detail += "identity=" + std::to_string(id);
    return {ok, detail};
  }

  Outcome coincidence() {
    int bad = 0, total = 0;
    auto check = [&](Automorphism const& phi) {
      ++total;
      int n       = phi.rank();
      auto killed = apply_move(handle_presentation(phi), TietzeMove::eliminate(n + 1, n + 1));
      bad += !(canonical_form(killed) == canonical_form(calegari_presentation(phi)));
    };
    for (auto const& e : catalog()) {
      check(monodromy_automorphism(e.monodromy));
    }
    std::mt19937_64 rng(4);
    for (int k = 0; k < 200; ++k) {
      int n = 1 + static_cast<int>(rng() % 5);
      check(random_automorphism(n, 1 + static_cast<int>(rng() % 30), rng()));
    }
    return {bad == 0, std::to_string(total) + " automorphisms, " + std::to_string(bad)
                          + " differ"};
  }

  Outcome witnesses() {
    bool ok = true;
    std::string detail;
    for (char const* name : {"trefoil", "figure-eight"}) {
      auto phi = monodromy_automorphism(find_knot(name)->monodromy);
      for (bool handle : {false, true}) {
        auto p     = handle ? handle_presentation(phi) : calegari_presentation(phi);
        auto start = std::chrono::steady_clock::now();
        auto r     = trivialize(p, SearchBudget{});
        double s   = std::chrono::duration<double>(std::chrono::steady_clock::now()
                                                 - start)
                       .count();
        bool good = r.status == TrivializeStatus::trivialized
                    && verify_trace(p, r.trace).ok && s < 60.0;
        ok = ok && good;
        detail += std::string(name) + (handle ? "/handle " : "/calegari ")
                  + (good ? std::to_string(r.trace.moves.size()) + " moves; "
                          : "FAILED; ");
      }
    }
    std::string out;
    int sq = run_cli({"trivialize", "--presentation", "-"},
                     R"({"generators":1,"relators":[[1,1]]})", out);
    bool sq_ok = sq == 4 && json::parse(out)["status"] == "certified_nontrivial";
    int idc    = run_cli({"trivialize", "--phi", "-"},
                         R"({"rank":2,"images":[[1],[2]]})", out);
    bool id_ok = idc == 4 && json::parse(out)["status"] == "certified_nontrivial";
    int idh    = run_cli({"trivialize", "--phi", "-", "--kind", "handle"},
                         R"({"rank":2,"images":[[1],[2]]})", out);
    bool idh_ok = idh == 4;
    ok          = ok && sq_ok && id_ok && idh_ok;
    detail += "<x|x^2> exit " + std::to_string(sq) + ", identity exits "
              + std::to_string(idc) + "/" + std::to_string(idh);
    return {ok, detail};
  }

  Outcome lifts() {
    bool ok = true;
    std::string detail;
    for (auto const& e : catalog()) {
      if (e.genus() != 1) {
        continue;
      }
      auto phi = std::make_shared<Automorphism const>(monodromy_automorphism(e.monodromy));
      auto n   = enumerate_lifts(phi).size();
      ok       = ok && n == 4;
      detail += e.name + "=" + std::to_string(n) + " ";
    }
    for (int g = 1; g <= 5; ++g) {
      auto phi = std::make_shared<Automorphism const>(
          monodromy_automorphism(torus_knot_monodromy(g)));
      auto l   = enumerate_lifts(phi);
      std::set<TwistVector> distinct;
      for (auto const& x : l) {
        distinct.insert(x.twist_vector);
      }
      bool good = l.size() == (std::size_t{1} << (2 * g)) && distinct.size() == l.size()
                  && std::is_sorted(l.begin(), l.end(), [](auto const& a, auto const& b) {
                       return a.twist_vector < b.twist_vector;
                     });
      ok = ok && good;
      detail += "g" + std::to_string(g) + "=" + std::to_string(l.size()) + " ";
    }
    return {ok, detail};
  }

  Outcome end_to_end() {
    std::string first, second;
    int c1 = run_cli({"certify", "--knot", "trefoil", "--seed", "0"}, "", first);
    int c2 = run_cli({"certify", "--knot", "trefoil", "--seed", "0"}, "", second);
    auto j = json::parse(first);
    auto cert = json::decode_certificate(j);
    bool populated = cert.alexander.has_value() && cert.abelianization.is_trivial()
                     && cert.h1_trivial && cert.balanced && cert.handle_matches_calegari
                     && cert.trivialization.status == TrivializeStatus::trivialized
                     && cert.trivialization.verified
                     && !cert.trivialization.trace.moves.empty()
                     && verify_trace(cert.calegari_presentation, cert.trivialization.trace).ok
                     && cert.lift_count == 4u && cert.lifts.size() == 4
                     && cert.automorphism.rank() == 2;
    bool ok = c1 == 0 && c2 == 0 && first == second && populated
              && cert.conclusion == Conclusion::calegari_sphere_standard;
    return {ok, std::string("conclusion ") + std::string(to_string(cert.conclusion))
                    + (first == second ? ", identical runs" : ", runs differ")
                    + (populated ? "" : ", fields missing")};
  }

}  // namespace

int main() {
  criterion(1, "word-core properties", 5.0, word_core);
  criterion(2, "automorphism certification", 10.0, automorphisms);
  criterion(3, "abelianization functoriality", 0, functoriality);
  criterion(4, "boundary word fixed", 0, boundary);
  criterion(5, "Alexander polynomial vs Seifert matrix", 0, alexander);
  criterion(6, "det(A - I) = +-1", 0, det_condition);
  criterion(7, "handle presentation coincidence", 0, coincidence);
  criterion(8, "triviality witnesses", 0, witnesses);
  criterion(9, "lift counts", 0, lifts);
  criterion(10, "certify trefoil end to end", 0, end_to_end);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
