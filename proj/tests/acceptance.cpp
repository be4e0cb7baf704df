// End-to-end acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "random_poly.hpp"
#include "schurforge/schurforge.hpp"

using namespace schurforge;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  std::cout << (out.passed ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << out.checks
            << " checks, " << ms << " ms)";
  if (!out.passed) std::cout << " -- " << out.detail;
  std::cout << std::endl;
  if (!out.passed) ++failures;
}

const std::vector<std::uint32_t> kSweepPrimes{2, 3, 5, 7};

SurveyConfig sweep_config(std::size_t workers) {
  SurveyConfig cfg;
  cfg.a_max = 9;
  cfg.primes = kSweepPrimes;
  cfg.workers = workers;
  return cfg;
}

std::string label(const ExponentSequence& c, const std::string& field) { return c.to_string() + " over " + field; }

// Strictly increasing sequences of length n with entries in [lo, hi].
std::vector<ExponentSequence> sequences(std::size_t n, std::uint32_t lo, std::uint32_t hi) {
  std::vector<ExponentSequence> out;
  std::vector<std::uint32_t> cur;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t next) {
    if (cur.size() == n) {
      out.emplace_back(cur);
      return;
    }
    for (std::uint32_t v = next; v <= hi; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(lo);
  return out;
}

std::vector<GaloisField> prime_fields(const std::vector<std::uint32_t>& ps) {
  std::vector<GaloisField> out;
  for (auto p : ps) out.push_back(make_prime_field(p));
  return out;
}

template <class F>
void products_hold(Outcome& out, const F& f, std::mt19937_64& rng, int pairs) {
  for (int t = 0; t < pairs; ++t) {
    const auto p = testing::random_poly(f, 3, rng);
    const auto q = testing::random_poly(f, 3, rng);
    const auto pq = p * q;
    const std::string where = " for (" + to_string(p) + ") * (" + to_string(q) + ") over " + f.name();
    for (std::size_t i = 0; i < 3; ++i) {
      out.expect(min_part(pq, i) == min_part(p, i) * min_part(q, i), "min_part multiplicativity" + where);
      out.expect(max_part(pq, i) == max_part(p, i) * max_part(q, i), "max_part multiplicativity" + where);
      out.expect(deg(pq, i) == deg(p, i) + deg(q, i), "deg additivity" + where);
      out.expect(mindeg(pq, i) == mindeg(p, i) + mindeg(q, i), "mindeg additivity" + where);
      out.expect(width(pq, i) == width(p, i) + width(q, i), "width additivity" + where);
    }
    const auto back = exact_divide(pq, q);
    out.expect(back && *back == p, "exact_divide round trip" + where);
  }
}

template <class F>
void field_axioms_hold(Outcome& out, const F& f, std::mt19937_64& rng, int triples) {
  for (int t = 0; t < triples; ++t) {
    const auto a = testing::random_element(f, rng), b = testing::random_element(f, rng),
               c = testing::random_element(f, rng);
    const std::string where = " in " + f.name();
    out.expect(f.eq(f.add(f.add(a, b), c), f.add(a, f.add(b, c))), "additive associativity" + where);
    out.expect(f.eq(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))), "multiplicative associativity" + where);
    out.expect(f.eq(f.add(a, b), f.add(b, a)), "additive commutativity" + where);
    out.expect(f.eq(f.mul(a, b), f.mul(b, a)), "multiplicative commutativity" + where);
    out.expect(f.eq(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))), "distributivity" + where);
    out.expect(f.eq(f.add(a, f.zero()), a) && f.eq(f.mul(a, f.one()), a), "identities" + where);
    out.expect(f.is_zero(f.add(a, f.neg(a))), "additive inverse" + where);
    if (!f.is_zero(a)) out.expect(f.eq(f.mul(a, f.inv(a)), f.one()), "multiplicative inverse" + where);
  }
}

}  // namespace

int main() {
  std::vector<SurveyRecord> sweep;

  criterion(1, "irreducibility sweep, n = 3, b <= 9, p in {2,3,5,7}", [&](Outcome& out) {
    sweep = survey(sweep_config(std::max(1u, std::thread::hardware_concurrency())));
    std::size_t covered = 0;
    for (const auto& r : sweep) {
      const std::uint32_t a = r.c[1], b = r.c[2];
      if (std::gcd(a, b - a) != 1 || a % r.p == 0 || (b - a) % r.p == 0) continue;
      ++covered;
      out.expect(r.verdict.kind == VerdictKind::Irreducible,
                 label(r.c, "GF(" + std::to_string(r.p) + ")") + " is " + to_string(r.verdict.kind));
    }
    out.expect(covered > 0, "empty sweep");
  });

  criterion(2, "converse: gcd and monomial reducibility witnesses", [&](Outcome& out) {
    for (const auto& f : prime_fields(kSweepPrimes)) {
      for (const auto& c : sequences(2, 2, 9)) {
        const ExponentSequence full{0, c[0], c[1]};
        if (c[0] + 1 >= c[1] || full.gcd() <= 1) continue;
        const auto s = schur_poly(full, f);
        const auto v = brute_force_verdict(s);
        out.expect(v.kind == VerdictKind::Reducible, label(full, f.name()) + " is " + to_string(v.kind));
        const auto w = gcd_reducibility_witness(full, f);
        const auto q = exact_divide(s, w.factor);
        out.expect(q && *q == w.cofactor && w.factor * w.cofactor == s, "gcd witness for " + label(full, f.name()));
      }
    }
    for (const auto& c : sequences(3, 1, 6)) {
      const auto check = [&](const auto& f) {
        const auto s = schur_poly(c, f);
        const auto w = shifted_reducibility_witness(c, f);
        const auto q = exact_divide(s, w.factor);
        out.expect(q && *q == w.cofactor, "monomial witness for " + label(c, f.name()));
      };
      check(Rationals{});
      for (const auto& f : prime_fields(kSweepPrimes)) check(f);
    }
  });

  criterion(3, "expansion structure, 1 < a < b - 1, b <= 12, GF(2..11) and Q", [&](Outcome& out) {
    const auto run = [&](const auto& f) {
      for (std::uint32_t b = 4; b <= 12; ++b)
        for (std::uint32_t a = 2; a + 1 < b; ++a) {
          const auto r = verify_expansion_fact(a, b, f);
          out.expect(r.passed, label(ExponentSequence{0, a, b}, f.name()) + ": " + to_json(r).dump());
        }
    };
    run(Rationals{});
    for (const auto& f : prime_fields({2, 3, 5, 7, 11})) run(f);
  });

  criterion(4, "min/max parts, n in {3,4,5}, c_{n-1} <= 10, GF(2), GF(3), GF(7), Q", [&](Outcome& out) {
    const auto run = [&](const auto& f) {
      for (std::size_t n = 3; n <= 5; ++n)
        for (const auto& tail : sequences(n - 1, 1, 10)) {
          std::vector<std::uint32_t> c{0};
          c.insert(c.end(), tail.values().begin(), tail.values().end());
          const auto r = verify_minmax_fact(ExponentSequence(c), f);
          out.expect(r.passed, label(ExponentSequence(c), f.name()) + ": " + to_json(r).dump());
        }
    };
    run(Rationals{});
    for (const auto& f : prime_fields({2, 3, 7})) run(f);
  });

  criterion(5, "tableau sum equals determinant quotient, n <= 4, c_{n-1} <= 8", [&](Outcome& out) {
    const auto run = [&](const auto& f) {
      for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& c : sequences(n, 0, 8))
          out.expect(schur_ssyt(c, f) == schur_poly(c, f), label(c, f.name()));
    };
    run(Rationals{});
    for (const auto& f : prime_fields(kSweepPrimes)) run(f);
  });

  criterion(6, "roots of C_k (k <= 10) and squarefreeness of x^k - 1 (k <= 30)", [&](Outcome& out) {
    for (std::uint32_t p : kSweepPrimes)
      for (std::uint32_t k = 1; k <= 10; ++k) {
        if (k % p == 0) continue;
        const auto r = roots_of_ck(k, p);
        const auto& f = r.field;
        const std::string where = "C_" + std::to_string(k) + " over " + f.name();
        out.expect(r.roots.size() == k - 1, where + ": " + std::to_string(r.roots.size()) + " roots");
        for (std::size_t i = 0; i < r.roots.size(); ++i) {
          out.expect(!f.eq(r.roots[i], f.one()) && f.eq(f.pow(r.roots[i], k), f.one()), where + ": bad root");
          for (std::size_t j = 0; j < i; ++j) out.expect(!f.eq(r.roots[i], r.roots[j]), where + ": repeated root");
        }
      }
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u})
      for (std::uint32_t k = 1; k <= 30; ++k)
        out.expect(ck_squarefree(k, p) == (k % p != 0), "x^" + std::to_string(k) + " - 1 over GF(" + std::to_string(p) + ")");
  });

  criterion(7, "mirror identity of C_k (k <= 12) and expansion reversal (a > b - a, b <= 12)", [&](Outcome& out) {
    for (const auto& f : prime_fields({2, 7})) {
      for (std::uint32_t k = 1; k <= 12; ++k) {
        const auto ck = ck_biv(k, f, 2, 0, 1);
        const std::vector<std::uint32_t> bounds{k - 1, k - 1};
        out.expect(exponent_reverse<GaloisField>(ck, bounds) == ck, "C_" + std::to_string(k) + " over " + f.name());
      }
      for (std::uint32_t b = 4; b <= 12; ++b)
        for (std::uint32_t a = 2; a + 1 < b; ++a) {
          if (a <= b - a) continue;
          const auto r = verify_mirror_fact(a, b, f);
          out.expect(r.passed, label(ExponentSequence{0, a, b}, f.name()) + ": " + to_json(r).dump());
        }
    }
  });

  criterion(8, "n = 4, c = (0,2,5,7) over GF(5) and GF(3): capped search, min/max, certificate", [&](Outcome& out) {
    const ExponentSequence c{0, 2, 5, 7};
    for (std::uint32_t p : {5u, 3u}) {
      const auto f = make_prime_field(p);
      const auto s = schur_poly(c, f);
      const auto v = brute_force_verdict(s, 2);
      out.expect(v.kind == VerdictKind::Inconclusive && v.searched_degree == 2,
                 label(c, f.name()) + ": capped search returned " + to_string(v.kind));
      const auto r = verify_minmax_fact(c, f);
      out.expect(r.passed, label(c, f.name()) + ": " + to_json(r).dump());
      const auto cert = specialization_certificate(s, 1);
      out.expect(cert.attempts <= kCertificateAttempts, label(c, f.name()) + ": attempt budget exceeded");
      out.expect(!cert.certified || v.kind != VerdictKind::Reducible, label(c, f.name()) + ": certificate contradicts search");
      std::cout << "  " << label(c, f.name()) << ": certificate " << (cert.certified ? "found" : "not found") << " in "
                << cert.attempts << " attempts" << std::endl;
    }
  });

  criterion(9, "survey CSV identical across 1, 4, 8 workers and repeated runs", [&](Outcome& out) {
    const auto reference = survey_csv(sweep.empty() ? survey(sweep_config(1)) : sweep);
    for (std::size_t workers : {1, 4, 8, 8}) {
      const auto again = survey_csv(survey(sweep_config(workers)));
      out.expect(again == reference, "CSV differs with " + std::to_string(workers) + " workers");
    }
  });

  criterion(10, "product properties, exact division round trip, field axioms (1000 each per field kind)",
            [&](Outcome& out) {
              std::mt19937_64 rng(2024);
              const auto gf7 = make_prime_field(7);
              const auto gf9 = make_extension_field(3, 2);
              const auto gf8 = make_extension_field(2, 3);
              products_hold(out, gf7, rng, 1000);
              products_hold(out, gf9, rng, 1000);
              products_hold(out, gf8, rng, 1000);
              products_hold(out, Rationals{}, rng, 1000);
              field_axioms_hold(out, gf7, rng, 1000);
              field_axioms_hold(out, make_prime_field(65521), rng, 1000);
              field_axioms_hold(out, gf9, rng, 1000);
              field_axioms_hold(out, gf8, rng, 1000);
              field_axioms_hold(out, make_extension_field(2, 20), rng, 1000);
              field_axioms_hold(out, Rationals{}, rng, 1000);
            });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
