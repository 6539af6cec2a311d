#include "calegari/surface.hpp"

#include <charconv>
#include <string>

#include "calegari/error.hpp"

namespace calegari {

  namespace {
    Word letter(int signed_index) {
      int const raw[] = {signed_index};
      return reduce_signed(raw);
    }

    Word product(std::vector<Word> const& factors) {
      Word out;
      for (Word const& w : factors) {
        out = multiply(out, w);
      }
      return out;
    }

    // In the chain basis y_1..y_{2g} (y_i the core of c_i, suitably based),
    // the positive twist along c_i is
    //   y_{i-1} -> y_{i-1} y_i^{-1},   y_{i+1} -> y_i y_{i+1},
    // fixing every other generator.
    FreeEndomorphism chain_twist(int n, int i, int sign) {
      auto images = FreeEndomorphism::identity(n).images();
      if (i > 1) {
        images[i - 2] = sign > 0 ? multiply(letter(i - 1), letter(-i))
                                 : multiply(letter(i - 1), letter(i));
      }
      if (i < n) {
        images[i] = sign > 0 ? multiply(letter(i), letter(i + 1))
                             : multiply(letter(-i), letter(i + 1));
      }
      return FreeEndomorphism(n, std::move(images));
    }

    // kappa maps x_k to its expression in the chain basis. With prefix
    // products p_k = y_1...y_k and q_k = p_k^{(-1)^{k+1}}, the chain boundary
    // is q_1...q_{2g} q_1^{-1}...q_{2g}^{-1}, which splits as
    //   [q_1, q_2] * prod_{k>=2} [(q_{2k-2}...q_1) q_{2k-1}, q_{2k} q_{2k-1}].
    FreeEndomorphism chain_basis_change(int genus) {
      int const n = 2 * genus;
      std::vector<Word> q;
      Word prefix;
      for (int k = 1; k <= n; ++k) {
        prefix = multiply(prefix, letter(k));
        q.push_back(k % 2 == 1 ? prefix : invert(prefix));
      }
      std::vector<Word> x = {q[0], q[1]};
      for (int k = 2; k <= genus; ++k) {
        Word tail;
        for (int j = 2 * k - 3; j >= 0; --j) {
          tail = multiply(tail, q[j]);
        }
        x.push_back(multiply(tail, q[2 * k - 2]));
        x.push_back(multiply(q[2 * k - 1], q[2 * k - 2]));
      }
      return FreeEndomorphism(n, std::move(x));
    }

    FreeEndomorphism chain_basis_change_inverse(int genus) {
      int const n = 2 * genus;
      std::vector<Word> q(n);
      q[0] = letter(1);
      q[1] = letter(2);
      for (int k = 2; k <= genus; ++k) {
        Word tail;
        for (int j = 2 * k - 3; j >= 0; --j) {
          tail = multiply(tail, q[j]);
        }
        q[2 * k - 2] = multiply(invert(tail), letter(2 * k - 1));
        q[2 * k - 1] = multiply(letter(2 * k), invert(q[2 * k - 2]));
      }
      std::vector<Word> y;
      Word previous;
      for (int k = 0; k < n; ++k) {
        Word p = k % 2 == 0 ? q[k] : invert(q[k]);
        y.push_back(multiply(invert(previous), p));
        previous = p;
      }
      return FreeEndomorphism(n, std::move(y));
    }

    IntMatrix torus_seifert_matrix(int size) {
      IntMatrix v(size, size);
      for (int i = 0; i < size; ++i) {
        v(i, i) = -1;
        if (i + 1 < size) {
          v(i, i + 1) = 1;
        }
      }
      return v;
    }

    // (t^{2k+1} + 1) / (t + 1)
    PolynomialZ torus_alexander(int genus) {
      std::vector<std::int64_t> c;
      for (int k = 0; k <= 2 * genus; ++k) {
        c.push_back(k % 2 == 0 ? 1 : -1);
      }
      return PolynomialZ(std::move(c));
    }
  }  // namespace

  void validate(MonodromySpec const& spec) {
    if (spec.genus < 1) {
      throw MalformedInput("genus must be >= 1");
    }
    for (TwistGenerator const& t : spec.twists) {
      if (t.curve < 1 || t.curve > 2 * spec.genus) {
        throw MalformedInput("curve c" + std::to_string(t.curve)
                             + " is not in the genus-"
                             + std::to_string(spec.genus) + " chain");
      }
      if (t.power == 0) {
        throw MalformedInput("twist power must be nonzero");
      }
    }
  }

  Automorphism twist_action(int genus, TwistGenerator t) {
    validate(MonodromySpec{genus, {t}});
    int const n      = 2 * genus;
    auto const kappa = chain_basis_change(genus);
    auto const kinv  = chain_basis_change_inverse(genus);
    int const sign   = t.power > 0 ? 1 : -1;
    auto const step  = chain_twist(n, t.curve, sign);
    auto const back  = chain_twist(n, t.curve, -sign);
    auto power       = FreeEndomorphism::identity(n);
    auto power_inv   = FreeEndomorphism::identity(n);
    for (int k = 0; k < (t.power > 0 ? t.power : -t.power); ++k) {
      power     = compose(power, step);
      power_inv = compose(power_inv, back);
    }
    auto forward = compose(kinv, compose(power, kappa));
    auto inv     = compose(kinv, compose(power_inv, kappa));
    auto cert    = certify_automorphism(forward);
    if (!cert || cert->inverse() != inv) {
      throw Error("twist formula failed to certify");  // unreachable
    }
    return *cert;
  }

  Automorphism monodromy_automorphism(MonodromySpec const& spec) {
    validate(spec);
    auto phi = Automorphism::identity(2 * spec.genus);
    for (TwistGenerator const& t : spec.twists) {
      phi = phi * twist_action(spec.genus, t);
    }
    return phi;
  }

  Word boundary_word(int genus) {
    if (genus < 1) {
      throw MalformedInput("genus must be >= 1");
    }
    std::vector<Word> factors;
    for (int k = 1; k <= genus; ++k) {
      int const a = 2 * k - 1;
      int const b = 2 * k;
      factors.push_back(product({letter(a), letter(b), letter(-a), letter(-b)}));
    }
    return product(factors);
  }

  MonodromySpec torus_knot_monodromy(int genus) {
    MonodromySpec spec{genus, {}};
    for (int c = 1; c <= 2 * genus; ++c) {
      spec.twists.push_back({c, 1});
    }
    return spec;
  }

  std::vector<CatalogEntry> const& catalog() {
    static std::vector<CatalogEntry> const entries = [] {
      std::vector<CatalogEntry> out;
      out.push_back({"trefoil",
                     torus_knot_monodromy(1),
                     torus_alexander(1),
                     torus_seifert_matrix(2)});
      out.push_back({"figure-eight",
                     MonodromySpec{1, {{1, 1}, {2, -1}}},
                     PolynomialZ({1, -3, 1}),
                     IntMatrix{{1, 1}, {0, -1}}});
      for (int k = 2; k <= 5; ++k) {
        out.push_back({"T(2," + std::to_string(2 * k + 1) + ")",
                       torus_knot_monodromy(k),
                       torus_alexander(k),
                       torus_seifert_matrix(2 * k)});
      }
      return out;
    }();
    return entries;
  }

  std::optional<CatalogEntry> find_knot(std::string_view name) {
    for (auto const& e : catalog()) {
      if (e.name == name) {
        return e;
      }
    }
    if (name == "T(2,3)") {
      return catalog().front();
    }
    return std::nullopt;
  }

  MonodromySpec parse_twists(int genus, std::string_view text) {
    MonodromySpec spec{genus, {}};
    auto parse_int = [&](std::string_view s) {
      int v          = 0;
      auto const* b  = s.data();
      auto const* e  = s.data() + s.size();
      if (!s.empty() && s[0] == '+') {
        ++b;
      }
      auto [ptr, ec] = std::from_chars(b, e, v);
      if (s.empty() || ec != std::errc() || ptr != e) {
        throw MalformedInput("bad twist token '" + std::string(s) + "'");
      }
      return v;
    };
    std::size_t pos = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == ' ' || c == ',' || c == '\t' || c == '\n') {
        ++pos;
        continue;
      }
      std::size_t end = text.find_first_of(" ,\t\n", pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view token = text.substr(pos, end - pos);
      pos                    = end;
      std::size_t colon      = token.find(':');
      TwistGenerator t{0, 1};
      if (colon == std::string_view::npos) {
        t.curve = parse_int(token);
      } else {
        t.curve = parse_int(token.substr(0, colon));
        t.power = parse_int(token.substr(colon + 1));
      }
      spec.twists.push_back(t);
    }
    validate(spec);
    return spec;
  }

}  // namespace calegari
