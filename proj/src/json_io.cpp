#include "calegari/json_io.hpp"

#include <string>

#include "calegari/error.hpp"

namespace calegari::json {

  namespace {
    [[noreturn]] void fail(std::string const& what) {
      throw MalformedInput(what);
    }

    Json const& field(Json const& j, char const* key) {
      if (!j.is_object()) {
        fail(std::string("expected an object with field '") + key + "'");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        fail(std::string("missing field '") + key + "'");
      }
      return *it;
    }

    std::int64_t as_int(Json const& j, char const* what) {
      if (!j.is_number_integer()) {
        fail(std::string("expected an integer for ") + what);
      }
      return j.get<std::int64_t>();
    }

    int as_small_int(Json const& j, char const* what) {
      std::int64_t v = as_int(j, what);
      if (v < -(1LL << 30) || v > (1LL << 30)) {
        fail(std::string("integer out of range for ") + what);
      }
      return static_cast<int>(v);
    }

    bool as_bool(Json const& j, char const* what) {
      if (!j.is_boolean()) {
        fail(std::string("expected a boolean for ") + what);
      }
      return j.get<bool>();
    }

    std::string const& as_string(Json const& j, char const* what) {
      if (!j.is_string()) {
        fail(std::string("expected a string for ") + what);
      }
      return j.get_ref<std::string const&>();
    }

    Json const& as_array(Json const& j, char const* what) {
      if (!j.is_array()) {
        fail(std::string("expected an array for ") + what);
      }
      return j;
    }

    std::vector<Word> decode_words(Json const& j, char const* what) {
      std::vector<Word> out;
      for (auto const& w : as_array(j, what)) {
        out.push_back(decode_word(w));
      }
      return out;
    }

    Json encode_words(std::vector<Word> const& ws) {
      Json out = Json::array();
      for (auto const& w : ws) {
        out.push_back(encode(w));
      }
      return out;
    }

    template <class F>
    auto rethrow_as_malformed(F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (MalformedInput const&) {
        throw;
      } catch (Error const& e) {
        throw MalformedInput(e.what());
      }
    }
  }  // namespace

  Json encode(Word const& w) {
    Json out = Json::array();
    for (int s : w.to_signed()) {
      out.push_back(s);
    }
    return out;
  }

  Word decode_word(Json const& j) {
    if (j.is_string()) {
      return parse_word(j.get_ref<std::string const&>());
    }
    std::vector<int> raw;
    for (auto const& v : as_array(j, "word")) {
      int s = as_small_int(v, "word letter");
      if (s == 0) {
        fail("word letter 0 is not a generator");
      }
      raw.push_back(s);
    }
    return reduce_signed(raw);
  }

  Json encode(FreeEndomorphism const& e) {
    Json out;
    out["rank"]   = e.rank();
    out["images"] = encode_words(e.images());
    return out;
  }

  FreeEndomorphism decode_endomorphism(Json const& j) {
    int rank = as_small_int(field(j, "rank"), "rank");
    auto imgs = decode_words(field(j, "images"), "images");
    return rethrow_as_malformed(
        [&] { return FreeEndomorphism(rank, std::move(imgs)); });
  }

  Json encode(NielsenMove const& m) {
    Json out;
    out["move"] = std::string(to_string(m.kind));
    out["i"]    = m.i;
    out["j"]    = m.j;
    return out;
  }

  NielsenMove decode_nielsen_move(Json const& j) {
    auto kind = rethrow_as_malformed([&] {
      return nielsen_kind_from_string(as_string(field(j, "move"), "move"));
    });
    return NielsenMove{kind,
                       as_small_int(field(j, "i"), "i"),
                       as_small_int(field(j, "j"), "j")};
  }

  Json encode(Automorphism const& a) {
    Json out           = encode(a.forward());
    out["inverse_images"] = encode_words(a.inverse().images());
    Json trace         = Json::array();
    for (auto const& m : a.nielsen_trace()) {
      trace.push_back(encode(m));
    }
    out["nielsen_trace"] = std::move(trace);
    return out;
  }

  Automorphism decode_automorphism(Json const& j) {
    FreeEndomorphism fwd = decode_endomorphism(j);
    bool has_inv   = j.contains("inverse_images");
    bool has_trace = j.contains("nielsen_trace");
    if (has_inv != has_trace) {
      fail("inverse_images and nielsen_trace must be given together");
    }
    if (!has_inv) {
      auto a = certify_automorphism(fwd);
      if (!a) {
        fail("images do not form a basis (Nielsen reduction failed)");
      }
      return std::move(*a);
    }
    FreeEndomorphism inv(0, {});
    inv = rethrow_as_malformed([&] {
      return FreeEndomorphism(fwd.rank(),
                              decode_words(j["inverse_images"], "inverse_images"));
    });
    std::vector<NielsenMove> trace;
    for (auto const& m : as_array(j["nielsen_trace"], "nielsen_trace")) {
      trace.push_back(decode_nielsen_move(m));
    }
    return rethrow_as_malformed([&] {
      return Automorphism::from_parts(std::move(fwd), std::move(inv),
                                      std::move(trace));
    });
  }

  Json encode(Presentation const& p) {
    Json out;
    out["generators"] = p.generator_count();
    out["relators"]   = encode_words(p.relators());
    return out;
  }

  Presentation decode_presentation(Json const& j) {
    int gens  = as_small_int(field(j, "generators"), "generators");
    auto rels = decode_words(field(j, "relators"), "relators");
    return rethrow_as_malformed(
        [&] { return Presentation(gens, std::move(rels)); });
  }

  Json encode(TietzeMove const& m) {
    Json out;
    out["move"] = std::string(to_string(m.kind));
    switch (m.kind) {
      case TietzeKind::invert_relator:
      case TietzeKind::remove_trivial_relator:
        out["relator"] = m.relator;
        break;
      case TietzeKind::cyclic_shift:
        out["relator"] = m.relator;
        out["shift"]   = m.shift;
        break;
      case TietzeKind::multiply_relator_by_conjugate_of_other:
        out["relator"]   = m.relator;
        out["other"]     = m.other;
        out["exponent"]  = m.exponent;
        out["conjugator"] = encode(m.word);
        break;
      case TietzeKind::eliminate_generator_via_relator:
        out["generator"] = m.generator;
        out["relator"]   = m.relator;
        break;
      case TietzeKind::add_trivial_generator_and_relator:
        out["word"] = encode(m.word);
        break;
    }
    return out;
  }

  TietzeMove decode_tietze_move(Json const& j) {
    auto kind = rethrow_as_malformed([&] {
      return tietze_kind_from_string(as_string(field(j, "move"), "move"));
    });
    auto idx = [&](char const* key) {
      return as_small_int(field(j, key), key);
    };
    switch (kind) {
      case TietzeKind::invert_relator:
        return TietzeMove::invert_relator(idx("relator"));
      case TietzeKind::remove_trivial_relator:
        return TietzeMove::remove_trivial_relator(idx("relator"));
      case TietzeKind::cyclic_shift:
        return TietzeMove::cyclic_shift(idx("relator"), idx("shift"));
      case TietzeKind::multiply_relator_by_conjugate_of_other: {
        int e = idx("exponent");
        if (e != 1 && e != -1) {
          fail("exponent must be 1 or -1");
        }
        return TietzeMove::multiply_by_conjugate(
            idx("relator"), idx("other"), e, decode_word(field(j, "conjugator")));
      }
      case TietzeKind::eliminate_generator_via_relator:
        return TietzeMove::eliminate(idx("generator"), idx("relator"));
      case TietzeKind::add_trivial_generator_and_relator:
        return TietzeMove::add_generator(decode_word(field(j, "word")));
    }
    fail("unknown move");
  }

  Json encode(TrivializationTrace const& t) {
    Json out = Json::array();
    for (auto const& m : t.moves) {
      out.push_back(encode(m));
    }
    return out;
  }

  TrivializationTrace decode_trace(Json const& j) {
    TrivializationTrace t;
    for (auto const& m : as_array(j, "trace")) {
      t.moves.push_back(decode_tietze_move(m));
    }
    return t;
  }

  Json encode(SearchBudget const& b) {
    Json out;
    out["max_relator_length"] = b.max_relator_length;
    out["max_generators"]     = b.max_generators;
    out["node_limit"]         = b.node_limit;
    out["seed"]               = b.seed;
    return out;
  }

  Json encode(AbelianInvariants const& a) {
    Json out;
    out["free_rank"] = a.free_rank;
    out["torsion"]   = a.torsion;
    out["trivial"]   = a.is_trivial();
    out["text"]      = a.to_string();
    return out;
  }

  AbelianInvariants decode_abelian_invariants(Json const& j) {
    AbelianInvariants a;
    a.free_rank = as_small_int(field(j, "free_rank"), "free_rank");
    for (auto const& t : as_array(field(j, "torsion"), "torsion")) {
      a.torsion.push_back(as_int(t, "torsion"));
    }
    return a;
  }

  Json encode(PolynomialZ const& p) {
    return Json(p.coefficients());
  }

  PolynomialZ decode_polynomial(Json const& j) {
    std::vector<std::int64_t> c;
    for (auto const& v : as_array(j, "polynomial")) {
      c.push_back(as_int(v, "coefficient"));
    }
    return PolynomialZ(std::move(c));
  }

  Json encode(IntMatrix const& m) {
    return Json(m.to_rows());
  }

  Json encode(MonodromySpec const& s) {
    Json out;
    out["genus"] = s.genus;
    Json tw      = Json::array();
    for (auto const& t : s.twists) {
      Json e;
      e["curve"] = t.curve;
      e["power"] = t.power;
      tw.push_back(std::move(e));
    }
    out["twists"] = std::move(tw);
    return out;
  }

  MonodromySpec decode_monodromy(Json const& j) {
    MonodromySpec s;
    s.genus = as_small_int(field(j, "genus"), "genus");
    for (auto const& t : as_array(field(j, "twists"), "twists")) {
      s.twists.push_back(TwistGenerator{as_small_int(field(t, "curve"), "curve"),
                                        as_small_int(field(t, "power"), "power")});
    }
    validate(s);
    return s;
  }

  Json encode(CatalogEntry const& e) {
    Json out;
    out["name"]           = e.name;
    out["genus"]          = e.genus();
    out["monodromy"]      = encode(e.monodromy);
    out["alexander"]      = encode(e.alexander);
    out["seifert_matrix"] = encode(e.seifert_matrix);
    return out;
  }

  Json encode(TrivializeResult const& r) {
    Json out;
    out["status"] = std::string(to_string(r.status));
    out["homology"] = encode(r.homology);
    if (r.status == TrivializeStatus::trivialized) {
      out["trace"] = encode(r.trace);
    } else {
      out["trace"] = nullptr;
    }
    out["nodes_expanded"] = r.nodes_expanded;
    return out;
  }

  Json encode(Certificate const& c) {
    Json out;
    Json in;
    in["kind"] = c.input.kind;
    if (!c.input.name.empty()) {
      in["name"] = c.input.name;
    }
    if (c.input.monodromy) {
      in["monodromy"] = encode(*c.input.monodromy);
    }
    out["input"]         = std::move(in);
    out["rank"]          = c.rank;
    out["geometric"]     = c.geometric;
    out["automorphism"]  = encode(c.automorphism);
    out["balanced"]      = c.balanced;
    out["det_A_minus_I"] = c.det_A_minus_I;
    out["h1_trivial"]    = c.h1_trivial;
    out["abelianization"] = encode(c.abelianization);
    out["alexander"] = c.alexander ? encode(*c.alexander) : Json(nullptr);
    out["calegari_presentation"]   = encode(c.calegari_presentation);
    out["handle_presentation"]     = encode(c.handle_presentation);
    out["handle_matches_calegari"] = c.handle_matches_calegari;
    Json triv;
    triv["status"] = std::string(to_string(c.trivialization.status));
    triv["trace"]  = c.trivialization.status == TrivializeStatus::trivialized
                        ? encode(c.trivialization.trace)
                        : Json(nullptr);
    triv["verified"]       = c.trivialization.verified;
    triv["nodes_expanded"] = c.trivialization.nodes_expanded;
    out["trivialization"]  = std::move(triv);
    out["lift_count"] = c.lift_count ? Json(*c.lift_count) : Json(nullptr);
    Json lifts        = Json::array();
    for (auto const& v : c.lifts) {
      lifts.push_back(format_twist_vector(v));
    }
    out["lifts"]      = std::move(lifts);
    out["conclusion"] = std::string(to_string(c.conclusion));
    Json also         = Json::array();
    for (auto k : c.also_applies) {
      also.push_back(std::string(to_string(k)));
    }
    out["also_applies"] = std::move(also);
    return out;
  }

  Certificate decode_certificate(Json const& j) {
    Certificate c;
    Json const& in = field(j, "input");
    c.input.kind   = as_string(field(in, "kind"), "input.kind");
    if (in.contains("name")) {
      c.input.name = as_string(in["name"], "input.name");
    }
    if (in.contains("monodromy")) {
      c.input.monodromy = decode_monodromy(in["monodromy"]);
    }
    c.rank          = as_small_int(field(j, "rank"), "rank");
    c.geometric     = as_bool(field(j, "geometric"), "geometric");
    c.automorphism  = decode_automorphism(field(j, "automorphism"));
    c.balanced      = as_bool(field(j, "balanced"), "balanced");
    c.det_A_minus_I = as_int(field(j, "det_A_minus_I"), "det_A_minus_I");
    c.h1_trivial    = as_bool(field(j, "h1_trivial"), "h1_trivial");
    c.abelianization = decode_abelian_invariants(field(j, "abelianization"));
    Json const& alex = field(j, "alexander");
    if (!alex.is_null()) {
      c.alexander = decode_polynomial(alex);
    }
    c.calegari_presentation = decode_presentation(field(j, "calegari_presentation"));
    c.handle_presentation   = decode_presentation(field(j, "handle_presentation"));
    c.handle_matches_calegari
        = as_bool(field(j, "handle_matches_calegari"), "handle_matches_calegari");
    Json const& triv        = field(j, "trivialization");
    c.trivialization.status = rethrow_as_malformed([&] {
      return trivialize_status_from_string(
          as_string(field(triv, "status"), "trivialization.status"));
    });
    Json const& trace = field(triv, "trace");
    if (!trace.is_null()) {
      c.trivialization.trace = decode_trace(trace);
    }
    c.trivialization.verified
        = as_bool(field(triv, "verified"), "trivialization.verified");
    c.trivialization.nodes_expanded
        = as_int(field(triv, "nodes_expanded"), "trivialization.nodes_expanded");
    Json const& count = field(j, "lift_count");
    if (!count.is_null()) {
      if (!count.is_number_unsigned()) {
        fail("lift_count must be a nonnegative integer");
      }
      c.lift_count = count.get<std::uint64_t>();
    }
    for (auto const& v : as_array(field(j, "lifts"), "lifts")) {
      TwistVector bits;
      for (char ch : as_string(v, "lift")) {
        if (ch != '0' && ch != '1') {
          fail("lift must be a bit string");
        }
        bits.push_back(static_cast<std::uint8_t>(ch - '0'));
      }
      c.lifts.push_back(std::move(bits));
    }
    c.conclusion = rethrow_as_malformed([&] {
      return conclusion_from_string(as_string(field(j, "conclusion"), "conclusion"));
    });
    for (auto const& k : as_array(field(j, "also_applies"), "also_applies")) {
      c.also_applies.push_back(rethrow_as_malformed(
          [&] { return conclusion_from_string(as_string(k, "also_applies")); }));
    }
    return c;
  }

  Json parse(std::string const& text) {
    try {
      return Json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw MalformedInput(std::string("invalid JSON: ") + e.what());
    }
  }

}  // namespace calegari::json
