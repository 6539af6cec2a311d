#pragma once

// JSON encodings. Words are arrays of signed integers (+k for x_k, -k for
// its inverse); decoders also accept the text grammar `x1 X2` as a string.
// Decoders throw MalformedInput on schema violations.

#include <json.hpp>

#include "calegari/endomorphism.hpp"
#include "calegari/presentation.hpp"
#include "calegari/report.hpp"
#include "calegari/surface.hpp"
#include "calegari/tietze.hpp"

namespace calegari::json {

  using Json = nlohmann::ordered_json;

  Json encode(Word const& w);
  Word decode_word(Json const& j);

  Json encode(FreeEndomorphism const& e);
  FreeEndomorphism decode_endomorphism(Json const& j);

  Json encode(NielsenMove const& m);
  NielsenMove decode_nielsen_move(Json const& j);

  Json encode(Automorphism const& a);
  // Reads "rank" and "images"; when "inverse_images" and "nielsen_trace" are
  // both present they are checked by Automorphism::from_parts, otherwise the
  // automorphism is certified from the images.
  Automorphism decode_automorphism(Json const& j);

  Json encode(Presentation const& p);
  Presentation decode_presentation(Json const& j);

  Json encode(TietzeMove const& m);
  TietzeMove decode_tietze_move(Json const& j);

  Json encode(TrivializationTrace const& t);
  TrivializationTrace decode_trace(Json const& j);

  Json encode(SearchBudget const& b);

  Json encode(AbelianInvariants const& a);
  AbelianInvariants decode_abelian_invariants(Json const& j);

  Json encode(PolynomialZ const& p);
  PolynomialZ decode_polynomial(Json const& j);

  Json encode(IntMatrix const& m);

  Json encode(MonodromySpec const& s);
  MonodromySpec decode_monodromy(Json const& j);

  Json encode(CatalogEntry const& e);

  Json encode(TrivializeResult const& r);

  Json encode(Certificate const& c);
  Certificate decode_certificate(Json const& j);

  // Text parsed with nlohmann, wrapped in MalformedInput on failure.
  Json parse(std::string const& text);

}  // namespace calegari::json
