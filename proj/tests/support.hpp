#pragma once

#include <initializer_list>
#include <vector>

#include "calegari/word.hpp"
#include "oracles.hpp"

namespace support {

  inline calegari::Word w(std::initializer_list<int> signed_letters) {
    std::vector<int> raw(signed_letters);
    return calegari::reduce_signed(raw);
  }

  inline calegari::Word from_raw(oracle::Raw const& raw) {
    return calegari::reduce_signed(raw);
  }

}  // namespace support
