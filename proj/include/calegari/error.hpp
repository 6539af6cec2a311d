#pragma once

#include <stdexcept>
#include <string>

namespace calegari {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Ill-formed letters, words, JSON documents or text tokens.
  class MalformedInput : public Error {
   public:
    using Error::Error;
  };

  // Generator index outside the declared rank, or mismatched ranks.
  class RankError : public Error {
   public:
    using Error::Error;
  };

  // Nonpositive search budget, lift enumeration over its cap.
  class LimitError : public Error {
   public:
    using Error::Error;
  };

  class ArithmeticOverflow : public Error {
   public:
    using Error::Error;
  };

}  // namespace calegari
